#include "ternalg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternalg {

namespace {

long pow_count(size_t base, int degree) {
    long r = 1;
    for (int k = 0; k < degree; ++k) {
        if (base != 0 && r > (1L << 40) / static_cast<long>(base))
            throw std::invalid_argument("word space too large; lower the degree");
        r *= static_cast<long>(base);
    }
    return r;
}

int digit_of(const std::vector<Generator>& alphabet, const Generator& g) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), g);
    if (it == alphabet.end() || *it != g)
        throw std::invalid_argument("generator not in alphabet: " + to_token(g));
    return static_cast<int>(it - alphabet.begin());
}

/// Rank of a fixed-degree word in ascending lexicographic order.
long asc_rank(const std::vector<Generator>& alphabet, const Word& w) {
    long r = 0;
    for (const auto& g : w.gens) r = r * static_cast<long>(alphabet.size()) + digit_of(alphabet, g);
    return r;
}

Word word_of_rank(const std::vector<Generator>& alphabet, int degree, long rank) {
    std::vector<Generator> gens(static_cast<size_t>(degree));
    for (int k = degree - 1; k >= 0; --k) {
        gens[static_cast<size_t>(k)] = alphabet[static_cast<size_t>(rank % static_cast<long>(alphabet.size()))];
        rank /= static_cast<long>(alphabet.size());
    }
    return Word(std::move(gens));
}

/// Advances a fixed-degree word odometer; start from all-first-letter.
bool next_word(const std::vector<Generator>& alphabet, std::vector<int>& digits) {
    for (size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < static_cast<int>(alphabet.size())) return true;
        digits[k] = 0;
    }
    return false;
}

Word word_from_digits(const std::vector<Generator>& alphabet, const std::vector<int>& digits) {
    std::vector<Generator> gens;
    gens.reserve(digits.size());
    for (int d : digits) gens.push_back(alphabet[static_cast<size_t>(d)]);
    return Word(std::move(gens));
}

std::vector<Word> all_words(const std::vector<Generator>& alphabet, int degree) {
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(pow_count(alphabet.size(), degree)));
    std::vector<int> digits(static_cast<size_t>(degree), 0);
    if (degree == 0) {
        out.push_back(Word{});
        return out;
    }
    do {
        out.push_back(word_from_digits(alphabet, digits));
    } while (next_word(alphabet, digits));
    return out;
}

/// Columns are indexed descending by word order: col = total - 1 - asc_rank.
struct SliceIndex {
    const std::vector<Generator>& alphabet;
    int degree;
    long total;

    long col(const Word& w) const { return total - 1 - asc_rank(alphabet, w); }
    Word word(long c) const { return word_of_rank(alphabet, degree, total - 1 - c); }
};

SparseRow row_of_poly(const Poly& p, const SliceIndex& index) {
    SparseRow row;
    row.entries.reserve(p.term_count());
    for (const auto& t : p.terms())
        row.entries.emplace_back(static_cast<int>(index.col(t.word)), t.coeff);
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

/// All framings u * r * v of the given relations with |u| + |v| = degree -
/// deg(r), in deterministic (relation, split, u, v) order. The frame
/// expansion is embarrassingly parallel.
std::vector<SparseRow> framed_rows(const Presentation& pres, const std::vector<Poly>& rels,
                                   int rel_degree, const SliceIndex& index,
                                   [[maybe_unused]] bool parallel) {
    const int pad = index.degree - rel_degree;
    if (pad < 0 || rels.empty()) return {};
    struct Frame {
        const Poly* rel;
        Word u, v;
    };
    std::vector<Frame> frames;
    for (int udeg = 0; udeg <= pad; ++udeg) {
        auto us = all_words(pres.alphabet(), udeg);
        auto vs = all_words(pres.alphabet(), pad - udeg);
        for (const auto& u : us)
            for (const auto& v : vs)
                for (const auto& rel : rels) frames.push_back(Frame{&rel, u, v});
    }
    std::vector<SparseRow> rows(frames.size());
    const long count = static_cast<long>(frames.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long k = 0; k < count; ++k) {
        const Frame& f = frames[static_cast<size_t>(k)];
        Poly framed;
        for (const auto& t : f.rel->terms())
            framed += Poly(t.coeff, f.u.concat(t.word).concat(f.v));
        rows[static_cast<size_t>(k)] = row_of_poly(framed, index);
    }
    return rows;
}

}  // namespace

QuotientBasis::QuotientBasis(const Presentation& pres, int degree, const OracleOptions& opts)
    : pres_(pres), degree_(degree), total_(0), ech_(0) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (degree > opts.degree_cap)
        throw std::invalid_argument("degree exceeds the configured cap of " +
                                    std::to_string(opts.degree_cap));
    total_ = pow_count(pres.alphabet().size(), degree);
    ech_ = RowEchelon(static_cast<int>(total_));

    SliceIndex index{pres_.alphabet(), degree_, total_};
    for (int rdeg = 2; rdeg <= degree_; ++rdeg) {
        auto rels = pres_.relations_at(rdeg);
        auto rows = framed_rows(pres_, rels, rdeg, index, opts.parallel);
        if (opts.parallel)
            ech_.insert_rows_parallel(std::move(rows));
        else
            ech_.insert_rows_serial(std::move(rows));
    }

    basis_ordinal_of_col_.assign(static_cast<size_t>(total_), -1);
    const auto& pivots = ech_.pivot_row_of_col();
    for (long rank = 0; rank < total_; ++rank) {
        long c = total_ - 1 - rank;  // ascending word order
        if (pivots[static_cast<size_t>(c)] < 0) {
            basis_ordinal_of_col_[static_cast<size_t>(c)] = static_cast<int>(basis_.size());
            basis_.push_back(index.word(c));
        }
    }
}

long QuotientBasis::col_of_word(const Word& w) const {
    pres_.require_word(w);
    if (static_cast<int>(w.size()) != degree_)
        throw std::invalid_argument("word degree does not match the basis degree");
    return total_ - 1 - asc_rank(pres_.alphabet(), w);
}

std::vector<std::pair<int, Cyclo>> QuotientBasis::coords_sparse(const Word& w) const {
    SparseRow row;
    row.entries.emplace_back(static_cast<int>(col_of_word(w)), Cyclo(1));
    ech_.reduce(row);
    std::vector<std::pair<int, Cyclo>> out;
    out.reserve(row.entries.size());
    for (auto& [col, v] : row.entries)
        out.emplace_back(basis_ordinal_of_col_[static_cast<size_t>(col)], std::move(v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Cyclo> QuotientBasis::coords(const Word& w) const {
    std::vector<Cyclo> dense(basis_.size());
    for (auto& [ord, v] : coords_sparse(w)) dense[static_cast<size_t>(ord)] = v;
    return dense;
}

std::vector<Cyclo> QuotientBasis::coords(const Poly& p) const {
    std::vector<Cyclo> dense(basis_.size());
    for (const auto& t : p.terms())
        for (auto& [ord, v] : coords_sparse(t.word))
            dense[static_cast<size_t>(ord)] += t.coeff * v;
    return dense;
}

bool QuotientBasis::residue_is_zero(const Word& w) const { return coords_sparse(w).empty(); }

QuotientBasis quotient_basis(const Presentation& pres, int degree, OracleOptions opts) {
    return QuotientBasis(pres, degree, opts);
}

bool ideal_contains(const Presentation& container, const Presentation& contained, int degree,
                    OracleOptions opts) {
    if (container.alphabet() != contained.alphabet())
        throw std::invalid_argument("ideal_contains: generator alphabets differ");
    for (int d = 2; d <= degree; ++d) {
        auto target = contained.relations_at(d);
        if (target.empty()) continue;
        long total = pow_count(container.alphabet().size(), d);
        SliceIndex index{container.alphabet(), d, total};
        RowEchelon ech(static_cast<int>(total));
        for (int rdeg = 2; rdeg <= d; ++rdeg) {
            auto rows = framed_rows(container, container.relations_at(rdeg), rdeg, index,
                                    opts.parallel);
            if (opts.parallel)
                ech.insert_rows_parallel(std::move(rows));
            else
                ech.insert_rows_serial(std::move(rows));
        }
        for (const auto& rel : target) {
            SparseRow row = row_of_poly(rel, index);
            ech.reduce(row);
            if (!row.empty()) return false;
        }
    }
    return true;
}

namespace {

/// Column layout for the mixed-degree space of all words up to max_degree:
/// degree blocks descend (degree 4 first), words descend within each block,
/// so pivoting eliminates the highest-degree part of each row first.
struct MixedIndex {
    const std::vector<Generator>& alphabet;
    int max_degree;
    std::vector<long> offset;  // offset[d] = first column of degree-d block
    long total = 0;

    explicit MixedIndex(const std::vector<Generator>& a, int maxd)
        : alphabet(a), max_degree(maxd), offset(static_cast<size_t>(maxd + 1), 0) {
        for (int d = maxd; d >= 0; --d) {
            offset[static_cast<size_t>(d)] = total;
            total += pow_count(alphabet.size(), d);
        }
    }

    long col(const Word& w) const {
        int d = static_cast<int>(w.size());
        long count = pow_count(alphabet.size(), d);
        return offset[static_cast<size_t>(d)] + count - 1 - asc_rank(alphabet, w);
    }
};

SparseRow mixed_row(const Poly& p, const MixedIndex& index) {
    SparseRow row;
    for (const auto& t : p.terms())
        row.entries.emplace_back(static_cast<int>(index.col(t.word)), t.coeff);
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

}  // namespace

CollapseReport nonhomogeneous_collapse_check(const Presentation& pres, const RhoTensor& rho,
                                             const RhoTensor& rhobar, OracleOptions opts) {
    if (pres.type() != AlgebraType::CombinedZ6NonHom)
        throw std::invalid_argument("collapse check expects a combined-nonhom presentation");
    const int N = pres.theta_count();
    const int n = pres.xi_count();
    const int maxd = 4;
    MixedIndex index(pres.alphabet(), maxd);
    RowEchelon ech(static_cast<int>(index.total));

    // Homogeneous ideal rows at every degree up to 4.
    std::vector<SparseRow> rows;
    for (int target = 2; target <= maxd; ++target)
        for (int rdeg = 2; rdeg <= target; ++rdeg) {
            auto rels = pres.relations_at(rdeg);
            const int pad = target - rdeg;
            for (int udeg = 0; udeg <= pad; ++udeg)
                for (const auto& u : all_words(pres.alphabet(), udeg))
                    for (const auto& v : all_words(pres.alphabet(), pad - udeg))
                        for (const auto& rel : rels) {
                            Poly framed;
                            for (const auto& t : rel.terms())
                                framed += Poly(t.coeff, u.concat(t.word).concat(v));
                            rows.push_back(mixed_row(framed, index));
                        }
        }

    // Non-homogeneous relations theta^A theta^B theta^C - rho^{ABC}_a xi^a
    // (and the conjugate family), framed with |u| + |v| <= 1 so the cubic
    // part stays within degree 4.
    auto nonhom_poly = [&](Kind tk, Kind xk, const RhoTensor& r, int A, int B, int C) {
        Poly p(Cyclo(1), Word{{Generator{tk, A}, Generator{tk, B}, Generator{tk, C}}});
        for (int alpha = 1; alpha <= n; ++alpha)
            p += Poly(-r.at(alpha, A, B, C), Word{{Generator{xk, alpha}}});
        return p;
    };
    auto add_framed_nonhom = [&](Kind tk, Kind xk, const RhoTensor& r) {
        for (int A = 1; A <= N; ++A)
            for (int B = 1; B <= N; ++B)
                for (int C = 1; C <= N; ++C) {
                    Poly rel = nonhom_poly(tk, xk, r, A, B, C);
                    rows.push_back(mixed_row(rel, index));
                    for (const auto& g : pres.alphabet()) {
                        Poly left, right;
                        Word gw{{g}};
                        for (const auto& t : rel.terms()) {
                            left += Poly(t.coeff, gw.concat(t.word));
                            right += Poly(t.coeff, t.word.concat(gw));
                        }
                        rows.push_back(mixed_row(left, index));
                        rows.push_back(mixed_row(right, index));
                    }
                }
    };
    add_framed_nonhom(Kind::Theta, Kind::Xi, rho);
    if (pres.include_conjugates()) add_framed_nonhom(Kind::ThetaBar, Kind::XiBar, rhobar);

    if (opts.parallel)
        ech.insert_rows_parallel(std::move(rows));
    else
        ech.insert_rows_serial(std::move(rows));

    auto residue_zero = [&](const Word& w) {
        SparseRow row;
        row.entries.emplace_back(static_cast<int>(index.col(w)), Cyclo(1));
        ech.reduce(row);
        return row.empty();
    };
    auto sector_vanishes = [&](Kind tk, Kind xk) {
        for (int A = 1; A <= N; ++A)
            for (int alpha = 1; alpha <= n; ++alpha) {
                Word tx{{Generator{tk, A}, Generator{xk, alpha}}};
                Word xt{{Generator{xk, alpha}, Generator{tk, A}}};
                if (!residue_zero(tx) || !residue_zero(xt)) return false;
            }
        return true;
    };

    CollapseReport rep;
    rep.theta_xi_vanishes = sector_vanishes(Kind::Theta, Kind::Xi);
    rep.conjugate_vanishes =
        pres.include_conjugates() ? sector_vanishes(Kind::ThetaBar, Kind::XiBar) : true;
    return rep;
}

}  // namespace ternalg

#include "ternalg/rewrite.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ternalg {

namespace {

// Sorts the word into canonical kind order by adjacent transpositions,
// accumulating the binary commutation phase per swap. Returns false when the
// term dies (repeated alternating index, annihilating pair).
bool sort_binary(std::vector<Generator>& g, Cyclo& coeff, const Presentation& pres) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t k = 0; k + 1 < g.size(); ++k) {
            Generator& u = g[k];
            Generator& v = g[k + 1];
            if (u.kind == v.kind) {
                if (pres.pair_annihilates(u.kind)) return false;
                if (!pres.binary_alternating(u.kind)) continue;
                if (u.index == v.index) return false;
                if (u.index > v.index) {
                    std::swap(u, v);
                    coeff *= Cyclo(-1);
                    moved = true;
                }
            } else if (u.kind > v.kind) {
                coeff *= pres.swap_phase(u.kind, v.kind);
                std::swap(u, v);
                moved = true;
            }
        }
    }
    // A surviving word may still hold a non-adjacent annihilating pair only if
    // kinds repeat apart, which the kind sort rules out.
    return true;
}

// Replaces each ternary block of length 3 by its minimal cyclic rotation and
// kills blocks of length >= 4 and rotation-fixed triples. The block satisfies
// w = phase * rot(w), so reaching the minimal rotation in r steps multiplies
// the coefficient by phase^r.
bool reduce_blocks(std::vector<Generator>& g, Cyclo& coeff, const Presentation& pres) {
    size_t k = 0;
    while (k < g.size()) {
        Kind kind = g[k].kind;
        size_t end = k;
        while (end < g.size() && g[end].kind == kind) ++end;
        if (pres.has_ternary_block(kind)) {
            size_t len = end - k;
            if (len >= 4) return false;
            if (len == 3) {
                const Generator a = g[k], b = g[k + 1], c = g[k + 2];
                std::array<std::array<Generator, 3>, 3> rot = {{{a, b, c}, {b, c, a}, {c, a, b}}};
                int best = 0;
                for (int r = 1; r < 3; ++r)
                    if (std::lexicographical_compare(rot[r].begin(), rot[r].end(),
                                                     rot[best].begin(), rot[best].end()))
                        best = r;
                if (rot[0] == rot[1]) return false;  // AAA: fixed by rotation
                if (best != 0) {
                    coeff *= pres.cyclic_phase(kind).pow(best);
                    for (int t = 0; t < 3; ++t) g[k + t] = rot[best][static_cast<size_t>(t)];
                }
            }
        }
        k = end;
    }
    return true;
}

}  // namespace

Poly normalize(const Term& t, const Presentation& pres) {
    pres.require_word(t.word);
    if (!pres.phase_rewritable())
        throw std::domain_error("presentation " + pres.describe() +
                                " is not a phase rewriting system; use the oracle");
    if (t.coeff.is_zero()) return Poly();
    std::vector<Generator> g = t.word.gens;
    Cyclo coeff = t.coeff;
    if (!sort_binary(g, coeff, pres)) return Poly();
    if (!reduce_blocks(g, coeff, pres)) return Poly();
    return Poly(Term{std::move(coeff), Word(std::move(g))});
}

Poly normalize(const Poly& p, const Presentation& pres) {
    Poly out;
    for (const Term& t : p.terms()) out += normalize(t, pres);
    return out;
}

Poly multiply(const Poly& a, const Poly& b, const Presentation& pres) {
    Poly out;
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            out += normalize(Term{ta.coeff * tb.coeff, ta.word.concat(tb.word)}, pres);
    return out;
}

Poly six_sum(const Word& a, const Word& b, const Word& c, const Presentation& pres) {
    if (a.size() != 1 || b.size() != 1 || c.size() != 1)
        throw std::invalid_argument("six_sum expects three degree-1 words");
    const Word* w[3] = {&a, &b, &c};
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    Poly out;
    for (const auto& p : perms)
        out += normalize(Term{Cyclo(1), w[p[0]]->concat(*w[p[1]]).concat(*w[p[2]])}, pres);
    return out;
}

std::vector<Poly> normalize_batch_serial(std::span<const Word> words, const Presentation& pres) {
    std::vector<Poly> out(words.size());
    for (size_t k = 0; k < words.size(); ++k)
        out[k] = normalize(Term{Cyclo(1), words[k]}, pres);
    return out;
}

std::vector<Poly> normalize_batch(std::span<const Word> words, const Presentation& pres) {
    std::vector<Poly> out(words.size());
    const long count = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long k = 0; k < count; ++k)
        out[static_cast<size_t>(k)] =
            normalize(Term{Cyclo(1), words[static_cast<size_t>(k)]}, pres);
    return out;
}

}  // namespace ternalg

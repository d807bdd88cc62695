#include "ternalg/presentation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ternalg {

std::string algebra_name(AlgebraType t) {
    switch (t) {
        case AlgebraType::S: return "s";
        case AlgebraType::SBar: return "sbar";
        case AlgebraType::S1: return "s1";
        case AlgebraType::S0: return "s0";
        case AlgebraType::Lambda0: return "lambda0";
        case AlgebraType::Lambda1: return "lambda1";
        case AlgebraType::Lambda: return "lambda";
        case AlgebraType::LambdaBar: return "lambdabar";
        case AlgebraType::Grassmann: return "grassmann";
        case AlgebraType::CombinedZ6: return "combined";
        case AlgebraType::CombinedZ6NonHom: return "combined-nonhom";
    }
    throw std::invalid_argument("unknown algebra type");
}

AlgebraType algebra_from_name(std::string_view name) {
    static const std::pair<std::string_view, AlgebraType> table[] = {
        {"s", AlgebraType::S},
        {"sbar", AlgebraType::SBar},
        {"s1", AlgebraType::S1},
        {"s0", AlgebraType::S0},
        {"lambda0", AlgebraType::Lambda0},
        {"lambda1", AlgebraType::Lambda1},
        {"lambda", AlgebraType::Lambda},
        {"lambdabar", AlgebraType::LambdaBar},
        {"grassmann", AlgebraType::Grassmann},
        {"combined", AlgebraType::CombinedZ6},
        {"combined-nonhom", AlgebraType::CombinedZ6NonHom},
    };
    for (const auto& [n, t] : table)
        if (n == name) return t;
    throw std::invalid_argument("unknown algebra: " + std::string(name));
}

Grade grade_of_generator(Kind k) {
    switch (k) {
        case Kind::Theta: return Grade{1, 0, 1};
        case Kind::ThetaBar: return Grade{2, 0, 5};
        case Kind::Xi: return Grade{0, 1, 3};
        case Kind::XiBar: return Grade{0, 1, 3};
        case Kind::Dx: return Grade{1, 0, 1};
        case Kind::D2x: return Grade{2, 0, 2};
    }
    throw std::invalid_argument("unknown generator kind");
}

int z6_of_pair(int z3, int z2) {
    if (z3 < 0 || z3 > 2 || z2 < 0 || z2 > 1)
        throw std::invalid_argument("z6_of_pair: grade out of range");
    return (2 * z3 + 3 * z2) % 6;
}

std::pair<int, int> pair_of_z6(int k) {
    if (k < 0 || k > 5) throw std::invalid_argument("pair_of_z6: power out of range");
    return {(2 * k) % 3, k % 2};
}

void Presentation::add_kind(Kind k, int count) {
    if (count <= 0) return;
    kinds_.push_back(k);
    index_limit_[static_cast<int>(k)] = count;
    for (int idx = 1; idx <= count; ++idx) alphabet_.push_back(Generator{k, idx});
}

Presentation::Presentation(AlgebraType type, int N, int n, PresentationOptions opts)
    : type_(type), N_(N), n_(n), opts_(opts) {
    bool combined = type == AlgebraType::CombinedZ6 || type == AlgebraType::CombinedZ6NonHom;
    if (type == AlgebraType::Grassmann) {
        if (n < 1) throw std::invalid_argument("Grassmann presentation needs n >= 1");
        N_ = 0;
    } else if (combined) {
        if (N < 1) throw std::invalid_argument("combined presentation needs N >= 1");
        if (n < 1) throw std::invalid_argument("combined presentation needs n >= 1");
    } else {
        if (N < 1) throw std::invalid_argument("presentation needs N >= 1");
        n_ = 0;
    }

    if (opts_.spin_commutation) opts_.phases.theta_thetabar = -Cyclo::j();

    if (N_ > 0) add_kind(Kind::Theta, N_);
    if (combined && opts_.include_conjugates) add_kind(Kind::ThetaBar, N_);
    if (n_ > 0) add_kind(Kind::Xi, n_);
    if (combined && opts_.include_conjugates) add_kind(Kind::XiBar, n_);
    std::sort(alphabet_.begin(), alphabet_.end());

    cyclic_phase_[static_cast<int>(Kind::Theta)] =
        (type == AlgebraType::LambdaBar) ? Cyclo::j2() : Cyclo::j();
    cyclic_phase_[static_cast<int>(Kind::ThetaBar)] = Cyclo::j2();
}

Presentation Presentation::dforms(int m) {
    if (m < 1) throw std::invalid_argument("dforms presentation needs m >= 1");
    Presentation p;
    p.type_ = AlgebraType::Lambda;  // the dx relations are the Lambda family
    p.N_ = m;
    p.add_kind(Kind::Dx, m);
    p.add_kind(Kind::D2x, m);
    std::sort(p.alphabet_.begin(), p.alphabet_.end());
    p.cyclic_phase_[static_cast<int>(Kind::Dx)] = Cyclo::j();
    return p;
}

bool Presentation::allows(const Generator& g) const {
    return g.index >= 1 && g.index <= index_limit_[static_cast<int>(g.kind)];
}

void Presentation::require_word(const Word& w) const {
    for (const auto& g : w.gens)
        if (!allows(g))
            throw std::invalid_argument("unknown generator for this presentation: " + to_token(g));
}

Grade Presentation::grade_of(const Word& w) const {
    require_word(w);
    Grade g{};
    for (const auto& gen : w.gens) g = g + grade_of_generator(gen.kind);
    return g;
}

bool Presentation::phase_rewritable() const {
    switch (type_) {
        case AlgebraType::Lambda:
        case AlgebraType::LambdaBar:
        case AlgebraType::Grassmann:
        case AlgebraType::CombinedZ6:
        case AlgebraType::CombinedZ6NonHom:
            return true;
        default:
            return false;
    }
}

Cyclo Presentation::swap_phase(Kind hi, Kind lo) const {
    const PhaseTable& ph = opts_.phases;
    if (hi == Kind::Theta && lo == Kind::Xi) return ph.omega.inv();
    if (hi == Kind::ThetaBar && lo == Kind::Xi) return ph.xi_thetabar.inv();
    if (hi == Kind::Theta && lo == Kind::XiBar) return ph.theta_xibar;
    if (hi == Kind::ThetaBar && lo == Kind::XiBar) return ph.xibar_thetabar.inv();
    if (hi == Kind::ThetaBar && lo == Kind::Theta) return ph.theta_thetabar.inv();
    if (hi == Kind::XiBar && lo == Kind::Xi) return Cyclo(-1);
    if (hi == Kind::D2x && lo == Kind::Dx) return Cyclo::j2();
    throw std::invalid_argument("no swap phase for this kind pair");
}

Cyclo Presentation::cyclic_phase(Kind k) const {
    const Cyclo& c = cyclic_phase_[static_cast<int>(k)];
    if (c.is_zero()) throw std::invalid_argument("kind has no ternary block phase");
    return c;
}

bool Presentation::binary_alternating(Kind k) const {
    return k == Kind::Xi || k == Kind::XiBar;
}

bool Presentation::pair_annihilates(Kind k) const { return k == Kind::D2x; }

bool Presentation::has_ternary_block(Kind k) const {
    return k == Kind::Theta || k == Kind::ThetaBar || k == Kind::Dx;
}

namespace {

Word w2(Generator a, Generator b) { return Word{{a, b}}; }
Word w3(Generator a, Generator b, Generator c) { return Word{{a, b, c}}; }

}  // namespace

std::vector<Poly> Presentation::binary_relations() const {
    std::vector<Poly> rels;
    auto present = [&](Kind k) { return index_limit_[static_cast<int>(k)] > 0; };
    const PhaseTable& ph = opts_.phases;

    // Alternating pairs: v^a v^b + v^b v^a = 0 (a <= b); the square relation
    // for a = b.
    auto alternating = [&](Kind k) {
        int lim = index_limit_[static_cast<int>(k)];
        for (int a = 1; a <= lim; ++a) {
            rels.push_back(Poly(Cyclo(1), w2({k, a}, {k, a})));
            for (int b = a + 1; b <= lim; ++b)
                rels.push_back(Poly(Cyclo(1), w2({k, a}, {k, b})) +
                               Poly(Cyclo(1), w2({k, b}, {k, a})));
        }
    };
    // Mixed phase pair: (lo hi) - phase (hi lo) = 0, stated with the lower
    // kind in front as in the constitutive relations.
    auto phased = [&](Kind lo, Kind hi, const Cyclo& phase) {
        int ll = index_limit_[static_cast<int>(lo)];
        int hl = index_limit_[static_cast<int>(hi)];
        for (int a = 1; a <= ll; ++a)
            for (int b = 1; b <= hl; ++b)
                rels.push_back(Poly(Cyclo(1), w2({lo, a}, {hi, b})) +
                               Poly(-phase, w2({hi, b}, {lo, a})));
    };

    if (present(Kind::Xi)) alternating(Kind::Xi);
    if (present(Kind::XiBar)) alternating(Kind::XiBar);
    if (present(Kind::Xi) && present(Kind::XiBar)) {
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                rels.push_back(Poly(Cyclo(1), w2({Kind::Xi, a}, {Kind::XiBar, b})) +
                               Poly(Cyclo(1), w2({Kind::XiBar, b}, {Kind::Xi, a})));
    }
    if (present(Kind::Xi) && present(Kind::Theta)) phased(Kind::Xi, Kind::Theta, ph.omega);
    if (present(Kind::Xi) && present(Kind::ThetaBar))
        phased(Kind::Xi, Kind::ThetaBar, ph.xi_thetabar);
    if (present(Kind::XiBar) && present(Kind::Theta))
        phased(Kind::XiBar, Kind::Theta, ph.theta_xibar.inv());
    if (present(Kind::XiBar) && present(Kind::ThetaBar))
        phased(Kind::XiBar, Kind::ThetaBar, ph.xibar_thetabar);
    if (present(Kind::Theta) && present(Kind::ThetaBar))
        phased(Kind::Theta, Kind::ThetaBar, ph.theta_thetabar);
    if (present(Kind::D2x)) {
        int lim = index_limit_[static_cast<int>(Kind::D2x)];
        // d2x^i d2x^k = 0 for every pair, and d2x^k dx^i = j^2 dx^i d2x^k.
        for (int a = 1; a <= lim; ++a)
            for (int b = 1; b <= lim; ++b)
                rels.push_back(Poly(Cyclo(1), w2({Kind::D2x, a}, {Kind::D2x, b})));
        for (int a = 1; a <= lim; ++a)
            for (int b = 1; b <= lim; ++b)
                rels.push_back(Poly(Cyclo(1), w2({Kind::Dx, a}, {Kind::D2x, b})) +
                               Poly(-Cyclo::j(), w2({Kind::D2x, b}, {Kind::Dx, a})));
    }
    return rels;
}

std::vector<Poly> Presentation::ternary_relations() const {
    std::vector<Poly> rels;

    // Relation template on all ordered triples of one kind's generators.
    auto for_triples = [&](Kind k, auto&& emit) {
        int lim = index_limit_[static_cast<int>(k)];
        for (int a = 1; a <= lim; ++a)
            for (int b = 1; b <= lim; ++b)
                for (int c = 1; c <= lim; ++c)
                    emit(Generator{k, a}, Generator{k, b}, Generator{k, c});
    };
    auto cyclic_skew = [&](Kind k, const Cyclo& phase) {
        for_triples(k, [&](Generator a, Generator b, Generator c) {
            rels.push_back(Poly(Cyclo(1), w3(a, b, c)) + Poly(-phase, w3(b, c, a)));
        });
    };

    switch (type_) {
        case AlgebraType::Lambda:
            cyclic_skew(Kind::Theta, Cyclo::j());
            break;
        case AlgebraType::LambdaBar:
            cyclic_skew(Kind::Theta, Cyclo::j2());
            break;
        case AlgebraType::Lambda1:
            for_triples(Kind::Theta, [&](Generator a, Generator b, Generator c) {
                rels.push_back(Poly(Cyclo(1), w3(a, b, c)) + Poly(Cyclo(1), w3(b, c, a)) +
                               Poly(Cyclo(1), w3(c, a, b)));
            });
            break;
        case AlgebraType::Lambda0:
            for_triples(Kind::Theta, [&](Generator a, Generator b, Generator c) {
                rels.push_back(Poly(Cyclo(1), w3(a, b, c)) + Poly(Cyclo(1), w3(b, c, a)) +
                               Poly(Cyclo(1), w3(c, a, b)) + Poly(Cyclo(1), w3(c, b, a)) +
                               Poly(Cyclo(1), w3(b, a, c)) + Poly(Cyclo(1), w3(a, c, b)));
            });
            break;
        case AlgebraType::S:
            for_triples(Kind::Theta, [&](Generator a, Generator b, Generator c) {
                rels.push_back(Poly(Cyclo(1), w3(a, b, c)) + Poly(Cyclo::j(), w3(b, c, a)) +
                               Poly(Cyclo::j2(), w3(c, a, b)));
            });
            break;
        case AlgebraType::SBar:
            for_triples(Kind::Theta, [&](Generator a, Generator b, Generator c) {
                rels.push_back(Poly(Cyclo(1), w3(a, b, c)) + Poly(Cyclo::j2(), w3(b, c, a)) +
                               Poly(Cyclo::j(), w3(c, a, b)));
            });
            break;
        case AlgebraType::S1:
            cyclic_skew(Kind::Theta, Cyclo(1));
            break;
        case AlgebraType::S0:
            for_triples(Kind::Theta, [&](Generator a, Generator b, Generator c) {
                const Word base = w3(a, b, c);
                for (const Word& perm : {w3(b, c, a), w3(c, a, b), w3(c, b, a),
                                         w3(b, a, c), w3(a, c, b)})
                    rels.push_back(Poly(Cyclo(1), base) + Poly(Cyclo(-1), perm));
            });
            break;
        case AlgebraType::Grassmann:
            break;  // quadratic only
        case AlgebraType::CombinedZ6:
        case AlgebraType::CombinedZ6NonHom:
            cyclic_skew(Kind::Theta, Cyclo::j());
            if (opts_.include_conjugates) cyclic_skew(Kind::ThetaBar, Cyclo::j2());
            break;
    }
    if (index_limit_[static_cast<int>(Kind::Dx)] > 0) cyclic_skew(Kind::Dx, Cyclo::j());
    return rels;
}

std::vector<Poly> Presentation::relations_at(int degree) const {
    if (degree < 2) return {};
    if (degree == 2) return binary_relations();
    if (degree == 3) return ternary_relations();
    return {};
}

std::string Presentation::describe() const {
    std::string d = algebra_name(type_) + "(N=" + std::to_string(N_);
    if (n_ > 0) d += ", n=" + std::to_string(n_);
    d += ")";
    return d;
}

}  // namespace ternalg

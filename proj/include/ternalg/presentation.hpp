#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternalg/cyclo.hpp"
#include "ternalg/poly.hpp"

namespace ternalg {

/// The eight S/Lambda algebra families, the xi-only Grassmann algebra, the
/// merged Z2 x Z3 algebra, and its non-homogeneous extension.
enum class AlgebraType {
    S,
    SBar,
    S1,
    S0,
    Lambda0,
    Lambda1,
    Lambda,
    LambdaBar,
    Grassmann,
    CombinedZ6,
    CombinedZ6NonHom,
};

std::string algebra_name(AlgebraType t);
AlgebraType algebra_from_name(std::string_view name);

/// Combined Z3 x Z2 grade of a word, plus the Z6 grade under the generator
/// assignment theta -> 1, thetabar -> 5, xi/xibar -> 3 (dx -> 1, d2x -> 2).
/// The pair (z3, z2) and the stored z6 are tracked independently: the
/// pair-to-q-power table is a different bijection and is exposed separately.
struct Grade {
    int z3 = 0;
    int z2 = 0;
    int z6 = 0;

    Grade operator+(const Grade& o) const {
        return Grade{(z3 + o.z3) % 3, (z2 + o.z2) % 2, (z6 + o.z6) % 6};
    }
    bool operator==(const Grade&) const = default;
};

Grade grade_of_generator(Kind k);

/// The bijection (z3, z2) <-> q^k of the combined grading: (0,0) -> q^0,
/// (2,1) -> q, (1,0) -> q^2, (0,1) -> q^3, (2,0) -> q^4, (1,1) -> q^5.
int z6_of_pair(int z3, int z2);
std::pair<int, int> pair_of_z6(int k);

/// Mixed-commutation phases, stored in the direction the constitutive
/// relations are written.
/// Every entry has a conjugate-mirror default; omega and the theta-thetabar
/// phase are the ones the source material pins (the latter in two variants).
struct PhaseTable {
    Cyclo omega = Cyclo::j();             // xi theta   = omega * theta xi
    Cyclo theta_thetabar = Cyclo::j();    // theta thetabar = p * thetabar theta
    Cyclo xi_thetabar = Cyclo::j2();      // xi thetabar = p * thetabar xi
    Cyclo theta_xibar = Cyclo::j2();      // theta xibar = p * xibar theta
    Cyclo xibar_thetabar = Cyclo::j2();   // xibar thetabar = p * thetabar xibar
};

struct PresentationOptions {
    PhaseTable phases;
    bool include_conjugates = true;  // combined algebras: add thetabar/xibar sectors
    /// Selects the modified binary relation theta thetabar = -j thetabar theta
    /// used by the covariance analysis.
    bool spin_commutation = false;
};

/// An algebra type with generator counts, grading data, and the instantiated
/// relation templates. Immutable after construction.
class Presentation {
public:
    /// N = theta-type generator count, n = xi-type count (combined types only).
    /// Throws std::invalid_argument on invalid counts (n = 0 for combined).
    Presentation(AlgebraType type, int N, int n = 0, PresentationOptions opts = {});

    /// Alphabet {dx^1..dx^m, d2x^1..d2x^m} with the differential-form relations.
    static Presentation dforms(int m);

    AlgebraType type() const { return type_; }
    int theta_count() const { return N_; }
    int xi_count() const { return n_; }
    bool include_conjugates() const { return opts_.include_conjugates; }
    const PhaseTable& phases() const { return opts_.phases; }

    /// Sorted generator alphabet.
    const std::vector<Generator>& alphabet() const { return alphabet_; }
    bool allows(const Generator& g) const;
    void require_word(const Word& w) const;  // throws on unknown generator

    Grade grade_of(const Word& w) const;

    /// All relation polynomials homogeneous of the given word length.
    std::vector<Poly> relations_at(int degree) const;

    /// True when the relation set is a phase rewriting system (Lambda,
    /// LambdaBar, Grassmann, the combined algebras, differential forms);
    /// the S family and Lambda0/Lambda1 are handled by the oracle only.
    bool phase_rewritable() const;

    /// Phase s with (hi lo) = s * (lo hi) for kinds hi > lo in canonical order.
    Cyclo swap_phase(Kind hi, Kind lo) const;

    /// Cyclic rotation phase of ternary blocks: w = phase * rot(w).
    /// Theta -> j (or j2 for LambdaBar), ThetaBar -> j2, Dx -> j.
    Cyclo cyclic_phase(Kind k) const;

    /// Kinds whose squares vanish with index antisymmetry (Xi, XiBar) and
    /// kinds annihilated in pairs regardless of index (D2x).
    bool binary_alternating(Kind k) const;
    bool pair_annihilates(Kind k) const;
    bool has_ternary_block(Kind k) const;

    std::string describe() const;

private:
    Presentation() = default;

    AlgebraType type_{AlgebraType::Lambda};
    int N_ = 0;
    int n_ = 0;
    PresentationOptions opts_;
    std::vector<Generator> alphabet_;
    std::vector<Kind> kinds_;  // kinds present
    int index_limit_[kind_count] = {0, 0, 0, 0, 0, 0};
    Cyclo cyclic_phase_[kind_count];

    void add_kind(Kind k, int count);
    std::vector<Poly> binary_relations() const;
    std::vector<Poly> ternary_relations() const;
};

}  // namespace ternalg

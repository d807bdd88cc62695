#pragma once

#include <string>
#include <vector>

#include "ternalg/matrix.hpp"

namespace ternalg {

/// The three ternary Clifford generators and their hermitian conjugates,
/// hard-coded 3x3 matrices over Q(zeta12).
Mat3 clifford_q(int a);         // a = 1..3
Mat3 clifford_q_dagger(int a);  // dotted partner, equals clifford_q(a).dagger()

/// Structure constants of the symmetric ternary identity
/// Q_a Q_b Q_c + Q_b Q_c Q_a + Q_c Q_a Q_b = 3 eta_{abc} 1.
struct EtaTensor {
    Cyclo e[3][3][3];

    static EtaTensor canonical();
    EtaTensor conj() const;
    const Cyclo& at(int a, int b, int c) const { return e[a - 1][b - 1][c - 1]; }
    Cyclo& at(int a, int b, int c) { return e[a - 1][b - 1][c - 1]; }
};

/// abc + phase bca + phase^2 cab; phase must be 1, j or j^2.
Mat3 ternary_bracket(const Mat3& a, const Mat3& b, const Mat3& c, const Cyclo& phase);

struct CheckItem {
    std::string name;
    bool pass;
};

struct CliffordReport {
    std::vector<CheckItem> checks;
    bool all_pass() const;
};

/// All 27 symmetric triple identities against eta, the conjugate identities
/// against eta-bar, and the vanishing j/j^2 brackets on (1,2,3) and (2,1,3).
CliffordReport verify_clifford();

/// Transformed generators P^-1 Q_a P satisfy the same identities with the
/// same eta. Throws std::domain_error when P is singular.
CliffordReport similarity_check(const Mat3& p);

}  // namespace ternalg

#pragma once

#include <string>
#include <vector>

#include "ternalg/cyclo.hpp"
#include "ternalg/matrix.hpp"

namespace ternalg {

/// The invariant spinor 2-forms: eps_{12} = -eps_{21} = 1 and the raised
/// companions eps^{12} = -eps^{21} = 1 (dotted alike). Lowering contracts the
/// second slot, raising the first, so raise(lower(v)) = v.
struct EpsilonForm {
    Mat2 lower;
    Mat2 upper;
    Mat2 upper_dotted;

    static EpsilonForm canonical();
};

enum class RhoVariance { LowerAbc, UpperAbc };

/// The Z3-invariant trilinear form mapping theta cubes to xi components.
/// Components satisfy the cyclic chain rho_{ABC} = j rho_{BCA} = j^2 rho_{CAB}
/// in both variances, which the canonical values (1, j^2, j) realize; the
/// conjugate partner swaps j and j^2.
struct RhoTensor {
    RhoVariance variance{RhoVariance::LowerAbc};
    bool conjugated = false;
    Cyclo comp[2][2][2][2];  // [alpha][A][B][C], zero-based

    static RhoTensor canonical(RhoVariance v);
    static RhoTensor zero(RhoVariance v);

    const Cyclo& at(int alpha, int a, int b, int c) const {
        return comp[alpha - 1][a - 1][b - 1][c - 1];
    }
    Cyclo& at(int alpha, int a, int b, int c) {
        return comp[alpha - 1][a - 1][b - 1][c - 1];
    }

    RhoTensor conjugate() const;
    bool cyclic_chain_holds() const;
};

/// Pauli matrices over Q(zeta12); mu = 0 is the unit matrix.
Mat2 pauli_sigma(int mu);

/// The spinor-to-vector 2-forms pi^mu_{A Bdot} = j^2 i sigma^mu_{A Bdot} with
/// the conjugate partner fixed by pi^mu_{A Bdot} = -j^2 pibar^mu_{Bdot A},
/// the relation the binary invariance condition forces.
struct PiTensor {
    Mat2 pi[4];     // indexed [A][Bdot]
    Mat2 pibar[4];  // indexed [Bdot][A]

    static PiTensor canonical();
};

/// The transformation induced on xi components by a change of theta basis,
/// computed from the four cubic covariance equations. Equals
/// diag-sign(U) * det U entrywise: S^1_1 = U^1_1 det U, S^2_1 = -U^2_1 det U,
/// S^1_2 = -U^1_2 det U, S^2_2 = U^2_2 det U; det S = (det U)^3.
Mat2 induced_s(const Mat2& u);

struct RhoCovarianceReport {
    bool rho_ok = false;   // S rho = U U U rho on all 16 index combinations
    bool eps_ok = false;   // epsilon components preserved by the inverse of S
    Cyclo det_s;
    bool ok() const { return rho_ok && (eps_ok == (det_s == Cyclo(1))); }
};

RhoCovarianceReport rho_covariance_check(const Mat2& u);

/// Builds U from a spinor-representation matrix: U^1_1 = j L^1_1,
/// U^1_2 = -j L^1_2, U^2_1 = -j L^2_1, U^2_2 = j L^2_2; det U = j^2 det L.
Mat2 u_from_spinor(const Mat2& spin);

/// Solves the 16 linear equations Lambda^mu_nu pi^nu_{A Bdot} =
/// U^A'_A Ubar^B'_B pi^mu_{A' B'} for the 4x4 vector transformation, with
/// Ubar the entrywise complex conjugate. Throws std::domain_error for
/// singular U.
Mat4 spin_to_lorentz(const Mat2& u);

/// The eight listed component equations tying Lambda to U (time row and the
/// first space row); returns one pass flag per equation.
std::vector<bool> lorentz_component_equations(const Mat4& lam, const Mat2& u);

/// g^{mu nu} = 1/2 pi^mu_{A Bdot} pibar^{nu Bdot A} with indices raised by
/// the epsilon forms and the pi/pibar scalar pair normalized to
/// (j^2 i)(-j i) = 1; returns diag(+1, -1, -1, -1) exactly.
Mat4 minkowski_metric();

/// Checks pi^mu_{A Bdot} theta^A thetabar^B = pibar^mu_{Bdot A} thetabar^B
/// theta^A identically in the rewrite module under the modified commutation
/// theta thetabar = -j thetabar theta.
bool binary_invariance_check(const PiTensor& tensors = PiTensor::canonical());
bool binary_invariance_check_mu(int mu, const PiTensor& tensors = PiTensor::canonical());

}  // namespace ternalg

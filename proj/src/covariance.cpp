#include "ternalg/covariance.hpp"

#include <stdexcept>

#include "ternalg/presentation.hpp"
#include "ternalg/rewrite.hpp"

namespace ternalg {

EpsilonForm EpsilonForm::canonical() {
    EpsilonForm e;
    e.lower.at(0, 1) = Cyclo(1);
    e.lower.at(1, 0) = Cyclo(-1);
    e.upper = e.lower;
    e.upper_dotted = e.lower;
    return e;
}

RhoTensor RhoTensor::canonical(RhoVariance v) {
    RhoTensor r;
    r.variance = v;
    // rho^1_{121} = 1, rho^1_{211} = j^2, rho^1_{112} = j and the mirrored
    // alpha = 2 family; identical values for the upper variance.
    r.at(1, 1, 2, 1) = Cyclo(1);
    r.at(1, 2, 1, 1) = Cyclo::j2();
    r.at(1, 1, 1, 2) = Cyclo::j();
    r.at(2, 2, 1, 2) = Cyclo(1);
    r.at(2, 1, 2, 2) = Cyclo::j2();
    r.at(2, 2, 2, 1) = Cyclo::j();
    return r;
}

RhoTensor RhoTensor::zero(RhoVariance v) {
    RhoTensor r;
    r.variance = v;
    return r;
}

RhoTensor RhoTensor::conjugate() const {
    RhoTensor r = *this;
    r.conjugated = !conjugated;
    for (auto& a : r.comp)
        for (auto& b : a)
            for (auto& c : b)
                for (auto& v : c) v = v.conj();
    return r;
}

bool RhoTensor::cyclic_chain_holds() const {
    // rho_{ABC} = ph rho_{BCA} = ph^2 rho_{CAB}; conjugation swaps j and j^2.
    Cyclo ph = conjugated ? Cyclo::j2() : Cyclo::j();
    for (int alpha = 1; alpha <= 2; ++alpha)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int c = 1; c <= 2; ++c) {
                    if (at(alpha, a, b, c) != ph * at(alpha, b, c, a)) return false;
                    if (at(alpha, a, b, c) != ph * ph * at(alpha, c, a, b)) return false;
                }
    return true;
}

Mat2 pauli_sigma(int mu) {
    Mat2 s;
    switch (mu) {
        case 0:
            s = Mat2::identity();
            break;
        case 1:
            s.at(0, 1) = Cyclo(1);
            s.at(1, 0) = Cyclo(1);
            break;
        case 2:
            s.at(0, 1) = -Cyclo::i();
            s.at(1, 0) = Cyclo::i();
            break;
        case 3:
            s.at(0, 0) = Cyclo(1);
            s.at(1, 1) = Cyclo(-1);
            break;
        default:
            throw std::invalid_argument("pauli_sigma: mu must be 0..3");
    }
    return s;
}

PiTensor PiTensor::canonical() {
    PiTensor t;
    Cyclo front = Cyclo::j2() * Cyclo::i();
    for (int mu = 0; mu < 4; ++mu) {
        Mat2 s = pauli_sigma(mu);
        t.pi[mu] = front * s;
        // pibar^mu_{Bdot A} = -j pi^mu_{A Bdot}: transposed index order.
        t.pibar[mu] = (-Cyclo::j() * front) * s.transpose();
    }
    return t;
}

Mat2 induced_s(const Mat2& u) {
    // The four cubic covariance equations, kept in their unsimplified form;
    // the determinant shortcut is a consequence checked in the tests.
    auto U = [&](int r, int c) { return u.at(r - 1, c - 1); };
    const Cyclo j = Cyclo::j(), j2 = Cyclo::j2();
    Mat2 s;
    s.at(0, 0) = U(1, 1) * U(2, 2) * U(1, 1) + j2 * U(2, 1) * U(1, 2) * U(1, 1) +
                 j * U(1, 1) * U(1, 2) * U(2, 1);
    s.at(1, 0) = U(2, 1) * U(1, 2) * U(2, 1) + j2 * U(1, 1) * U(2, 2) * U(2, 1) +
                 j * U(2, 1) * U(2, 2) * U(1, 1);
    s.at(0, 1) = U(1, 2) * U(2, 1) * U(1, 2) + j2 * U(2, 2) * U(1, 1) * U(1, 2) +
                 j * U(1, 2) * U(1, 1) * U(2, 2);
    s.at(1, 1) = U(2, 2) * U(1, 1) * U(2, 2) + j2 * U(1, 2) * U(2, 1) * U(2, 2) +
                 j * U(2, 2) * U(2, 1) * U(1, 2);
    return s;
}

namespace {

RhoCovarianceReport rho_covariance_against(const Mat2& u, const RhoTensor& rho) {
    RhoCovarianceReport rep;
    Mat2 s = induced_s(u);
    rep.det_s = s.det();

    rep.rho_ok = true;
    for (int alpha = 1; alpha <= 2 && rep.rho_ok; ++alpha)
        for (int a = 1; a <= 2 && rep.rho_ok; ++a)
            for (int b = 1; b <= 2 && rep.rho_ok; ++b)
                for (int c = 1; c <= 2 && rep.rho_ok; ++c) {
                    Cyclo lhs;
                    for (int beta = 1; beta <= 2; ++beta)
                        lhs += s.at(alpha - 1, beta - 1) * rho.at(beta, a, b, c);
                    Cyclo rhs;
                    for (int ap = 1; ap <= 2; ++ap)
                        for (int bp = 1; bp <= 2; ++bp)
                            for (int cp = 1; cp <= 2; ++cp)
                                rhs += u.at(ap - 1, a - 1) * u.at(bp - 1, b - 1) *
                                       u.at(cp - 1, c - 1) * rho.at(alpha, ap, bp, cp);
                    if (lhs != rhs) rep.rho_ok = false;
                }

    rep.eps_ok = false;
    if (!rep.det_s.is_zero()) {
        // eps_{a'b'} = S^a_{a'} S^b_{b'} eps_{ab} with the inverse matrix.
        Mat2 sinv = s.inverse();
        Mat2 eps = EpsilonForm::canonical().lower;
        Mat2 transformed = sinv.transpose() * eps * sinv;
        rep.eps_ok = transformed == eps;
    }
    return rep;
}

}  // namespace

RhoCovarianceReport rho_covariance_check(const Mat2& u) {
    return rho_covariance_against(u, RhoTensor::canonical(RhoVariance::LowerAbc));
}

Mat2 u_from_spinor(const Mat2& spin) {
    const Cyclo j = Cyclo::j();
    Mat2 u;
    u.at(0, 0) = j * spin.at(0, 0);
    u.at(0, 1) = -j * spin.at(0, 1);
    u.at(1, 0) = -j * spin.at(1, 0);
    u.at(1, 1) = j * spin.at(1, 1);
    return u;
}

Mat4 spin_to_lorentz(const Mat2& u) {
    if (u.det().is_zero()) throw std::domain_error("spin_to_lorentz: singular U");
    PiTensor t = PiTensor::canonical();
    Mat2 ubar = u.conj();

    // For each mu', four equations in the unknowns Lambda^mu'_nu, one per
    // lower index pair (A, Bdot); the coefficient matrix pi^nu_{A Bdot} is
    // the same for every mu'.
    Mat4 coeff;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int nu = 0; nu < 4; ++nu) coeff.at(a * 2 + b, nu) = t.pi[nu].at(a, b);

    Mat4 rhs;
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Cyclo acc;
                for (int ap = 0; ap < 2; ++ap)
                    for (int bp = 0; bp < 2; ++bp)
                        acc += u.at(ap, a) * ubar.at(bp, b) * t.pi[mu].at(ap, bp);
                rhs.at(a * 2 + b, mu) = acc;
            }

    // coeff * LambdaT = rhs, columnwise; invert once.
    Mat4 lamt = coeff.inverse() * rhs;
    return lamt.transpose();
}

std::vector<bool> lorentz_component_equations(const Mat4& lam, const Mat2& u) {
    Mat2 ub = u.conj();
    auto U = [&](int r, int c) { return u.at(r - 1, c - 1); };
    auto Ub = [&](int r, int c) { return ub.at(r - 1, c - 1); };
    auto L = [&](int r, int c) { return lam.at(r, c); };
    const Cyclo I = Cyclo::i();

    std::vector<bool> ok;
    // Time row: equations at the four (A, Bdot) slots of mu' = 0. The third
    // and fourth involve Lambda^0_1 -+ i Lambda^0_2, the combination the
    // sigma-matrix system produces.
    ok.push_back(L(0, 0) - L(0, 3) == U(1, 2) * Ub(1, 2) + U(2, 2) * Ub(2, 2));
    ok.push_back(L(0, 0) + L(0, 3) == U(1, 1) * Ub(1, 1) + U(2, 1) * Ub(2, 1));
    ok.push_back(L(0, 1) - I * L(0, 2) == U(1, 1) * Ub(1, 2) + U(2, 1) * Ub(2, 2));
    ok.push_back(L(0, 1) + I * L(0, 2) == U(1, 2) * Ub(1, 1) + U(2, 2) * Ub(2, 1));
    // First space row.
    ok.push_back(L(1, 0) - L(1, 3) == U(1, 2) * Ub(2, 2) + U(2, 2) * Ub(1, 2));
    ok.push_back(L(1, 0) + L(1, 3) == U(1, 1) * Ub(2, 1) + U(2, 1) * Ub(1, 1));
    ok.push_back(L(1, 1) - I * L(1, 2) == U(1, 1) * Ub(2, 2) + U(2, 1) * Ub(1, 2));
    ok.push_back(L(1, 1) + I * L(1, 2) == U(1, 2) * Ub(2, 1) + U(2, 2) * Ub(1, 1));
    return ok;
}

Mat4 minkowski_metric() {
    PiTensor t = PiTensor::canonical();
    EpsilonForm eps = EpsilonForm::canonical();
    // The stored pibar carries the invariance-forced scalar -i; the metric
    // pairing normalizes the pi/pibar scalar product to (j^2 i)(-j i) = 1,
    // hence the extra factor j.
    Cyclo half_norm = Cyclo::j() * Rational(1, 2);
    Mat4 g;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Cyclo acc;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        for (int d = 0; d < 2; ++d)
                            acc += t.pi[mu].at(a, b) * eps.upper_dotted.at(b, d) *
                                   eps.upper.at(a, c) * t.pibar[nu].at(d, c);
            g.at(mu, nu) = half_norm * acc;
        }
    return g;
}

bool binary_invariance_check_mu(int mu, const PiTensor& tensors) {
    PresentationOptions opts;
    opts.spin_commutation = true;  // theta thetabar = -j thetabar theta
    Presentation pres(AlgebraType::CombinedZ6, 2, 1, opts);

    Poly p;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Word tw{{Generator{Kind::Theta, a + 1}, Generator{Kind::ThetaBar, b + 1}}};
            Word wt{{Generator{Kind::ThetaBar, b + 1}, Generator{Kind::Theta, a + 1}}};
            p += normalize(Term{tensors.pi[mu].at(a, b), tw}, pres);
            p -= normalize(Term{tensors.pibar[mu].at(b, a), wt}, pres);
        }
    return p.is_zero();
}

bool binary_invariance_check(const PiTensor& tensors) {
    for (int mu = 0; mu < 4; ++mu)
        if (!binary_invariance_check_mu(mu, tensors)) return false;
    return true;
}

}  // namespace ternalg

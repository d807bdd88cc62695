#include "ternalg/hilbert.hpp"

namespace ternalg {

long HilbertSeries::total() const {
    long t = 0;
    for (long c : coeffs) t += c;
    return t;
}

HilbertSeries hilbert_coeffs(const Presentation& pres, int dmax, OracleOptions opts) {
    HilbertSeries h;
    h.algebra = algebra_name(pres.type());
    h.N = pres.theta_count();
    h.n = pres.xi_count();
    for (int d = 0; d <= dmax; ++d) h.coeffs.push_back(quotient_basis(pres, d, opts).dimension());
    return h;
}

HilbertSeries lambda_closed_form(int N, int dmax) {
    HilbertSeries h;
    h.algebra = "lambda";
    h.N = N;
    for (int d = 0; d <= dmax; ++d) {
        long c = 0;
        if (d == 0) c = 1;
        else if (d == 1) c = N;
        else if (d == 2) c = static_cast<long>(N) * N;
        else if (d == 3) c = static_cast<long>(N) * (N - 1) * (N + 1) / 3;
        h.coeffs.push_back(c);
    }
    return h;
}

HilbertSeries grassmann_closed_form(int n, int dmax) {
    HilbertSeries h;
    h.algebra = "grassmann";
    h.n = n;
    for (int d = 0; d <= dmax; ++d) {
        long c = 0;
        if (d <= n) {
            c = 1;
            for (int k = 0; k < d; ++k) c = c * (n - k) / (k + 1);
        }
        h.coeffs.push_back(c);
    }
    return h;
}

std::optional<HilbertSeries> closed_form_for(const Presentation& pres, int dmax) {
    switch (pres.type()) {
        case AlgebraType::Lambda:
        case AlgebraType::LambdaBar: {
            HilbertSeries h = lambda_closed_form(pres.theta_count(), dmax);
            h.algebra = algebra_name(pres.type());
            return h;
        }
        case AlgebraType::Grassmann:
            return grassmann_closed_form(pres.xi_count(), dmax);
        default:
            return std::nullopt;
    }
}

}  // namespace ternalg

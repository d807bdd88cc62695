#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternalg/oracle.hpp"
#include "ternalg/presentation.hpp"

namespace ternalg {

/// Per-degree dimensions of a graded quotient algebra, degree 0 upward.
struct HilbertSeries {
    std::string algebra;
    int N = 0;
    int n = 0;
    std::vector<long> coeffs;

    long total() const;  // sum of all coefficients
    bool operator==(const HilbertSeries&) const = default;
};

/// Oracle dimensions of the quotient, degrees 0..dmax.
HilbertSeries hilbert_coeffs(const Presentation& pres, int dmax, OracleOptions opts = {});

/// [1, N, N^2, N(N-1)(N+1)/3, 0, ...] for the j- and j^2-skew algebras.
HilbertSeries lambda_closed_form(int N, int dmax = 4);

/// Binomial coefficients for the xi-only algebra: total dimension 2^n.
HilbertSeries grassmann_closed_form(int n, int dmax);

/// The closed form matching the presentation's type, when one is known.
std::optional<HilbertSeries> closed_form_for(const Presentation& pres, int dmax);

}  // namespace ternalg

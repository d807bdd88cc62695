#include <doctest.h>

#include "ternalg/hilbert.hpp"

using namespace ternalg;

TEST_CASE("lambda series equals the closed form for N up to 4") {
    for (int N = 1; N <= 4; ++N) {
        Presentation pres(AlgebraType::Lambda, N);
        HilbertSeries got = hilbert_coeffs(pres, 4);
        HilbertSeries want = lambda_closed_form(N, 4);
        CHECK(got.coeffs == want.coeffs);
    }
    CHECK(lambda_closed_form(2, 4).coeffs == std::vector<long>{1, 2, 4, 2, 0});
    CHECK(lambda_closed_form(3, 3).coeffs == std::vector<long>{1, 3, 9, 8});
    CHECK(lambda_closed_form(1, 3).coeffs == std::vector<long>{1, 1, 1, 0});
}

TEST_CASE("conjugate family has the same dimensions") {
    Presentation pres(AlgebraType::LambdaBar, 2);
    CHECK(hilbert_coeffs(pres, 4).coeffs == std::vector<long>{1, 2, 4, 2, 0});
}

TEST_CASE("positive-degree total matches the summand form") {
    for (int N = 1; N <= 4; ++N) {
        HilbertSeries h = lambda_closed_form(N, 4);
        long positive = h.total() - 1;
        CHECK(positive == N + N * N + (static_cast<long>(N) * N * N - N) / 3);
    }
}

TEST_CASE("xi-only algebra reproduces binomial dimensions and total 2^n") {
    Presentation g2(AlgebraType::Grassmann, 0, 2);
    CHECK(hilbert_coeffs(g2, 3).coeffs == std::vector<long>{1, 2, 1, 0});
    CHECK(grassmann_closed_form(2, 3).coeffs == std::vector<long>{1, 2, 1, 0});

    Presentation g3(AlgebraType::Grassmann, 0, 3);
    HilbertSeries h = hilbert_coeffs(g3, 4);
    CHECK(h.coeffs == grassmann_closed_form(3, 4).coeffs);
    CHECK(h.total() == 8);
}

TEST_CASE("closed forms attach to the right presentations") {
    Presentation lambda(AlgebraType::Lambda, 2);
    auto cf = closed_form_for(lambda, 4);
    REQUIRE(cf.has_value());
    CHECK(cf->coeffs == std::vector<long>{1, 2, 4, 2, 0});

    Presentation s(AlgebraType::S, 2);
    CHECK(!closed_form_for(s, 4).has_value());
}

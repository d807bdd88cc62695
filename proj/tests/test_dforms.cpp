#include <doctest.h>

#include "ternalg/dforms.hpp"
#include "ternalg/rewrite.hpp"
#include "test_support.hpp"

using namespace ternalg;

namespace {

GradedForm form_of(int nvars, const Cyclo& c, const char* word) {
    GradedForm g(nvars);
    g.add(Word::parse(word), PolyFn::constant(nvars, c));
    return g;
}

}  // namespace

TEST_CASE("polynomial arithmetic and derivatives are exact") {
    PolyFn f = PolyFn::parse(2, "x1^2*x2 + 3*x2");
    CHECK(f.derivative(1) == PolyFn::parse(2, "2*x1*x2"));
    CHECK(f.derivative(2) == PolyFn::parse(2, "x1^2 + 3"));
    CHECK(f.derivative(1).derivative(2) == PolyFn::parse(2, "2*x1"));
    CHECK((f - f).is_zero());
    CHECK(PolyFn::parse(2, "1/2*x1") + PolyFn::parse(2, "1/2*x1") == PolyFn::parse(2, "x1"));
    PolyFn prod = PolyFn::parse(2, "x1 + x2") * PolyFn::parse(2, "x1 - x2");
    CHECK(prod == PolyFn::parse(2, "x1^2 - x2^2"));
    CHECK_THROWS_AS(PolyFn::parse(2, "x3"), std::invalid_argument);
}

TEST_CASE("first differential of a coordinate") {
    PolyFn x1 = PolyFn::variable(2, 1);
    GradedForm df = d(GradedForm::function(x1));
    CHECK(df == form_of(2, Cyclo(1), "dx1"));
}

TEST_CASE("second differential expands with both term families") {
    // f = x1 x2: d^2 f = dx1 dx2 + dx2 dx1 + x2 d2x1 + x1 d2x2
    PolyFn f = PolyFn::parse(2, "x1*x2");
    GradedForm d2f = d(d(GradedForm::function(f)));

    GradedForm expected(2);
    expected.add(Word::parse("dx1 dx2"), PolyFn::constant(2, Cyclo(1)));
    expected.add(Word::parse("dx2 dx1"), PolyFn::constant(2, Cyclo(1)));
    expected.add(Word::parse("ddx1"), PolyFn::variable(2, 2));
    expected.add(Word::parse("ddx2"), PolyFn::variable(2, 1));
    CHECK(d2f == expected);
}

TEST_CASE("d kills second differentials") {
    GradedForm d2x1 = form_of(2, Cyclo(1), "ddx1");
    CHECK(d(d2x1).is_zero());
}

TEST_CASE("normal form of form words") {
    CHECK(normalize_form(form_of(3, Cyclo(1), "dx2 dx3 dx1")) ==
          form_of(3, Cyclo::j2(), "dx1 dx2 dx3"));
    CHECK(normalize_form(form_of(3, Cyclo(1), "ddx1 dx1")) == form_of(3, Cyclo::j2(), "dx1 ddx1"));
    CHECK(normalize_form(form_of(3, Cyclo(1), "dx1 dx2 dx3 dx1")).is_zero());
    CHECK(normalize_form(form_of(3, Cyclo(1), "ddx1 ddx2")).is_zero());
    CHECK(normalize_form(form_of(3, Cyclo(1), "dx1 dx1 dx1")).is_zero());
}

TEST_CASE("form words share the ternary block logic with the word rewriter") {
    Presentation forms = Presentation::dforms(3);
    auto rng = testsupport::make_rng(67);
    std::uniform_int_distribution<int> idx(1, 3);
    for (int t = 0; t < 50; ++t) {
        Word w{{Generator{Kind::Dx, idx(rng)}, Generator{Kind::Dx, idx(rng)},
                Generator{Kind::Dx, idx(rng)}}};
        Poly via_rewriter = normalize(Term{Cyclo(1), w}, forms);
        GradedForm via_forms = normalize_form(form_of(3, Cyclo(1), w.str().c_str()));
        if (via_rewriter.is_zero()) {
            CHECK(via_forms.is_zero());
        } else {
            REQUIRE(via_forms.terms().size() == 1);
            const auto& [word, fn] = *via_forms.terms().begin();
            CHECK(word == via_rewriter.terms()[0].word);
            CHECK(fn == PolyFn::constant(3, via_rewriter.terms()[0].coeff));
        }
    }
}

TEST_CASE("grade of form words") {
    CHECK(form_grade(Word::parse("dx1")) == 1);
    CHECK(form_grade(Word::parse("ddx1")) == 2);
    CHECK(form_grade(Word::parse("dx1 dx2")) == 2);
    CHECK(form_grade(Word::parse("dx1 ddx2")) == 0);
}

TEST_CASE("d3 vanishes on explicit and random polynomials") {
    CHECK(d3_check(PolyFn::variable(1, 1)));
    CHECK(d3_check(PolyFn::parse(2, "x1^2*x2")));
    CHECK(d3_check(PolyFn::parse(3, "x1*x2*x3 + x3^4")));

    auto rng = testsupport::make_rng(71);
    std::uniform_int_distribution<int> vars(1, 4);
    for (int t = 0; t < 50; ++t) CHECK(d3_check(PolyFn::random(vars(rng), 5, rng)));
}

TEST_CASE("d2 of a product satisfies the twisted Leibniz expansion") {
    // d(d(fg)) computed directly must match the expansion of d applied to
    // d(f) g + f d(g), term by term.
    auto rng = testsupport::make_rng(73);
    for (int t = 0; t < 10; ++t) {
        PolyFn f = PolyFn::random(3, 3, rng);
        PolyFn g = PolyFn::random(3, 3, rng);
        GradedForm lhs = d(d(GradedForm::function(f * g)));
        GradedForm df_g = d(GradedForm::function(f));
        GradedForm f_dg = d(GradedForm::function(g));
        // multiply coefficient functions through: (df) g and f (dg)
        GradedForm sum(3);
        for (const auto& [w, fn] : df_g.terms()) sum.add(w, fn * g);
        for (const auto& [w, fn] : f_dg.terms()) sum.add(w, fn * f);
        CHECK(d(sum) == lhs);
    }
}

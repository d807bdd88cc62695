#include <doctest.h>

#include <random>

#include "ternalg/rewrite.hpp"
#include "test_support.hpp"

using namespace ternalg;

namespace {

Poly nf(const Presentation& pres, const char* word) {
    return normalize(Term{Cyclo(1), Word::parse(word)}, pres);
}

Poly term(const Cyclo& c, const char* word) { return Poly(c, Word::parse(word)); }

std::vector<Word> random_words(const Presentation& pres, int max_len, int count,
                               std::mt19937_64& rng) {
    const auto& alphabet = pres.alphabet();
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::vector<Word> out;
    for (int k = 0; k < count; ++k) {
        Word w;
        int l = len(rng);
        for (int t = 0; t < l; ++t) w.gens.push_back(alphabet[pick(rng)]);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

TEST_CASE("cyclic canonicalization of theta triples") {
    Presentation lambda(AlgebraType::Lambda, 3);
    CHECK(nf(lambda, "t2 t3 t1") == term(Cyclo::j2(), "t1 t2 t3"));
    CHECK(nf(lambda, "t3 t1 t2") == term(Cyclo::j(), "t1 t2 t3"));
    CHECK(nf(lambda, "t1 t2 t3") == term(Cyclo(1), "t1 t2 t3"));
    CHECK(nf(lambda, "t2 t1 t3") == term(Cyclo::j(), "t1 t3 t2"));
    // rotation-fixed triple vanishes
    CHECK(nf(lambda, "t1 t1 t1").is_zero());
    // conjugate family uses the j^2 phase
    Presentation lambdabar(AlgebraType::LambdaBar, 3);
    CHECK(nf(lambdabar, "t2 t3 t1") == term(Cyclo::j(), "t1 t2 t3"));
}

TEST_CASE("quartic products of theta generators vanish") {
    Presentation lambda(AlgebraType::Lambda, 3);
    CHECK(nf(lambda, "t1 t2 t3 t1").is_zero());
    CHECK(nf(lambda, "t1 t2 t2 t3").is_zero());
    CHECK(nf(lambda, "t1 t1 t1 t1").is_zero());
    CHECK(nf(lambda, "t3 t2 t1 t3 t2").is_zero());
}

TEST_CASE("binary phase sorting in the combined algebra") {
    Presentation pres(AlgebraType::CombinedZ6, 2, 2);
    CHECK(nf(pres, "x1 x1").is_zero());
    CHECK(nf(pres, "x2 x1") == term(Cyclo(-1), "x1 x2"));
    CHECK(nf(pres, "t1 x1") == term(Cyclo::j2(), "x1 t1"));
    CHECK(nf(pres, "tb1 t1") == term(Cyclo::j2(), "t1 tb1"));
    CHECK(nf(pres, "tb1 x1") == term(Cyclo::j(), "x1 tb1"));
    CHECK(nf(pres, "t1 xb1") == term(Cyclo::j2(), "xb1 t1"));
    CHECK(nf(pres, "xb1 x1") == term(Cyclo(-1), "x1 xb1"));
    CHECK(nf(pres, "xb2 xb1") == term(Cyclo(-1), "xb1 xb2"));
    // mixed word: everything sorts into kind blocks
    Poly mixed = nf(pres, "t1 x1 t2");
    REQUIRE(mixed.term_count() == 1);
    CHECK(mixed.terms()[0].word == Word::parse("x1 t1 t2"));
}

TEST_CASE("spin-variant commutation phase") {
    PresentationOptions opts;
    opts.spin_commutation = true;
    Presentation pres(AlgebraType::CombinedZ6, 2, 1, opts);
    CHECK(nf(pres, "tb1 t1") == term(-Cyclo::j2(), "t1 tb1"));
    CHECK(nf(pres, "t1 tb1") == term(Cyclo(1), "t1 tb1"));
}

TEST_CASE("multiply is the normalized bilinear product") {
    Presentation pres(AlgebraType::CombinedZ6, 2, 2);
    Poly t12 = nf(pres, "t1 t2");
    Poly t3 = nf(pres, "t2");
    CHECK(multiply(t12, t3, pres) == nf(pres, "t1 t2 t2"));

    Poly x1 = nf(pres, "x1"), x2 = nf(pres, "x2");
    CHECK((multiply(x1, x2, pres) + multiply(x2, x1, pres)).is_zero());

    Presentation lambda(AlgebraType::Lambda, 3);
    Poly cube = nf(lambda, "t1 t2 t3");
    CHECK(multiply(cube, nf(lambda, "t1"), lambda).is_zero());

    // associativity up to normal form on random samples
    auto rng = testsupport::make_rng(23);
    auto words = random_words(pres, 3, 30, rng);
    for (size_t k = 0; k + 2 < words.size(); k += 3) {
        Poly a = normalize(Term{Cyclo(1), words[k]}, pres);
        Poly b = normalize(Term{Cyclo(1), words[k + 1]}, pres);
        Poly c = normalize(Term{Cyclo(1), words[k + 2]}, pres);
        CHECK(multiply(multiply(a, b, pres), c, pres) == multiply(a, multiply(b, c, pres), pres));
    }
}

TEST_CASE("six_sum vanishes for mixed triples drawing from two kinds") {
    Presentation pres(AlgebraType::CombinedZ6, 2, 2);
    Word t1{{Generator{Kind::Theta, 1}}}, t2{{Generator{Kind::Theta, 2}}};
    Word x1{{Generator{Kind::Xi, 1}}}, x2{{Generator{Kind::Xi, 2}}};
    Word tb1{{Generator{Kind::ThetaBar, 1}}};
    Word xb1{{Generator{Kind::XiBar, 1}}};

    CHECK(six_sum(t1, x1, t2, pres).is_zero());
    CHECK(six_sum(x1, t1, x2, pres).is_zero());
    CHECK(six_sum(t1, tb1, t2, pres).is_zero());
    CHECK(six_sum(tb1, x1, tb1, pres).is_zero());
    CHECK(six_sum(t1, xb1, t2, pres).is_zero());
    CHECK(six_sum(xb1, x1, xb1, pres).is_zero());
    CHECK(six_sum(t1, t1, t1, pres).is_zero());
    CHECK(six_sum(t1, t2, t1, pres).is_zero());
    CHECK_THROWS_AS(six_sum(Word::parse("t1 t2"), t1, t2, pres), std::invalid_argument);
}

TEST_CASE("six_sum of theta-xi-theta singles out omega in {j, j^2}") {
    Word t1{{Generator{Kind::Theta, 1}}}, t2{{Generator{Kind::Theta, 2}}};
    Word x1{{Generator{Kind::Xi, 1}}}, x2{{Generator{Kind::Xi, 2}}};
    for (long k = 0; k < 12; ++k) {
        PresentationOptions opts;
        opts.phases.omega = Cyclo::zeta(k);
        opts.include_conjugates = false;
        Presentation pres(AlgebraType::CombinedZ6, 2, 2, opts);
        bool vanishes = six_sum(t1, x1, t2, pres).is_zero();
        CHECK(vanishes == (k == 4 || k == 8));
        CHECK(six_sum(x1, t1, x2, pres).is_zero());
        // same-index theta pair behaves identically
        CHECK(six_sum(t1, x1, t1, pres).is_zero() == (k == 4 || k == 8));
    }
}

TEST_CASE("normalize is idempotent and grade preserving") {
    Presentation pres(AlgebraType::CombinedZ6, 2, 2);
    auto rng = testsupport::make_rng(31);
    auto words = random_words(pres, 5, 200, rng);
    for (const auto& w : words) {
        Poly once = normalize(Term{Cyclo(1), w}, pres);
        CHECK(normalize(once, pres) == once);
        Grade g = pres.grade_of(w);
        for (const auto& t : once.terms()) CHECK(pres.grade_of(t.word) == g);
    }
}

TEST_CASE("batch normalization: parallel kernel equals serial reference") {
    Presentation pres(AlgebraType::CombinedZ6, 2, 2);
    auto rng = testsupport::make_rng(37);
    auto words = random_words(pres, 6, 500, rng);
    CHECK(normalize_batch(words, pres) == normalize_batch_serial(words, pres));
}

TEST_CASE("non-rewritable presentations are rejected") {
    Presentation s0(AlgebraType::S0, 2);
    CHECK_THROWS_AS(normalize(Term{Cyclo(1), Word::parse("t1 t2 t1")}, s0), std::domain_error);
    Presentation lambda(AlgebraType::Lambda, 2);
    CHECK_THROWS_AS(normalize(Term{Cyclo(1), Word::parse("t9")}, lambda), std::invalid_argument);
}

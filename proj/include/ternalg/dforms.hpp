#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ternalg/cyclo.hpp"
#include "ternalg/poly.hpp"
#include "ternalg/presentation.hpp"

namespace ternalg {

/// Multivariate polynomial in x^1..x^m with exact Q(zeta12) coefficients and
/// exact partial derivatives. Monomials are exponent vectors in canonical
/// (map) order.
class PolyFn {
public:
    explicit PolyFn(int nvars = 0) : nvars_(nvars) {}

    static PolyFn constant(int nvars, Cyclo c);
    static PolyFn variable(int nvars, int i);  // 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Cyclo>& terms() const { return terms_; }

    PolyFn& operator+=(const PolyFn& o);
    PolyFn& operator-=(const PolyFn& o);
    friend PolyFn operator+(PolyFn a, const PolyFn& b) { return a += b; }
    friend PolyFn operator-(PolyFn a, const PolyFn& b) { return a -= b; }
    friend PolyFn operator*(const PolyFn& a, const PolyFn& b);
    PolyFn scaled(const Cyclo& c) const;
    bool operator==(const PolyFn&) const = default;

    PolyFn derivative(int i) const;  // d/dx^i, 1-based

    std::string str() const;

    /// Parses e.g. "x1^2*x2 + 3*x3 - 1/2*x1". Throws std::invalid_argument.
    static PolyFn parse(int nvars, std::string_view text);

    /// Random polynomial with small rational coefficients; reproducible from
    /// the generator state.
    static PolyFn random(int nvars, int max_degree, std::mt19937_64& rng);

private:
    int nvars_;
    std::map<std::vector<int>, Cyclo> terms_;

    void add_term(std::vector<int> exps, const Cyclo& c);
};

/// Finite sum of coefficient functions times form words in dx^i (grade 1)
/// and d2x^i (grade 2), held in normal form under the Z3-graded relations.
class GradedForm {
public:
    explicit GradedForm(int nvars = 0);

    static GradedForm function(PolyFn f);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, PolyFn>& terms() const { return terms_; }

    GradedForm& operator+=(const GradedForm& o);
    friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
    bool operator==(const GradedForm&) const = default;

    void add(const Word& w, const PolyFn& f);

    std::string str() const;

private:
    int nvars_;
    std::map<Word, PolyFn> terms_;
};

/// Z3 grade of a form word: dx counts 1, d2x counts 2, mod 3.
int form_grade(const Word& w);

/// The graded differential: d f = (d_i f) dx^i, d(dx^i) = d2x^i,
/// d(d2x^i) = 0, with the twisted Leibniz rule
/// d(w theta) = (d w) theta + j^{grade w} w (d theta). Result is normalized.
GradedForm d(const GradedForm& form);

/// Canonical representative under dx^i dx^k dx^m = j dx^k dx^m dx^i,
/// d2x^k dx^i = j^2 dx^i d2x^k, d2x pairs = 0 and quartic dx products = 0.
/// Shares the block canonicalization code path with the word rewriter.
GradedForm normalize_form(const GradedForm& form);

/// True iff d(d(d(f))) normalizes to zero.
bool d3_check(const PolyFn& f);

}  // namespace ternalg

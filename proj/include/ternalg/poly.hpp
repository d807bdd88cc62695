#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/cyclo.hpp"

namespace ternalg {

/// Generator kinds in canonical order: the normal form sorts every word into
/// xi < xibar < theta < thetabar blocks; dx/d2x belong to the differential
/// form alphabet.
enum class Kind : std::uint8_t { Xi = 0, XiBar = 1, Theta = 2, ThetaBar = 3, Dx = 4, D2x = 5 };

constexpr int kind_count = 6;

/// CLI and JSON token prefixes: x, xb, t, tb, dx, ddx.
std::string_view kind_token(Kind k);

struct Generator {
    Kind kind{Kind::Theta};
    int index = 1;  // 1-based

    auto operator<=>(const Generator&) const = default;
};

std::string to_token(const Generator& g);
Generator generator_from_token(std::string_view tok);

/// A word in the free algebra: an ordered sequence of generators. The empty
/// word is the algebra unit. Words compare by length first, then
/// lexicographically, which is the total order used for polynomial storage
/// and for the oracle's deterministic pivoting.
struct Word {
    std::vector<Generator> gens;

    Word() = default;
    explicit Word(std::vector<Generator> g) : gens(std::move(g)) {}
    Word(std::initializer_list<Generator> g) : gens(g) {}

    size_t size() const { return gens.size(); }
    bool empty() const { return gens.empty(); }

    Word concat(const Word& o) const;

    bool operator==(const Word& o) const { return gens == o.gens; }
    std::strong_ordering operator<=>(const Word& o) const;

    std::string str() const;  // whitespace-separated tokens, "1" for the unit
    static Word parse(std::string_view text);
};

struct Term {
    Cyclo coeff;
    Word word;
};

/// Canonical sum of terms: sorted by word order, no duplicate words, no zero
/// coefficients. The zero polynomial is the empty term list.
class Poly {
public:
    Poly() = default;
    Poly(Term t);
    Poly(Cyclo coeff, Word w) : Poly(Term{std::move(coeff), std::move(w)}) {}

    static Poly zero() { return Poly(); }
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly scaled(const Cyclo& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.word == b.word;
}

}  // namespace ternalg

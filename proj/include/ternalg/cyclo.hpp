#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ternalg {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta), zeta = e^{i pi/6} a primitive
/// twelfth root of unity. Values are stored on the power basis {1, z, z^2, z^3}
/// modulo the minimal polynomial z^4 = z^2 - 1, which keeps every root of unity
/// used by the graded algebras (-1, i, j = z^4, q = z^2) in one field with exact
/// rational coordinates.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long v) { c_[0] = v; }
    Cyclo(const Rational& v) { c_[0] = v; }
    Cyclo(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1); }

    /// zeta^k for any integer k (reduced mod 12).
    static Cyclo zeta(long k);

    static Cyclo j() { return zeta(4); }    // e^{2 pi i/3}
    static Cyclo j2() { return zeta(8); }   // j^2 = conj(j)
    static Cyclo q() { return zeta(2); }    // e^{2 pi i/6}
    static Cyclo i() { return zeta(3); }
    static Cyclo minus_one() { return Cyclo(-1); }

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    /// Fixed by complex conjugation, i.e. lies in the real subfield Q(sqrt 3).
    bool is_real() const { return conj() == *this; }

    /// Value as a rational number; throws std::domain_error if not rational.
    Rational as_rational() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }

    bool operator==(const Cyclo& o) const { return c_ == o.c_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Complex conjugation, induced by zeta -> zeta^11. An involutive field
    /// automorphism; conj(j) = j^2, conj(q) = q^5, conj(i) = -i.
    Cyclo conj() const;

    /// Galois conjugate zeta -> zeta^k, k coprime to 12.
    Cyclo galois(long k) const;

    /// Exact multiplicative inverse; throws std::domain_error on zero.
    Cyclo inv() const;

    /// Integer power, negative exponents via inv().
    Cyclo pow(long e) const;

    /// Approximate complex value, for display only.
    std::complex<double> approx() const;

    /// Canonical text form: "j^2", "-q", "3/2", "1/2*z^5", or the generic
    /// basis form "c0+c1*z+c2*z^2+c3*z^3".
    std::string str() const;

    /// Parses the scalar expression syntax: integers, p/q, z^k, j, q, i,
    /// unary minus, + - * / and parentheses. Throws std::invalid_argument.
    static Cyclo parse(std::string_view text);

private:
    std::array<Rational, 4> c_{};  // c0 + c1 z + c2 z^2 + c3 z^3
};

std::ostream& operator<<(std::ostream& os, const Cyclo& v);

}  // namespace ternalg

#include "ternalg/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ternalg {

namespace {

long mod12(long k) {
    long r = k % 12;
    return r < 0 ? r + 12 : r;
}

}  // namespace

Cyclo Cyclo::zeta(long k) {
    // Powers of zeta on the basis {1, z, z^2, z^3}; zeta^4 = zeta^2 - 1.
    static const int table[12][4] = {
        {1, 0, 0, 0},   // 1
        {0, 1, 0, 0},   // z
        {0, 0, 1, 0},   // z^2 = q
        {0, 0, 0, 1},   // z^3 = i
        {-1, 0, 1, 0},  // z^4 = j
        {0, -1, 0, 1},  // z^5
        {-1, 0, 0, 0},  // z^6 = -1
        {0, -1, 0, 0},  // z^7
        {0, 0, -1, 0},  // z^8 = j^2
        {0, 0, 0, -1},  // z^9 = -i
        {1, 0, -1, 0},  // z^10 = -j
        {0, 1, 0, -1},  // z^11
    };
    const int* row = table[mod12(k)];
    return Cyclo(row[0], row[1], row[2], row[3]);
}

bool Cyclo::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rational Cyclo::as_rational() const {
    if (!is_rational()) throw std::domain_error("Cyclo: value is not rational");
    return c_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    std::array<Rational, 7> p{};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            p[a + b] += c_[a] * o.c_[b];
        }
    }
    // Fold degrees 4..6: z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
    std::array<Rational, 4> r{p[0], p[1], p[2], p[3]};
    r[2] += p[4];
    r[0] -= p[4];
    r[3] += p[5];
    r[1] -= p[5];
    r[0] -= p[6];
    c_ = std::move(r);
    return *this;
}

Cyclo Cyclo::conj() const { return galois(11); }

Cyclo Cyclo::galois(long k) const {
    k = mod12(k);
    if (k % 2 == 0 || k % 3 == 0)
        throw std::invalid_argument("Cyclo::galois: exponent must be coprime to 12");
    Cyclo r;
    for (long a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        Cyclo term = zeta(a * k);
        for (int b = 0; b < 4; ++b) r.c_[b] += c_[a] * term.c_[b];
    }
    return r;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    // N(a) = a * s5(a) * s7(a) * s11(a) is the rational field norm.
    Cyclo others = galois(5) * galois(7) * galois(11);
    Cyclo norm = *this * others;
    // The norm lies in Q by Galois theory; the basis coordinates confirm it.
    Rational n = norm.as_rational();
    Rational ninv = Rational(1) / n;
    Cyclo r;
    for (int k = 0; k < 4; ++k) r.c_[k] = others.c_[k] * ninv;
    return r;
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = *this;
    if (e < 0) {
        base = inv();
        e = -e;
    }
    Cyclo r = one();
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::complex<double> Cyclo::approx() const {
    std::complex<double> z = std::polar(1.0, M_PI / 6.0);
    std::complex<double> acc{0.0, 0.0};
    std::complex<double> zp{1.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        acc += c_[k].get_d() * zp;
        zp *= z;
    }
    return acc;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    // Prefer a rational multiple of a single zeta power, the named powers
    // first and a positive multiplier when one of the two cosets offers it.
    static const std::pair<long, const char*> named[] = {
        {0, "1"}, {4, "j"}, {8, "j^2"}, {2, "q"}, {3, "i"}, {1, "z"}, {5, "z^5"},
    };
    auto render = [](const Rational& r, const std::string& name) {
        if (name == "1") return rational_str(r);
        if (r == 1) return name;
        if (r == -1) return "-" + name;
        return rational_str(r) + "*" + name;
    };
    std::string fallback;
    for (const auto& [k, name] : named) {
        Cyclo ratio = *this * zeta(-k);
        if (!ratio.is_rational()) continue;
        Rational r = ratio.as_rational();
        if (r > 0) return render(r, name);
        if (fallback.empty()) fallback = render(r, name);
    }
    if (!fallback.empty()) return fallback;
    std::string out;
    static const char* basis[4] = {"", "z", "z^2", "z^3"};
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rational r = c_[k];
        if (!out.empty()) {
            out += (r < 0) ? "-" : "+";
            if (r < 0) r = -r;
        }
        if (k == 0) {
            out += rational_str(r);
        } else if (r == 1) {
            out += basis[k];
        } else if (r == -1) {
            out += "-" + std::string(basis[k]);
        } else {
            out += rational_str(r) + "*" + basis[k];
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& v) { return os << v.str(); }

// ---------------------------------------------------------------------------
// Scalar expression parser:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' int)?
//   atom   := integer | 'j' | 'q' | 'i' | 'z' | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

struct ScalarParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    Cyclo parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Cyclo v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'j') {
            ++pos;
            return Cyclo::j();
        }
        if (c == 'q') {
            ++pos;
            return Cyclo::q();
        }
        if (c == 'i') {
            ++pos;
            return Cyclo::i();
        }
        if (c == 'z') {
            ++pos;
            return Cyclo::zeta(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Cyclo(parse_int());
        fail("unexpected character");
    }

    Cyclo parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        Cyclo v = parse_atom();
        skip_ws();
        if (eat('^')) {
            long e = parse_int();
            v = v.pow(e);
        }
        return v;
    }

    Cyclo parse_term() {
        Cyclo v = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                v *= parse_factor();
            } else if (eat('/')) {
                v *= parse_factor().inv();
            } else {
                return v;
            }
        }
    }

    Cyclo parse_expr() {
        Cyclo v = parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                v += parse_term();
            } else if (eat('-')) {
                v -= parse_term();
            } else {
                return v;
            }
        }
    }
};

}  // namespace

Cyclo Cyclo::parse(std::string_view text) {
    ScalarParser p{text};
    Cyclo v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace ternalg

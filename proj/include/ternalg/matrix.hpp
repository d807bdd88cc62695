#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "ternalg/cyclo.hpp"

namespace ternalg {

/// Dense square matrix over Q(zeta12) with exact determinant and inverse.
template <int N>
struct SquareMatrix {
    std::array<std::array<Cyclo, N>, N> m{};

    static SquareMatrix zero() { return SquareMatrix{}; }
    static SquareMatrix identity() {
        SquareMatrix r;
        for (int k = 0; k < N; ++k) r.m[k][k] = Cyclo(1);
        return r;
    }

    Cyclo& at(int r, int c) { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const Cyclo& at(int r, int c) const {
        return m[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) r.m[i][k] = a.m[i][k] + b.m[i][k];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) r.m[i][k] = a.m[i][k] - b.m[i][k];
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                Cyclo acc;
                for (int t = 0; t < N; ++t) acc += a.m[i][t] * b.m[t][k];
                r.m[i][k] = acc;
            }
        return r;
    }
    friend SquareMatrix operator*(const Cyclo& c, const SquareMatrix& a) {
        SquareMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) r.m[i][k] = c * a.m[i][k];
        return r;
    }

    bool operator==(const SquareMatrix&) const = default;

    SquareMatrix transpose() const {
        SquareMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) r.m[k][i] = m[i][k];
        return r;
    }
    SquareMatrix conj() const {
        SquareMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) r.m[i][k] = m[i][k].conj();
        return r;
    }
    SquareMatrix dagger() const { return transpose().conj(); }

    Cyclo det() const {
        if constexpr (N == 1) {
            return m[0][0];
        } else {
            Cyclo acc;
            SquareMatrix<N == 1 ? 1 : N - 1> minor;
            for (int c = 0; c < N; ++c) {
                for (int i = 1; i < N; ++i) {
                    int mc = 0;
                    for (int k = 0; k < N; ++k) {
                        if (k == c) continue;
                        minor.m[i - 1][mc++] = m[i][k];
                    }
                }
                Cyclo cof = m[0][c] * minor.det();
                if (c % 2) cof = -cof;
                acc += cof;
            }
            return acc;
        }
    }

    /// Adjugate-based exact inverse; throws std::domain_error when singular.
    SquareMatrix inverse() const {
        Cyclo d = det();
        if (d.is_zero()) throw std::domain_error("matrix is singular");
        Cyclo dinv = d.inv();
        SquareMatrix r;
        if constexpr (N == 1) {
            r.m[0][0] = dinv;
            return r;
        } else {
            SquareMatrix<N == 1 ? 1 : N - 1> minor;
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < N; ++k) {
                    int mr = 0;
                    for (int a = 0; a < N; ++a) {
                        if (a == i) continue;
                        int mc = 0;
                        for (int b = 0; b < N; ++b) {
                            if (b == k) continue;
                            minor.m[mr][mc++] = m[a][b];
                        }
                        ++mr;
                    }
                    Cyclo cof = minor.det();
                    if ((i + k) % 2) cof = -cof;
                    r.m[k][i] = cof * dinv;  // adjugate transposes
                }
            return r;
        }
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < N; ++i) {
            if (i) s += "; ";
            for (int k = 0; k < N; ++k) {
                if (k) s += ", ";
                s += m[i][k].str();
            }
        }
        return s + "]";
    }
};

using Mat2 = SquareMatrix<2>;
using Mat3 = SquareMatrix<3>;
using Mat4 = SquareMatrix<4>;

/// Parses "a,b;c,d" with entries in scalar syntax.
template <int N>
SquareMatrix<N> parse_matrix(std::string_view text) {
    SquareMatrix<N> r;
    int row = 0;
    size_t pos = 0;
    while (row < N) {
        size_t rend = text.find(';', pos);
        std::string_view rowtext =
            (rend == std::string_view::npos) ? text.substr(pos) : text.substr(pos, rend - pos);
        size_t cpos = 0;
        for (int col = 0; col < N; ++col) {
            size_t cend = rowtext.find(',', cpos);
            std::string_view cell = (cend == std::string_view::npos)
                                        ? rowtext.substr(cpos)
                                        : rowtext.substr(cpos, cend - cpos);
            if (cell.empty() && cend == std::string_view::npos && col < N - 1)
                throw std::invalid_argument("matrix literal: too few columns");
            r.at(row, col) = Cyclo::parse(cell);
            cpos = (cend == std::string_view::npos) ? rowtext.size() : cend + 1;
        }
        ++row;
        if (rend == std::string_view::npos) break;
        pos = rend + 1;
    }
    if (row != N) throw std::invalid_argument("matrix literal: too few rows");
    return r;
}

}  // namespace ternalg

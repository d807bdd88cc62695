#pragma once

#include <random>

#include "ternalg/matrix.hpp"

namespace ternalg::testsupport {

inline std::mt19937_64 make_rng(unsigned long seed = 987654321) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& rng, int span = 4) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Cyclo random_cyclo(std::mt19937_64& rng) {
    return Cyclo(random_rational(rng), random_rational(rng), random_rational(rng),
                 random_rational(rng));
}

/// Small mixed rational/root-of-unity entries; frequently complex.
inline Cyclo random_entry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    switch (pick(rng)) {
        case 0: return Cyclo(random_rational(rng));
        case 1: return Cyclo::j() * Cyclo(random_rational(rng));
        case 2: return Cyclo::i() * Cyclo(random_rational(rng));
        default: return Cyclo::q() * Cyclo(random_rational(rng));
    }
}

inline Mat2 random_mat2(std::mt19937_64& rng) {
    Mat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.at(r, c) = random_entry(rng);
    return m;
}

/// Product of elementary shears: exact determinant 1, often complex entries.
inline Mat2 random_det1_mat2(std::mt19937_64& rng, int factors = 4) {
    std::uniform_int_distribution<int> coin(0, 1);
    Mat2 m = Mat2::identity();
    for (int k = 0; k < factors; ++k) {
        Cyclo a = random_entry(rng);
        Mat2 shear = Mat2::identity();
        if (coin(rng))
            shear.at(0, 1) = a;
        else
            shear.at(1, 0) = a;
        m = m * shear;
    }
    return m;
}

inline Mat3 random_invertible_mat3(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    while (true) {
        Mat3 p;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) p.at(r, c) = Cyclo(entry(rng));
        if (!p.det().is_zero()) return p;
    }
}

}  // namespace ternalg::testsupport

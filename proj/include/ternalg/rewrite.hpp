#pragma once

#include <span>
#include <vector>

#include "ternalg/poly.hpp"
#include "ternalg/presentation.hpp"

namespace ternalg {

/// Canonical normal form in the quotient algebra:
///   1. binary phase commutations sort each word into kind order
///      xi < xibar < theta < thetabar (dx < d2x), with index-sorted
///      xi/xibar blocks; a repeated xi index or a d2x pair kills the term;
///   2. each ternary block of length 3 is replaced by its lexicographically
///      minimal cyclic rotation times the accumulated rotation phase;
///      rotation-fixed blocks (AAA) and blocks of length >= 4 vanish.
/// Idempotent; preserves the Z6 grade of every surviving word.
/// Throws std::invalid_argument on unknown generators and std::domain_error
/// for presentations that are not phase rewriting systems.
Poly normalize(const Term& t, const Presentation& pres);
Poly normalize(const Poly& p, const Presentation& pres);

/// Product in the quotient: bilinear concatenation followed by normalize.
Poly multiply(const Poly& a, const Poly& b, const Presentation& pres);

/// Normalized sum of all six permutation products of three degree-1 words;
/// zero certifies the strong (Lambda0-type) relation for the triple.
Poly six_sum(const Word& a, const Word& b, const Word& c, const Presentation& pres);

/// Normal forms of a batch of words. The parallel kernel distributes words
/// across OpenMP threads; the serial variant is the reference implementation
/// the tests compare against.
std::vector<Poly> normalize_batch(std::span<const Word> words, const Presentation& pres);
std::vector<Poly> normalize_batch_serial(std::span<const Word> words, const Presentation& pres);

}  // namespace ternalg

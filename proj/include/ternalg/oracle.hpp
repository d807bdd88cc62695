#pragma once

#include <vector>

#include "ternalg/covariance.hpp"
#include "ternalg/poly.hpp"
#include "ternalg/presentation.hpp"
#include "ternalg/rowreduce.hpp"

namespace ternalg {

struct OracleOptions {
    int degree_cap = 6;
    bool parallel = true;
};

/// The degree-d slice of the quotient of the free algebra by the two-sided
/// ideal of a presentation's relations. Rows are u * r * v over every
/// relation r and all framing words u, v of complementary degree; columns
/// are the free words of degree d ordered descending, so the deterministic
/// first-nonzero pivot eliminates the largest word of each row and the
/// surviving basis consists of the lexicographically smallest class
/// representatives (matching the rewriter's canonical forms).
class QuotientBasis {
public:
    QuotientBasis(const Presentation& pres, int degree, const OracleOptions& opts);

    int degree() const { return degree_; }
    long word_count() const { return total_; }
    long dimension() const { return static_cast<long>(basis_.size()); }
    const std::vector<Word>& basis() const { return basis_; }

    /// Exact coordinates of the word's residue class on the basis words,
    /// as (basis ordinal, coefficient) pairs. Throws on degree mismatch.
    std::vector<std::pair<int, Cyclo>> coords_sparse(const Word& w) const;

    /// Dense coordinate vector of a word or polynomial (all terms must have
    /// the slice degree).
    std::vector<Cyclo> coords(const Word& w) const;
    std::vector<Cyclo> coords(const Poly& p) const;

    bool residue_is_zero(const Word& w) const;

private:
    Presentation pres_;
    int degree_;
    long total_;
    RowEchelon ech_;
    std::vector<Word> basis_;
    std::vector<int> basis_ordinal_of_col_;

    long col_of_word(const Word& w) const;
};

QuotientBasis quotient_basis(const Presentation& pres, int degree, OracleOptions opts = {});

/// True iff every relation of `contained` (at each degree up to the given
/// one) lies in the row space of `container`'s ideal slice of that degree;
/// this is the ideal inclusion behind each surjective homomorphism arrow.
/// Throws std::invalid_argument when the generator alphabets differ.
bool ideal_contains(const Presentation& container, const Presentation& contained, int degree,
                    OracleOptions opts = {});

struct CollapseReport {
    bool theta_xi_vanishes = false;   // all theta xi and xi theta residues are zero
    bool conjugate_vanishes = false;  // same for thetabar xibar / xibar thetabar
    bool ok() const { return theta_xi_vanishes && conjugate_vanishes; }
};

/// Adjoins the non-homogeneous relations theta^A theta^B theta^C =
/// rho^{ABC}_alpha xi^alpha (and the conjugate family) to the combined
/// algebra, framed through total degree 4 where the quartic theta products
/// vanish, and reports whether the mixed theta-xi residue classes collapse
/// to zero as forced by associativity.
CollapseReport nonhomogeneous_collapse_check(const Presentation& pres, const RhoTensor& rho,
                                             const RhoTensor& rhobar, OracleOptions opts = {});

}  // namespace ternalg

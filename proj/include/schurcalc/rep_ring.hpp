#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurcalc/weight.hpp"

namespace schurcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Element of the representation ring of GL_r in the Schur basis: a finite
/// integer combination of weights of a common rank. Zero coefficients are
/// never stored; negative coefficients are allowed (virtual elements).
class RepElement {
public:
    using Terms = std::map<Weight, Int>;

    explicit RepElement(int rank);
    RepElement(const Weight& w, Int coeff = 1);

    static RepElement trivial(int rank) { return RepElement(Weight::trivial(rank)); }

    int rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    Int coefficient(const Weight& w) const;
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// All coefficients non-negative: a genuine representation.
    bool is_effective() const noexcept;

    void add(const Weight& w, Int coeff);

    RepElement& operator+=(const RepElement& other);
    RepElement& operator-=(const RepElement& other);
    RepElement& operator*=(Int scalar);

    friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
    friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
    friend RepElement operator*(Int s, RepElement a) { return a *= s; }
    friend RepElement operator-(RepElement a) { return a *= -1; }

    bool operator==(const RepElement&) const = default;

private:
    int rank_;
    Terms terms_;
};

std::string to_string(const RepElement& a);
std::ostream& operator<<(std::ostream& os, const RepElement& a);

/// Symmetric Laurent polynomial in `rank` variables, exponent vector -> coefficient.
class CharPoly {
public:
    using Exponent = std::vector<Int>;
    using Terms = std::map<Exponent, Int>;

    explicit CharPoly(int rank);
    static CharPoly constant(int rank, Int c);
    static CharPoly monomial(Exponent e, Int c = 1);

    int rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Int coefficient(const Exponent& e) const;
    void add(const Exponent& e, Int coeff);

    /// Invariant under every permutation of the variables.
    bool is_symmetric() const;
    /// Value at x = (1, ..., 1).
    BigInt evaluate_at_ones() const;

    CharPoly& operator+=(const CharPoly& other);
    CharPoly& operator-=(const CharPoly& other);
    CharPoly& operator*=(Int scalar);
    friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
    friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);

    bool operator==(const CharPoly&) const = default;

private:
    int rank_;
    Terms terms_;
};

/// Littlewood-Richardson coefficients for partitions alpha, beta (padded to
/// `rank`): returns nu -> N_{alpha beta nu} over partitions nu with at most
/// `rank` rows.
std::map<Weight, Int> littlewood_richardson(const Weight& alpha, const Weight& beta, int rank);

/// Ring product. Negative entries are shifted into partitions by a power of
/// the determinant, multiplied with the LR rule, and shifted back.
RepElement tensor(const RepElement& a, const RepElement& b);
inline RepElement operator*(const RepElement& a, const RepElement& b) { return tensor(a, b); }

/// Sigma^alpha -> Sigma^{-alpha} with -alpha = (-alpha_r, ..., -alpha_1).
Weight dual(const Weight& w);
RepElement dual(const RepElement& a);

Weight det_twist(const Weight& w, Int m);
RepElement det_twist(const RepElement& a, Int m);

/// Schur character s_w(x_1, ..., x_r), computed by GL_r -> GL_{r-1} branching.
CharPoly char_of(const Weight& w);
CharPoly char_of(const RepElement& a);

/// Inverse of char_of: peels off the Schur character of the
/// lexicographically largest remaining exponent. Throws std::domain_error if
/// the input is not a combination of Schur characters, or if
/// `require_effective` and a negative multiplicity appears.
RepElement decompose(const CharPoly& c, bool require_effective = false);

/// Symmetric and exterior powers of an effective element via its character.
RepElement sym_power(const RepElement& a, int m);
RepElement ext_power(const RepElement& a, int m);

/// Schur functor Sigma^lambda applied to an effective element, via the
/// Jacobi-Trudi determinant in the symmetric powers of `a`.
RepElement plethysm(const Weight& lambda, const RepElement& a);

/// Weyl dimension formula.
BigInt weyl_dim(const Weight& w);
/// Signed dimension of a (possibly virtual) element.
BigInt dimension(const RepElement& a);

}  // namespace schurcalc

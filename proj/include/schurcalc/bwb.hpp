#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurcalc/rep_ring.hpp"

namespace schurcalc {

/// Integer combination of homogeneous bundles Sigma^gamma K (x) Sigma^delta Q^vee
/// on the Grassmannian G(k, d) of k-dimensional quotients of V = k^d, where
/// 0 -> K -> V (x) O -> Q -> 0, rank K = d - k, rank Q = k.
class BundleExpr {
public:
    using Key = std::pair<Weight, Weight>;  // (gamma for K, delta for Q^vee)
    using Terms = std::map<Key, Int>;

    BundleExpr(int d, int k);

    /// Outer product of a K-part and a Q^vee-part.
    static BundleExpr from_parts(int d, int k, const RepElement& k_part, const RepElement& q_dual_part);
    /// Bundle built from Q^vee alone (trivial K-part).
    static BundleExpr from_q_dual(int d, int k, const RepElement& q_dual_part);
    static BundleExpr structure_sheaf(int d, int k);
    /// omega_G = (det K)^k (x) (det Q^vee)^(d-k).
    static BundleExpr canonical(int d, int k);
    /// Omega_G = K (x) Q^vee.
    static BundleExpr cotangent(int d, int k);

    int d() const noexcept { return d_; }
    int k() const noexcept { return k_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_effective() const noexcept;

    void add(const Weight& gamma, const Weight& delta, Int coeff);
    BundleExpr& operator+=(const BundleExpr& other);
    bool operator==(const BundleExpr&) const = default;

private:
    int d_;
    int k_;
    Terms terms_;
};

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b);
BundleExpr dual(const BundleExpr& a);

/// Cohomology of a single irreducible homogeneous bundle: either zero, or
/// Sigma^beta V^vee (times a multiplicity) concentrated in one degree.
class BwbOutcome {
public:
    static BwbOutcome zero(Int repeated_value) { return BwbOutcome(std::nullopt, 0, 0, repeated_value); }
    static BwbOutcome nonzero(int degree, Weight beta, Int multiplicity = 1) {
        return BwbOutcome(std::move(beta), degree, multiplicity, 0);
    }

    bool is_zero() const noexcept { return !beta_.has_value(); }
    int degree() const noexcept { return degree_; }
    /// Weight of Sigma^beta V^vee. Precondition: !is_zero().
    const Weight& beta() const { return beta_.value(); }
    Int multiplicity() const noexcept { return multiplicity_; }
    /// For zero outcomes: a value occurring twice in alpha + rho.
    Int repeated_value() const noexcept { return repeated_value_; }
    /// multiplicity * dim Sigma^beta V^vee, or 0.
    BigInt dimension() const;

    BwbOutcome scaled(Int factor) const;
    bool operator==(const BwbOutcome&) const = default;

private:
    BwbOutcome(std::optional<Weight> beta, int degree, Int multiplicity, Int repeated)
        : beta_(std::move(beta)), degree_(degree), multiplicity_(multiplicity), repeated_value_(repeated) {}

    std::optional<Weight> beta_;
    int degree_;
    Int multiplicity_;
    Int repeated_value_;
};

std::string to_string(const BwbOutcome& o);

/// The weight of GL_d attached to Sigma^gamma K (x) Sigma^delta Q^vee:
/// (dual(gamma) || delta), i.e. the K^vee-weight followed by the Q^vee-weight.
/// Not dominant in general.
std::vector<Int> bundle_weight(int d, int k, const Weight& gamma, const Weight& delta);

/// Borel-Weil-Bott: add rho, detect repeats, sort, count inversions, subtract rho.
BwbOutcome bwb_single(int d, int k, const Weight& gamma, const Weight& delta);
/// The same algorithm on an arbitrary d-tuple (no Grassmannian bookkeeping).
BwbOutcome bwb_weight(const std::vector<Int>& alpha);

/// H^p(G, -) as degree -> GL_d representation of weights of V^vee.
class GradedCohomology {
public:
    explicit GradedCohomology(int d) : d_(d) {}

    int d() const noexcept { return d_; }
    const std::map<int, RepElement>& groups() const noexcept { return groups_; }
    bool is_zero() const noexcept { return groups_.empty(); }
    /// Representation in degree p (zero element if absent).
    RepElement at(int degree) const;
    BigInt dimension(int degree) const;
    BigInt euler_characteristic() const;

    void add(const BwbOutcome& outcome);
    bool operator==(const GradedCohomology&) const = default;

private:
    int d_;
    std::map<int, RepElement> groups_;
};

std::string to_string(const GradedCohomology& h);

/// Termwise Borel-Weil-Bott. Throws std::invalid_argument on virtual input.
GradedCohomology cohomology(const BundleExpr& e);

}  // namespace schurcalc

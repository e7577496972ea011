#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurcalc/bwb.hpp"
#include "schurcalc/bundle_calculus.hpp"

namespace schurcalc {

/// Kernel label Sigma^alpha Q^vee for alpha = (a1, a2) inside the 2 x (d-2) box.
class FunctorLabel {
public:
    FunctorLabel(Weight alpha, int d);

    const Weight& alpha() const noexcept { return alpha_; }
    int d() const noexcept { return d_; }
    /// lambda_alpha = alpha_1 - alpha_2.
    Int lambda() const noexcept { return alpha_[0] - alpha_[1]; }

    bool operator==(const FunctorLabel&) const = default;

private:
    Weight alpha_;
    int d_;
};

/// One cohomology evaluation recorded by a checker.
struct Condition {
    int q = 0;                      // exterior power of N' twisting the summand
    Weight weight;                  // Q^vee weight of the summand
    std::optional<Weight> k_weight; // K weight, for checks on general G(k, d)
    BwbOutcome outcome = BwbOutcome::zero(0);
    bool must_vanish = true;

    bool operator==(const Condition&) const = default;
};

struct VerificationReport {
    std::string check;  // "exceptional", "fully_faithful", "semiorthogonal", ...
    bool verdict = false;
    int d = 0;
    std::optional<int> k;
    std::optional<Weight> alpha;
    std::optional<Weight> beta;
    std::vector<Condition> conditions;
    BigInt hom_dimension = 0;
    std::optional<GradedCohomology> total;
    std::string note;

    /// Conditions that were required to vanish but did not.
    std::vector<Condition> failures() const;

    bool operator==(const VerificationReport&) const = default;
};

/// Ext^*(Sigma^beta Q^vee, Sigma^alpha Q^vee) summands:
/// sum_{g=0}^{min(lambda_a, lambda_b)} Sigma^{a1-b2-g, a2-b1+g} Q^vee,
/// asserted equal to Sigma^alpha (x) dual(Sigma^beta).
RepElement ext_decomposition(const Weight& alpha, const Weight& beta);

/// End(Sigma^alpha Q^vee) on G(2, d) is k in degree 0 and nothing else.
VerificationReport check_exceptional(const Weight& alpha, int d);

/// Ext^*(Sigma^beta Q^vee, Sigma^alpha Q^vee) = 0 for alpha before beta, and
/// Ext^{>0}(Sigma^alpha Q^vee, Sigma^beta Q^vee) = 0 (strongness).
VerificationReport check_exceptional_pair(const Weight& alpha, const Weight& beta, int d);

/// Fibrewise fully-faithfulness conditions for the kernel Sigma^alpha Q^vee.
VerificationReport check_fully_faithful(const Weight& alpha, int d);

/// Fibrewise semi-orthogonality conditions for alpha before beta.
VerificationReport check_semiorthogonal(const Weight& alpha, const Weight& beta, int d);

/// Labels with alpha_1 <= d-2 and lambda_alpha <= d-5, in kapranov_order.
std::vector<FunctorLabel> enumerate_ff(int d);
/// enumerate_ff restricted to alpha_2 >= 3.
std::vector<FunctorLabel> enumerate_sos(int d);
/// check_semiorthogonal on every ordered pair of enumerate_sos(d).
std::vector<VerificationReport> verify_sos(int d);

/// binom(d-3, 2) * 3^(2d).
BigInt kummer_count(int d);

/// Ext^*(Omega_G, Omega_G) on G(k, d).
VerificationReport check_cotangent_simple(int k, int d);

BigInt binomial(Int n, Int k);

}  // namespace schurcalc

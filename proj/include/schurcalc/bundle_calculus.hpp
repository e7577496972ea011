#pragma once

#include <stdexcept>

#include "schurcalc/rep_ring.hpp"

namespace schurcalc {

/// Raised when two independent computations of the same quantity disagree.
/// Never expected; signals a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Bundles on the fibre Grassmannian G(2, d), all written in the Schur basis
// of Q^vee (rank 2). Q itself is Sigma^{0,-1} Q^vee.
namespace fibre {

inline RepElement q_dual() { return RepElement(Weight{1, 0}); }
inline RepElement q() { return RepElement(Weight{0, -1}); }
inline RepElement det_q_dual(Int power = 1) { return RepElement(Weight{power, power}); }

}  // namespace fibre

/// The restricted normal bundle N' of the planar locus and its defining
/// split sequence 0 -> Q^vee -> Q (x) S^2 Q^vee -> N' -> 0.
struct NormalBundleModel {
    int d;
    RepElement nprime;    // Sigma^{2,-1} Q^vee = S^3 Q^vee (x) det Q
    RepElement sub;       // Q^vee
    RepElement middle;    // Q (x) S^2 Q^vee
    RepElement quotient;  // N'
};

/// Builds and validates the model; d only enters through d >= 3.
NormalBundleModel normal_bundle_model(int d);

/// Q (x) S^2 Q^vee split into (N', Q^vee) = (Sigma^{2,-1}, Sigma^{1,0}).
struct MiddleSplit {
    RepElement nprime;
    RepElement q_dual;
};
MiddleSplit middle_split();

/// Lambda^q N' for 0 <= q <= 4, by direct exterior power and by solving the
/// filtration identity of the defining sequence; throws ConsistencyError if
/// the two disagree. Results are cached.
const RepElement& wedge_nprime(int q);

/// Lambda^q N' through the filtration route only (exposed for tests).
RepElement wedge_nprime_by_filtration(int q);

/// Lambda^m (V (x) W) = sum_{|a| = m} Sigma^a V (x) Sigma^{a'} W.
RepElement cauchy_exterior(const RepElement& v, const RepElement& w, int m);

/// Lambda^2 (S^2 Q^vee (x) Q) via the Cauchy identity.
RepElement wedge2_middle();

/// dim I / mI = d + (l^2 - l)/2 for a planar ideal, cross-checked against
/// the split (d - l) + binom(l + 1, 2).
Int planar_rank_identity(int d, int l);

}  // namespace schurcalc

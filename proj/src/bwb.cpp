#include "schurcalc/bwb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schurcalc/checked.hpp"

namespace schurcalc {

namespace {

void check_grassmannian(int d, int k) {
    if (d < 2 || k < 1 || k > d - 1)
        throw std::invalid_argument("Grassmannian G(k,d) needs 1 <= k <= d-1, got k=" + std::to_string(k) +
                                    ", d=" + std::to_string(d));
}

}  // namespace

BundleExpr::BundleExpr(int d, int k) : d_(d), k_(k) { check_grassmannian(d, k); }

void BundleExpr::add(const Weight& gamma, const Weight& delta, Int coeff) {
    if (gamma.rank() != d_ - k_ || delta.rank() != k_)
        throw std::invalid_argument("bundle term ranks must be (d-k, k) = (" + std::to_string(d_ - k_) + ", " +
                                    std::to_string(k_) + ")");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{gamma, delta}, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& other) {
    if (other.d_ != d_ || other.k_ != k_) throw std::invalid_argument("BundleExpr on different Grassmannians");
    for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
    return *this;
}

bool BundleExpr::is_effective() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

BundleExpr BundleExpr::from_parts(int d, int k, const RepElement& k_part, const RepElement& q_dual_part) {
    BundleExpr out(d, k);
    for (const auto& [g, cg] : k_part.terms())
        for (const auto& [q, cq] : q_dual_part.terms()) out.add(g, q, checked_mul(cg, cq));
    return out;
}

BundleExpr BundleExpr::from_q_dual(int d, int k, const RepElement& q_dual_part) {
    check_grassmannian(d, k);
    return from_parts(d, k, RepElement::trivial(d - k), q_dual_part);
}

BundleExpr BundleExpr::structure_sheaf(int d, int k) {
    check_grassmannian(d, k);
    BundleExpr out(d, k);
    out.add(Weight::trivial(d - k), Weight::trivial(k), 1);
    return out;
}

BundleExpr BundleExpr::canonical(int d, int k) {
    check_grassmannian(d, k);
    BundleExpr out(d, k);
    out.add(Weight::constant(d - k, k), Weight::constant(k, d - k), 1);
    return out;
}

BundleExpr BundleExpr::cotangent(int d, int k) {
    check_grassmannian(d, k);
    std::vector<Int> g(static_cast<std::size_t>(d - k), 0);
    std::vector<Int> q(static_cast<std::size_t>(k), 0);
    g[0] = 1;
    q[0] = 1;
    BundleExpr out(d, k);
    out.add(Weight(g), Weight(q), 1);
    return out;
}

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
    if (a.d() != b.d() || a.k() != b.k()) throw std::invalid_argument("BundleExpr on different Grassmannians");
    BundleExpr out(a.d(), a.k());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const RepElement kp = tensor(RepElement(ka.first), RepElement(kb.first));
            const RepElement qp = tensor(RepElement(ka.second), RepElement(kb.second));
            BundleExpr piece = BundleExpr::from_parts(a.d(), a.k(), kp, qp);
            for (const auto& [key, c] : piece.terms()) out.add(key.first, key.second, checked_mul(c, checked_mul(ca, cb)));
        }
    }
    return out;
}

BundleExpr dual(const BundleExpr& a) {
    BundleExpr out(a.d(), a.k());
    for (const auto& [key, c] : a.terms()) out.add(dual(key.first), dual(key.second), c);
    return out;
}

BigInt BwbOutcome::dimension() const {
    if (is_zero()) return 0;
    return BigInt(multiplicity_) * weyl_dim(*beta_);
}

BwbOutcome BwbOutcome::scaled(Int factor) const {
    if (is_zero()) return *this;
    return nonzero(degree_, *beta_, checked_mul(multiplicity_, factor));
}

std::string to_string(const BwbOutcome& o) {
    if (o.is_zero()) return "Zero (repeat at value " + std::to_string(o.repeated_value()) + ")";
    std::ostringstream os;
    os << "H^" << o.degree() << " = ";
    if (o.multiplicity() != 1) os << o.multiplicity() << "*";
    os << "S(" << to_string(o.beta()) << ")V^vee, dim " << o.dimension();
    return os.str();
}

std::vector<Int> bundle_weight(int d, int k, const Weight& gamma, const Weight& delta) {
    check_grassmannian(d, k);
    if (gamma.rank() != d - k || delta.rank() != k)
        throw std::invalid_argument("bwb needs gamma of rank d-k and delta of rank k");
    // Sigma^gamma K = Sigma^{dual(gamma)} K^vee, and V^vee ->> K^vee.
    const Weight g = dual(gamma);
    std::vector<Int> alpha(g.entries().begin(), g.entries().end());
    alpha.insert(alpha.end(), delta.entries().begin(), delta.entries().end());
    return alpha;
}

BwbOutcome bwb_weight(const std::vector<Int>& alpha) {
    const auto d = static_cast<Int>(alpha.size());
    if (d < 1) throw std::invalid_argument("bwb needs a non-empty weight");
    std::vector<Int> shifted(alpha.size());
    for (Int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] = checked_add(alpha[static_cast<std::size_t>(i)], d - i);

    std::vector<Int> sorted = shifted;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return BwbOutcome::zero(sorted[i]);

    int inversions = 0;
    for (std::size_t i = 0; i < shifted.size(); ++i)
        for (std::size_t j = i + 1; j < shifted.size(); ++j)
            if (shifted[i] < shifted[j]) ++inversions;

    std::vector<Int> beta(sorted.size());
    for (Int i = 0; i < d; ++i) beta[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(i)] - (d - i);
    return BwbOutcome::nonzero(inversions, Weight(std::move(beta)));
}

BwbOutcome bwb_single(int d, int k, const Weight& gamma, const Weight& delta) {
    return bwb_weight(bundle_weight(d, k, gamma, delta));
}

RepElement GradedCohomology::at(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? RepElement(d_) : it->second;
}

BigInt GradedCohomology::dimension(int degree) const { return schurcalc::dimension(at(degree)); }

BigInt GradedCohomology::euler_characteristic() const {
    BigInt chi = 0;
    for (const auto& [p, rep] : groups_) {
        if (p % 2) chi -= schurcalc::dimension(rep);
        else chi += schurcalc::dimension(rep);
    }
    return chi;
}

void GradedCohomology::add(const BwbOutcome& outcome) {
    if (outcome.is_zero()) return;
    if (outcome.beta().rank() != d_) throw std::invalid_argument("cohomology weight has wrong rank");
    auto [it, inserted] = groups_.try_emplace(outcome.degree(), d_);
    it->second.add(outcome.beta(), outcome.multiplicity());
    if (it->second.is_zero()) groups_.erase(it);
}

std::string to_string(const GradedCohomology& h) {
    if (h.is_zero()) return "0 (all degrees vanish)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, rep] : h.groups()) {
        if (!first) os << "; ";
        first = false;
        os << "H^" << p << " = " << to_string(rep) << " [dim " << dimension(rep) << "]";
    }
    return os.str();
}

GradedCohomology cohomology(const BundleExpr& e) {
    if (!e.is_effective()) throw std::invalid_argument("cohomology needs an effective bundle expression");
    GradedCohomology out(e.d());
    for (const auto& [key, c] : e.terms()) out.add(bwb_single(e.d(), e.k(), key.first, key.second).scaled(c));
    return out;
}

}  // namespace schurcalc

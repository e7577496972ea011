#include "schurcalc/soc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schurcalc {

namespace {

constexpr int kQuotientRank = 2;

void require_d_at_least(int d, int minimum, const char* what) {
    if (d < minimum)
        throw std::invalid_argument(std::string(what) + " needs d >= " + std::to_string(minimum) + ", got " +
                                    std::to_string(d));
}

// Evaluates every summand of a Q^vee element on G(2, d) and records it.
void record(VerificationReport& report, GradedCohomology& total, int q, const RepElement& summands, bool (*must_vanish)(const Weight&)) {
    const Weight no_k = Weight::trivial(report.d - kQuotientRank);
    for (const auto& [w, c] : summands.terms()) {
        if (c < 0) throw ConsistencyError("virtual summand " + to_string(w) + " in a genuine bundle");
        BwbOutcome outcome = bwb_single(report.d, kQuotientRank, no_k, w).scaled(c);
        total.add(outcome);
        report.conditions.push_back(Condition{q, w, std::nullopt, std::move(outcome), must_vanish(w)});
    }
}

bool always(const Weight&) { return true; }
bool unless_trivial(const Weight& w) { return !w.is_trivial(); }

bool no_failures(const VerificationReport& r) {
    return std::none_of(r.conditions.begin(), r.conditions.end(),
                        [](const Condition& c) { return c.must_vanish && !c.outcome.is_zero(); });
}

}  // namespace

std::vector<Condition> VerificationReport::failures() const {
    std::vector<Condition> out;
    for (const Condition& c : conditions)
        if (c.must_vanish && !c.outcome.is_zero()) out.push_back(c);
    return out;
}

FunctorLabel::FunctorLabel(Weight alpha, int d) : alpha_(std::move(alpha)), d_(d) {
    require_d_at_least(d, 3, "a functor label");
    if (alpha_.rank() != 2 || alpha_[1] < 0 || alpha_[0] > d - 2)
        throw std::invalid_argument("label " + to_string(alpha_) + " is not inside the 2 x " + std::to_string(d - 2) +
                                    " box");
}

BigInt binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out = 1;
    for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

RepElement ext_decomposition(const Weight& alpha, const Weight& beta) {
    for (const Weight* w : {&alpha, &beta})
        if (w->rank() != 2 || !w->is_partition())
            throw std::invalid_argument("ext_decomposition needs two-row partitions, got " + to_string(*w));
    const Int la = alpha[0] - alpha[1];
    const Int lb = beta[0] - beta[1];
    RepElement closed(2);
    for (Int g = 0; g <= std::min(la, lb); ++g) closed.add(Weight{alpha[0] - beta[1] - g, alpha[1] - beta[0] + g}, 1);
    const RepElement via_ring = tensor(RepElement(alpha), dual(RepElement(beta)));
    if (closed != via_ring)
        throw ConsistencyError("Ext summands " + to_string(closed) + " disagree with the ring product " +
                               to_string(via_ring));
    return closed;
}

VerificationReport check_exceptional(const Weight& alpha, int d) {
    const FunctorLabel label(alpha, d);
    VerificationReport report;
    report.check = "exceptional";
    report.d = d;
    report.alpha = alpha;
    GradedCohomology total(d);
    record(report, total, 0, ext_decomposition(alpha, alpha), unless_trivial);
    report.hom_dimension = total.dimension(0);
    const bool only_degree_zero = total.groups().size() == 1 && total.groups().count(0) == 1;
    report.verdict = no_failures(report) && only_degree_zero && report.hom_dimension == 1;
    report.total = std::move(total);
    return report;
}

VerificationReport check_exceptional_pair(const Weight& alpha, const Weight& beta, int d) {
    const FunctorLabel a(alpha, d);
    const FunctorLabel b(beta, d);
    if (!precedes(alpha, beta))
        throw std::invalid_argument("check_exceptional_pair needs " + to_string(alpha) + " before " + to_string(beta));
    VerificationReport report;
    report.check = "exceptional_pair";
    report.d = d;
    report.alpha = alpha;
    report.beta = beta;
    GradedCohomology backward(d);
    record(report, backward, 0, ext_decomposition(alpha, beta), always);
    report.hom_dimension = backward.dimension(0);

    // Forward Exts may be nonzero, but only in degree 0.
    GradedCohomology forward(d);
    record(report, forward, 0, ext_decomposition(beta, alpha), [](const Weight&) { return false; });
    const bool forward_strong = std::all_of(forward.groups().begin(), forward.groups().end(),
                                            [](const auto& g) { return g.first == 0; });
    report.verdict = no_failures(report) && forward_strong;
    if (!forward_strong) report.note = "higher forward Ext: " + to_string(forward);
    return report;
}

VerificationReport check_fully_faithful(const Weight& alpha, int d) {
    require_d_at_least(d, 5, "check_fully_faithful");
    const FunctorLabel label(alpha, d);
    VerificationReport report;
    report.check = "fully_faithful";
    report.d = d;
    report.alpha = alpha;

    const RepElement ext = ext_decomposition(alpha, alpha);
    GradedCohomology untwisted(d);
    record(report, untwisted, 0, ext, unless_trivial);
    report.hom_dimension = untwisted.dimension(0);
    for (int q = 1; q <= 4; ++q) {
        GradedCohomology twisted(d);
        record(report, twisted, q, tensor(wedge_nprime(q), ext), always);
    }
    report.verdict = no_failures(report) && report.hom_dimension == 1;
    if (label.lambda() > d - 5)
        report.note = "lambda_alpha = " + std::to_string(label.lambda()) + " > d-5: outside the proven range; a failed "
                      "condition is not evidence against fully-faithfulness";
    report.total = std::move(untwisted);
    return report;
}

VerificationReport check_semiorthogonal(const Weight& alpha, const Weight& beta, int d) {
    require_d_at_least(d, 5, "check_semiorthogonal");
    const FunctorLabel a(alpha, d);
    const FunctorLabel b(beta, d);
    if (!precedes(alpha, beta))
        throw std::invalid_argument("check_semiorthogonal needs " + to_string(alpha) + " strictly before " +
                                    to_string(beta));
    VerificationReport report;
    report.check = "semiorthogonal";
    report.d = d;
    report.alpha = alpha;
    report.beta = beta;

    const RepElement ext = ext_decomposition(alpha, beta);
    GradedCohomology untwisted(d);
    record(report, untwisted, 0, ext, always);
    report.hom_dimension = untwisted.dimension(0);
    for (int q = 1; q <= 4; ++q) {
        GradedCohomology twisted(d);
        record(report, twisted, q, tensor(wedge_nprime(q), ext), always);
    }
    report.verdict = no_failures(report);
    if (alpha[0] - beta[1] > d - 5)
        report.note = "alpha_1 - beta_2 = " + std::to_string(alpha[0] - beta[1]) +
                      " > d-5: outside the proven range; a failed condition is not evidence against semi-orthogonality";
    report.total = std::move(untwisted);
    return report;
}

std::vector<FunctorLabel> enumerate_ff(int d) {
    require_d_at_least(d, 5, "enumerate_ff");
    std::vector<FunctorLabel> out;
    for (const Weight& p : partitions_in_box(2, d - 2))
        if (p[0] - p[1] <= d - 5) out.emplace_back(p, d);
    const auto expected = static_cast<std::size_t>((d * d - d - 12) / 2);
    if (out.size() != expected)
        throw ConsistencyError("enumerate_ff(" + std::to_string(d) + ") found " + std::to_string(out.size()) +
                               " labels, expected " + std::to_string(expected));
    return out;
}

std::vector<FunctorLabel> enumerate_sos(int d) {
    std::vector<FunctorLabel> out;
    for (FunctorLabel& l : enumerate_ff(d))
        if (l.alpha()[1] >= 3) out.push_back(std::move(l));
    if (BigInt(out.size()) != binomial(d - 3, 2))
        throw ConsistencyError("enumerate_sos(" + std::to_string(d) + ") has the wrong length");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].alpha()[0] - out[j].alpha()[1] > d - 5)
                throw ConsistencyError("enumerate_sos pair violates alpha_1 - beta_2 <= d-5");
    return out;
}

std::vector<VerificationReport> verify_sos(int d) {
    const std::vector<FunctorLabel> labels = enumerate_sos(d);
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            out.push_back(check_semiorthogonal(labels[i].alpha(), labels[j].alpha(), d));
    return out;
}

BigInt kummer_count(int d) {
    require_d_at_least(d, 5, "kummer_count");
    const BigInt torsion = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(2 * d));
    const BigInt count = binomial(d - 3, 2) * torsion;
    if (count != BigInt(enumerate_sos(d).size()) * torsion)
        throw ConsistencyError("kummer_count disagrees with the enumerated sequence");
    return count;
}

VerificationReport check_cotangent_simple(int k, int d) {
    if (k < 1 || k > d - 1) throw std::invalid_argument("check_cotangent_simple needs 1 <= k <= d-1");
    VerificationReport report;
    report.check = "cotangent_simple";
    report.d = d;
    report.k = k;
    const BundleExpr omega = BundleExpr::cotangent(d, k);
    const BundleExpr end = tensor(omega, dual(omega));
    GradedCohomology total(d);
    for (const auto& [key, c] : end.terms()) {
        BwbOutcome outcome = bwb_single(d, k, key.first, key.second).scaled(c);
        total.add(outcome);
        report.conditions.push_back(Condition{0, key.second, key.first, std::move(outcome), false});
    }
    report.hom_dimension = total.dimension(0);
    bool ok = report.hom_dimension == 1 && total.at(0) == RepElement::trivial(d);
    if (k >= 2 && k <= d - 2) {
        std::vector<Int> adjoint(static_cast<std::size_t>(d), 0);
        adjoint.front() = 1;
        adjoint.back() = -1;
        ok = ok && total.groups().size() == 2 && total.at(1) == RepElement(Weight(adjoint));
    }
    report.verdict = ok;
    report.total = std::move(total);
    return report;
}

}  // namespace schurcalc

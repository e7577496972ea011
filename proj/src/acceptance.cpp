#include "schurcalc/acceptance.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "schurcalc/soc.hpp"

namespace schurcalc {

namespace {

// Collects assertions for one criterion and keeps the first failure.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool passed() const { return failure_.empty(); }
    long checks() const { return checks_; }
    const std::string& failure() const { return failure_; }

private:
    long checks_ = 0;
    std::string failure_;
};

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

CriterionResult run(int id, std::string name, const std::function<void(Tally&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    Tally t;
    try {
        body(t);
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    r.passed = t.passed();
    r.checks = t.checks();
    r.detail = t.passed() ? std::to_string(t.checks()) + " checks" : t.failure();
    return r;
}

std::string label(const char* what, int d, const Weight& a) { return std::string(what) + " d=" + std::to_string(d) + " alpha=" + str(a); }

// Classical cohomology of O(t) on P^n.
BigInt bott_h0(int n, Int t) { return t >= 0 ? binomial(n + t, n) : BigInt(0); }
BigInt bott_hn(int n, Int t) { return t <= -n - 1 ? binomial(-t - 1, n) : BigInt(0); }

void counting(Tally& t, int d_max) {
    for (int d = 5; d <= std::min(12, d_max); ++d) {
        const auto ff = enumerate_ff(d).size();
        const auto sos = enumerate_sos(d).size();
        t.expect(BigInt(ff) == binomial(d - 3, 2) + 3 * (d - 4), "|ff| at d=" + std::to_string(d));
        t.expect(BigInt(sos) == binomial(d - 3, 2), "|sos| at d=" + std::to_string(d));
    }
}

void kummer(Tally& t, int d_max) {
    if (d_max >= 5) t.expect(kummer_count(5) == 59049, "kummer_count(5) = 59049");
    for (int d = 5; d <= std::min(12, d_max); ++d)
        t.expect(kummer_count(d) == binomial(d - 3, 2) * boost::multiprecision::pow(BigInt(3), 2 * d),
                 "kummer_count at d=" + std::to_string(d));
}

void fully_faithful(Tally& t, int d_max) {
    for (int d = 5; d <= std::min(9, d_max); ++d) {
        for (const Weight& a : partitions_in_box(2, d - 2)) {
            if (a[0] - a[1] > d - 5) continue;
            const VerificationReport r = check_fully_faithful(a, d);
            t.expect(r.verdict && r.hom_dimension == 1, label("fully faithful", d, a));
            for (const Condition& c : r.conditions)
                if (c.must_vanish) t.expect(c.outcome.is_zero(), label("vanishing summand", d, a) + " q=" + std::to_string(c.q));
        }
    }
}

void semiorthogonal(Tally& t, int d_max) {
    for (int d = 5; d <= std::min(9, d_max); ++d) {
        const auto box = partitions_in_box(2, d - 2);
        for (std::size_t i = 0; i < box.size(); ++i) {
            for (std::size_t j = i + 1; j < box.size(); ++j) {
                const Weight& a = box[i];
                const Weight& b = box[j];
                if (a[0] - b[1] > d - 5) continue;
                const VerificationReport r = check_semiorthogonal(a, b, d);
                t.expect(r.verdict, label("semi-orthogonal", d, a) + " beta=" + str(b));
                for (const Condition& c : r.conditions)
                    t.expect(c.outcome.is_zero(), label("vanishing summand", d, a) + " beta=" + str(b));
            }
        }
        for (const VerificationReport& r : verify_sos(d))
            t.expect(r.verdict, "sequence pair at d=" + std::to_string(d));
    }
}

void kapranov(Tally& t, int d_max) {
    for (int d = 3; d <= std::min(8, d_max); ++d) {
        const auto box = partitions_in_box(2, d - 2);
        for (std::size_t i = 0; i < box.size(); ++i) {
            t.expect(check_exceptional(box[i], d).verdict, label("exceptional", d, box[i]));
            for (std::size_t j = i + 1; j < box.size(); ++j)
                t.expect(check_exceptional_pair(box[i], box[j], d).verdict,
                         label("exceptional pair", d, box[i]) + " beta=" + str(box[j]));
        }
    }
}

void normal_bundle(Tally& t) {
    t.expect(wedge_nprime(3) == RepElement(Weight{3, 0}), "Lambda^3 N' = S(3,0)");
    t.expect(wedge_nprime(4) == RepElement(Weight{2, 2}), "Lambda^4 N' = S(2,2)");
    RepElement middle(2);
    middle.add(Weight{3, -1}, 2);
    middle.add(Weight{1, 1}, 2);
    middle.add(Weight{2, 0}, 1);
    t.expect(wedge2_middle() == middle, "Lambda^2 (S^2 Q^vee (x) Q)");
    const RepElement nprime(Weight{2, -1});
    for (int q = 0; q <= 4; ++q)
        t.expect(ext_power(nprime, q) == wedge_nprime_by_filtration(q), "filtration vs direct at q=" + std::to_string(q));
}

void cotangent(Tally& t, int d_max) {
    for (int d = 4; d <= std::min(8, d_max); ++d) {
        for (int k = 2; k <= d - 2; ++k) {
            const VerificationReport r = check_cotangent_simple(k, d);
            const std::string where = "k=" + std::to_string(k) + " d=" + std::to_string(d);
            t.expect(r.verdict, "cotangent simple " + where);
            t.expect(r.total && r.total->dimension(0) == 1, "Hom dim 1 " + where);
            t.expect(r.total && r.total->dimension(1) == d * d - 1, "Ext^1 dim d^2-1 " + where);
            t.expect(r.total && r.total->groups().size() == 2, "only degrees 0 and 1 " + where);
        }
    }
}

void oracles(Tally& t) {
    for (int rank = 1; rank <= 3; ++rank) {
        std::vector<Weight> parts;
        for (Int n = 0; n <= 6; ++n)
            for (Weight& p : partitions_of(n, rank)) parts.push_back(std::move(p));
        for (const Weight& a : parts) {
            for (const Weight& b : parts) {
                const RepElement product = tensor(RepElement(a), RepElement(b));
                const CharPoly expected = char_of(a) * char_of(b);
                t.expect(char_of(product) == expected, "LR vs character for " + str(a) + " x " + str(b));
                t.expect(decompose(expected, true) == product, "peeled character for " + str(a) + " x " + str(b));
            }
        }
    }
    for (int n = 1; n <= 5; ++n) {
        const int d = n + 1;
        for (Int m = -12; m <= 12; ++m) {
            const BundleExpr line = BundleExpr::from_q_dual(d, 1, RepElement(Weight{m}));
            const GradedCohomology h = cohomology(line);
            const Int twist = -m;  // Sigma^(m) Q^vee = O(-m)
            const std::string where = "P^" + std::to_string(n) + " O(" + std::to_string(twist) + ")";
            t.expect(h.dimension(0) == bott_h0(n, twist), "H^0 " + where);
            t.expect(h.dimension(n) == bott_hn(n, twist), "H^n " + where);
            for (int p = 1; p < n; ++p) t.expect(h.dimension(p) == 0, "H^p middle " + where);
        }
    }
}

void pieri(Tally& t) {
    const RepElement alpha(Weight{2, 1, 0});
    RepElement sym(3);
    for (const Weight& w : {Weight{4, 1, 0}, Weight{3, 2, 0}, Weight{3, 1, 1}, Weight{2, 2, 1}}) sym.add(w, 1);
    RepElement ext(3);
    for (const Weight& w : {Weight{3, 2, 0}, Weight{3, 1, 1}, Weight{2, 2, 1}}) ext.add(w, 1);
    t.expect(tensor(alpha, RepElement(Weight{2, 0, 0})) == sym, "S(2,1,0) x S^2");
    t.expect(tensor(alpha, RepElement(Weight{1, 1, 0})) == ext, "S(2,1,0) x Lambda^2");
}

void planar(Tally& t, int d_max) {
    for (int d = 1; d <= std::min(12, d_max); ++d)
        for (int l = 1; l <= d; ++l)
            t.expect(BigInt(planar_rank_identity(d, l)) == (d - l) + binomial(l + 1, 2),
                     "planar rank d=" + std::to_string(d) + " l=" + std::to_string(l));
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int d_max) {
    std::vector<CriterionResult> out;
    out.push_back(run(1, "Label counts (fully faithful / semi-orthogonal)", [&](Tally& t) { counting(t, d_max); }));
    out.push_back(run(2, "Generalized Kummer exceptional sequence length", [&](Tally& t) { kummer(t, d_max); }));
    out.push_back(run(3, "Fully-faithfulness of Sigma^alpha Q^vee kernels", [&](Tally& t) { fully_faithful(t, d_max); }));
    out.push_back(run(4, "Semi-orthogonality of kernel pairs", [&](Tally& t) { semiorthogonal(t, d_max); }));
    out.push_back(run(5, "Kapranov strong exceptional collection on G(2,d)", [&](Tally& t) { kapranov(t, d_max); }));
    out.push_back(run(6, "Normal bundle exterior powers", [&](Tally& t) { normal_bundle(t); }));
    out.push_back(run(7, "Simplicity of the cotangent bundle", [&](Tally& t) { cotangent(t, d_max); }));
    out.push_back(run(8, "LR vs character oracle; BWB vs Bott formula", [&](Tally& t) { oracles(t); }));
    out.push_back(run(9, "Pieri golden decompositions", [&](Tally& t) { pieri(t); }));
    out.push_back(run(10, "Planar ideal rank identity", [&](Tally& t) { planar(t, d_max); }));
    return out;
}

}  // namespace schurcalc

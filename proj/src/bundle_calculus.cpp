#include "schurcalc/bundle_calculus.hpp"

#include <array>
#include <string>

namespace schurcalc {

NormalBundleModel normal_bundle_model(int d) {
    if (d < 3) throw std::invalid_argument("normal bundle model needs d >= 3");
    NormalBundleModel m{d, RepElement(Weight{2, -1}), fibre::q_dual(),
                        tensor(fibre::q(), sym_power(fibre::q_dual(), 2)), RepElement(2)};
    m.quotient = m.middle - m.sub;
    if (m.quotient != m.nprime || !m.quotient.is_effective())
        throw ConsistencyError("Q (x) S^2 Q^vee - Q^vee = " + to_string(m.quotient) + ", expected S(2,-1)");
    if (det_twist(sym_power(fibre::q_dual(), 3), -1) != m.nprime)
        throw ConsistencyError("S^3 Q^vee (x) det Q differs from S(2,-1)");
    if (dimension(m.nprime) != 4) throw ConsistencyError("N' must have rank 4");
    return m;
}

MiddleSplit middle_split() {
    const RepElement middle = tensor(fibre::q(), sym_power(fibre::q_dual(), 2));
    MiddleSplit split{RepElement(Weight{2, -1}), fibre::q_dual()};
    if (split.nprime + split.q_dual != middle)
        throw ConsistencyError("Q (x) S^2 Q^vee = " + to_string(middle) + " does not split as S(2,-1) + S(1,0)");
    return split;
}

RepElement cauchy_exterior(const RepElement& v, const RepElement& w, int m) {
    if (v.rank() != w.rank()) throw std::invalid_argument("cauchy_exterior needs equal ranks");
    if (m < 0) throw std::invalid_argument("cauchy_exterior needs m >= 0");
    RepElement out(v.rank());
    for (const Weight& a : partitions_of(m, std::max(m, 1)))
        out += tensor(plethysm(a, v), plethysm(transpose(a), w));
    return out;
}

RepElement wedge_nprime_by_filtration(int q) {
    if (q < 0 || q > 4) throw std::invalid_argument("wedge_nprime needs 0 <= q <= 4");
    const RepElement sub = fibre::q_dual();
    const RepElement s2 = sym_power(fibre::q_dual(), 2);
    // Lambda^j(middle) = sum_i Lambda^i(sub) (x) Lambda^{j-i}(N'), solved upwards in j.
    std::vector<RepElement> quotient_powers;
    for (int j = 0; j <= q; ++j) {
        RepElement wedge = cauchy_exterior(fibre::q(), s2, j);
        for (int i = 1; i <= j; ++i) wedge -= tensor(ext_power(sub, i), quotient_powers[static_cast<std::size_t>(j - i)]);
        quotient_powers.push_back(std::move(wedge));
    }
    return quotient_powers.back();
}

namespace {

std::array<RepElement, 5> compute_wedges() {
    const NormalBundleModel model = normal_bundle_model(3);
    std::array<RepElement, 5> out{RepElement(2), RepElement(2), RepElement(2), RepElement(2), RepElement(2)};
    static constexpr std::array<int, 5> binom4{1, 4, 6, 4, 1};
    for (int q = 0; q <= 4; ++q) {
        RepElement direct = ext_power(model.nprime, q);
        RepElement filtered = wedge_nprime_by_filtration(q);
        if (direct != filtered)
            throw ConsistencyError("Lambda^" + std::to_string(q) + " N': direct " + to_string(direct) +
                                   " vs filtration " + to_string(filtered));
        if (!direct.is_effective() || dimension(direct) != binom4[static_cast<std::size_t>(q)])
            throw ConsistencyError("Lambda^" + std::to_string(q) + " N' has the wrong rank");
        out[static_cast<std::size_t>(q)] = std::move(direct);
    }
    return out;
}

}  // namespace

const RepElement& wedge_nprime(int q) {
    if (q < 0 || q > 4) throw std::invalid_argument("wedge_nprime needs 0 <= q <= 4");
    static const std::array<RepElement, 5> wedges = compute_wedges();
    return wedges[static_cast<std::size_t>(q)];
}

RepElement wedge2_middle() {
    RepElement out = cauchy_exterior(sym_power(fibre::q_dual(), 2), fibre::q(), 2);
    RepElement expected(2);
    expected.add(Weight{3, -1}, 2);
    expected.add(Weight{1, 1}, 2);
    expected.add(Weight{2, 0}, 1);
    if (out != expected)
        throw ConsistencyError("Lambda^2(S^2 Q^vee (x) Q) = " + to_string(out) + ", expected " + to_string(expected));
    return out;
}

Int planar_rank_identity(int d, int l) {
    if (l < 1 || l > d) throw std::invalid_argument("planar_rank_identity needs 1 <= l <= d");
    const Int closed = d + (static_cast<Int>(l) * l - l) / 2;
    const Int split = (d - l) + static_cast<Int>(l + 1) * l / 2;
    if (closed != split) throw ConsistencyError("planar rank identity disagrees with its two-summand split");
    return closed;
}

}  // namespace schurcalc

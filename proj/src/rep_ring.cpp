#include "schurcalc/rep_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schurcalc/checked.hpp"

namespace schurcalc {

RepElement::RepElement(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("RepElement rank must be >= 1");
}

RepElement::RepElement(const Weight& w, Int coeff) : rank_(w.rank()) { add(w, coeff); }

Int RepElement::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

bool RepElement::is_effective() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

void RepElement::add(const Weight& w, Int coeff) {
    if (w.rank() != rank_)
        throw std::invalid_argument("rank mismatch: weight " + to_string(w) + " in a rank " +
                                    std::to_string(rank_) + " element");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

RepElement& RepElement::operator+=(const RepElement& other) {
    if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch in RepElement addition");
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

RepElement& RepElement::operator-=(const RepElement& other) {
    if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch in RepElement subtraction");
    for (const auto& [w, c] : other.terms_) add(w, checked_neg(c));
    return *this;
}

RepElement& RepElement::operator*=(Int scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c = checked_mul(c, scalar);
    return *this;
}

std::string to_string(const RepElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Largest weights first reads more naturally.
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << "*";
        os << "S(" << to_string(w) << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RepElement& a) { return os << to_string(a); }

Weight dual(const Weight& w) {
    std::vector<Int> e(w.entries().rbegin(), w.entries().rend());
    for (Int& x : e) x = checked_neg(x);
    return Weight(std::move(e));
}

RepElement dual(const RepElement& a) {
    RepElement out(a.rank());
    for (const auto& [w, c] : a.terms()) out.add(dual(w), c);
    return out;
}

Weight det_twist(const Weight& w, Int m) {
    std::vector<Int> e(w.entries().begin(), w.entries().end());
    for (Int& x : e) x = checked_add(x, m);
    return Weight(std::move(e));
}

RepElement det_twist(const RepElement& a, Int m) {
    RepElement out(a.rank());
    for (const auto& [w, c] : a.terms()) out.add(det_twist(w, m), c);
    return out;
}

RepElement tensor(const RepElement& a, const RepElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in tensor product");
    const int r = a.rank();
    RepElement out(r);
    for (const auto& [wa, ca] : a.terms()) {
        const Int shift_a = std::max<Int>(0, -wa.last());
        const Weight pa = det_twist(wa, shift_a);
        for (const auto& [wb, cb] : b.terms()) {
            const Int shift_b = std::max<Int>(0, -wb.last());
            const Weight pb = det_twist(wb, shift_b);
            const Int coeff = checked_mul(ca, cb);
            for (const auto& [nu, n] : littlewood_richardson(pa, pb, r))
                out.add(det_twist(nu, -checked_add(shift_a, shift_b)), checked_mul(coeff, n));
        }
    }
    return out;
}

BigInt weyl_dim(const Weight& w) {
    BigInt num = 1;
    BigInt den = 1;
    const int r = w.rank();
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            num *= BigInt(w[i]) - BigInt(w[j]) + (j - i);
            den *= (j - i);
        }
    }
    return num / den;
}

BigInt dimension(const RepElement& a) {
    BigInt total = 0;
    for (const auto& [w, c] : a.terms()) total += BigInt(c) * weyl_dim(w);
    return total;
}

RepElement plethysm(const Weight& lambda, const RepElement& a) {
    if (!lambda.is_partition()) throw std::invalid_argument("plethysm needs a partition");
    if (!a.is_effective()) throw std::invalid_argument("plethysm needs an effective element");
    const Weight shape = strip_trailing_zeros(lambda);
    const int rows = shape.is_trivial() ? 0 : shape.rank();
    if (rows == 0) return RepElement::trivial(a.rank());

    // Jacobi-Trudi: Sigma^lambda = det[ S^{lambda_i - i + j} ].
    std::map<Int, RepElement> sym_cache;
    auto h = [&](Int m) -> const RepElement& {
        auto it = sym_cache.find(m);
        if (it == sym_cache.end())
            it = sym_cache.emplace(m, m < 0 ? RepElement(a.rank()) : sym_power(a, static_cast<int>(m))).first;
        return it->second;
    };

    std::vector<int> perm(static_cast<std::size_t>(rows));
    std::iota(perm.begin(), perm.end(), 0);
    RepElement out(a.rank());
    do {
        int inversions = 0;
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < rows; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        RepElement term = RepElement::trivial(a.rank());
        bool vanished = false;
        for (int i = 0; i < rows && !vanished; ++i) {
            const Int index = shape[i] - i + perm[static_cast<std::size_t>(i)];
            const RepElement& factor = h(index);
            if (factor.is_zero()) vanished = true;
            else term = tensor(term, factor);
        }
        if (vanished) continue;
        if (inversions % 2) out -= term;
        else out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace schurcalc

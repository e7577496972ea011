#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "schurcalc/checked.hpp"
#include "schurcalc/rep_ring.hpp"

namespace schurcalc {

CharPoly::CharPoly(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("CharPoly rank must be >= 1");
}

CharPoly CharPoly::constant(int rank, Int c) {
    CharPoly p(rank);
    p.add(Exponent(static_cast<std::size_t>(rank), 0), c);
    return p;
}

CharPoly CharPoly::monomial(Exponent e, Int c) {
    CharPoly p(static_cast<int>(e.size()));
    p.add(e, c);
    return p;
}

Int CharPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void CharPoly::add(const Exponent& e, Int coeff) {
    if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("exponent length does not match rank");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

bool CharPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        Exponent sorted = e;
        std::sort(sorted.begin(), sorted.end());
        do {
            if (coefficient(sorted) != c) return false;
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return true;
}

BigInt CharPoly::evaluate_at_ones() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

CharPoly& CharPoly::operator+=(const CharPoly& other) {
    if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch in CharPoly addition");
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& other) {
    if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch in CharPoly subtraction");
    for (const auto& [e, c] : other.terms_) add(e, checked_neg(c));
    return *this;
}

CharPoly& CharPoly::operator*=(Int scalar) {
    if (scalar == 0) terms_.clear();
    for (auto& [e, c] : terms_) c = checked_mul(c, scalar);
    return *this;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in CharPoly product");
    CharPoly out(a.rank());
    CharPoly::Exponent e(static_cast<std::size_t>(a.rank()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
            out.add(e, checked_mul(ca, cb));
        }
    }
    return out;
}

namespace {

// s_lambda(x_1..x_r) = sum over mu interlacing lambda of s_mu(x_1..x_{r-1}) x_r^{|lambda|-|mu|}.
void branch(const std::vector<Int>& lambda, CharPoly::Exponent& exponent, CharPoly& out) {
    const std::size_t r = lambda.size();
    if (r == 1) {
        exponent[0] = lambda[0];
        out.add(exponent, 1);
        return;
    }
    Int lambda_size = 0;
    for (Int x : lambda) lambda_size += x;
    std::vector<Int> mu(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) mu[i] = lambda[i + 1];
    while (true) {
        Int mu_size = 0;
        for (Int x : mu) mu_size += x;
        exponent[r - 1] = lambda_size - mu_size;
        branch(mu, exponent, out);
        // Odometer over lambda_{i+1} <= mu_i <= lambda_i.
        std::size_t i = 0;
        while (i + 1 < r && mu[i] == lambda[i]) {
            mu[i] = lambda[i + 1];
            ++i;
        }
        if (i + 1 == r) break;
        ++mu[i];
    }
}

CharPoly compute_char(const Weight& w) {
    CharPoly out(w.rank());
    std::vector<Int> lambda(w.entries().begin(), w.entries().end());
    CharPoly::Exponent exponent(lambda.size(), 0);
    branch(lambda, exponent, out);
    return out;
}

}  // namespace

CharPoly char_of(const Weight& w) {
    static std::mutex mutex;
    static std::map<Weight, CharPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }
    CharPoly c = compute_char(w);
    std::lock_guard lock(mutex);
    return cache.emplace(w, std::move(c)).first->second;
}

CharPoly char_of(const RepElement& a) {
    CharPoly out(a.rank());
    for (const auto& [w, c] : a.terms()) {
        CharPoly term = char_of(w);
        term *= c;
        out += term;
    }
    return out;
}

RepElement decompose(const CharPoly& c, bool require_effective) {
    RepElement out(c.rank());
    CharPoly rest = c;
    while (!rest.is_zero()) {
        const auto& [top, mult] = *rest.terms().rbegin();
        if (!std::is_sorted(top.begin(), top.end(), std::greater<>()))
            throw std::domain_error("decompose: leading exponent is not dominant; input is not a character");
        if (require_effective && mult < 0)
            throw std::domain_error("decompose: negative multiplicity for weight (" +
                                    to_string(Weight(top)) + ") in a claimed-effective character");
        const Weight w(top);
        const Int m = mult;
        out.add(w, m);
        CharPoly peel = char_of(w);
        peel *= m;
        rest -= peel;
    }
    return out;
}

namespace {

enum class PowerKind { Symmetric, Exterior };

RepElement power(const RepElement& a, int m, PowerKind kind) {
    if (m < 0) throw std::invalid_argument("power degree must be non-negative");
    if (!a.is_effective()) throw std::invalid_argument("symmetric/exterior powers need an effective element");
    const int r = a.rank();
    std::vector<CharPoly> series(static_cast<std::size_t>(m) + 1, CharPoly(r));
    series[0] = CharPoly::constant(r, 1);
    const CharPoly ch = char_of(a);
    for (const auto& [e, mult] : ch.terms()) {
        const CharPoly x = CharPoly::monomial(e);
        for (Int copy = 0; copy < mult; ++copy) {
            // Exterior: multiply by (1 + t x^e); symmetric: by 1/(1 - t x^e).
            if (kind == PowerKind::Exterior) {
                for (int j = m; j >= 1; --j) series[static_cast<std::size_t>(j)] += series[static_cast<std::size_t>(j - 1)] * x;
            } else {
                for (int j = 1; j <= m; ++j) series[static_cast<std::size_t>(j)] += series[static_cast<std::size_t>(j - 1)] * x;
            }
        }
    }
    return decompose(series[static_cast<std::size_t>(m)], true);
}

}  // namespace

RepElement sym_power(const RepElement& a, int m) { return power(a, m, PowerKind::Symmetric); }
RepElement ext_power(const RepElement& a, int m) { return power(a, m, PowerKind::Exterior); }

}  // namespace schurcalc

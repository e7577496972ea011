#include "schurcalc/weight.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schurcalc/checked.hpp"

namespace schurcalc {

Weight::Weight(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("weight must have rank >= 1");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        if (entries_[i] < entries_[i + 1])
            throw std::invalid_argument("weight entries must be non-increasing: " + to_string(*this));
    }
}

Weight Weight::trivial(int rank) { return constant(rank, 0); }

Weight Weight::constant(int rank, Int m) {
    if (rank < 1) throw std::invalid_argument("weight must have rank >= 1");
    return Weight(std::vector<Int>(static_cast<std::size_t>(rank), m));
}

Int Weight::size() const {
    Int s = 0;
    for (Int e : entries_) s = checked_add(s, e);
    return s;
}

bool Weight::is_trivial() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Int e) { return e == 0; });
}

bool Weight::is_partition() const noexcept { return entries_.back() >= 0; }

std::string to_string(const Weight& w) {
    std::string out;
    for (int i = 0; i < w.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << to_string(w) << ')'; }

Weight parse_weight(std::string_view text) {
    std::vector<Int> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        Int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("cannot parse weight '" + std::string(text) + "'");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Weight(std::move(entries));
}

WeylVector::WeylVector(int d) {
    if (d < 1) throw std::invalid_argument("Weyl vector needs d >= 1");
    entries_.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) entries_[static_cast<std::size_t>(i)] = d - i;
}

Weight strip_trailing_zeros(const Weight& p) {
    auto e = p.entries();
    std::size_t n = e.size();
    while (n > 1 && e[n - 1] == 0) --n;
    return Weight(std::vector<Int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)));
}

Weight pad_to_rank(const Weight& p, int rank) {
    Weight s = strip_trailing_zeros(p);
    if (s.rank() > rank && !(s.rank() == 1 && s[0] == 0))
        throw std::invalid_argument("weight " + to_string(p) + " does not fit rank " + std::to_string(rank));
    std::vector<Int> e(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < std::min(rank, s.rank()); ++i) e[static_cast<std::size_t>(i)] = s[i];
    return Weight(std::move(e));
}

Weight transpose(const Weight& p) {
    if (!p.is_partition()) throw std::invalid_argument("transpose needs non-negative entries: " + to_string(p));
    const Int cols = p.first();
    if (cols == 0) return Weight{0};
    std::vector<Int> t(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < p.rank(); ++i)
        for (Int j = 0; j < p[i]; ++j) ++t[static_cast<std::size_t>(j)];
    return Weight(std::move(t));
}

Hook to_hook(const Weight& p) {
    Weight t = transpose(p);
    Hook h;
    for (int i = 0; i < p.rank() && p[i] > i; ++i) {
        h.arms.push_back(p[i] - i);
        h.legs.push_back(t[i] - i);
    }
    return h;
}

Weight from_hook(std::span<const Int> arms, std::span<const Int> legs) {
    if (arms.size() != legs.size()) throw std::invalid_argument("hook arms and legs differ in length");
    if (arms.empty()) return Weight{0};
    auto strictly_decreasing_positive = [](std::span<const Int> s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] <= 0) return false;
            if (i + 1 < s.size() && s[i] <= s[i + 1]) return false;
        }
        return true;
    };
    if (!strictly_decreasing_positive(arms) || !strictly_decreasing_positive(legs))
        throw std::invalid_argument("hook arms and legs must be strictly decreasing and positive");

    const auto r = static_cast<Int>(arms.size());
    // Column j (1-based, j <= r) has length j + legs[j] - 1; rows below the
    // diagonal block only see those columns.
    Int rows = r;
    for (Int j = 1; j <= r; ++j) rows = std::max(rows, j + legs[static_cast<std::size_t>(j - 1)] - 1);
    std::vector<Int> p(static_cast<std::size_t>(rows), 0);
    for (Int i = 1; i <= rows; ++i) {
        if (i <= r) {
            p[static_cast<std::size_t>(i - 1)] = arms[static_cast<std::size_t>(i - 1)] + i - 1;
        } else {
            Int count = 0;
            for (Int j = 1; j <= r; ++j)
                if (j + legs[static_cast<std::size_t>(j - 1)] - 1 >= i) ++count;
            p[static_cast<std::size_t>(i - 1)] = count;
        }
    }
    Weight w = [&] {
        try {
            return Weight(p);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("hook coordinates do not describe a partition");
        }
    }();
    Hook back = to_hook(w);
    if (!std::equal(back.arms.begin(), back.arms.end(), arms.begin(), arms.end()) ||
        !std::equal(back.legs.begin(), back.legs.end(), legs.begin(), legs.end()))
        throw std::invalid_argument("hook coordinates do not describe a partition");
    return w;
}

std::strong_ordering kapranov_order(const Weight& a, const Weight& b) {
    if (!a.is_partition() || !b.is_partition())
        throw std::invalid_argument("kapranov_order is defined on partitions only");
    if (auto c = b.size() <=> a.size(); c != 0) return c;
    const int n = std::max(a.rank(), b.rank());
    for (int i = 0; i < n; ++i) {
        Int x = i < a.rank() ? a[i] : 0;
        Int y = i < b.rank() ? b[i] : 0;
        if (x != y) return y <=> x;
    }
    return std::strong_ordering::equal;
}

namespace {

void partitions_rec(Int remaining, Int max_part, int rows_left, std::vector<Int>& prefix, int total_rows,
                    std::vector<Weight>& out) {
    if (remaining == 0) {
        std::vector<Int> e = prefix;
        e.resize(static_cast<std::size_t>(total_rows), 0);
        out.emplace_back(std::move(e));
        return;
    }
    if (rows_left == 0) return;
    for (Int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, rows_left - 1, prefix, total_rows, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Weight> partitions_of(Int n, int max_rows) {
    if (max_rows < 1) throw std::invalid_argument("partitions_of needs max_rows >= 1");
    std::vector<Weight> out;
    if (n < 0) return out;
    std::vector<Int> prefix;
    partitions_rec(n, n, max_rows, prefix, max_rows, out);
    return out;
}

std::vector<Weight> partitions_in_box(int rows, int cols) {
    if (rows < 1 || cols < 0) throw std::invalid_argument("partitions_in_box needs rows >= 1, cols >= 0");
    std::vector<Weight> out;
    for (Int n = 0; n <= static_cast<Int>(rows) * cols; ++n)
        for (Weight& p : partitions_of(n, rows))
            if (p.first() <= cols) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return precedes(a, b); });
    return out;
}

}  // namespace schurcalc

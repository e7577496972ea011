#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurcalc {

using Int = std::int64_t;

/// Highest weight of an irreducible GL_r representation: a non-increasing
/// integer vector of fixed length r >= 1. Entries may be negative.
///
/// Weights are stored dense (zero tails included). Ordering via <=> is plain
/// lexicographic and exists so weights can key ordered maps; the
/// representation-theoretic order lives in kapranov_order().
class Weight {
public:
    Weight() : entries_{0} {}
    explicit Weight(std::vector<Int> entries);
    Weight(std::initializer_list<Int> entries) : Weight(std::vector<Int>(entries)) {}

    static Weight trivial(int rank);
    /// Constant weight (m, ..., m), i.e. the m-th power of the determinant.
    static Weight constant(int rank, Int m);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    Int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const Int> entries() const noexcept { return entries_; }

    Int first() const noexcept { return entries_.front(); }
    Int last() const noexcept { return entries_.back(); }

    /// |w|, the sum of the entries.
    Int size() const;
    bool is_trivial() const noexcept;
    /// All entries non-negative.
    bool is_partition() const noexcept;

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    std::vector<Int> entries_;
};

std::string to_string(const Weight& w);
std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Parses "a,b,c" (no brackets, negatives allowed). Throws std::invalid_argument.
Weight parse_weight(std::string_view text);

/// Weyl vector rho = (d, d-1, ..., 1).
class WeylVector {
public:
    explicit WeylVector(int d);
    int dimension() const noexcept { return static_cast<int>(entries_.size()); }
    Int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const Int> entries() const noexcept { return entries_; }

private:
    std::vector<Int> entries_;
};

/// Drops zero entries from the tail; the empty partition becomes (0).
Weight strip_trailing_zeros(const Weight& p);
/// Appends zeros up to `rank`. Throws if p has a nonzero entry past `rank`.
Weight pad_to_rank(const Weight& p, int rank);

/// Conjugate partition, returned without trailing zeros.
Weight transpose(const Weight& p);

/// Diagonal hook coordinates (u|v): arm u_i = p_i - i + 1 and leg
/// v_i = p'_i - i + 1, both counting the diagonal box.
struct Hook {
    std::vector<Int> arms;
    std::vector<Int> legs;
    bool operator==(const Hook&) const = default;
};

Hook to_hook(const Weight& p);
Weight from_hook(std::span<const Int> arms, std::span<const Int> legs);

/// Total order on partitions used for the exceptional sequence: larger |p|
/// comes first; at equal size the lexicographically larger partition comes
/// first. `less` means "precedes".
std::strong_ordering kapranov_order(const Weight& a, const Weight& b);
inline bool precedes(const Weight& a, const Weight& b) { return kapranov_order(a, b) < 0; }

/// All partitions with at most `rows` rows and first entry <= `cols`,
/// padded to length `rows`, sorted by kapranov_order.
std::vector<Weight> partitions_in_box(int rows, int cols);

/// All partitions of n with at most `max_rows` rows, padded to `max_rows`.
std::vector<Weight> partitions_of(Int n, int max_rows);

}  // namespace schurcalc

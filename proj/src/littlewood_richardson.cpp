#include <algorithm>
#include <stdexcept>

#include "schurcalc/checked.hpp"
#include "schurcalc/rep_ring.hpp"

namespace schurcalc {

namespace {

// Fills the skew shape nu/alpha row by row with an LR tableau of content
// beta: rows weakly increase, columns strictly increase, and the reverse
// reading word (rows top to bottom, each right to left) is a lattice word.
class LrFiller {
public:
    LrFiller(const Weight& alpha, const Weight& beta, int rank)
        : alpha_(pad_to_rank(alpha, rank)), rank_(rank) {
        Weight b = strip_trailing_zeros(beta);
        for (int i = 0; i < b.rank(); ++i)
            if (b[i] > 0) content_.push_back(b[i]);
        used_.assign(content_.size(), 0);
        rows_.assign(static_cast<std::size_t>(rank), {});
        nu_.assign(static_cast<std::size_t>(rank), 0);
    }

    std::map<Weight, Int> run() {
        if (static_cast<int>(content_.size()) > rank_) return {};
        fill_row(0);
        return std::move(result_);
    }

private:
    void fill_row(int row) {
        if (row == rank_) {
            for (std::size_t l = 0; l < content_.size(); ++l)
                if (used_[l] != content_[l]) return;
            result_[Weight(nu_)] += 1;
            return;
        }
        const int labels = std::min<int>(row + 1, static_cast<int>(content_.size()));
        std::vector<Int> counts(static_cast<std::size_t>(labels), 0);
        choose_count(row, 0, counts, 0);
    }

    // counts[l] = number of boxes labelled l+1 placed in this row.
    void choose_count(int row, std::size_t label, std::vector<Int>& counts, Int placed) {
        const Int start = alpha_[row];
        if (row > 0 && start + placed > nu_[static_cast<std::size_t>(row - 1)]) return;
        if (label == counts.size()) {
            place_row(row, counts, placed);
            return;
        }
        Int max_count = content_[label] - used_[label];
        if (label > 0) max_count = std::min(max_count, used_[label - 1] - used_[label]);
        for (Int c = 0; c <= max_count; ++c) {
            counts[label] = c;
            choose_count(row, label + 1, counts, placed + c);
        }
        counts[label] = 0;
    }

    void place_row(int row, const std::vector<Int>& counts, Int placed) {
        const Int start = alpha_[row];
        std::vector<int> labels_in_row;
        labels_in_row.reserve(static_cast<std::size_t>(placed));
        for (std::size_t l = 0; l < counts.size(); ++l)
            for (Int c = 0; c < counts[l]; ++c) labels_in_row.push_back(static_cast<int>(l) + 1);

        if (row > 0) {
            const auto& above = rows_[static_cast<std::size_t>(row - 1)];
            const Int above_start = alpha_[row - 1];
            for (std::size_t k = 0; k < labels_in_row.size(); ++k) {
                const Int col = start + static_cast<Int>(k);
                if (col < above_start) continue;
                const auto idx = static_cast<std::size_t>(col - above_start);
                if (idx >= above.size()) return;
                if (above[idx] >= labels_in_row[k]) return;
            }
        }

        rows_[static_cast<std::size_t>(row)] = std::move(labels_in_row);
        nu_[static_cast<std::size_t>(row)] = start + placed;
        for (std::size_t l = 0; l < counts.size(); ++l) used_[l] += counts[l];
        fill_row(row + 1);
        for (std::size_t l = 0; l < counts.size(); ++l) used_[l] -= counts[l];
    }

    Weight alpha_;
    int rank_;
    std::vector<Int> content_;
    std::vector<Int> used_;
    std::vector<std::vector<int>> rows_;
    std::vector<Int> nu_;
    std::map<Weight, Int> result_;
};

}  // namespace

std::map<Weight, Int> littlewood_richardson(const Weight& alpha, const Weight& beta, int rank) {
    if (!alpha.is_partition() || !beta.is_partition())
        throw std::invalid_argument("littlewood_richardson needs partitions");
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (strip_trailing_zeros(alpha).rank() > rank && alpha.first() != 0) return {};
    return LrFiller(alpha, beta, rank).run();
}

}  // namespace schurcalc

#ifndef RNACD_FOLD_HPP
#define RNACD_FOLD_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rnacd/sequence.hpp"
#include "rnacd/structure.hpp"

namespace rnacd {

using BigInt = boost::multiprecision::cpp_int;

//! Maximum pair count of a sequence together with the number of arc sets attaining it.
struct FoldReport {
    int max_pairs = 0;
    BigInt optimal_count = 1;
    //! Every optimal arc set, in canonical order; empty when truncated.
    std::optional<std::vector<ArcSet>> structures;
    bool truncated = false;
};

/**
 * Interval tables of the maximum-pairing recursion for one sequence.
 *
 * best(i, j) is the largest number of model-allowed, non-crossing,
 * endpoint-disjoint arcs inside positions i..j (1-based, inclusive); an empty
 * interval (j < i) scores 0. Any two positions may pair regardless of their
 * distance, adjacent ones included.
 */
class PairingTable {
public:
    PairingTable(const Sequence& s, PairingModel model);

    int length() const noexcept { return n_; }
    int best(int i, int j) const noexcept { return j < i ? 0 : v_[index(i, j)]; }
    bool pairable(int i, int j) const noexcept { return pair_[index(i, j)] != 0; }
    int max_pairs() const noexcept { return best(1, n_); }

    /**
     * Number of optimal arc sets on every interval, over the counting type Count.
     *
     * The decomposition conditions on the partner of the last position, so each
     * arc set is counted once. Count needs +, *, and construction from 0 and 1.
     */
    template <class Count>
    std::vector<Count> counts() const;

    template <class Count>
    Count count_at(const std::vector<Count>& table, int i, int j) const {
        return j < i ? Count(1) : table[index(i, j)];
    }

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 2) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<int> v_;
    std::vector<unsigned char> pair_;
};

template <class Count>
std::vector<Count> PairingTable::counts() const {
    std::vector<Count> c(v_.size(), Count(0));
    for (int len = 1; len <= n_; ++len) {
        for (int i = 1; i + len - 1 <= n_; ++i) {
            const int j = i + len - 1;
            const int target = best(i, j);
            Count total(0);
            if (best(i, j - 1) == target)
                total = count_at(c, i, j - 1);
            for (int k = i; k < j; ++k) {
                if (!pairable(k, j) || best(i, k - 1) + best(k + 1, j - 1) + 1 != target)
                    continue;
                total = total + count_at(c, i, k - 1) * count_at(c, k + 1, j - 1);
            }
            c[index(i, j)] = total;
        }
    }
    return c;
}

/**
 * Counting type that stops at two: enough to tell "unique" from "several"
 * without big-number arithmetic.
 */
class AtMostTwo {
public:
    constexpr AtMostTwo(int v = 0) noexcept : v_(v > 2 ? 2 : v) {}
    constexpr int value() const noexcept { return v_; }
    friend constexpr AtMostTwo operator+(AtMostTwo a, AtMostTwo b) noexcept { return {a.v_ + b.v_}; }
    friend constexpr AtMostTwo operator*(AtMostTwo a, AtMostTwo b) noexcept { return {a.v_ * b.v_}; }

private:
    int v_;
};

int max_pairs(const Sequence& s, PairingModel model);
BigInt count_optimal(const Sequence& s, PairingModel model);

//! All optimal arc sets in canonical order; throws LimitExceeded when more than `limit` exist.
std::vector<ArcSet> enumerate_optimal(const Sequence& s, PairingModel model, std::size_t limit);

//! Full report; structures are listed when the count does not exceed `limit`.
FoldReport fold(const Sequence& s, PairingModel model, std::size_t limit);

struct DesignCheck {
    bool is_design = false;
    std::optional<ArcSet> optimum;
};

DesignCheck is_design(const Sequence& s, PairingModel model);

//! True iff s has a unique maximum-size arc set and it equals target.
bool verify_design_for(const Sequence& s, const SecondaryStructure& target, PairingModel model);

/**
 * Lexicographically least design for target (A < C < G < U), if any.
 *
 * Sequences in which some target arc is not pairable are skipped in whole
 * blocks; they cannot be designs. With jobs > 1 the search space is split
 * across threads and the result is unchanged.
 */
std::optional<Sequence> brute_force_designable(const SecondaryStructure& target, PairingModel model,
                                               int max_n, unsigned jobs = 1);

} // namespace rnacd

#endif

#include "rnacd/fold.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "rnacd/errors.hpp"

namespace rnacd {

PairingTable::PairingTable(const Sequence& s, PairingModel model)
    : n_(static_cast<int>(s.size())),
      v_(static_cast<std::size_t>(n_ + 2) * static_cast<std::size_t>(n_ + 2), 0),
      pair_(v_.size(), 0) {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            pair_[index(i, j)] = can_pair(s.at(i), s.at(j), model) ? 1 : 0;

    for (int len = 2; len <= n_; ++len) {
        for (int i = 1; i + len - 1 <= n_; ++i) {
            const int j = i + len - 1;
            int v = best(i, j - 1);
            for (int k = i; k < j; ++k)
                if (pairable(k, j))
                    v = std::max(v, best(i, k - 1) + best(k + 1, j - 1) + 1);
            v_[index(i, j)] = v;
        }
    }
}

namespace {

struct Overflow {};

// 64-bit count that refuses to wrap.
class CheckedCount {
public:
    CheckedCount(std::uint64_t v = 0) noexcept : v_(v) {}
    std::uint64_t value() const noexcept { return v_; }
    friend CheckedCount operator+(CheckedCount a, CheckedCount b) {
        std::uint64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    friend CheckedCount operator*(CheckedCount a, CheckedCount b) {
        std::uint64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }

private:
    std::uint64_t v_;
};

BigInt total_count(const PairingTable& table) {
    const int n = table.length();
    try {
        const auto c = table.counts<CheckedCount>();
        return BigInt(table.count_at(c, 1, n).value());
    } catch (const Overflow&) {
        const auto c = table.counts<BigInt>();
        return table.count_at(c, 1, n);
    }
}

using ArcList = std::vector<Arc>;

// Optimal arc sets of i..j, j-unpaired branch first, then partners k ascending.
void enumerate_interval(const PairingTable& t, int i, int j, const std::function<void(const ArcList&)>& emit,
                        ArcList& prefix) {
    if (j < i) {
        emit(prefix);
        return;
    }
    const int target = t.best(i, j);
    if (t.best(i, j - 1) == target)
        enumerate_interval(t, i, j - 1, emit, prefix);
    for (int k = i; k < j; ++k) {
        if (!t.pairable(k, j) || t.best(i, k - 1) + t.best(k + 1, j - 1) + 1 != target)
            continue;
        prefix.push_back({k, j});
        enumerate_interval(
            t, k + 1, j - 1,
            [&](const ArcList&) { enumerate_interval(t, i, k - 1, emit, prefix); }, prefix);
        prefix.pop_back();
    }
}

} // namespace

int max_pairs(const Sequence& s, PairingModel model) { return PairingTable(s, model).max_pairs(); }

BigInt count_optimal(const Sequence& s, PairingModel model) { return total_count(PairingTable(s, model)); }

namespace {

std::vector<ArcSet> collect(const PairingTable& table) {
    std::vector<ArcSet> out;
    ArcList prefix;
    enumerate_interval(
        table, 1, table.length(),
        [&](const ArcList& arcs) { out.emplace_back(table.length(), arcs); }, prefix);
    return out;
}

} // namespace

std::vector<ArcSet> enumerate_optimal(const Sequence& s, PairingModel model, std::size_t limit) {
    if (limit < 1)
        throw Error("enumeration limit must be at least 1");
    const PairingTable table(s, model);
    const BigInt count = total_count(table);
    if (count > limit)
        throw LimitExceeded(count.str());
    return collect(table);
}

FoldReport fold(const Sequence& s, PairingModel model, std::size_t limit) {
    const PairingTable table(s, model);
    FoldReport report;
    report.max_pairs = table.max_pairs();
    report.optimal_count = total_count(table);
    if (report.optimal_count <= limit)
        report.structures = collect(table);
    else
        report.truncated = true;
    return report;
}

DesignCheck is_design(const Sequence& s, PairingModel model) {
    const PairingTable table(s, model);
    const auto c = table.counts<AtMostTwo>();
    if (table.count_at(c, 1, table.length()).value() != 1)
        return {};
    auto all = collect(table);
    return {true, std::move(all.front())};
}

namespace {

// Target arcs are assumed pairable in s.
bool designs_target(const Sequence& s, const SecondaryStructure& target, PairingModel model) {
    const PairingTable table(s, model);
    if (table.max_pairs() != static_cast<int>(target.arc_count()))
        return false;
    const auto c = table.counts<AtMostTwo>();
    return table.count_at(c, 1, table.length()).value() == 1;
}

} // namespace

bool verify_design_for(const Sequence& s, const SecondaryStructure& target, PairingModel model) {
    if (static_cast<int>(s.size()) != target.size())
        throw LengthMismatch(s.size(), target.size());
    for (const Arc& a : target.arcs())
        if (!can_pair(s.at(a.i), s.at(a.j), model))
            return false;
    return designs_target(s, target, model);
}

namespace {

constexpr char kAlphabet[] = {'A', 'C', 'G', 'U'};

class DesignSearch {
public:
    DesignSearch(const SecondaryStructure& target, PairingModel model)
        : target_(target), model_(model), partner_(target.partners()),
          letters_(static_cast<std::size_t>(target.size()), 'A') {}

    // Depth-first over positions from..n in lexicographic order, positions before
    // `from` already fixed in letters_.
    bool search(int from) {
        const int n = target_.size();
        if (from > n)
            return designs_target(Sequence(letters_), target_, model_);
        const int q = partner_[from];
        for (char c : kAlphabet) {
            if (q != 0 && q < from && !can_pair(letters_[q - 1], c, model_))
                continue;
            letters_[from - 1] = c;
            if (search(from + 1))
                return true;
        }
        return false;
    }

    // Fixes the first `width` letters from a block index; false if the prefix
    // already breaks a target arc.
    bool set_prefix(std::size_t block, int width) {
        for (int p = width; p >= 1; --p) {
            letters_[p - 1] = kAlphabet[block % 4];
            block /= 4;
        }
        for (int p = 1; p <= width; ++p) {
            const int q = partner_[p];
            if (q != 0 && q < p && !can_pair(letters_[q - 1], letters_[p - 1], model_))
                return false;
        }
        return true;
    }

    const std::string& letters() const noexcept { return letters_; }

private:
    const SecondaryStructure& target_;
    PairingModel model_;
    std::vector<int> partner_;
    std::string letters_;
};

} // namespace

std::optional<Sequence> brute_force_designable(const SecondaryStructure& target, PairingModel model, int max_n,
                                               unsigned jobs) {
    const int n = target.size();
    if (n > max_n)
        throw TooLarge(n, max_n);
    jobs = std::max(1u, jobs);
    if (jobs == 1 || n < 4) {
        DesignSearch search(target, model);
        if (search.search(1))
            return Sequence(search.letters());
        return std::nullopt;
    }

    // Blocks are the 4^width prefixes in lexicographic order; the answer is the
    // first success inside the lowest successful block.
    const int width = std::min(n, 4);
    const std::size_t blocks = std::size_t{1} << (2 * width);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::mutex mu;
    std::optional<Sequence> found;

    auto worker = [&] {
        DesignSearch search(target, model);
        for (;;) {
            const std::size_t block = next.fetch_add(1);
            if (block >= blocks || block > best.load())
                return;
            if (!search.set_prefix(block, width) || !search.search(width + 1))
                continue;
            std::lock_guard lock(mu);
            if (block < best.load()) {
                best.store(block);
                found = Sequence(search.letters());
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return found;
}

} // namespace rnacd

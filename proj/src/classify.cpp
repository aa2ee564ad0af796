#include "rnacd/classify.hpp"

#include <array>
#include <functional>
#include <unordered_set>

#include "rnacd/design.hpp"
#include "rnacd/errors.hpp"
#include "rnacd/fold.hpp"
#include "rnacd/structure.hpp"

namespace rnacd {

char to_char(Colour c) noexcept {
    switch (c) {
    case Colour::B:
        return 'B';
    case Colour::W:
        return 'W';
    case Colour::Y:
        return 'Y';
    }
    return '?';
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Designable:
        return "Designable";
    case Verdict::NotDesignable:
        return "NotDesignable";
    case Verdict::Unknown:
        return "Unknown";
    }
    return "";
}

std::string_view to_string(Reason r) noexcept {
    switch (r) {
    case Reason::SaturatedDegreeRule:
        return "SaturatedDegreeRule";
    case Reason::Obstruction2Plus1:
        return "Obstruction2Plus1";
    case Reason::SeparatedColouring:
        return "SeparatedColouring";
    case Reason::FloralNaturalLabelling:
        return "FloralNaturalLabelling";
    case Reason::BruteForce:
        return "BruteForce";
    }
    return "";
}

namespace {

using Counts = std::array<int, 3>;

// Table 1: how many children of each colour (B, W, Y) a vertex may have.
constexpr Counts kRootRow{1, 1, 2};
constexpr Counts row_of(Colour c) noexcept {
    switch (c) {
    case Colour::B:
        return {1, 0, 2};
    case Colour::W:
        return {0, 1, 2};
    case Colour::Y:
        return {1, 1, 1};
    }
    return {0, 0, 0};
}

constexpr int delta(Colour c) noexcept { return c == Colour::B ? 1 : c == Colour::W ? -1 : 0; }

constexpr std::size_t idx(Colour c) noexcept { return static_cast<std::size_t>(c); }

std::vector<int> all_levels(const DottedTree& t, const Colouring& c) {
    std::vector<int> lv(t.size(), 0);
    for (VertexId v : t.preorder()) {
        if (v == t.root())
            continue;
        const auto col = c.at(v);
        lv[v] = lv[t.parent(v)] + (col ? delta(*col) : 0);
    }
    return lv;
}

} // namespace

bool is_proper(const DottedTree& t, const Colouring& c) {
    if (c.colour.size() != t.size())
        return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto v = static_cast<VertexId>(i);
        const bool colourable = v != t.root() && t.dots(v) == Dots::Two;
        if (colourable != c.at(v).has_value())
            return false;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto v = static_cast<VertexId>(i);
        if (t.dots(v) == Dots::One)
            continue;
        const Counts row = v == t.root() ? kRootRow : row_of(*c.at(v));
        Counts used{0, 0, 0};
        for (VertexId ch : t.children(v))
            if (const auto col = c.at(ch))
                ++used[idx(*col)];
        for (std::size_t k = 0; k < 3; ++k)
            if (used[k] > row[k])
                return false;
    }
    return true;
}

int level(const DottedTree& t, const Colouring& c, VertexId v) {
    int lv = 0;
    for (; v != t.root(); v = t.parent(v))
        if (const auto col = c.at(v))
            lv += delta(*col);
    return lv;
}

bool is_separated(const DottedTree& t, const Colouring& c) {
    const std::vector<int> lv = all_levels(t, c);
    std::unordered_set<int> grey;
    for (std::size_t v = 0; v < t.size(); ++v)
        if (c.at(static_cast<VertexId>(v)) == Colour::Y)
            grey.insert(lv[v]);
    for (std::size_t v = 0; v < t.size(); ++v)
        if (t.dots(static_cast<VertexId>(v)) == Dots::One && grey.contains(lv[v]))
            return false;
    return true;
}

namespace {

/*
 * Backtracking over vertices in pre-order. At any point the only vertices whose
 * children are still undecided are the ancestors of the next vertex, so the
 * rest of the search depends only on: the next index, the grey and unpaired
 * level sets, and the colour and used child counts of those ancestors. States
 * that failed once are recorded and skipped.
 */
class ColouringSearch {
public:
    explicit ColouringSearch(const DottedTree& t)
        : t_(t), order_(t.preorder()), offset_(height(t)), colour_(t.size()), level_(t.size(), 0),
          used_(t.size(), Counts{0, 0, 0}), grey_(2 * static_cast<std::size_t>(offset_) + 1, 0),
          unpaired_(grey_.size(), 0) {}

    std::optional<Colouring> run() {
        if (!step(1))
            return std::nullopt;
        return Colouring{colour_};
    }

private:
    Counts row(VertexId v) const { return v == t_.root() ? kRootRow : row_of(*colour_[v]); }
    std::size_t slot(int lv) const { return static_cast<std::size_t>(lv + offset_); }

    std::string key(std::size_t i) const {
        std::string k;
        k.reserve(grey_.size() * 2 + 32);
        k.append(std::to_string(i)).push_back('|');
        for (std::size_t s = 0; s < grey_.size(); ++s)
            k.push_back(static_cast<char>('0' + (grey_[s] ? 1 : 0) + (unpaired_[s] ? 2 : 0)));
        k.push_back('|');
        for (VertexId a = t_.parent(order_[i]); a != -1; a = t_.parent(a)) {
            k.push_back(a == t_.root() ? 'R' : to_char(*colour_[a]));
            for (int u : used_[a])
                k.push_back(static_cast<char>('0' + u));
        }
        return k;
    }

    bool step(std::size_t i) {
        if (i == order_.size())
            return true;
        std::string k = key(i);
        if (failed_.contains(k))
            return false;
        if (try_vertex(i))
            return true;
        failed_.insert(std::move(k));
        return false;
    }

    bool try_vertex(std::size_t i) {
        const VertexId v = order_[i];
        const VertexId p = t_.parent(v);
        if (t_.dots(v) == Dots::One) {
            const int lv = level_[p];
            if (grey_[slot(lv)] != 0)
                return false;
            level_[v] = lv;
            ++unpaired_[slot(lv)];
            const bool ok = step(i + 1);
            --unpaired_[slot(lv)];
            return ok;
        }
        const Counts cap = row(p);
        for (Colour c : {Colour::B, Colour::W, Colour::Y}) {
            if (used_[p][idx(c)] >= cap[idx(c)])
                continue;
            const int lv = level_[p] + delta(c);
            if (c == Colour::Y && unpaired_[slot(lv)] != 0)
                continue;
            colour_[v] = c;
            level_[v] = lv;
            ++used_[p][idx(c)];
            if (c == Colour::Y)
                ++grey_[slot(lv)];
            const bool ok = step(i + 1);
            if (c == Colour::Y)
                --grey_[slot(lv)];
            --used_[p][idx(c)];
            if (ok)
                return true;
            colour_[v].reset();
        }
        return false;
    }

    const DottedTree& t_;
    std::vector<VertexId> order_;
    int offset_;
    std::vector<std::optional<Colour>> colour_;
    std::vector<int> level_;
    std::vector<Counts> used_;
    std::vector<int> grey_;
    std::vector<int> unpaired_;
    std::unordered_set<std::string> failed_;
};

} // namespace

std::optional<Colouring> find_separated_proper_colouring(const DottedTree& t) {
    return ColouringSearch(t).run();
}

DottedTree exterior_tree(const DottedTree& t) {
    if (t.virtual_root())
        return t;
    DottedTree out(true);
    std::function<void(VertexId, VertexId)> copy = [&](VertexId from, VertexId to) {
        for (VertexId c : t.children(from))
            copy(c, out.add_child(to, t.dots(c)));
    };
    copy(t.root(), out.add_child(out.root(), Dots::Two));
    return out;
}

bool saturated_designable(const DottedTree& t) {
    if (!is_saturated(t))
        throw NotSaturated();
    const DottedTree e = exterior_tree(t);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto v = static_cast<VertexId>(i);
        const std::size_t cap = v == e.root() ? 4 : 3;
        if (e.children(v).size() > cap)
            return false;
    }
    return true;
}

bool has_obstruction(const DottedTree& t) {
    for (std::size_t i = t.virtual_root() ? 1 : 0; i < t.size(); ++i) {
        int two = 0;
        int one = 0;
        for (VertexId c : t.children(static_cast<VertexId>(i)))
            ++(t.dots(c) == Dots::Two ? two : one);
        if (two >= 2 && one >= 1)
            return true;
    }
    return false;
}

DesignOutcome classify(const DottedTree& t, const ClassifyOptions& options) {
    const int n = t.positions();
    const bool small = n <= options.brute_max_n;
    auto brute = [&]() {
        return brute_force_designable(tree_to_structure(t), PairingModel::WC, options.brute_max_n, options.jobs);
    };

    if (has_obstruction(t))
        return {Verdict::NotDesignable, Reason::Obstruction2Plus1, std::nullopt, std::nullopt};

    if (is_saturated(t)) {
        if (!saturated_designable(t))
            return {Verdict::NotDesignable, Reason::SaturatedDegreeRule, std::nullopt, std::nullopt};
        std::optional<Sequence> design;
        if (floral_design_applies(t))
            design = design_for_floral(t).sequence;
        else if (small)
            design = brute();
        return {Verdict::Designable, Reason::SaturatedDegreeRule, std::move(design), std::nullopt};
    }

    if (floral_design_applies(t))
        return {Verdict::Designable, Reason::FloralNaturalLabelling, design_for_floral(t).sequence, std::nullopt};

    if (auto colouring = find_separated_proper_colouring(exterior_tree(t)))
        return {Verdict::Designable, Reason::SeparatedColouring, std::nullopt, std::move(colouring)};

    if (small) {
        if (auto design = brute())
            return {Verdict::Designable, Reason::BruteForce, std::move(design), std::nullopt};
        return {Verdict::NotDesignable, Reason::BruteForce, std::nullopt, std::nullopt};
    }
    return {};
}

} // namespace rnacd

#include "rnacd/certify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rnacd/errors.hpp"

namespace rnacd {

std::string_view to_string(BalanceKind k) noexcept { return k == BalanceKind::GC ? "GC" : "AU"; }

namespace {

std::pair<char, char> letters_of(BalanceKind k) noexcept {
    return k == BalanceKind::GC ? std::pair{'G', 'C'} : std::pair{'A', 'U'};
}

int parity(int x) noexcept { return ((x % 2) + 2) % 2; }

} // namespace

bool is_balanced(const Sequence& s, const BalancedSet& b) {
    const auto [first, second] = letters_of(b.kind);
    int diff = 0;
    for (int p : b.positions) {
        if (p < 1 || p > static_cast<int>(s.size()))
            return false;
        const char c = s.at(p);
        if (c == first)
            ++diff;
        else if (c == second)
            --diff;
        else
            return false;
    }
    return diff == 0;
}

std::map<int, int> running_difference(const Sequence& s, const BalancedSet& b) {
    if (!is_balanced(s, b))
        throw NotBalanced("positions do not form a balanced " + std::string(to_string(b.kind)) + " set");
    const auto [first, second] = letters_of(b.kind);
    const std::set<int> members(b.positions.begin(), b.positions.end());
    std::map<int, int> tags;
    int running = 0;
    for (int p = 1; p <= static_cast<int>(s.size()); ++p) {
        if (members.contains(p)) {
            running += s.at(p) == first ? 1 : (s.at(p) == second ? -1 : 0);
            continue;
        }
        tags[p] = running;
    }
    return tags;
}

CertificateTrace run_algorithm1(const LabelledTree& tau, int stop_height) {
    const Sequence seq = tau.flatten();
    const std::vector<int> heights = tau.position_heights();
    const std::vector<VertexId> vertices = tau.position_vertices();
    const int tree_height = height(tau.tree());
    if (stop_height < 0 || stop_height > tree_height)
        throw Error("stop height " + std::to_string(stop_height) + " outside 0.." + std::to_string(tree_height));

    const int n = static_cast<int>(seq.size());
    auto height_at = [&](int p) { return heights[static_cast<std::size_t>(p - 1)]; };

    CertificateTrace trace;
    trace.stop_height = stop_height;
    std::vector<bool> coloured(static_cast<std::size_t>(n) + 1, false);

    std::vector<int> current;
    for (int p = 1; p <= n; ++p)
        if (parity(height_at(p)) != parity(stop_height))
            current.push_back(p);

    auto uncoloured_heights = [&] {
        std::set<int> hs;
        for (int p = 1; p <= n; ++p)
            if (!coloured[p])
                hs.insert(height_at(p));
        return hs;
    };

    for (int iteration = 1; !current.empty(); ++iteration) {
        // Property 1: a height is wholly inside or wholly outside the set.
        std::set<int> member_heights;
        for (int p : current)
            member_heights.insert(height_at(p));
        const std::set<int> member_set(current.begin(), current.end());
        for (int p = 1; p <= n; ++p)
            if (member_heights.contains(height_at(p)) && !member_set.contains(p))
                throw PropertyViolated(1, iteration,
                                       "height " + std::to_string(height_at(p)) + " split at position " +
                                           std::to_string(p));
        // Property 2: the stop height is never coloured.
        if (member_heights.contains(stop_height))
            throw PropertyViolated(2, iteration, "stop height selected for colouring");
        // Property 5: the set is balanced.
        BalancedSet balanced{current, BalanceKind::GC};
        if (!is_balanced(seq, balanced)) {
            balanced.kind = BalanceKind::AU;
            if (!is_balanced(seq, balanced))
                throw PropertyViolated(5, iteration, "selected positions are not balanced");
        }

        for (int p : current)
            coloured[p] = true;
        TraceIteration step{balanced, {}, {}};
        for (int p = 1; p <= n; ++p)
            if (coloured[p])
                step.coloured.push_back(p);

        const std::set<int> remaining = uncoloured_heights();
        if (remaining.size() == 1 && *remaining.begin() == stop_height) {
            trace.iterations.push_back(std::move(step));
            break;
        }

        for (const auto& [p, tag] : running_difference(seq, balanced))
            if (!coloured[p])
                step.tags[p] = tag;

        // Property 3: one tag parity per height.
        std::map<int, int> height_parity;
        for (const auto& [p, tag] : step.tags) {
            const auto [it, inserted] = height_parity.emplace(height_at(p), parity(tag));
            if (!inserted && it->second != parity(tag))
                throw PropertyViolated(3, iteration,
                                       "mixed tag parity at height " + std::to_string(height_at(p)) +
                                           ", position " + std::to_string(p));
        }
        // Property 4: parity alternates between successive tagged heights.
        for (auto it = height_parity.begin(); std::next(it) != height_parity.end(); ++it)
            if (it->second == std::next(it)->second)
                throw PropertyViolated(4, iteration,
                                       "heights " + std::to_string(it->first) + " and " +
                                           std::to_string(std::next(it)->first) + " share tag parity");

        const int stop_parity = height_parity.at(stop_height);
        std::vector<int> next;
        for (const auto& [p, tag] : step.tags)
            if (parity(tag) != stop_parity)
                next.push_back(p);
        trace.iterations.push_back(std::move(step));
        if (next.empty())
            throw PropertyViolated(4, iteration, "no height left to colour");
        current = std::move(next);
    }

    std::vector<int> stop_positions;
    for (int p = 1; p <= n; ++p)
        if (height_at(p) == stop_height)
            stop_positions.push_back(p);
    const bool all_paired_in_tree = std::all_of(stop_positions.begin(), stop_positions.end(), [&](int p) {
        return tau.tree().dots(vertices[static_cast<std::size_t>(p - 1)]) == Dots::Two;
    });
    bool any_pairable = false;
    for (std::size_t a = 0; a < stop_positions.size(); ++a)
        for (std::size_t b = a + 1; b < stop_positions.size(); ++b)
            any_pairable = any_pairable || can_pair(seq.at(stop_positions[a]), seq.at(stop_positions[b]),
                                                    PairingModel::WC);
    if (!any_pairable && !all_paired_in_tree)
        trace.forced_unpaired = stop_positions;
    trace.forced_height_pairings[stop_height] = all_paired_in_tree;
    return trace;
}

LabelledTree reduce_to_saturated(const LabelledTree& tau) {
    const DottedTree& t = tau.tree();
    if (is_saturated(t))
        return tau;
    const int h = height(t);
    DottedTree out(t.virtual_root());
    std::vector<std::string> labels{tau.label(t.root())};
    std::function<void(VertexId, VertexId)> copy = [&](VertexId from, VertexId to) {
        for (VertexId c : t.children(from)) {
            if (t.depth(c) == h) {
                if (t.dots(c) != Dots::One)
                    throw Error("maximum-height vertices are not all unpaired");
                continue;
            }
            const VertexId id = out.add_child(to, t.dots(c));
            labels.push_back(tau.label(c));
            copy(c, id);
        }
    };
    copy(t.root(), out.root());
    LabelledTree reduced(std::move(out), std::move(labels));
    if (!is_saturated(reduced.tree()))
        throw Error("unpaired vertices below the maximum height");
    return reduced;
}

namespace {

bool crosses(const Arc& a, const Arc& b) noexcept {
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

} // namespace

SecondaryStructure claim2_sweep(const LabelledTree& saturated) {
    if (!is_saturated(saturated.tree()))
        throw NotSaturated();
    const Sequence seq = saturated.flatten();
    const std::vector<int> heights = saturated.position_heights();
    const int tree_height = height(saturated.tree());
    std::vector<Arc> fixed;

    for (int j = 0; j <= tree_height; ++j) {
        const CertificateTrace trace = run_algorithm1(saturated, j);
        if (!trace.forced_height_pairings.at(j))
            throw Error("height " + std::to_string(j) + " is not forced to pair");

        std::vector<int> pos;
        for (std::size_t p = 0; p < heights.size(); ++p)
            if (heights[p] == j)
                pos.push_back(static_cast<int>(p) + 1);
        const int m = static_cast<int>(pos.size());
        auto allowed = [&](int x, int y) {
            const Arc a{pos[x], pos[y]};
            if (!can_pair(seq.at(a.i), seq.at(a.j), PairingModel::WC))
                return false;
            return std::none_of(fixed.begin(), fixed.end(), [&](const Arc& f) { return crosses(a, f); });
        };
        // ways[x][y]: perfect matchings of pos[x..y], saturating at 2.
        std::vector<std::vector<int>> ways(static_cast<std::size_t>(m) + 2, std::vector<int>(m + 2, 0));
        auto w = [&](int x, int y) { return y < x ? 1 : ways[x][y]; };
        for (int len = 2; len <= m; len += 2) {
            for (int x = 0; x + len - 1 < m; ++x) {
                const int y = x + len - 1;
                int total = 0;
                for (int z = x + 1; z <= y; z += 2)
                    if (allowed(x, z))
                        total = std::min(2, total + w(x + 1, z - 1) * w(z + 1, y));
                ways[x][y] = total;
            }
        }
        if (m % 2 != 0 || w(0, m - 1) != 1)
            throw Error("height " + std::to_string(j) + " does not have a unique forced matching");
        std::function<void(int, int)> rebuild = [&](int x, int y) {
            if (y < x)
                return;
            for (int z = x + 1; z <= y; z += 2) {
                if (allowed(x, z) && w(x + 1, z - 1) * w(z + 1, y) > 0) {
                    fixed.push_back({pos[x], pos[z]});
                    rebuild(x + 1, z - 1);
                    rebuild(z + 1, y);
                    return;
                }
            }
        };
        rebuild(0, m - 1);
    }
    return SecondaryStructure(static_cast<int>(seq.size()), std::move(fixed));
}

LemmaCount lemma_count(const LabelledTree& tau, int n1, int ell, int h) {
    const std::vector<int> heights = tau.position_heights();
    const int n = static_cast<int>(heights.size());
    if (n1 < 1 || n1 > n)
        throw CasePreconditionUnmet("position " + std::to_string(n1) + " out of range");
    const int k = heights[static_cast<std::size_t>(n1 - 1)];
    int n2 = 0;
    for (int p = n1 + 1; p <= n && n2 == 0; ++p)
        if (heights[static_cast<std::size_t>(p - 1)] == ell)
            n2 = p;
    if (n2 == 0)
        throw CasePreconditionUnmet("no position at height " + std::to_string(ell) + " follows " +
                                    std::to_string(n1));
    if (h == k || h == ell)
        throw CasePreconditionUnmet("h must differ from both endpoint heights");

    LemmaCount out;
    for (int p = n1 + 1; p < n2; ++p)
        out.count += heights[static_cast<std::size_t>(p - 1)] == h ? 1 : 0;
    if (out.count == 0)
        throw CasePreconditionUnmet("no position at height " + std::to_string(h) + " between the endpoints");

    const int top = height(tau.tree());
    if (ell == k && h < k) {
        out.which = LemmaCase::SameHeightBelow;
        out.predicted = 2;
    } else if (ell == k && k < h && h < top) {
        out.which = LemmaCase::SameHeightAbove;
        out.predicted = 1 << (h - k + 1);
    } else if (k < h && h < ell) {
        out.which = LemmaCase::Ascending;
        out.predicted = 1;
    } else if (ell < h && h < k) {
        out.which = LemmaCase::Descending;
        out.predicted = -1;
    } else {
        throw CasePreconditionUnmet("heights (k=" + std::to_string(k) + ", l=" + std::to_string(ell) +
                                    ", h=" + std::to_string(h) + ") match no case");
    }
    return out;
}

bool check_adjacent_heights(const LabelledTree& tau) {
    const std::vector<int> heights = tau.position_heights();
    for (std::size_t p = 1; p < heights.size(); ++p)
        if (std::abs(heights[p] - heights[p - 1]) > 1)
            return false;
    return true;
}

std::string render_condensed(const LabelledTree& tau, const CertificateTrace& trace) {
    const DottedTree& t = tau.tree();
    const int top = height(t);
    const std::vector<int> heights = tau.position_heights();
    std::vector<std::string> kind(static_cast<std::size_t>(top) + 1);
    for (VertexId v : t.preorder()) {
        auto& k = kind[static_cast<std::size_t>(t.depth(v))];
        if (k.empty()) {
            std::string l = tau.label(v);
            if (l == "UA" || l == "CG")
                std::swap(l[0], l[1]);
            k = l;
        }
    }

    std::ostringstream out;
    for (std::size_t it = 0; it < trace.iterations.size(); ++it) {
        const TraceIteration& step = trace.iterations[it];
        std::set<int> now, boxed;
        for (int p : step.coloured)
            now.insert(heights[static_cast<std::size_t>(p - 1)]);
        for (int p : step.balanced.positions)
            boxed.insert(heights[static_cast<std::size_t>(p - 1)]);
        std::map<int, int> tag_parity;
        for (const auto& [p, tag] : step.tags)
            tag_parity[heights[static_cast<std::size_t>(p - 1)]] = parity(tag);

        out << "iteration " << it + 1 << '\n';
        for (int d = 0; d <= top; ++d) {
            out << "  height " << d << "  " << kind[static_cast<std::size_t>(d)];
            if (boxed.contains(d))
                out << "  [coloured]";
            else if (now.contains(d))
                out << "  coloured";
            else if (tag_parity.contains(d))
                out << "  tag parity " << tag_parity[d];
            if (d == trace.stop_height)
                out << "  <- stop";
            out << '\n';
        }
    }
    return out.str();
}

} // namespace rnacd

#include "rnacd/tree.hpp"

#include <algorithm>
#include <functional>

#include "rnacd/errors.hpp"

namespace rnacd {

DottedTree::DottedTree(bool virtual_root) : virtual_root_(virtual_root) {
    nodes_.push_back({Dots::Two, -1, 0, {}});
}

VertexId DottedTree::add_child(VertexId parent, Dots dots) {
    if (nodes_.at(parent).dots == Dots::One)
        throw Error("a 1-dot vertex cannot have children");
    const auto id = static_cast<VertexId>(nodes_.size());
    nodes_.push_back({dots, parent, nodes_[parent].depth + 1, {}});
    nodes_[parent].children.push_back(id);
    return id;
}

std::vector<VertexId> DottedTree::preorder() const {
    std::vector<VertexId> order;
    order.reserve(nodes_.size());
    std::vector<VertexId> stack{root()};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ch = nodes_[v].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

std::string DottedTree::path(VertexId v) const {
    std::vector<std::size_t> steps;
    while (v != root()) {
        const VertexId p = parent(v);
        const auto& ch = children(p);
        steps.push_back(static_cast<std::size_t>(std::find(ch.begin(), ch.end(), v) - ch.begin()));
        v = p;
    }
    std::string out;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (!out.empty())
            out += '.';
        out += std::to_string(*it);
    }
    return out;
}

std::size_t DottedTree::count(Dots d) const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [d](const Node& n) { return n.dots == d; }));
}

int DottedTree::positions() const {
    return static_cast<int>(2 * count(Dots::Two) + count(Dots::One)) - (virtual_root_ ? 2 : 0);
}

bool operator==(const DottedTree& a, const DottedTree& b) {
    return a.virtual_root_ == b.virtual_root_ && serialize_tree(a) == serialize_tree(b);
}

DottedTree parse_tree(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    const int n = static_cast<int>(text.size());
    if (n == 0)
        throw ParseError(ParseErrorKind::SyntaxError, 1);
    if (text[0] == '*')
        throw ParseError(n > 1 ? ParseErrorKind::OneDotInternal : ParseErrorKind::SyntaxError, 1, '*');
    if (text[0] != '(')
        throw ParseError(text[0] == ')' ? ParseErrorKind::SyntaxError : ParseErrorKind::IllegalCharacter,
                         1, text[0]);

    DottedTree t;
    std::vector<VertexId> open{t.root()};
    int p = 2;
    for (; p <= n; ++p) {
        const char c = text[p - 1];
        if (open.empty())
            throw ParseError(ParseErrorKind::SyntaxError, p, c);
        switch (c) {
        case '(':
            open.push_back(t.add_child(open.back(), Dots::Two));
            break;
        case ')':
            open.pop_back();
            break;
        case '*':
            t.add_child(open.back(), Dots::One);
            break;
        default:
            throw ParseError(ParseErrorKind::IllegalCharacter, p, c);
        }
    }
    if (!open.empty())
        throw ParseError(ParseErrorKind::SyntaxError, n + 1);
    return t;
}

std::string serialize_tree(const DottedTree& t) {
    std::string out;
    std::function<void(VertexId)> write = [&](VertexId v) {
        if (t.dots(v) == Dots::One) {
            out += '*';
            return;
        }
        out += '(';
        for (VertexId c : t.children(v))
            write(c);
        out += ')';
    };
    write(t.root());
    return out;
}

int height(const DottedTree& t) {
    int h = 0;
    for (std::size_t v = 0; v < t.size(); ++v)
        h = std::max(h, t.depth(static_cast<VertexId>(v)));
    return h;
}

namespace {

template <class F>
bool all_vertices(const DottedTree& t, F&& pred) {
    for (std::size_t v = 0; v < t.size(); ++v)
        if (!pred(static_cast<VertexId>(v)))
            return false;
    return true;
}

// Binary / full-binary test on the subtree of vertices with depth <= limit.
bool binary_below(const DottedTree& t, int limit) {
    return all_vertices(t, [&](VertexId v) {
        if (t.depth(v) >= limit)
            return true;
        return t.children(v).size() <= 2;
    });
}

bool full_binary_below(const DottedTree& t, int limit) {
    return all_vertices(t, [&](VertexId v) {
        if (t.depth(v) > limit)
            return true;
        const std::size_t kids = t.depth(v) == limit ? 0 : t.children(v).size();
        if (kids == 0)
            return t.depth(v) == limit;
        return kids == 2;
    });
}

} // namespace

bool is_saturated(const DottedTree& t) { return t.count(Dots::One) == 0; }

bool is_p_unsaturated(const DottedTree& t) {
    const int h = height(t);
    return all_vertices(t, [&](VertexId v) { return (t.dots(v) == Dots::One) == (t.depth(v) == h); });
}

bool is_binary(const DottedTree& t) { return binary_below(t, height(t) + 1); }

bool is_full_binary(const DottedTree& t) { return full_binary_below(t, height(t)); }

bool is_floral(const DottedTree& t) {
    const int h = height(t);
    return h == 0 || binary_below(t, h - 1);
}

bool is_full_floral(const DottedTree& t) {
    const int h = height(t);
    return h == 0 || full_binary_below(t, h - 1);
}

DottedTree remove_max_height(const DottedTree& t) {
    const int h = height(t);
    DottedTree out(t.virtual_root());
    if (h == 0)
        return out;
    std::function<void(VertexId, VertexId)> copy = [&](VertexId from, VertexId to) {
        for (VertexId c : t.children(from)) {
            if (t.depth(c) == h)
                continue;
            copy(c, out.add_child(to, t.dots(c)));
        }
    };
    copy(t.root(), out.root());
    return out;
}

LabelledTree::LabelledTree(DottedTree tree, std::vector<std::string> labels)
    : tree_(std::move(tree)), labels_(std::move(labels)) {
    if (labels_.size() != tree_.size())
        throw Error("label count differs from vertex count");
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        const std::string& l = labels_[v];
        const auto arity = static_cast<std::size_t>(tree_.dots(static_cast<VertexId>(v)));
        if (l.size() != arity)
            throw Error("label '" + l + "' does not match the dot count of vertex " + std::to_string(v));
        for (char c : l)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'U')
                throw Error("label '" + l + "' is not over ACGU");
    }
}

std::vector<VertexId> LabelledTree::position_vertices() const {
    std::vector<VertexId> out;
    std::function<void(VertexId)> visit = [&](VertexId v) {
        const bool counted = !(v == tree_.root() && tree_.virtual_root());
        if (counted)
            out.push_back(v);
        if (tree_.dots(v) == Dots::One)
            return;
        for (VertexId c : tree_.children(v))
            visit(c);
        if (counted)
            out.push_back(v);
    };
    visit(tree_.root());
    return out;
}

Sequence LabelledTree::flatten() const {
    std::string s;
    const std::vector<VertexId> vs = position_vertices();
    std::vector<bool> seen(tree_.size(), false);
    for (VertexId v : vs) {
        const std::string& l = labels_[v];
        if (l.size() == 1) {
            s += l[0];
        } else {
            s += seen[v] ? l[1] : l[0];
            seen[v] = true;
        }
    }
    return Sequence(std::move(s));
}

std::vector<int> LabelledTree::position_heights() const {
    std::vector<int> out;
    for (VertexId v : position_vertices())
        out.push_back(tree_.depth(v));
    return out;
}

} // namespace rnacd

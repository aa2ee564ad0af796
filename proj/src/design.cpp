#include "rnacd/design.hpp"

#include <functional>

#include "rnacd/errors.hpp"

namespace rnacd {

namespace {

bool natural_labelling_applies(const DottedTree& t) {
    return (is_full_floral(t) && is_p_unsaturated(t)) || (is_saturated(t) && is_full_binary(t));
}

} // namespace

LabelledTree natural_labelling(const DottedTree& t) {
    if (!natural_labelling_applies(t))
        throw NotFullFloral();
    const char flower = height(t) % 2 == 0 ? 'A' : 'C';
    std::vector<std::string> labels(t.size());
    std::vector<int> seen_at_height(static_cast<std::size_t>(height(t)) + 1, 0);
    for (VertexId v : t.preorder()) {
        if (t.dots(v) == Dots::One) {
            labels[v] = std::string(1, flower);
            continue;
        }
        const int d = t.depth(v);
        const bool first = seen_at_height[d]++ % 2 == 0;
        if (d % 2 == 0)
            labels[v] = first ? "AU" : "UA";
        else
            labels[v] = first ? "GC" : "CG";
    }
    return LabelledTree(t, std::move(labels));
}

bool floral_design_applies(const DottedTree& t) {
    return (is_floral(t) && is_p_unsaturated(t)) || (is_saturated(t) && is_binary(t));
}

Embedding embed_in_full_floral(const DottedTree& t) {
    if (!floral_design_applies(t))
        throw NotFloral();
    const int h = height(t);
    // Depth of the 2-dot part that must become full binary.
    const int binary_height = is_saturated(t) ? h : h - 1;

    Embedding e{DottedTree(t.virtual_root()), std::vector<VertexId>(t.size(), -1), {}};
    DottedTree& sup = e.supertree;
    std::vector<bool> kept{true};

    std::function<void(VertexId)> grow = [&](VertexId u) {
        if (sup.depth(u) >= binary_height)
            return;
        for (int k = 0; k < 2; ++k) {
            const VertexId c = sup.add_child(u, Dots::Two);
            kept.push_back(false);
            grow(c);
        }
    };
    std::function<void(VertexId, VertexId)> copy = [&](VertexId v, VertexId u) {
        e.image[v] = u;
        if (t.depth(v) < binary_height) {
            std::size_t present = 0;
            for (VertexId c : t.children(v))
                present += t.dots(c) == Dots::Two ? 1 : 0;
            for (std::size_t k = present; k < 2; ++k) {
                const VertexId c = sup.add_child(u, Dots::Two);
                kept.push_back(false);
                grow(c);
            }
        }
        for (VertexId c : t.children(v)) {
            const VertexId cu = sup.add_child(u, t.dots(c));
            kept.push_back(true);
            copy(c, cu);
        }
    };
    copy(t.root(), sup.root());
    e.kept = std::move(kept);
    return e;
}

FloralDesign design_for_floral(const DottedTree& t) {
    const Embedding e = embed_in_full_floral(t);
    const LabelledTree full = natural_labelling(e.supertree);
    std::vector<std::string> labels(t.size());
    for (std::size_t v = 0; v < t.size(); ++v)
        labels[v] = full.label(e.image[v]);
    LabelledTree restricted(t, std::move(labels));
    Sequence seq = restricted.flatten();
    return {std::move(seq), tree_to_structure(t), std::move(restricted)};
}

} // namespace rnacd

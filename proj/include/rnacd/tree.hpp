#ifndef RNACD_TREE_HPP
#define RNACD_TREE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rnacd/sequence.hpp"

namespace rnacd {

enum class Dots : unsigned char { One = 1, Two = 2 };

using VertexId = int;

/**
 * Ordered rooted tree whose vertices carry one or two dots.
 *
 * Vertex 0 is the root and is always 2-dot. Only leaves may carry one dot;
 * add_child() refuses to hang anything below a 1-dot vertex. A virtual root is
 * a synthesized 2-dot root standing for no base pair; it lets a forest of arcs
 * be handled as a single tree.
 */
class DottedTree {
public:
    explicit DottedTree(bool virtual_root = false);

    VertexId root() const noexcept { return 0; }
    std::size_t size() const noexcept { return nodes_.size(); }
    bool virtual_root() const noexcept { return virtual_root_; }
    void set_virtual_root(bool value) noexcept { virtual_root_ = value; }

    VertexId add_child(VertexId parent, Dots dots);

    Dots dots(VertexId v) const { return nodes_.at(v).dots; }
    VertexId parent(VertexId v) const { return nodes_.at(v).parent; }
    int depth(VertexId v) const { return nodes_.at(v).depth; }
    const std::vector<VertexId>& children(VertexId v) const { return nodes_.at(v).children; }
    bool is_leaf(VertexId v) const { return nodes_.at(v).children.empty(); }

    //! Vertices in pre-order (parent before children, children left to right).
    std::vector<VertexId> preorder() const;
    //! Child-index path from the root, e.g. "0.1"; the root is "".
    std::string path(VertexId v) const;

    //! Nucleotide positions represented: 2 per 2-dot vertex, 1 per 1-dot, minus a virtual root.
    int positions() const;
    std::size_t count(Dots d) const;

    friend bool operator==(const DottedTree& a, const DottedTree& b);

private:
    struct Node {
        Dots dots;
        VertexId parent;
        int depth;
        std::vector<VertexId> children;
    };
    std::vector<Node> nodes_;
    bool virtual_root_;
};

DottedTree parse_tree(std::string_view text);
std::string serialize_tree(const DottedTree& t);

int height(const DottedTree& t);

bool is_saturated(const DottedTree& t);
bool is_p_unsaturated(const DottedTree& t);
bool is_binary(const DottedTree& t);
bool is_full_binary(const DottedTree& t);
bool is_floral(const DottedTree& t);
bool is_full_floral(const DottedTree& t);

//! The tree with every maximum-height vertex deleted; a lone root is returned unchanged.
DottedTree remove_max_height(const DottedTree& t);

/**
 * A dotted tree with nucleotide labels: a pair such as "GC" on every 2-dot
 * vertex and a single letter on every 1-dot leaf.
 */
class LabelledTree {
public:
    LabelledTree(DottedTree tree, std::vector<std::string> labels);

    const DottedTree& tree() const noexcept { return tree_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    //! Pre-order reading, each 2-dot vertex visited before and after its subtree.
    Sequence flatten() const;
    //! Tree height of the vertex behind every position of flatten(), 0-based index.
    std::vector<int> position_heights() const;
    //! Vertex behind every position of flatten(), 0-based index.
    std::vector<VertexId> position_vertices() const;

private:
    DottedTree tree_;
    std::vector<std::string> labels_;
};

} // namespace rnacd

#endif

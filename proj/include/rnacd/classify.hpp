#ifndef RNACD_CLASSIFY_HPP
#define RNACD_CLASSIFY_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "rnacd/sequence.hpp"
#include "rnacd/tree.hpp"

namespace rnacd {

enum class Colour : unsigned char { B, W, Y };

char to_char(Colour c) noexcept;

/**
 * B/W/Y assignment to the 2-dot non-root vertices of a tree, indexed by
 * vertex id. The root and 1-dot vertices stay uncoloured.
 */
struct Colouring {
    std::vector<std::optional<Colour>> colour;

    std::optional<Colour> at(VertexId v) const { return colour.at(static_cast<std::size_t>(v)); }
};

//! Every vertex's coloured children fit in the Table-1 multiset of its own colour.
bool is_proper(const DottedTree& t, const Colouring& c);

//! Blacks minus whites on the path from v to the root, v included.
int level(const DottedTree& t, const Colouring& c, VertexId v);

//! No grey vertex shares a level with a 1-dot vertex.
bool is_separated(const DottedTree& t, const Colouring& c);

/**
 * First separated proper colouring in pre-order, colours tried B < W < Y, or
 * nullopt when none exists. The search is exhaustive backtracking; dead ends
 * are remembered by their residual state so equivalent prefixes are not
 * re-explored.
 */
std::optional<Colouring> find_separated_proper_colouring(const DottedTree& t);

/**
 * The tree as seen from the exterior loop: t itself when its root is virtual,
 * otherwise a virtual root whose only child is t's root. The degree rule and
 * the colouring criterion count children of the exterior loop, so they are
 * evaluated on this tree.
 */
DottedTree exterior_tree(const DottedTree& t);

/**
 * Degree rule for saturated trees, on exterior_tree(t): the exterior root has
 * at most four children and every base-pair vertex at most three.
 * Throws NotSaturated.
 */
bool saturated_designable(const DottedTree& t);

//! Some base-pair vertex has at least two 2-dot children and at least one 1-dot child.
bool has_obstruction(const DottedTree& t);

enum class Verdict { Designable, NotDesignable, Unknown };
enum class Reason { SaturatedDegreeRule, Obstruction2Plus1, SeparatedColouring, FloralNaturalLabelling, BruteForce };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Reason r) noexcept;

struct DesignOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<Reason> reason;
    std::optional<Sequence> design;
    //! Colouring of exterior_tree(t).
    std::optional<Colouring> colouring;
};

struct ClassifyOptions {
    //! Largest structure length the exhaustive sequence search may be used for; 0 disables it.
    int brute_max_n = 12;
    unsigned jobs = 1;
};

/**
 * Designability verdict from tree shape.
 *
 * Non-designability tests run first: the 2+1 obstruction, then the degree
 * rule on saturated trees. Then the floral construction, the colouring
 * criterion on exterior_tree(t), and finally exhaustive search when the
 * structure is small.
 */
DesignOutcome classify(const DottedTree& t, const ClassifyOptions& options = {});

} // namespace rnacd

#endif

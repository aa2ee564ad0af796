#ifndef RNACD_STRUCTURE_HPP
#define RNACD_STRUCTURE_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rnacd {

class DottedTree;

//! A base pair between 1-based positions i < j.
struct Arc {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * Pseudoknot-free secondary structure over positions 1..n.
 *
 * The constructor rejects arcs that share an endpoint, cross, or fall outside
 * 1..n, so every instance satisfies the structure invariants. Arcs are kept
 * sorted by left endpoint.
 */
class SecondaryStructure {
public:
    SecondaryStructure() = default;
    SecondaryStructure(int n, std::vector<Arc> arcs);

    int size() const noexcept { return n_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    //! partners()[p] is the partner of position p, or 0 when unpaired; index 0 unused.
    std::vector<int> partners() const;
    bool is_saturated() const noexcept { return 2 * static_cast<int>(arcs_.size()) == n_; }

    friend bool operator==(const SecondaryStructure&, const SecondaryStructure&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

//! Candidate maximum-size arc sets share the structure representation.
using ArcSet = SecondaryStructure;

SecondaryStructure parse_dotbracket(std::string_view text);
std::string to_dotbracket(const SecondaryStructure& s);

//! Each arc becomes a 2-dot vertex and each unpaired position a 1-dot leaf.
DottedTree structure_to_tree(const SecondaryStructure& s);
SecondaryStructure tree_to_structure(const DottedTree& t);

} // namespace rnacd

#endif

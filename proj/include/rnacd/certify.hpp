#ifndef RNACD_CERTIFY_HPP
#define RNACD_CERTIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "rnacd/sequence.hpp"
#include "rnacd/structure.hpp"
#include "rnacd/tree.hpp"

namespace rnacd {

enum class BalanceKind { GC, AU };

std::string_view to_string(BalanceKind k) noexcept;

//! Positions (1-based) holding as many G as C, or as many A as U, and nothing else.
struct BalancedSet {
    std::vector<int> positions;
    BalanceKind kind = BalanceKind::GC;
};

bool is_balanced(const Sequence& s, const BalancedSet& b);

/**
 * Tag of every position outside b: members of b strictly to its left that
 * carry the first letter of the kind (G or A) minus those carrying the second
 * (C or U). Throws NotBalanced.
 */
std::map<int, int> running_difference(const Sequence& s, const BalancedSet& b);

struct TraceIteration {
    BalancedSet balanced;
    //! Running differences of the positions still uncoloured; empty on the final iteration.
    std::map<int, int> tags;
    //! Every position coloured so far, this iteration's set included.
    std::vector<int> coloured;
};

struct CertificateTrace {
    int stop_height = 0;
    std::vector<TraceIteration> iterations;
    //! Stop-height positions that cannot pair with one another.
    std::vector<int> forced_unpaired;
    //! stop height -> whether its positions are forced to pair among themselves.
    std::map<int, bool> forced_height_pairings;
};

/**
 * Colour-and-tag iteration on a naturally labelled tree.
 *
 * Starts from every position at a height of parity opposite to stop_height,
 * then repeatedly tags the uncoloured positions by running difference and
 * colours those whose tag parity differs from the leftmost stop-height
 * position, until only stop_height is left uncoloured. Each round checks
 * per-height membership, that stop_height stays uncoloured, per-height tag
 * parity, parity alternation between successive tagged heights, and balance;
 * a failed check throws PropertyViolated naming the property (1 to 5).
 */
CertificateTrace run_algorithm1(const LabelledTree& tau, int stop_height);

//! The labelled tree with its maximum-height vertices removed.
LabelledTree reduce_to_saturated(const LabelledTree& tau);

/**
 * Runs run_algorithm1 for every height of a saturated labelled tree and
 * rebuilds the arc set those runs force: at each height, from the root down,
 * the unique non-crossing perfect matching of that height's positions that
 * uses pairable letters and crosses no arc fixed earlier. Throws Error if a
 * height admits no such matching or more than one.
 */
SecondaryStructure claim2_sweep(const LabelledTree& saturated);

enum class LemmaCase { SameHeightBelow = 1, SameHeightAbove = 2, Ascending = 3, Descending = 4 };

struct LemmaCount {
    int count = 0;
    LemmaCase which = LemmaCase::SameHeightBelow;
    //! Value the lemma predicts: exact for cases 1 to 3, -1 ("odd") for case 4.
    int predicted = 0;
};

/**
 * Positions at height h strictly between n1 and n2, where n2 is the first
 * position after n1 at height ell. Throws CasePreconditionUnmet when n2 does
 * not exist, h is k or ell, no position at height h lies in between, or
 * ell = k with h the tree height.
 */
LemmaCount lemma_count(const LabelledTree& tau, int n1, int ell, int h);

//! Neighbouring positions of the flattening sit at equal heights or heights one apart.
bool check_adjacent_heights(const LabelledTree& tau);

//! One line per height and iteration showing coloured heights and tag parities.
std::string render_condensed(const LabelledTree& tau, const CertificateTrace& trace);

} // namespace rnacd

#endif

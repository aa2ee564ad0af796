#ifndef RNACD_DESIGN_HPP
#define RNACD_DESIGN_HPP

#include <vector>

#include "rnacd/sequence.hpp"
#include "rnacd/structure.hpp"
#include "rnacd/tree.hpp"

namespace rnacd {

/**
 * Natural labelling of a P-unsaturated full floral tree of height n+1.
 *
 * Flowers (1-dot vertices at height n+1) get A when n+1 is even and C when it
 * is odd. The 2-dot vertices of each height get, left to right, AU, UA, AU, ...
 * at even heights and GC, CG, GC, ... at odd heights; the alternation restarts
 * at every height. A saturated full binary tree is accepted as the flowerless
 * case. Throws NotFullFloral otherwise.
 */
LabelledTree natural_labelling(const DottedTree& t);

//! A full floral supertree together with the image of the original tree inside it.
struct Embedding {
    DottedTree supertree;
    //! image[v] is the supertree vertex of original vertex v.
    std::vector<VertexId> image;
    //! kept[u] marks supertree vertices that belong to the original tree.
    std::vector<bool> kept;
};

/**
 * Smallest full floral tree containing t.
 *
 * The 2-dot part is completed to a full binary tree of the same height; a
 * vertex missing children receives new ones to the left of its existing
 * children. Flowers are never added. Throws NotFloral unless t is a
 * P-unsaturated floral tree (or saturated binary).
 */
Embedding embed_in_full_floral(const DottedTree& t);

struct FloralDesign {
    Sequence sequence;
    SecondaryStructure structure;
    LabelledTree labelled;
};

//! Natural labelling of the supertree restricted to t; throws NotFloral.
FloralDesign design_for_floral(const DottedTree& t);

//! Whether design_for_floral accepts t.
bool floral_design_applies(const DottedTree& t);

} // namespace rnacd

#endif

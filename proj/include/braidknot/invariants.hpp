#pragma once

#include <cstddef>

#include "braidknot/braid.hpp"
#include "braidknot/laurent.hpp"
#include "braidknot/link.hpp"

namespace braidknot {

// Computations refuse diagrams with more crossings than this unless the
// caller raises the limit explicitly.
inline constexpr std::size_t default_crossing_cap = 16;

// The three diagrams of a skein relation at one site: the originals with
// the site positive and negative, and the site smoothed out.
struct SkeinTriple {
    LinkDiagram plus;
    LinkDiagram minus;
    LinkDiagram zero;
    std::size_t site;
};

SkeinTriple skein_triple(const LinkDiagram& diagram, std::size_t index);

// Alexander polynomial in z, normalized so the one-component unknot
// gives 1: resolved through a skein tree that switches the first
// descending-walk obstruction at each node, cleaning the diagram with
// R1/R2 moves as it goes.
LaurentPoly conway_polynomial(const LinkDiagram& diagram,
                              std::size_t crossing_cap = default_crossing_cap);

// State sum over all 2^c smoothings, in the variable A.
LaurentPoly kauffman_bracket(const LinkDiagram& diagram,
                             std::size_t crossing_cap = default_crossing_cap);

// Jones polynomial in q (writhe-normalized bracket, A -> q^(-1/2)).
// Computed from the state sum, fully independent of the skein-tree
// route above.
LaurentPoly jones_polynomial(const LinkDiagram& diagram,
                             std::size_t crossing_cap = default_crossing_cap);

struct LinkInvariants {
    int components = 0;
    LaurentPoly conway{"z"};
    LaurentPoly jones{"q"};
    long long exponent_sum = 0;
};

// Shrinks the word (closure-preserving moves), closes it, cleans the
// diagram, and computes everything; exponent_sum reports the input
// word's raw signed letter count.
LinkInvariants invariants_of_braid(const BraidWord& word,
                                   std::size_t crossing_cap = default_crossing_cap);

// Same package for a diagram given directly; exponent_sum is its writhe.
LinkInvariants invariants_of_diagram(const LinkDiagram& diagram,
                                     std::size_t crossing_cap = default_crossing_cap);

}  // namespace braidknot

#pragma once

#include <string>

#include "annular/matchings.hpp"
#include "annular/tangles.hpp"

namespace annular {

// Static SVG of a matching on the annulus: labelled outer points, strands
// from the inner circle, cup arcs bulging through the spanning side.
std::string matching_svg(const Matching& alpha);

// Static SVG of a tangle word as a stack of bands, first factor applied at
// the bottom. Crossings draw the under strand with a gap; rotations and
// winds mark the wrap across the cut with dashed segments.
std::string word_svg(const TangleWord& word);

}  // namespace annular

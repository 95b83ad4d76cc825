#pragma once

#include <string>
#include <vector>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/order.hpp"

namespace brouwerlab {

/// Hasse diagram in Graphviz DOT, larger elements drawn on top. Highlighted
/// elements are filled.
std::string poset_dot(const Poset& p, Mask highlight = 0, const std::string& name = "poset");
std::string algebra_dot(const BrouwerAlgebra& b, const std::vector<Elem>& highlight = {},
                        const std::string& name = "algebra");

}  // namespace brouwerlab

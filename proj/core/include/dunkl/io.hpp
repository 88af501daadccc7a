#pragma once

#include <iosfwd>
#include <string>

#include "dunkl/measure.hpp"

namespace dunkl {

// CSV: header "node,weight,re,im", one row per grid node, 17 significant digits.
// weight is the grid's dx quadrature weight (without w_k).
void write_csv(std::ostream& out, const SampledFunction& f);
// Throws std::invalid_argument on a malformed file or an asymmetric grid.
SampledFunction read_csv(std::istream& in, const MultiplicityParam& m);

// {"k": [...], "nodes": [...], "weights": [...], "re": [...], "im": [...]}
std::string to_json(const SampledFunction& f, int indent = 2);
SampledFunction from_json(const std::string& text);

}  // namespace dunkl

#pragma once

#include "skeinf/diagram.hpp"
#include "skeinf/ratfun.hpp"

namespace skeinf {

// Jones polynomial in s (Jones variable t = s^2) via the Kauffman bracket
// state sum. Deliberately shares nothing with the skein evaluator except
// the diagram type: this is the oracle that pins the sign conventions.
// Exponential in crossing count; fine for the small diagrams it serves.
SPoly bracket_jones(const Diagram& d);

}  // namespace skeinf

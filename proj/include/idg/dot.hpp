#pragma once

#include <string>

#include "idg/graph.hpp"

namespace idg {

/// Graphviz rendering. Boxes and port-bearing nodes and let-bindings are
/// clusters; ports are triangles (constructor) or boxes (resource), filled
/// when they provide. Edges carry class="<relation>".
std::string to_dot(const TermGraph& t);

}  // namespace idg

#pragma once

#include "idg/diagnostic.hpp"
#include "idg/graph.hpp"

namespace idg {

/// Runs every check in order (type, term, root counts, correspondences,
/// coverage, well-formedness) and stops at the first stage that reports.
Diagnostics check_bundle(const Bundle& b, std::size_t cycle_steps = 1'000'000);

}  // namespace idg

#pragma once

#include <random>

#include "idg/cograph.hpp"
#include "idg/encodings.hpp"

namespace idg::gen {

using Rng = std::mt19937_64;

AdjacencyMatrix graph(Rng& rng, std::size_t n, double p);

BinTree tree(Rng& rng, int leaves);
Multigraph multigraph(Rng& rng, int max_vertices, int max_edges);
/// Closed term of at most the given depth.
LambdaTerm lambda(Rng& rng, int depth);

/// Structurally arbitrary term with an internal type and an external
/// correspondence; at most `n` components per namespace.
std::pair<TermGraph, Correspondence> term(Rng& rng, int n);
/// Renames every component to a fresh shuffled id.
std::pair<TermGraph, Correspondence> shuffle(Rng& rng, const TermGraph& t, const Correspondence& c);
/// One small random edit.
std::pair<TermGraph, Correspondence> mutate(Rng& rng, TermGraph t, Correspondence c);

/// Swaps the targets of two resource wires whose receivers correspond to
/// the same field. Returns false when no such pair exists.
bool swap_wires(Rng& rng, Bundle& b);

/// Encoded tree, multigraph or lambda term, sometimes with swapped wires,
/// with at most `max_ports` ports.
Bundle wf_instance(Rng& rng, std::size_t max_ports);

}  // namespace idg::gen

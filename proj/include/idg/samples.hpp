#pragma once

#include "idg/graph.hpp"

namespace idg::samples {

/// A node whose constructor argument is a box, all in one root box.
Bundle higher_order();

/// One box routing x to l and y to r; `swapped` maps the outputs the other
/// way round in the external correspondence only.
Bundle pair_passthrough(bool swapped);

/// A function node applied between the root's input and output.
Bundle applied_node();
/// The same node with its output fed back into its own input.
Bundle feedback_node();
/// Identity box at a connected input/output type.
Bundle identity_box();
/// Input wired to output at a type where they are not connected.
Bundle disconnected_box();

/// let y = (box applying its argument twice) in y applied to (box applying
/// the root's function twice).
Bundle nested_let();
/// The result of inlining y once: a single let whose body applies the
/// root's function twice, used twice.
Bundle single_let();
/// Four applications of the root's function in sequence.
Bundle four_applications();

}  // namespace idg::samples

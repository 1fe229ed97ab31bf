#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idg/graph.hpp"

namespace idg {

/// Rejection of a term that is not the encoding of any structure.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, Id component = {});
  Id component;
};

// Unlabeled binary trees. A leaf has no children, a branch has two.
struct BinTree {
  std::vector<BinTree> kids;
  bool operator==(const BinTree&) const = default;
  static BinTree leaf() { return {}; }
  static BinTree branch(BinTree l, BinTree r) { return {{std::move(l), std::move(r)}}; }
  std::size_t size() const;
};

// Directed multigraphs; self-loops and parallel edges allowed.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const Multigraph&) const = default;
};

// Closed lambda terms with de Bruijn indices (0 = nearest binder).
struct LambdaTerm {
  enum class Kind { var, app, abs };
  Kind kind = Kind::var;
  int index = 0;
  std::vector<LambdaTerm> kids;  // app: function, argument; abs: body
  bool operator==(const LambdaTerm&) const = default;

  static LambdaTerm var(int i) { return {Kind::var, i, {}}; }
  static LambdaTerm app(LambdaTerm f, LambdaTerm a) { return {Kind::app, 0, {std::move(f), std::move(a)}}; }
  static LambdaTerm abs(LambdaTerm body) { return {Kind::abs, 0, {std::move(body)}}; }
  bool closed(int depth = 0) const;
  int depth() const;
};

// Text forms: "(() ())", "n=3; 0->1 1->2", "\x. \y. y x".
BinTree parse_tree(const std::string& text);
std::string to_string(const BinTree& t);
Multigraph parse_multigraph(const std::string& text);
std::string to_string(const Multigraph& g);
LambdaTerm parse_lambda(const std::string& text);
/// Binders are named x0, x1, ... by nesting depth.
std::string to_string(const LambdaTerm& t);

TypeGraph binary_tree_type();
Bundle encode_tree(const BinTree& t);
BinTree decode_tree(const Bundle& b);

TypeGraph multigraph_type();
Bundle encode_multigraph(const Multigraph& g);
/// Vertices are numbered in sorted order of their node ids.
Multigraph decode_multigraph(const Bundle& b);
/// Every edge twice.
Multigraph double_edges(const Multigraph& g);

/// With `var_edge` false the variable field is not connected to the
/// abstraction's parent field, which admits variables out of scope.
TypeGraph lambda_type(bool var_edge = true);
Bundle encode_lambda(const LambdaTerm& t);
LambdaTerm decode_lambda(const Bundle& b);

/// A two-branch, three-leaf term whose branches feed each other.
Bundle tree_with_cycle();
/// An application whose function is a variable of its own argument's
/// abstraction, against `lambda_type(var_edge)`.
Bundle lambda_scope_escape(bool var_edge);

/// Function type from `arg` to `result`. Root fields are named "in.<f>"
/// and "out.<f>" after the root fields f of the two types.
TypeGraph function_type(const TypeGraph& arg, const TypeGraph& result);
/// Root fields of `fn` named "out.<f>", renamed back to f.
TypeGraph result_type(const TypeGraph& fn);

/// Adds a box under `receiver` holding one node built by `provider`, the
/// licensing constructor wire, and links or wires their fields pairwise by
/// local name (the part after the last '.').
void link_constructor(Bundle& b, const Id& provider, const Id& receiver);

/// The term passing every input field straight to the output field of the
/// same name.
Bundle identity_function(const TypeGraph& arg);
/// The multigraph function emitting each edge twice.
Bundle edge_doubler();

/// let x = arg in let f = fn in f x: one occurrence of each binding,
/// linked field by field. Throws UsageError when fn's inputs do not match
/// arg's root fields.
Bundle apply_to(const Bundle& fn, const Bundle& arg);

}  // namespace idg

#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "idg/graph.hpp"

namespace idg {

/// Simple linear function types: primitives, 1, A * B, A -o B, !A.
struct FunctionalType {
  enum class Op { primitive, unit, product, arrow, bang };
  Op op = Op::unit;
  std::string label;  // primitives only
  std::shared_ptr<const FunctionalType> left, right;  // bang uses left

  static FunctionalType prim(std::string l);
  static FunctionalType one();
  static FunctionalType times(FunctionalType a, FunctionalType b);
  static FunctionalType lolli(FunctionalType a, FunctionalType b);
  static FunctionalType bang(FunctionalType a);
};

std::string to_string(const FunctionalType& t);

class TypeSyntaxError : public std::runtime_error {
 public:
  TypeSyntaxError(const std::string& what, std::size_t column);
  std::size_t column;
};

/// `!` binds tightest, then `*` (left associative), then `-o` (right
/// associative). Primitives are identifiers.
FunctionalType parse_functional_type(const std::string& text);

/// Single root interface without fields.
TypeGraph empty_type();

/// Flips the polarity of the root's fields and complements the connectivity
/// among them. Nested interfaces are kept.
TypeGraph dual(const TypeGraph& t);
/// Fields of both roots under one fresh root, no edges between the sides.
TypeGraph juxtapose(const TypeGraph& t, const TypeGraph& s);
/// juxtapose plus every edge between a root field of t and one of s.
TypeGraph bowtie(const TypeGraph& t, const TypeGraph& s);

/// Throws UsageError for a primitive outside `primitives` (when given).
TypeGraph translate(const FunctionalType& ft, const std::set<std::string>* primitives = nullptr);

}  // namespace idg

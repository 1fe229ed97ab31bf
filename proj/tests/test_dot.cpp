#include "doctest.h"

#include "idg/dot.hpp"
#include "idg/encodings.hpp"

using namespace idg;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto k = s.find(needle); k != std::string::npos; k = s.find(needle, k + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("multigraph nodes become clusters") {
  const auto b = encode_multigraph(parse_multigraph("n=3; 0->1 1->2 2->0"));
  const std::string dot = to_dot(b.term);
  CHECK(count(dot, "style=rounded") == 6);
  CHECK(count(dot, "class=\"R_CU\"") == 12);  // plus one per src/tgt link
}

TEST_CASE("tree usage edges") {
  const std::string dot = to_dot(encode_tree(parse_tree("((() ()) ())")).term);
  CHECK(count(dot, "class=\"R_CU\"") == 5);
  CHECK(count(dot, "shape=triangle") > 0);
}

TEST_CASE("empty term is an empty cluster") {
  const std::string dot = to_dot(TermGraph{});
  CHECK(dot == "digraph term {\n  compound=true;\n  subgraph cluster_term {\n    label=\"term\";\n  }\n}\n");
}

TEST_CASE("ids are quoted") {
  TermGraph t;
  t.add_box("a\"b");
  CHECK(to_dot(t).find("\"a\\\"b\"") != std::string::npos);
}

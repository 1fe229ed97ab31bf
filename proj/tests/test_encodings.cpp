#include "doctest.h"

#include "idg/check.hpp"
#include "idg/encodings.hpp"
#include "idg/equality.hpp"
#include "idg/rewrite.hpp"
#include "idg/type_algebra.hpp"

using namespace idg;

namespace {

std::string rules(const Diagnostics& ds) {
  std::string s;
  for (const auto& d : ds) s += d.rule_id + ":" + d.message + ";";
  return s;
}

void checks(const Bundle& b) { CHECK_MESSAGE(check_bundle(b).empty(), rules(check_bundle(b))); }

}  // namespace

TEST_CASE("text forms") {
  CHECK(to_string(parse_tree("(() (()()))")) == "(() (() ()))");
  CHECK(to_string(parse_multigraph("n=3; 0->1 1->2 2->0")) == "n=3; 0->1 1->2 2->0");
  CHECK(to_string(parse_multigraph("n=0")) == "n=0;");
  CHECK(to_string(parse_lambda("\\x. \\y. y x")) == "\\x0. \\x1. x1 x0");
  CHECK(to_string(parse_lambda("\\f x. f (f x)")) == "\\x0. \\x1. x0 (x0 x1)");
  CHECK(to_string(parse_lambda("(\\x. x) (\\y. y)")) == "(\\x0. x0) (\\x0. x0)");
  CHECK_THROWS_AS(parse_lambda("\\x. y"), UsageError);
  CHECK_THROWS_AS(parse_multigraph("n=2; 0->2"), UsageError);
  CHECK_THROWS_AS(parse_tree("(()"), UsageError);
}

TEST_CASE("trees") {
  auto t = parse_tree("((() ()) ())");
  auto b = encode_tree(t);
  CHECK(b.term.nodes.size() == 5);
  checks(b);
  CHECK(decode_tree(b) == t);
  auto leaf = encode_tree(BinTree::leaf());
  CHECK(leaf.term.nodes.size() == 1);
  CHECK(leaf.term.res_wiring.size() == 1);
  CHECK(type_isomorphism(binary_tree_type(), translate(parse_functional_type("!(X -o X -o X) -o !X -o X"))));
}

TEST_CASE("tree with a cycle fails only well-formedness") {
  auto ds = check_bundle(tree_with_cycle());
  REQUIRE(!ds.empty());
  for (const auto& d : ds) CHECK(d.rule_id == std::string(rule::kIllFormedCycle));
  CHECK_THROWS_AS(decode_tree(tree_with_cycle()), DecodeError);
}

TEST_CASE("multigraphs") {
  auto g = parse_multigraph("n=3; 0->1 1->2 2->0");
  auto b = encode_multigraph(g);
  CHECK(b.term.nodes.size() == 3 + 3 + 6);
  checks(b);
  CHECK(decode_multigraph(b) == g);
  auto empty = encode_multigraph({});
  CHECK(empty.term.nodes.empty());
  checks(empty);
  auto loops = parse_multigraph("n=2; 0->0 0->1 0->1");
  checks(encode_multigraph(loops));
  CHECK(decode_multigraph(encode_multigraph(loops)) == loops);
}

TEST_CASE("lambda terms") {
  auto t = parse_lambda("\\x. \\y. y x");
  auto b = encode_lambda(t);
  checks(b);
  CHECK(decode_lambda(b) == t);
  auto id = encode_lambda(parse_lambda("\\x. x"));
  CHECK(id.term.nodes.size() == 2);
  checks(encode_lambda(parse_lambda("(\\x. x x) (\\y. \\z. y (z y))")));
}

TEST_CASE("variable out of scope") {
  auto strict = check_bundle(lambda_scope_escape(true));
  REQUIRE(!strict.empty());
  for (const auto& d : strict) CHECK(d.rule_id == std::string(rule::kIllFormedCycle));
  checks(lambda_scope_escape(false));
}

TEST_CASE("function terms") {
  checks(edge_doubler());
  checks(identity_function(multigraph_type()));
  auto app = apply_to(edge_doubler(), encode_multigraph(parse_multigraph("n=3; 0->1 1->2 2->0")));
  checks(app);
  CHECK(list_redexes(app.term) == std::vector<Id>{"f", "x"});
  CHECK_THROWS_AS(apply_to(edge_doubler(), edge_doubler()), UsageError);
}

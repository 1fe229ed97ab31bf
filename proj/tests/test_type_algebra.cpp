#include "doctest.h"

#include "idg/equality.hpp"
#include "idg/type_algebra.hpp"
#include "idg/validate.hpp"

using namespace idg;

namespace {

TypeGraph ty(const std::string& s) { return translate(parse_functional_type(s)); }

bool iso(const TypeGraph& a, const TypeGraph& b) { return type_isomorphism(a, b).has_value(); }

TypeGraph tree_type() {
  TypeGraph g;
  g.add_interface("T");
  g.add_field("branch", kCtorReceived, "T");
  g.add_field("leaf", kCtorReceived, "T");
  g.add_field("root", kResProvided, "T");
  g.connect("branch", "leaf");
  g.connect("branch", "root");
  g.connect("leaf", "root");
  g.add_interface("Br", "T");
  g.ctor_iface.emplace("branch", "Br");
  g.add_field("parent", kResProvided, "Br");
  g.add_field("left", kResReceived, "Br");
  g.add_field("right", kResReceived, "Br");
  g.connect("parent", "left");
  g.connect("parent", "right");
  g.connect("left", "right");
  g.add_interface("Lf", "T");
  g.ctor_iface.emplace("leaf", "Lf");
  g.add_field("lparent", kResProvided, "Lf");
  return g;
}

}  // namespace

TEST_CASE("parser precedence") {
  CHECK(to_string(parse_functional_type("!A * B -o C -o D")) == "((!A * B) -o (C -o D))");
  CHECK(to_string(parse_functional_type("(X)")) == "X");
  CHECK(to_string(parse_functional_type("1 * X")) == "(1 * X)");
  CHECK_THROWS_AS(parse_functional_type("X -o"), TypeSyntaxError);
  CHECK_THROWS_AS(parse_functional_type("(X"), TypeSyntaxError);
  CHECK_THROWS_AS(parse_functional_type("X Y"), TypeSyntaxError);
}

TEST_CASE("primitive and its dual") {
  auto x = ty("X");
  CHECK(x.fields.size() == 1);
  CHECK(x.fields.begin()->second == kResProvided);
  CHECK(dual(x).fields.begin()->second == kResReceived);
  const std::set<std::string> prims{"X"};
  CHECK_THROWS_AS(translate(parse_functional_type("Y"), &prims), UsageError);
}

TEST_CASE("binary tree type from its functional type") {
  CHECK(iso(ty("!(X -o X -o X) -o !X -o X"), tree_type()));
}

TEST_CASE("edge counts of juxtapose and bowtie") {
  auto t = ty("X -o X -o X");
  auto s = ty("X * X");
  CHECK(juxtapose(t, s).connectivity.size() == t.connectivity.size() + s.connectivity.size());
  CHECK(bowtie(t, s).connectivity.size() == t.connectivity.size() + s.connectivity.size() + 3 * 2);
  CHECK(iso(juxtapose(t, empty_type()), t));
  CHECK(iso(bowtie(t, empty_type()), juxtapose(t, empty_type())));
}

TEST_CASE("algebraic identities") {
  const char* samples[] = {"X", "X -o X", "!(X -o X) -o X -o X", "X * X -o X", "!(X * X) * !X", "(X -o X) -o X"};
  std::vector<TypeGraph> ts;
  for (auto s : samples) ts.push_back(ty(s));
  for (const auto& t : ts) {
    CHECK(validate_type_fragment(t).empty());
    CHECK(iso(dual(dual(t)), t));
    for (const auto& s : ts) {
      CHECK(iso(juxtapose(t, s), juxtapose(s, t)));
      CHECK(iso(bowtie(t, s), bowtie(s, t)));
      CHECK(iso(dual(bowtie(t, s)), juxtapose(dual(t), dual(s))));
      CHECK(validate_type_fragment(bowtie(t, s)).empty());
    }
  }
  auto a = ts[1], b = ts[3], c = ts[4];
  CHECK(iso(juxtapose(juxtapose(a, b), c), juxtapose(a, juxtapose(b, c))));
  CHECK(iso(bowtie(bowtie(a, b), c), bowtie(a, bowtie(b, c))));
}

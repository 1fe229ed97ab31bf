#include "doctest.h"

#include "idg/check.hpp"
#include "idg/rewrite.hpp"
#include "idg/samples.hpp"

using namespace idg;

namespace {

std::string rules(const Diagnostics& ds) {
  std::string s;
  for (const auto& d : ds) s += d.rule_id + ":" + d.message + ";";
  return s;
}

}  // namespace

TEST_CASE("one inlining of the nested program leaves one let used twice") {
  auto b = samples::nested_let();
  auto r = inline_let(b.term, b.external, "y");
  CHECK(r.term.lets.size() == 1);
  CHECK(r.term.nodes.size() == 4);
  CHECK(r.term.boxes.size() == 2);
  CHECK(r.term.internal.interfaces.size() == 1);
  Bundle after{b.type, r.term, r.external};
  CHECK_MESSAGE(check_bundle(after).empty(), rules(check_bundle(after)));
}

TEST_CASE("normalizing the nested program takes two steps") {
  auto b = samples::nested_let();
  for (auto s : {Strategy::outermost_first, Strategy::innermost_first, Strategy::id_order}) {
    auto r = normalize(b.term, b.external, s);
    CHECK(r.trace.size() == 2);
    CHECK(r.term.lets.empty());
    CHECK(r.term.nodes.size() == 4);
    CHECK(r.term.boxes.size() == 1);
    CHECK(r.term.internal.interfaces.empty());
    CHECK(r.term.res_wiring.size() == 5);
    Bundle after{b.type, r.term, r.external};
    CHECK_MESSAGE(check_bundle(after).empty(), rules(check_bundle(after)));
  }
}

TEST_CASE("normal terms take zero steps") {
  auto b = samples::four_applications();
  auto r = normalize(b.term, b.external);
  CHECK(r.trace.empty());
  CHECK(r.term == b.term);
  CHECK(list_redexes(b.term).empty());
}

TEST_CASE("step limit carries the partial result") {
  auto b = samples::nested_let();
  try {
    normalize(b.term, b.external, Strategy::id_order, 1);
    FAIL("expected a step limit");
  } catch (const StepLimitExceeded& e) {
    CHECK(e.partial.trace.size() == 1);
    CHECK(e.partial.term.lets.size() == 1);
  }
}

TEST_CASE("unknown let-binding is rejected") {
  auto b = samples::nested_let();
  CHECK_THROWS_AS(inline_let(b.term, b.external, "nope"), UsageError);
  CHECK(list_redexes(b.term) == std::vector<Id>{"y"});
}

TEST_CASE("reduce_step re-checks the result") {
  auto b = samples::single_let();
  auto r = reduce_step(b.type, b.term, b.external, "o");
  CHECK(r.term.nodes.size() == 4);
}

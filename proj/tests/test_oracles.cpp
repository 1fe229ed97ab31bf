#include "doctest.h"

#include "idg/cograph.hpp"
#include "idg/equality.hpp"
#include "idg/samples.hpp"
#include "idg/wellformed.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace idg;

TEST_CASE("cograph oracle on known graphs") {
  AdjacencyMatrix path(4);
  path.set(0, 1);
  path.set(1, 2);
  path.set(2, 3);
  CHECK_FALSE(oracle::is_cograph(path));
  AdjacencyMatrix c4(4);
  c4.set(0, 1);
  c4.set(1, 2);
  c4.set(2, 3);
  c4.set(3, 0);
  CHECK(oracle::is_cograph(c4));
  CHECK(oracle::is_cograph(AdjacencyMatrix(0)));
}

TEST_CASE("P4 search agrees with decomposition") {
  gen::Rng rng(1);
  for (int k = 0; k < 300; ++k) {
    const auto g = gen::graph(rng, static_cast<std::size_t>(k % 11), 0.5);
    const bool p4 = find_induced_p4(g).has_value();
    REQUIRE(p4 == !oracle::is_cograph(g));
    CHECK(find_induced_p4(g) == find_induced_p4_serial(g));
  }
}

TEST_CASE("t_equal agrees with exhaustive search") {
  gen::Rng rng(2);
  int equal = 0;
  for (int k = 0; k < 100; ++k) {
    auto [t1, c1] = gen::term(rng, 6);
    auto [t2, c2] = gen::shuffle(rng, t1, c1);
    if (k % 2) std::tie(t2, c2) = gen::mutate(rng, t2, c2);
    const bool fast = t_equal(t1, c1, t2, c2).has_value();
    const bool slow = oracle::t_equal(t1, c1, t2, c2).has_value();
    REQUIRE(fast == slow);
    CHECK(bare_equal(t1, t2).has_value() == oracle::bare_equal(t1, t2).has_value());
    equal += fast;
  }
  CHECK(equal > 50);
  CHECK(equal < 100);
}

TEST_CASE("cycle search agrees with exhaustive enumeration") {
  gen::Rng rng(3);
  int ill = 0;
  for (int k = 0; k < 60; ++k) {
    const Bundle b = gen::wf_instance(rng, 24);
    const FWGraph fw = build_fw(b.type, b.term, b.external);
    const auto slow = oracle::chordless_cycles(fw);
    REQUIRE(slow);
    const auto fast = find_chordless_cycles(fw);
    REQUIRE_FALSE(fast.limit_hit);
    CHECK(fast.cycles == *slow);
    CHECK(find_chordless_cycles_serial(fw).cycles == fast.cycles);
    ill += !slow->empty();
  }
  CHECK(ill > 0);
  CHECK(ill < 60);
}

TEST_CASE("cycle oracle on the feedback sample") {
  const Bundle b = samples::feedback_node();
  const auto slow = oracle::chordless_cycles(build_fw(b.type, b.term, b.external));
  REQUIRE(slow);
  CHECK(slow->size() == 1);
  CHECK(slow->front().size() == 2);
}

TEST_CASE("cycle search on random F/W graphs") {
  gen::Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    FWGraph g;
    const int n = 2 + k % 13;
    for (int v = 0; v < n; ++v) g.ports.push_back("p" + std::to_string(10 + v));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (std::bernoulli_distribution(0.3)(rng)) g.f.emplace(g.ports[a], g.ports[b]);
        if (std::bernoulli_distribution(0.25)(rng)) g.w.emplace(g.ports[a], g.ports[b]);
      }
    const auto slow = oracle::chordless_cycles(g);
    REQUIRE(slow);
    CHECK(find_chordless_cycles(g).cycles == *slow);
  }
}

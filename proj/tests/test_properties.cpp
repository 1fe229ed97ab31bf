#include "doctest.h"

#include <filesystem>

#include "idg/check.hpp"
#include "idg/equality.hpp"
#include "idg/rewrite.hpp"
#include "idg/textio.hpp"
#include "idg/wellformed.hpp"
#include "random.hpp"

using namespace idg;
namespace fs = std::filesystem;

namespace {

std::vector<std::pair<std::string, Bundle>> corpus_bundles() {
  std::vector<std::pair<std::string, Bundle>> out;
  for (const auto& e : fs::directory_iterator(IDG_CORPUS_DIR))
    if (e.path().extension() == ".idg") out.emplace_back(e.path().stem().string(), read_bundle_file(e.path().string()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::multiset<std::string> rules(const Diagnostics& ds) {
  std::multiset<std::string> out;
  for (const auto& d : ds) out.insert(d.rule_id);
  return out;
}

}  // namespace

TEST_CASE("check results do not depend on ids") {
  gen::Rng rng(5);
  for (const auto& [name, b] : corpus_bundles()) {
    auto [t, c] = gen::shuffle(rng, b.term, b.external);
    INFO(name);
    CHECK(rules(check_bundle(Bundle{b.type, t, c})) == rules(check_bundle(b)));
    CHECK(t_equal(b.term, b.external, t, c).has_value());
  }
}

TEST_CASE("normal forms do not depend on ids") {
  gen::Rng rng(6);
  for (const auto& [name, b] : corpus_bundles()) {
    if (b.term.lets.empty() || !check_bundle(b).empty()) continue;
    auto [t, c] = gen::shuffle(rng, b.term, b.external);
    const RewriteResult r1 = normalize(b.term, b.external);
    const RewriteResult r2 = normalize(t, c);
    INFO(name);
    CHECK(r1.trace.size() == r2.trace.size());
    CHECK(t_equal(r1.term, r1.external, r2.term, r2.external).has_value());
  }
}

TEST_CASE("removing a wire never creates an unrelated chordless cycle") {
  for (const auto& [name, b] : corpus_bundles()) {
    if (!check_well_formed(b.type, b.term, b.external).size()) continue;
    const FWGraph g = build_fw(b.type, b.term, b.external);
    const auto before = find_chordless_cycles(g).cycles;
    std::set<Id> old_ports;
    for (const auto& cyc : before) old_ports.insert(cyc.begin(), cyc.end());
    for (const auto& e : g.w) {
      FWGraph h = g;
      h.w.erase(e);
      for (const auto& cyc : find_chordless_cycles(h).cycles) {
        const bool shares = std::any_of(cyc.begin(), cyc.end(), [&](const Id& p) { return old_ports.count(p) > 0; });
        INFO(name);
        CHECK((shares || std::find(before.begin(), before.end(), cyc) != before.end()));
      }
    }
  }
}

TEST_CASE("every strategy step on the corpus still checks") {
  for (const auto& [name, b] : corpus_bundles()) {
    if (b.term.lets.empty() || !check_bundle(b).empty()) continue;
    RewriteResult cur{b.term, b.external, {}};
    INFO(name);
    while (auto d = choose_redex(cur.term, Strategy::innermost_first))
      REQUIRE_NOTHROW(cur = reduce_step(b.type, cur.term, cur.external, *d));
    CHECK(cur.term.lets.empty());
  }
}

// Writes the example bundles and the golden outputs the tests compare
// against. Run from the repo root: make_corpus corpus
#include <filesystem>
#include <iostream>
#include <sstream>

#include "idg/cli.hpp"
#include "idg/encodings.hpp"
#include "idg/rewrite.hpp"
#include "idg/samples.hpp"
#include "idg/textio.hpp"

using namespace idg;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus DIR\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir / "golden");

  const Multigraph triangle = parse_multigraph("n=3; 0->1 1->2 2->0");
  const Bundle applied = apply_to(edge_doubler(), encode_multigraph(triangle));
  const RewriteResult after_x = reduce_step(applied.type, applied.term, applied.external, "x");
  const RewriteResult after_f = reduce_step(applied.type, after_x.term, after_x.external, "f");
  const std::vector<std::pair<std::string, Bundle>> bundles{
      {"higher_order", samples::higher_order()},
      {"pair_passthrough", samples::pair_passthrough(false)},
      {"pair_passthrough_swapped", samples::pair_passthrough(true)},
      {"applied_node", samples::applied_node()},
      {"feedback_node", samples::feedback_node()},
      {"identity_box", samples::identity_box()},
      {"disconnected_box", samples::disconnected_box()},
      {"nested_let", samples::nested_let()},
      {"single_let", samples::single_let()},
      {"four_applications", samples::four_applications()},
      {"tree_three_leaves", encode_tree(parse_tree("((() ()) ())"))},
      {"tree_with_cycle", tree_with_cycle()},
      {"multigraph_triangle", encode_multigraph(triangle)},
      {"multigraph_triangle_doubled", encode_multigraph(double_edges(triangle))},
      {"multigraph_loops", encode_multigraph(parse_multigraph("n=2; 0->0 0->1 0->1"))},
      {"lambda_flip", encode_lambda(parse_lambda("\\x. \\y. y x"))},
      {"lambda_omega", encode_lambda(parse_lambda("(\\x. x x) (\\x. x x)"))},
      {"lambda_scope_escape", lambda_scope_escape(true)},
      {"lambda_scope_escape_relaxed", lambda_scope_escape(false)},
      {"edge_doubler", edge_doubler()},
      {"doubler_applied_to_triangle", applied},
      {"doubler_applied_after_x", Bundle{applied.type, after_x.term, after_x.external}},
      {"doubler_applied_after_x_and_f", Bundle{applied.type, after_f.term, after_f.external}},
      {"identity_applied_to_tree",
       apply_to(identity_function(binary_tree_type()), encode_tree(parse_tree("(() ())")))},
  };

  for (const auto& [name, b] : bundles) {
    const fs::path file = dir / (name + ".idg");
    write_file(file.string(), print(b));
    for (const std::string cmd : {"check", "export-dot"}) {
      std::ostringstream out, err;
      const int code = run_cli({cmd, file.string()}, out, err);
      std::string text = "exit " + std::to_string(code) + "\n" + out.str() + err.str();
      // golden files name the bundle, not the path it was read from
      for (auto k = text.find(file.string()); k != std::string::npos; k = text.find(file.string()))
        text.replace(k, file.string().size(), name + ".idg");
      write_file((dir / "golden" / (name + "." + cmd + ".txt")).string(), text);
    }
  }
  std::cout << bundles.size() << " bundles written to " << dir << "\n";
}

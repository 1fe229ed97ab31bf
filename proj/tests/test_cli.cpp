#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "idg/cli.hpp"
#include "idg/textio.hpp"

using namespace idg;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = IDG_CORPUS_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bundle(const std::string& name) { return (corpus / (name + ".idg")).string(); }

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("idg_test_" + name); }

}  // namespace

TEST_CASE("corpus files re-print byte for byte") {
  int n = 0;
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (e.path().extension() != ".idg") continue;
    ++n;
    const std::string text = slurp(e.path());
    CHECK_MESSAGE(print(parse_bundle(text)) == text, e.path().filename().string());
  }
  CHECK(n >= 20);
}

TEST_CASE("golden outputs") {
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (e.path().extension() != ".idg") continue;
    const std::string name = e.path().stem().string();
    for (const std::string cmd : {"check", "export-dot"}) {
      Run r = run({cmd, e.path().string()});
      std::string text = "exit " + std::to_string(r.code) + "\n" + r.out + r.err;
      for (auto k = text.find(e.path().string()); k != std::string::npos; k = text.find(e.path().string()))
        text.replace(k, e.path().string().size(), name + ".idg");
      CHECK_MESSAGE(text == slurp(corpus / "golden" / (name + "." + cmd + ".txt")), name << " " << cmd);
    }
  }
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", bundle("single_let")}).code == 0);
  Run bad = run({"check", bundle("tree_with_cycle")});
  CHECK(bad.code == exit_code::kCheckFailed);
  CHECK(bad.err.find("\"rule\":\"ill-formed-cycle\"") != std::string::npos);
  Run both = run({"check", bundle("single_let"), bundle("feedback_node")});
  CHECK(both.code == exit_code::kCheckFailed);
  CHECK(both.out.find("single_let.idg: ok") < both.out.find("feedback_node.idg: failed"));
  CHECK(run({"check"}).code == exit_code::kUsage);
  CHECK(run({"check", "/nonexistent.idg"}).code == exit_code::kUsage);
  CHECK(run({"frobnicate"}).code == exit_code::kUsage);
}

TEST_CASE("normalize then compare with the doubled multigraph") {
  Run n = run({"normalize", bundle("doubler_applied_to_triangle"), "--trace"});
  REQUIRE(n.code == 0);
  CHECK(n.err.find("\"step\":1") != std::string::npos);
  const auto out = scratch("doubled.idg");
  write_file(out.string(), n.out);
  CHECK(run({"eq", "--bare", out.string(), bundle("multigraph_triangle_doubled")}).code == 0);
  CHECK(run({"eq", out.string(), bundle("multigraph_triangle")}).code == exit_code::kCheckFailed);
  Run d = run({"decode", out.string()});
  CHECK(d.out == "n=3; 0->1 0->1 1->2 1->2 2->0 2->0\n");
  fs::remove(out);
}

TEST_CASE("step limit") {
  Run n = run({"normalize", bundle("nested_let"), "--max-steps", "1"});
  CHECK(n.code == exit_code::kResourceLimit);
  CHECK(n.err.find("resource-limit") != std::string::npos);
  CHECK(parse_bundle(n.out).term.lets.size() == 1);
  CHECK(run({"normalize", bundle("nested_let"), "--strategy", "sideways"}).code == exit_code::kUsage);
}

TEST_CASE("reduce one binding") {
  Run r = run({"reduce", bundle("nested_let"), "--binding", "y"});
  REQUIRE(r.code == 0);
  const auto out = scratch("reduced.idg");
  write_file(out.string(), r.out);
  CHECK(run({"eq", out.string(), bundle("single_let")}).code == 0);
  fs::remove(out);
  CHECK(run({"reduce", bundle("nested_let"), "--binding", "nope"}).code == exit_code::kUsage);
}

TEST_CASE("encode and decode") {
  Run e = run({"encode", "--structure", "lambda", "--input", "\\a. \\b. b a"});
  REQUIRE(e.code == 0);
  CHECK(e.out == slurp(bundle("lambda_flip")));
  CHECK(run({"decode", bundle("lambda_flip")}).out == "\\x0. \\x1. x1 x0\n");
  CHECK(run({"decode", bundle("tree_three_leaves")}).out == "((() ()) ())\n");
  CHECK(run({"decode", bundle("nested_let")}).code == exit_code::kCheckFailed);
  CHECK(run({"encode", "--structure", "bintree", "--input", "(()"}).code == exit_code::kUsage);
  CHECK(run({"encode", "--type", "X -o"}).code == exit_code::kUsage);
  CHECK(run({"encode", "--type", "X -o X"}).out.rfind("idg 1 type\n", 0) == 0);
}

TEST_CASE("pretty diagnostics") {
  Run r = run({"--pretty", "check", bundle("feedback_node")});
  CHECK(r.err.rfind("feedback_node.idg", std::string::npos) != std::string::npos);
  CHECK(r.err.find('{') == std::string::npos);
}

#include "idg/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "idg/check.hpp"
#include "idg/dot.hpp"
#include "idg/encodings.hpp"
#include "idg/equality.hpp"
#include "idg/rewrite.hpp"
#include "idg/textio.hpp"
#include "idg/type_algebra.hpp"
#include "json.hpp"

namespace idg {
namespace {

struct Reporter {
  std::ostream& err;
  bool pretty = false;

  void emit(const Diagnostic& d, const std::string& file = {}) {
    if (pretty) {
      err << (file.empty() ? "" : file + ": ") << to_pretty(d) << '\n';
      return;
    }
    if (file.empty()) {
      err << to_json_line(d) << '\n';
      return;
    }
    auto j = nlohmann::json::parse(to_json_line(d));
    j["file"] = file;
    err << j.dump() << '\n';
  }
  void emit(const Diagnostics& ds, const std::string& file = {}) {
    for (const auto& d : ds) emit(d, file);
  }
  int usage(const std::string& msg) {
    emit(Diagnostic{"usage", {}, msg});
    return exit_code::kUsage;
  }
};

int failure_code(const Diagnostics& ds) {
  if (ds.empty()) return exit_code::kOk;
  for (const auto& d : ds)
    if (d.rule_id == rule::kResourceLimit) return exit_code::kResourceLimit;
  return exit_code::kCheckFailed;
}

Bundle with_term(const Bundle& b, const RewriteResult& r) { return Bundle{b.type, r.term, r.external}; }

void print_trace(const std::vector<TraceEntry>& trace, std::ostream& os) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    nlohmann::json j;
    j["step"] = k + 1;
    j["let"] = trace[k].let;
    j["fresh"] = nlohmann::json::array();
    for (const auto& [a, b] : trace[k].fresh) j["fresh"].push_back({a, b});
    os << j.dump() << '\n';
  }
}

int cmd_check(const std::vector<std::string>& files, std::ostream& out, Reporter& rep) {
  const int n = static_cast<int>(files.size());
  std::vector<std::string> outs(n), errs(n);
  std::vector<int> codes(n, exit_code::kOk);
  // Each file is checked sequentially by one thread; output is flushed in
  // argument order afterwards.
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    std::ostringstream o, e;
    Reporter local{e, rep.pretty};
    try {
      const Diagnostics ds = check_bundle(read_bundle_file(files[k]));
      local.emit(ds, files[k]);
      codes[k] = failure_code(ds);
      o << files[k] << ": " << (ds.empty() ? "ok" : "failed") << '\n';
    } catch (const ParseError& ex) {
      local.emit(Diagnostic{"parse-error", {}, ex.what()}, files[k]);
      codes[k] = exit_code::kUsage;
    } catch (const UsageError& ex) {
      local.emit(Diagnostic{"usage", {}, ex.what()}, files[k]);
      codes[k] = exit_code::kUsage;
    }
    outs[k] = o.str();
    errs[k] = e.str();
  }
  int code = exit_code::kOk;
  for (int k = 0; k < n; ++k) {
    out << outs[k];
    rep.err << errs[k];
    code = std::max(code, codes[k]);
  }
  return code;
}

std::string decode_any(const Bundle& b) {
  std::string why;
  try {
    return to_string(decode_tree(b));
  } catch (const DecodeError& e) {
    why += std::string("bintree: ") + e.what();
  }
  try {
    return to_string(decode_multigraph(b));
  } catch (const DecodeError& e) {
    why += std::string("; multigraph: ") + e.what();
  }
  try {
    return to_string(decode_lambda(b));
  } catch (const DecodeError& e) {
    why += std::string("; lambda: ") + e.what();
  }
  throw DecodeError(why);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideograph terms: check, rewrite, compare, encode"};
  app.name("idg");
  app.require_subcommand(1);
  Reporter rep{err};
  app.add_flag("--pretty", rep.pretty, "Human-readable diagnostics");

  std::vector<std::string> check_files;
  auto* check = app.add_subcommand("check", "Validate bundles");
  check->add_option("bundles", check_files)->required()->expected(1, -1);

  std::string file, file2, binding, strategy = "outermost-first";
  std::size_t max_steps = default_max_steps();
  bool trace = false, bare = false;

  auto* reduce = app.add_subcommand("reduce", "Inline one let-binding");
  reduce->add_option("bundle", file)->required();
  reduce->add_option("--binding", binding)->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Inline until no let-binding is left");
  normalize_cmd->add_option("bundle", file)->required();
  normalize_cmd->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"outermost-first", "innermost-first", "id-order"}));
  normalize_cmd->add_option("--max-steps", max_steps);
  normalize_cmd->add_flag("--trace", trace, "Write the steps to the error stream as JSON lines");

  auto* eq = app.add_subcommand("eq", "Compare two bundles up to relabeling");
  eq->add_option("first", file)->required();
  eq->add_option("second", file2)->required();
  eq->add_flag("--bare", bare, "Ignore the external correspondences");

  std::string structure, input, type_text;
  auto* encode = app.add_subcommand("encode", "Encode a structure or a functional type");
  auto* structure_opt = encode->add_option("--structure", structure)
                            ->check(CLI::IsMember({"bintree", "multigraph", "lambda"}));
  auto* input_opt = encode->add_option("--input", input);
  auto* type_opt = encode->add_option("--type", type_text);
  structure_opt->needs(input_opt);
  input_opt->needs(structure_opt);
  type_opt->excludes(structure_opt);

  auto* decode = app.add_subcommand("decode", "Decode a tree, multigraph or lambda term");
  decode->add_option("bundle", file)->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the term");
  dot->add_option("bundle", file)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return rep.usage(e.what());
  }

  try {
    if (*check) return cmd_check(check_files, out, rep);

    if (*encode) {
      if (!type_text.empty()) {
        out << print(translate(parse_functional_type(type_text)));
        return exit_code::kOk;
      }
      if (structure.empty()) return rep.usage("encode needs --structure and --input, or --type");
      if (structure == "bintree") out << print(encode_tree(parse_tree(input)));
      else if (structure == "multigraph") out << print(encode_multigraph(parse_multigraph(input)));
      else out << print(encode_lambda(parse_lambda(input)));
      return exit_code::kOk;
    }

    const Bundle b = read_bundle_file(file);
    if (*dot) {
      out << to_dot(b.term);
      return exit_code::kOk;
    }
    if (*decode) {
      out << decode_any(b) << '\n';
      return exit_code::kOk;
    }
    if (*eq) {
      const Bundle b2 = read_bundle_file(file2);
      const bool same = bare ? bare_equal(b.term, b2.term).has_value()
                             : t_equal(b.term, b.external, b2.term, b2.external).has_value();
      out << (same ? "equal" : "different") << '\n';
      return same ? exit_code::kOk : exit_code::kCheckFailed;
    }

    const Diagnostics pre = check_bundle(b);
    if (!pre.empty()) {
      rep.emit(pre);
      return failure_code(pre);
    }
    if (*reduce) {
      try {
        out << print(with_term(b, reduce_step(b.type, b.term, b.external, binding)));
        return exit_code::kOk;
      } catch (const ReductionCheckFailed& e) {
        rep.emit(e.diagnostics);
        return failure_code(e.diagnostics);
      }
    }
    // normalize
    try {
      const RewriteResult r = normalize(b.term, b.external, *parse_strategy(strategy), max_steps);
      if (trace) print_trace(r.trace, err);
      out << print(with_term(b, r));
      return exit_code::kOk;
    } catch (const StepLimitExceeded& e) {
      if (trace) print_trace(e.partial.trace, err);
      rep.emit(Diagnostic{rule::kResourceLimit, {},
                          "stopped after " + std::to_string(e.partial.trace.size()) + " steps with let-bindings left"});
      out << print(with_term(b, e.partial));
      return exit_code::kResourceLimit;
    }
  } catch (const ParseError& e) {
    rep.emit(Diagnostic{"parse-error", {}, e.what()});
    return exit_code::kUsage;
  } catch (const TypeSyntaxError& e) {
    rep.emit(Diagnostic{"parse-error", {}, e.what()});
    return exit_code::kUsage;
  } catch (const DecodeError& e) {
    rep.emit(Diagnostic{"decode-failed", {}, e.what()});
    return exit_code::kCheckFailed;
  } catch (const UsageError& e) {
    return rep.usage(e.what());
  }
}

}  // namespace idg

#include <algorithm>
#include <set>

#include "detail/roles.hpp"
#include "idg/builder.hpp"
#include "idg/encodings.hpp"

namespace idg {

DecodeError::DecodeError(const std::string& what, Id c)
    : std::runtime_error(c.empty() ? what : what + ": " + c), component(std::move(c)) {}

namespace {

void triangle(TypeGraph& g, const Id& a, const Id& b, const Id& c) {
  g.connect(a, b);
  g.connect(b, c);
  g.connect(a, c);
}

Id root_box(const TermGraph& t) {
  auto r = root_boxes(t);
  if (r.size() != 1) throw DecodeError("term needs exactly one root box");
  return r.front();
}

Id owner(const TermGraph& t, const Id& port) {
  auto o = parent_of(t.attachment, port);
  if (!o || !t.nodes.count(*o)) throw DecodeError("expected a node port", port);
  return *o;
}

// --- trees -----------------------------------------------------------------

struct TreeEncoder {
  TermBuilder tb;
  int branches = 0, leaves = 0;

  Id node(const BinTree& t) {
    if (t.kids.empty()) {
      const Id n = "l" + std::to_string(leaves++);
      tb.node(n, "z", "Lf", {{n + ".parent", "l.parent"}}).uses(n, "z.leaf");
      return n + ".parent";
    }
    const Id n = "b" + std::to_string(branches++);
    tb.node(n, "z", "Br", {{n + ".parent", "b.parent"}, {n + ".left", "b.left"}, {n + ".right", "b.right"}})
        .uses(n, "z.branch");
    tb.wire(node(t.kids[0]), n + ".left");
    tb.wire(node(t.kids[1]), n + ".right");
    return n + ".parent";
  }
};

struct TreeDecoder {
  const TermGraph& t;
  const detail::Roles& r;
  std::set<Id> seen;

  BinTree from(const Id& parent_port) {
    const Id n = owner(t, parent_port);
    if (!seen.insert(n).second) throw DecodeError("node reached twice", n);
    const Id& role = r.at(n);
    if (role == "Lf") return BinTree::leaf();
    if (role != "Br") throw DecodeError("unexpected node", n);
    BinTree l = from(detail::wired_to(t, r.port(t, n, "b.left")));
    BinTree rt = from(detail::wired_to(t, r.port(t, n, "b.right")));
    return BinTree::branch(std::move(l), std::move(rt));
  }
};

// --- multigraphs -----------------------------------------------------------

Id linked_vertex(const TermGraph& t, const detail::Roles& r, const Id& recv) {
  auto box = preimage_of(t.ctor_arg, recv);
  if (!box) throw DecodeError("edge end without argument box", recv);
  auto inside = children_of(t.residence, *box);
  if (inside.size() != 1 || !t.nodes.count(inside[0])) throw DecodeError("argument box must hold one node", *box);
  auto built_by = image_of(t.ctor_usage, inside[0]);
  if (!built_by) throw DecodeError("unbuilt node", inside[0]);
  const Id v = owner(t, *built_by);
  if (r.at(v) != "V") throw DecodeError("edge end is not a vertex", v);
  return v;
}

// --- lambda terms ----------------------------------------------------------

struct LambdaEncoder {
  TermBuilder tb;
  int apps = 0, abss = 0, vars = 0;
  std::vector<Id> binders;

  Id node(const LambdaTerm& t) {
    switch (t.kind) {
      case LambdaTerm::Kind::var: {
        if (t.index < 0 || t.index >= static_cast<int>(binders.size())) throw UsageError("open lambda term");
        const Id n = "var" + std::to_string(vars++);
        const Id binder = binders[binders.size() - 1 - static_cast<std::size_t>(t.index)];
        tb.node(n, "z", "Var", {{n + ".parent", "v.parent"}}).uses(n, binder + ".var");
        return n + ".parent";
      }
      case LambdaTerm::Kind::app: {
        const Id n = "app" + std::to_string(apps++);
        tb.node(n, "z", "App", {{n + ".parent", "a.parent"}, {n + ".fn", "a.fn"}, {n + ".arg", "a.arg"}})
            .uses(n, "z.app");
        tb.wire(node(t.kids[0]), n + ".fn");
        tb.wire(node(t.kids[1]), n + ".arg");
        return n + ".parent";
      }
      case LambdaTerm::Kind::abs: {
        const Id n = "abs" + std::to_string(abss++);
        tb.node(n, "z", "Abs", {{n + ".parent", "f.parent"}, {n + ".body", "f.body"}, {n + ".var", "f.var"}})
            .uses(n, "z.abs");
        binders.push_back(n);
        tb.wire(node(t.kids[0]), n + ".body");
        binders.pop_back();
        return n + ".parent";
      }
    }
    return {};
  }
};

struct LambdaDecoder {
  const TermGraph& t;
  const detail::Roles& r;
  std::set<Id> seen;
  std::vector<Id> binders;

  LambdaTerm from(const Id& parent_port) {
    const Id n = owner(t, parent_port);
    if (!seen.insert(n).second) throw DecodeError("node reached twice", n);
    const Id& role = r.at(n);
    if (role == "App") {
      LambdaTerm f = from(detail::wired_to(t, r.port(t, n, "a.fn")));
      LambdaTerm a = from(detail::wired_to(t, r.port(t, n, "a.arg")));
      return LambdaTerm::app(std::move(f), std::move(a));
    }
    if (role == "Abs") {
      binders.push_back(n);
      LambdaTerm body = from(detail::wired_to(t, r.port(t, n, "f.body")));
      binders.pop_back();
      return LambdaTerm::abs(std::move(body));
    }
    if (role == "Var") {
      auto built_by = image_of(t.ctor_usage, n);
      if (!built_by) throw DecodeError("unbuilt variable", n);
      const Id binder = owner(t, *built_by);
      auto it = std::find(binders.rbegin(), binders.rend(), binder);
      if (it == binders.rend()) throw DecodeError("variable out of scope", n);
      return LambdaTerm::var(static_cast<int>(it - binders.rbegin()));
    }
    throw DecodeError("unexpected node", n);
  }
};

void expect_all_seen(const TermGraph& t, const std::set<Id>& seen, const std::set<Id>& extra = {}) {
  for (const auto& n : t.nodes)
    if (!seen.count(n) && !extra.count(n)) throw DecodeError("unreachable node", n);
}

}  // namespace

// --- trees -----------------------------------------------------------------

TypeGraph binary_tree_type() {
  TypeGraph g;
  g.add_interface("T");
  g.add_field("branch", kCtorReceived, "T");
  g.add_field("leaf", kCtorReceived, "T");
  g.add_field("root", kResProvided, "T");
  triangle(g, "branch", "leaf", "root");
  g.add_interface("Br", "T");
  g.ctor_iface.emplace("branch", "Br");
  g.add_field("b.parent", kResProvided, "Br");
  g.add_field("b.left", kResReceived, "Br");
  g.add_field("b.right", kResReceived, "Br");
  triangle(g, "b.parent", "b.left", "b.right");
  g.add_interface("Lf", "T");
  g.ctor_iface.emplace("leaf", "Lf");
  g.add_field("l.parent", kResProvided, "Lf");
  return g;
}

Bundle encode_tree(const BinTree& t) {
  Bundle b;
  b.type = binary_tree_type();
  TreeEncoder enc{TermBuilder(b)};
  enc.tb.box("z", std::nullopt, "T", {{"z.branch", "branch"}, {"z.leaf", "leaf"}, {"z.root", "root"}});
  enc.tb.wire(enc.node(t), "z.root");
  return b;
}

BinTree decode_tree(const Bundle& b) {
  const auto r = detail::roles(b, binary_tree_type());
  const Id z = root_box(b.term);
  if (b.term.boxes.size() != 1) throw DecodeError("unexpected nested box");
  TreeDecoder dec{b.term, r, {}};
  BinTree t = dec.from(detail::wired_to(b.term, r.port(b.term, z, "root")));
  expect_all_seen(b.term, dec.seen);
  return t;
}

Bundle tree_with_cycle() {
  Bundle b;
  b.type = binary_tree_type();
  TermBuilder tb(b);
  tb.box("z", std::nullopt, "T", {{"z.branch", "branch"}, {"z.leaf", "leaf"}, {"z.root", "root"}});
  for (const Id n : {"b1", "b2"})
    tb.node(n, "z", "Br", {{n + ".parent", "b.parent"}, {n + ".left", "b.left"}, {n + ".right", "b.right"}})
        .uses(n, "z.branch");
  for (const Id n : {"l1", "l2", "l3"}) tb.node(n, "z", "Lf", {{n + ".parent", "l.parent"}}).uses(n, "z.leaf");
  tb.wire("b1.parent", "b2.left").wire("b2.parent", "b1.left");
  tb.wire("l1.parent", "z.root").wire("l2.parent", "b1.right").wire("l3.parent", "b2.right");
  return b;
}

// --- multigraphs -----------------------------------------------------------

Bundle encode_multigraph(const Multigraph& g) {
  Bundle b;
  b.type = multigraph_type();
  TermBuilder tb(b);
  tb.box("z", std::nullopt, "MG", {{"z.vertex", "vertex"}, {"z.edge", "edge"}});
  for (int v = 0; v < g.vertices; ++v) {
    const Id n = "v" + std::to_string(v);
    tb.node(n, "z", "V", {{n + ".vref", "vref"}}).uses(n, "z.vertex");
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Id e = "e" + std::to_string(k);
    tb.node(e, "z", "E", {{e + ".src", "src"}, {e + ".tgt", "tgt"}}).uses(e, "z.edge");
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Id e = "e" + std::to_string(k);
    link_constructor(b, "v" + std::to_string(g.edges[k].first) + ".vref", e + ".src");
    link_constructor(b, "v" + std::to_string(g.edges[k].second) + ".vref", e + ".tgt");
  }
  return b;
}

Multigraph decode_multigraph(const Bundle& b) {
  const auto r = detail::roles(b, multigraph_type());
  const TermGraph& t = b.term;
  const Id z = root_box(t);
  std::map<Id, int> index;
  std::vector<Id> edges;
  std::set<Id> seen, link_nodes;
  for (const auto& n : t.nodes) {
    const Id& role = r.at(n);
    if (role == "V" || role == "E") {
      if (parent_of(t.residence, n) != z) throw DecodeError("node outside the root box", n);
      seen.insert(n);
    }
    if (role == "V") index.emplace(n, static_cast<int>(index.size()));
    if (role == "E") edges.push_back(n);
  }
  Multigraph g;
  g.vertices = static_cast<int>(index.size());
  for (const auto& e : edges) {
    const Id s = linked_vertex(t, r, r.port(t, e, "src"));
    const Id d = linked_vertex(t, r, r.port(t, e, "tgt"));
    g.edges.emplace_back(index.at(s), index.at(d));
    for (const auto& p : {r.port(t, e, "src"), r.port(t, e, "tgt")})
      link_nodes.insert(children_of(t.residence, *preimage_of(t.ctor_arg, p)).front());
  }
  expect_all_seen(t, seen, link_nodes);
  if (t.boxes.size() != 1 + 2 * edges.size()) throw DecodeError("unexpected boxes");
  return g;
}

Multigraph double_edges(const Multigraph& g) {
  Multigraph out{g.vertices, {}};
  for (auto e : g.edges) {
    out.edges.push_back(e);
    out.edges.push_back(e);
  }
  return out;
}

// --- lambda terms ----------------------------------------------------------

TypeGraph lambda_type(bool var_edge) {
  TypeGraph g;
  g.add_interface("L");
  g.add_field("root", kResProvided, "L");
  g.add_field("app", kCtorReceived, "L");
  g.add_field("abs", kCtorReceived, "L");
  triangle(g, "root", "app", "abs");
  g.add_interface("App", "L");
  g.ctor_iface.emplace("app", "App");
  g.add_field("a.parent", kResProvided, "App");
  g.add_field("a.fn", kResReceived, "App");
  g.add_field("a.arg", kResReceived, "App");
  triangle(g, "a.parent", "a.fn", "a.arg");
  g.add_interface("Abs", "L");
  g.ctor_iface.emplace("abs", "Abs");
  g.add_field("f.parent", kResProvided, "Abs");
  g.add_field("f.body", kResReceived, "Abs");
  g.add_field("f.var", kCtorProvided, "Abs");
  g.connect("f.parent", "f.body");
  if (var_edge) g.connect("f.parent", "f.var");
  g.add_interface("Var", "Abs");
  g.ctor_iface.emplace("f.var", "Var");
  g.add_field("v.parent", kResProvided, "Var");
  return g;
}

Bundle encode_lambda(const LambdaTerm& t) {
  if (!t.closed()) throw UsageError("open lambda term");
  Bundle b;
  b.type = lambda_type();
  LambdaEncoder enc{TermBuilder(b), 0, 0, 0, {}};
  enc.tb.box("z", std::nullopt, "L", {{"z.root", "root"}, {"z.app", "app"}, {"z.abs", "abs"}});
  enc.tb.wire(enc.node(t), "z.root");
  return b;
}

LambdaTerm decode_lambda(const Bundle& b) {
  auto canonical = lambda_type();
  if (b.type == lambda_type(false)) canonical = lambda_type(false);
  const auto r = detail::roles(b, canonical);
  const Id z = root_box(b.term);
  if (b.term.boxes.size() != 1) throw DecodeError("unexpected nested box");
  LambdaDecoder dec{b.term, r, {}, {}};
  LambdaTerm t = dec.from(detail::wired_to(b.term, r.port(b.term, z, "root")));
  expect_all_seen(b.term, dec.seen);
  return t;
}

Bundle lambda_scope_escape(bool var_edge) {
  Bundle b;
  b.type = lambda_type(var_edge);
  TermBuilder tb(b);
  tb.box("z", std::nullopt, "L", {{"z.root", "root"}, {"z.app", "app"}, {"z.abs", "abs"}});
  tb.node("app0", "z", "App", {{"app0.parent", "a.parent"}, {"app0.fn", "a.fn"}, {"app0.arg", "a.arg"}})
      .uses("app0", "z.app");
  tb.node("abs0", "z", "Abs", {{"abs0.parent", "f.parent"}, {"abs0.body", "f.body"}, {"abs0.var", "f.var"}})
      .uses("abs0", "z.abs");
  for (const Id v : {"var0", "var1"}) tb.node(v, "z", "Var", {{v + ".parent", "v.parent"}}).uses(v, "abs0.var");
  tb.wire("app0.parent", "z.root").wire("var0.parent", "app0.fn").wire("abs0.parent", "app0.arg");
  tb.wire("var1.parent", "abs0.body");
  return b;
}

}  // namespace idg

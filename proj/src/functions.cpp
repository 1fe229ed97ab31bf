#include <set>

#include "idg/builder.hpp"
#include "idg/correspondence.hpp"
#include "idg/encodings.hpp"
#include "idg/equality.hpp"
#include "idg/type_algebra.hpp"

namespace idg {
namespace {

std::string local(const Id& id) {
  const auto k = id.find_last_of(".:");
  return k == std::string::npos ? id : id.substr(k + 1);
}

Id single_root(const TypeGraph& g) {
  auto r = root_interfaces(g);
  if (r.size() != 1) throw UsageError("type needs exactly one root interface");
  return r.front();
}

// Copies `src` into `dst` with every id prefixed; the root's fields move to
// `root` and the root interface itself is dropped.
void merge_prefixed(TypeGraph& dst, const TypeGraph& src, const std::string& prefix, const Id& root) {
  const Id old = single_root(src);
  auto name = [&](const Id& x) { return x == old ? root : prefix + x; };
  for (const auto& i : src.interfaces)
    if (i != old) dst.interfaces.insert(name(i));
  for (const auto& [f, s] : src.fields) dst.fields[name(f)] = s;
  for (const auto& [f, l] : src.labels) dst.labels[name(f)] = l;
  for (const auto& [c, p] : src.residence) dst.residence.emplace(name(c), name(p));
  for (const auto& [f, i] : src.ctor_iface) dst.ctor_iface.emplace(name(f), name(i));
  for (const auto& [a, b] : src.connectivity) dst.connect(name(a), name(b));
}

Correspondence& fragment_of(Bundle& b, const Target& t) {
  return t.internal ? b.term.let_corr[*t.let] : b.external;
}

const TypeGraph& graph_of(const Bundle& b, const Target& t) { return t.internal ? b.term.internal : b.type; }

// Connects two ports playing matching fields: a wire for resources, a link
// for constructors.
void connect_ports(Bundle& b, const Id& p, const Id& q) {
  const Sort sp = b.term.ports.at(p);
  const Sort sq = b.term.ports.at(q);
  if (sp.kind != sq.kind || sp.polarity == sq.polarity)
    throw UsageError("ports " + p + " and " + q + " cannot be connected");
  const Id& prov = sp.is_provider() ? p : q;
  const Id& recv = sp.is_provider() ? q : p;
  if (sp.is_ctor()) link_constructor(b, prov, recv);
  else b.term.res_wiring.emplace(prov, recv);
}

std::map<Id, Id> prefix_map(const TermGraph& t, const std::string& prefix) {
  std::map<Id, Id> h;
  for (const auto& x : t.boxes) h[x] = prefix + x;
  for (const auto& x : t.nodes) h[x] = prefix + x;
  for (const auto& x : t.lets) h[x] = prefix + x;
  for (const auto& [x, _] : t.ports) h[x] = prefix + x;
  for (const auto& x : t.internal.interfaces) h[x] = prefix + x;
  for (const auto& [x, _] : t.internal.fields) h[x] = prefix + x;
  return h;
}

template <class T>
void absorb(std::set<T>& dst, const std::set<T>& src) {
  dst.insert(src.begin(), src.end());
}

// Moves a bundle into `out` as the body of let-binding `let` in box `home`.
void bind(Bundle& out, const Bundle& def, const Id& let, const Id& home) {
  const std::string prefix = let + ":";
  const TermGraph t = relabel(Relabeling{prefix_map(def.term, prefix)}, def.term);
  TermGraph& o = out.term;
  absorb(o.boxes, t.boxes);
  absorb(o.nodes, t.nodes);
  absorb(o.lets, t.lets);
  o.ports.insert(t.ports.begin(), t.ports.end());
  for (Relation TermGraph::*r : {&TermGraph::residence, &TermGraph::attachment, &TermGraph::res_wiring,
                                 &TermGraph::ctor_wiring, &TermGraph::ctor_arg, &TermGraph::ctor_usage,
                                 &TermGraph::let_iface})
    absorb(o.*r, t.*r);
  for (const auto& [d, frag] : t.let_corr) o.let_corr[d] = frag;
  absorb(o.internal.interfaces, t.internal.interfaces);
  o.internal.fields.insert(t.internal.fields.begin(), t.internal.fields.end());
  o.internal.labels.insert(t.internal.labels.begin(), t.internal.labels.end());
  absorb(o.internal.residence, t.internal.residence);
  absorb(o.internal.ctor_iface, t.internal.ctor_iface);
  absorb(o.internal.connectivity, t.internal.connectivity);

  // The definition's type becomes the binding's interface.
  const Id root = prefix + single_root(def.type);
  o.internal.add_interface(root);
  merge_prefixed(o.internal, def.type, prefix, root);

  const auto boxes = root_boxes(def.term);
  if (boxes.size() != 1) throw UsageError("definition needs exactly one root box");
  const Id body = prefix + boxes.front();
  o.residence.emplace(body, home);
  o.add_let(let, home);
  o.add_port(let + ".body", kCtorReceived, let);
  o.add_port(let + ".use", kCtorProvided, let);
  o.ctor_arg.emplace(body, let + ".body");
  o.let_iface.emplace(let, root);
  auto& frag = o.let_corr[let];
  for (const auto& [k, v] : def.external) frag[prefix + k] = prefix + v;
  frag[body] = root;
}

// Occurrence node of `let` with one port per root field of its interface.
Id occurrence(Bundle& out, const Id& let, const Id& id, const Id& home) {
  TermGraph& o = out.term;
  const Id iface = image_of(o.let_iface, let).value();
  o.add_node(id, home);
  o.ctor_usage.emplace(id, let + ".use");
  auto& frag = o.let_corr[let];
  frag[id] = iface;
  for (const auto& f : fields_of(o.internal, iface)) {
    const Id p = id + "." + f.substr(f.find(':') + 1);
    o.add_port(p, o.internal.fields.at(f), id);
    frag[p] = f;
  }
  return id;
}

}  // namespace

TypeGraph multigraph_type() {
  TypeGraph g;
  g.add_interface("MG");
  g.add_field("vertex", kCtorReceived, "MG");
  g.add_field("edge", kCtorReceived, "MG");
  g.connect("vertex", "edge");
  g.add_interface("V", "MG");
  g.ctor_iface.emplace("vertex", "V");
  g.add_field("vref", kCtorProvided, "V");
  g.add_interface("VR", "V");
  g.ctor_iface.emplace("vref", "VR");
  g.add_interface("E", "MG");
  g.ctor_iface.emplace("edge", "E");
  g.add_field("src", kCtorReceived, "E");
  g.add_field("tgt", kCtorReceived, "E");
  g.connect("src", "tgt");
  g.add_interface("S", "E");
  g.ctor_iface.emplace("src", "S");
  g.add_interface("T", "E");
  g.ctor_iface.emplace("tgt", "T");
  return g;
}

TypeGraph function_type(const TypeGraph& arg, const TypeGraph& result) {
  TypeGraph g;
  g.add_interface("fn");
  merge_prefixed(g, dual(arg), "in.", "fn");
  merge_prefixed(g, result, "out.", "fn");
  for (const auto& a : fields_of(g, "fn"))
    for (const auto& b : fields_of(g, "fn"))
      if (a < b && (a.rfind("in.", 0) == 0) != (b.rfind("in.", 0) == 0)) g.connect(a, b);
  return g;
}

TypeGraph result_type(const TypeGraph& fn) {
  const Id root = single_root(fn);
  std::set<Id> keep;
  std::vector<Id> todo;
  for (const auto& f : fields_of(fn, root))
    if (f.rfind("out.", 0) == 0) todo.push_back(f);
  while (!todo.empty()) {
    Id x = todo.back();
    todo.pop_back();
    if (!keep.insert(x).second) continue;
    for (const auto& c : children_of(fn.residence, x)) todo.push_back(c);
    if (auto i = image_of(fn.ctor_iface, x)) todo.push_back(*i);
  }
  auto strip = [](const Id& x) { return x.rfind("out.", 0) == 0 ? x.substr(4) : x; };
  TypeGraph g;
  g.add_interface("Z");
  for (const auto& x : keep) {
    if (fn.interfaces.count(x)) g.interfaces.insert(strip(x));
    if (auto f = fn.fields.find(x); f != fn.fields.end()) g.fields[strip(x)] = f->second;
    if (auto l = fn.labels.find(x); l != fn.labels.end()) g.labels[strip(x)] = l->second;
  }
  for (const auto& [c, p] : fn.residence)
    if (keep.count(c)) g.residence.emplace(strip(c), p == root ? "Z" : strip(p));
  for (const auto& [f, i] : fn.ctor_iface)
    if (keep.count(f)) g.ctor_iface.emplace(strip(f), strip(i));
  for (const auto& [a, b] : fn.connectivity)
    if (keep.count(a) && keep.count(b)) g.connect(strip(a), strip(b));
  return g;
}

void link_constructor(Bundle& b, const Id& provider, const Id& receiver) {
  TermGraph& t = b.term;
  if (t.ports.at(provider) != kCtorProvided || t.ports.at(receiver) != kCtorReceived)
    throw UsageError("cannot link " + provider + " to " + receiver);
  const auto tp = lookup(b.external, t, provider);
  const auto tr = lookup(b.external, t, receiver);
  if (!tp || !tr) throw UsageError("linked ports need corresponding fields");
  const TypeGraph& gp = graph_of(b, *tp);
  const TypeGraph& gr = graph_of(b, *tr);
  const Id ip = image_of(gp.ctor_iface, tp->id).value();
  const Id ir = image_of(gr.ctor_iface, tr->id).value();

  const Id box = receiver + ".arg";
  const Id node = receiver + ".use";
  t.add_box(box, parent_of(t.residence, receiver).value());
  t.ctor_arg.emplace(box, receiver);
  fragment_of(b, *tr)[box] = ir;
  t.add_node(node, box);
  t.ctor_usage.emplace(node, provider);
  fragment_of(b, *tp)[node] = ip;
  t.ctor_wiring.emplace(provider, receiver);

  const auto fr = fields_of(gr, ir);
  const auto fp = fields_of(gp, ip);
  if (fr.size() != fp.size()) throw UsageError("interfaces of " + provider + " and " + receiver + " differ");
  std::vector<std::pair<Id, Id>> pairs;
  for (const auto& f : fr) {
    const Id bp = box + "." + local(f);
    Sort s = gr.fields.at(f);
    s.polarity = flip(s.polarity);
    t.add_port(bp, s, box);
    fragment_of(b, *tr)[bp] = f;
    std::optional<Id> match;
    for (const auto& g : fp)
      if (local(g) == local(f)) match = g;
    if (!match) throw UsageError("no field matching " + f);
    const Id np = node + "." + local(*match);
    t.add_port(np, gp.fields.at(*match), node);
    fragment_of(b, *tp)[np] = *match;
    pairs.emplace_back(bp, np);
  }
  for (const auto& [bp, np] : pairs) connect_ports(b, bp, np);
}

Bundle identity_function(const TypeGraph& arg) {
  Bundle b;
  b.type = function_type(arg, arg);
  TermBuilder::PortList ports;
  for (const auto& f : fields_of(b.type, "fn")) ports.emplace_back("id." + f, f);
  TermBuilder(b).box("id", std::nullopt, "fn", ports);
  for (const auto& f : fields_of(arg, single_root(arg))) connect_ports(b, "id.in." + f, "id.out." + f);
  return b;
}

Bundle edge_doubler() {
  Bundle b;
  b.type = function_type(multigraph_type(), multigraph_type());
  TermBuilder tb(b);
  tb.box("dbl", std::nullopt, "fn",
         {{"dbl.in.vertex", "in.vertex"},
          {"dbl.in.edge", "in.edge"},
          {"dbl.out.vertex", "out.vertex"},
          {"dbl.out.edge", "out.edge"}});
  tb.box("av", "dbl", "in.V", {{"av.vref", "in.vref"}})
      .arg("av", "dbl.in.vertex")
      .node("nv", "av", "out.V", {{"nv.vref", "out.vref"}})
      .uses("nv", "dbl.out.vertex")
      .wire("dbl.out.vertex", "dbl.in.vertex");
  tb.box("ae", "dbl", "in.E", {{"ae.src", "in.src"}, {"ae.tgt", "in.tgt"}})
      .arg("ae", "dbl.in.edge")
      .wire("dbl.out.edge", "dbl.in.edge");
  for (const Id e : {"e1", "e2"})
    tb.node(e, "ae", "out.E", {{e + ".src", "out.src"}, {e + ".tgt", "out.tgt"}}).uses(e, "dbl.out.edge");
  link_constructor(b, "nv.vref", "av.vref");
  for (const Id e : {"e1", "e2"}) {
    link_constructor(b, "ae.src", e + ".src");
    link_constructor(b, "ae.tgt", e + ".tgt");
  }
  return b;
}

Bundle apply_to(const Bundle& fn, const Bundle& arg) {
  const Id fn_root = single_root(fn.type);
  const Id arg_root = single_root(arg.type);
  std::set<Id> inputs, expected;
  for (const auto& f : fields_of(fn.type, fn_root))
    if (f.rfind("in.", 0) == 0) inputs.insert(f.substr(3));
  for (const auto& f : fields_of(arg.type, arg_root)) {
    expected.insert(f);
    auto it = fn.type.fields.find("in." + f);
    if (it == fn.type.fields.end() || it->second.kind != arg.type.fields.at(f).kind ||
        it->second.polarity == arg.type.fields.at(f).polarity)
      throw UsageError("function input does not match argument field " + f);
  }
  if (inputs != expected) throw UsageError("function inputs do not match the argument type");

  Bundle out;
  out.type = result_type(fn.type);
  TermBuilder::PortList ports;
  for (const auto& f : fields_of(out.type, "Z")) ports.emplace_back("z." + f, f);
  TermBuilder(out).box("z", std::nullopt, "Z", ports);

  bind(out, arg, "x", "z");
  bind(out, fn, "f", "z");
  occurrence(out, "x", "xo", "z");
  occurrence(out, "f", "fo", "z");
  for (const auto& f : expected) connect_ports(out, "fo.in." + f, "xo." + f);
  for (const auto& f : fields_of(out.type, "Z")) connect_ports(out, "fo.out." + f, "z." + f);
  return out;
}

}  // namespace idg

#include "idg/samples.hpp"

#include "idg/builder.hpp"

namespace idg::samples {
namespace {

// Root interface Z {A R-, B C-, C R+}, triangle, with B's interface given
// by `inner` fields {D R-, E R+} connected.
TypeGraph apply_root_type() {
  TypeGraph g;
  g.add_interface("Z");
  g.add_field("A", kResReceived, "Z");
  g.add_field("B", kCtorReceived, "Z");
  g.add_field("C", kResProvided, "Z");
  g.connect("A", "B");
  g.connect("B", "C");
  g.connect("A", "C");
  g.add_interface("Y", "Z");
  g.ctor_iface.emplace("B", "Y");
  g.add_field("D", kResReceived, "Y");
  g.add_field("E", kResProvided, "Y");
  g.connect("D", "E");
  return g;
}

TermBuilder::PortList root_ports() { return {{"a", "A"}, {"b", "B"}, {"c", "C"}}; }

// Node built by `b` at interface Y, ports `<id>.d` and `<id>.e`.
void fn_node(TermBuilder& tb, const Id& id, const Id& box) {
  tb.node(id, box, "Y", {{id + ".d", "D"}, {id + ".e", "E"}}).uses(id, "b");
}

// Single-field-pair type {in R-, out R+}, optionally connected.
TypeGraph endo_type(bool connected) {
  TypeGraph g;
  g.add_interface("A");
  g.add_field("in", kResReceived, "A");
  g.add_field("out", kResProvided, "A");
  if (connected) g.connect("in", "out");
  return g;
}

Bundle node_sample(bool feedback) {
  Bundle b;
  b.type = apply_root_type();
  TermBuilder tb(b);
  tb.box("z", std::nullopt, "Z", root_ports());
  fn_node(tb, "n", "z");
  if (feedback) {
    tb.wire("a", "c").wire("n.e", "n.d");
  } else {
    tb.wire("a", "n.d").wire("n.e", "c");
  }
  return b;
}

Bundle endo_box(bool connected) {
  Bundle b;
  b.type = endo_type(connected);
  TermBuilder(b).box("z", std::nullopt, "A", {{"zi", "in"}, {"zo", "out"}}).wire("zi", "zo");
  return b;
}

}  // namespace

Bundle higher_order() {
  Bundle b;
  auto& g = b.type;
  g.add_interface("Z");
  g.add_field("A", kResReceived, "Z");
  g.add_field("B", kCtorReceived, "Z");
  g.add_field("C", kResProvided, "Z");
  g.add_interface("Y", "Z");
  g.add_field("D", kResReceived, "Y");
  g.add_field("E", kCtorReceived, "Y");
  g.add_field("F", kResProvided, "Y");
  g.add_interface("X", "Y");
  g.add_field("G", kResReceived, "X");
  g.add_field("H", kResProvided, "X");
  g.ctor_iface = {{"B", "Y"}, {"E", "X"}};
  for (auto [p, q] : {std::pair{"A", "B"}, {"B", "C"}, {"A", "C"}, {"D", "E"}, {"E", "F"}, {"D", "F"}, {"G", "H"}})
    g.connect(p, q);

  TermBuilder tb(b);
  tb.box("z", std::nullopt, "Z", {{"a", "A"}, {"b", "B"}, {"c", "C"}})
      .node("y", "z", "Y", {{"d", "D"}, {"e", "E"}, {"f", "F"}})
      .uses("y", "b")
      .box("x", "z", "X", {{"g", "G"}, {"h", "H"}})
      .arg("x", "e")
      .wire("a", "d")
      .wire("f", "c")
      .wire("g", "h");
  return b;
}

Bundle pair_passthrough(bool swapped) {
  Bundle b;
  auto& g = b.type;
  g.add_interface("P");
  g.add_field("x", kResReceived, "P");
  g.add_field("y", kResReceived, "P");
  g.add_field("l", kResProvided, "P");
  g.add_field("r", kResProvided, "P");
  for (auto [p, q] : {std::pair{"x", "y"}, {"x", "l"}, {"x", "r"}, {"y", "l"}, {"y", "r"}}) g.connect(p, q);
  TermBuilder(b)
      .box("z", std::nullopt, "P", {{"px", "x"}, {"py", "y"}, {"pl", swapped ? "r" : "l"}, {"pr", swapped ? "l" : "r"}})
      .wire("px", "pl")
      .wire("py", "pr");
  return b;
}

Bundle applied_node() { return node_sample(false); }
Bundle feedback_node() { return node_sample(true); }
Bundle identity_box() { return endo_box(true); }
Bundle disconnected_box() { return endo_box(false); }

Bundle nested_let() {
  Bundle b;
  b.type = apply_root_type();
  auto& in = b.term.internal;
  in.add_interface("X");
  in.add_field("F", kResReceived, "X");
  in.add_field("G", kCtorReceived, "X");
  in.add_field("H", kResProvided, "X");
  in.connect("F", "G");
  in.connect("G", "H");
  in.connect("F", "H");
  in.add_interface("W", "X");
  in.ctor_iface.emplace("G", "W");
  in.add_field("I", kResReceived, "W");
  in.add_field("J", kResProvided, "W");
  in.connect("I", "J");

  TermBuilder tb(b);
  tb.box("z", std::nullopt, "Z", root_ports());
  tb.let("y", "z", "X", "ye", "yd");
  tb.fragment("y")
      .box("x", "z", "X", {{"xf", "F"}, {"j", "G"}, {"xh", "H"}})
      .arg("x", "ye")
      .node("u", "x", "W", {{"u.i", "I"}, {"u.o", "J"}})
      .uses("u", "j")
      .node("t", "x", "W", {{"t.i", "I"}, {"t.o", "J"}})
      .uses("t", "j")
      .wire("xf", "u.i")
      .wire("u.o", "t.i")
      .wire("t.o", "xh")
      .node("w", "z", "X", {{"w.f", "F"}, {"g", "G"}, {"w.h", "H"}})
      .uses("w", "yd")
      .box("v", "z", "W", {{"v.i", "I"}, {"v.o", "J"}})
      .arg("v", "g");
  tb.external();
  fn_node(tb, "s", "v");
  fn_node(tb, "r", "v");
  tb.wire("v.i", "s.d").wire("s.e", "r.d").wire("r.e", "v.o");
  tb.wire("a", "w.f").wire("w.h", "c").wire("b", "g");
  return b;
}

Bundle single_let() {
  Bundle b;
  b.type = apply_root_type();
  auto& in = b.term.internal;
  in.add_interface("V");
  in.add_field("K", kResReceived, "V");
  in.add_field("L", kResProvided, "V");
  in.connect("K", "L");

  TermBuilder tb(b);
  tb.box("z", std::nullopt, "Z", root_ports());
  tb.let("o", "z", "V", "g", "j");
  tb.fragment("o")
      .box("v", "z", "V", {{"v.i", "K"}, {"v.o", "L"}})
      .arg("v", "g")
      .node("u", "z", "V", {{"u.i", "K"}, {"u.o", "L"}})
      .uses("u", "j")
      .node("t", "z", "V", {{"t.i", "K"}, {"t.o", "L"}})
      .uses("t", "j")
      .wire("a", "u.i")
      .wire("u.o", "t.i")
      .wire("t.o", "c");
  tb.external();
  fn_node(tb, "s", "v");
  fn_node(tb, "r", "v");
  tb.wire("v.i", "s.d").wire("s.e", "r.d").wire("r.e", "v.o").wire("b", "g");
  return b;
}

Bundle four_applications() {
  Bundle b;
  b.type = apply_root_type();
  TermBuilder tb(b);
  tb.box("z", std::nullopt, "Z", root_ports());
  Id prev = "a";
  for (int k = 1; k <= 4; ++k) {
    const Id n = "n" + std::to_string(k);
    fn_node(tb, n, "z");
    tb.wire(prev, n + ".d");
    prev = n + ".e";
  }
  tb.wire(prev, "c");
  return b;
}

}  // namespace idg::samples

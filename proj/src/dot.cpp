#include "idg/dot.hpp"

#include <sstream>

namespace idg {
namespace {

std::string quote(const Id& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct Writer {
  const TermGraph& t;
  std::ostringstream os;
  int clusters = 0;
  std::map<Id, std::string> cluster_of;

  void indent(int d) { os << std::string(2 * d, ' '); }

  void port(const Id& p, int d) {
    const Sort s = t.ports.at(p);
    indent(d);
    os << quote(p) << " [shape=" << (s.is_ctor() ? "triangle" : "box")
       << (s.is_provider() ? ", style=filled" : "") << ", label=" << quote(p) << "];\n";
  }

  void component(const Id& c, int d) {
    const auto ports = ports_of(t, c);
    const bool is_box = t.boxes.count(c) > 0;
    if (!is_box && ports.empty()) {
      indent(d);
      os << quote(c) << " [shape=" << (t.lets.count(c) ? "diamond" : "ellipse") << "];\n";
      return;
    }
    const std::string name = "cluster_" + std::to_string(clusters++);
    cluster_of[c] = name;
    indent(d);
    os << "subgraph " << name << " {\n";
    indent(d + 1);
    os << "label=" << quote(c) << "; style=" << (is_box ? "solid" : "rounded") << ";\n";
    indent(d + 1);
    os << quote(c) << " [shape=point];\n";
    for (const auto& p : ports) port(p, d + 1);
    if (is_box)
      for (const auto& k : children_of(t.residence, c))
        if (t.boxes.count(k) || t.nodes.count(k) || t.lets.count(k)) component(k, d + 1);
    indent(d);
    os << "}\n";
  }

  void edges(const Relation& r, const char* cls, const char* style) {
    for (const auto& [a, b] : r) {
      os << "  " << quote(a) << " -> " << quote(b) << " [class=\"" << cls << "\"";
      if (*style) os << ", " << style;
      auto it = cluster_of.find(a);
      if (it != cluster_of.end()) os << ", ltail=" << it->second;
      os << "];\n";
    }
  }
};

}  // namespace

std::string to_dot(const TermGraph& t) {
  Writer w{t, {}, 0, {}};
  w.os << "digraph term {\n  compound=true;\n  subgraph cluster_term {\n    label=\"term\";\n";
  w.clusters = 1;
  for (const auto& b : root_boxes(t)) w.component(b, 2);
  w.os << "  }\n";
  w.edges(t.res_wiring, "R_WR", "penwidth=3");
  w.edges(t.ctor_wiring, "R_WC", "style=dashed");
  w.edges(t.ctor_arg, "R_CA", "style=dotted");
  w.edges(t.ctor_usage, "R_CU", "");
  w.os << "}\n";
  return w.os.str();
}

}  // namespace idg

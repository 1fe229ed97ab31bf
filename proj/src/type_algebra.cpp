#include "idg/type_algebra.hpp"

#include <cctype>

namespace idg {
namespace {

// Fresh ids for assembled types. Interfaces are "I<k>", fields "F<k>".
struct Namer {
  int interfaces = 0;
  int fields = 0;
  Id iface() { return "I" + std::to_string(interfaces++); }
  Id field() { return "F" + std::to_string(fields++); }
};

Id root_of(const TypeGraph& g) {
  auto roots = root_interfaces(g);
  if (roots.size() != 1) throw UsageError("type needs exactly one root interface");
  return roots.front();
}

// Copies src's nested interface `from` into dst as `to` (already created),
// renaming everything; returns the new ids of from's own fields.
std::vector<Id> graft(TypeGraph& dst, const TypeGraph& src, const Id& from, const Id& to, Namer& nm,
                      std::map<Id, Id>& h) {
  std::vector<Id> top;
  for (const auto& f : fields_of(src, from)) {
    const Id nf = nm.field();
    h[f] = nf;
    dst.add_field(nf, src.fields.at(f), to);
    if (auto l = src.labels.find(f); l != src.labels.end()) dst.labels[nf] = l->second;
    top.push_back(nf);
  }
  for (const auto& f : fields_of(src, from)) {
    if (auto i = image_of(src.ctor_iface, f)) {
      const Id ni = nm.iface();
      h[*i] = ni;
      dst.add_interface(ni, to);
      dst.ctor_iface.emplace(h[f], ni);
      graft(dst, src, *i, ni, nm, h);
    }
  }
  for (const auto& [a, b] : src.connectivity) {
    auto pa = parent_of(src.residence, a);
    if (pa && *pa == from) dst.connect(h.at(a), h.at(b));
  }
  return top;
}

TypeGraph join(const TypeGraph& t, const TypeGraph& s, bool cross) {
  TypeGraph out;
  Namer nm;
  const Id root = nm.iface();
  out.add_interface(root);
  std::map<Id, Id> ht, hs;
  auto lt = graft(out, t, root_of(t), root, nm, ht);
  auto ls = graft(out, s, root_of(s), root, nm, hs);
  if (cross)
    for (const auto& a : lt)
      for (const auto& b : ls) out.connect(a, b);
  return out;
}

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) { throw TypeSyntaxError(what, i + 1); }

  FunctionalType arrow() {
    FunctionalType l = product();
    skip();
    if (s.compare(i, 2, "-o") == 0) {
      i += 2;
      return FunctionalType::lolli(std::move(l), arrow());
    }
    return l;
  }
  FunctionalType product() {
    FunctionalType l = unary();
    for (;;) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        l = FunctionalType::times(std::move(l), unary());
      } else {
        return l;
      }
    }
  }
  FunctionalType unary() {
    skip();
    if (i >= s.size()) fail("unexpected end of type");
    if (s[i] == '!') {
      ++i;
      return FunctionalType::bang(unary());
    }
    if (s[i] == '(') {
      ++i;
      FunctionalType inner = arrow();
      skip();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return inner;
    }
    if (s[i] == '1') {
      ++i;
      return FunctionalType::one();
    }
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (start == i) fail(std::string("unexpected '") + s[i] + "'");
    return FunctionalType::prim(s.substr(start, i - start));
  }
};

}  // namespace

FunctionalType FunctionalType::prim(std::string l) {
  FunctionalType t;
  t.op = Op::primitive;
  t.label = std::move(l);
  return t;
}

FunctionalType FunctionalType::one() { return {}; }

FunctionalType FunctionalType::times(FunctionalType a, FunctionalType b) {
  FunctionalType t;
  t.op = Op::product;
  t.left = std::make_shared<const FunctionalType>(std::move(a));
  t.right = std::make_shared<const FunctionalType>(std::move(b));
  return t;
}

FunctionalType FunctionalType::lolli(FunctionalType a, FunctionalType b) {
  FunctionalType t = times(std::move(a), std::move(b));
  t.op = Op::arrow;
  return t;
}

FunctionalType FunctionalType::bang(FunctionalType a) {
  FunctionalType t;
  t.op = Op::bang;
  t.left = std::make_shared<const FunctionalType>(std::move(a));
  return t;
}

std::string to_string(const FunctionalType& t) {
  switch (t.op) {
    case FunctionalType::Op::primitive: return t.label;
    case FunctionalType::Op::unit: return "1";
    case FunctionalType::Op::product: return "(" + to_string(*t.left) + " * " + to_string(*t.right) + ")";
    case FunctionalType::Op::arrow: return "(" + to_string(*t.left) + " -o " + to_string(*t.right) + ")";
    case FunctionalType::Op::bang: return "!" + to_string(*t.left);
  }
  return "?";
}

TypeSyntaxError::TypeSyntaxError(const std::string& what, std::size_t col)
    : std::runtime_error(what + " at column " + std::to_string(col)), column(col) {}

FunctionalType parse_functional_type(const std::string& text) {
  Parser p{text};
  FunctionalType t = p.arrow();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return t;
}

TypeGraph empty_type() {
  TypeGraph g;
  g.add_interface("I0");
  return g;
}

TypeGraph dual(const TypeGraph& t) {
  TypeGraph out = t;
  const Id root = root_of(t);
  const auto top = fields_of(t, root);
  for (const auto& f : top) out.fields[f].polarity = flip(out.fields[f].polarity);
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (t.connected(top[i], top[j])) out.connectivity.erase({std::min(top[i], top[j]), std::max(top[i], top[j])});
      else out.connect(top[i], top[j]);
    }
  return out;
}

TypeGraph juxtapose(const TypeGraph& t, const TypeGraph& s) { return join(t, s, false); }
TypeGraph bowtie(const TypeGraph& t, const TypeGraph& s) { return join(t, s, true); }

TypeGraph translate(const FunctionalType& ft, const std::set<std::string>* primitives) {
  using Op = FunctionalType::Op;
  switch (ft.op) {
    case Op::unit: return empty_type();
    case Op::primitive: {
      if (primitives && !primitives->count(ft.label)) throw UsageError("unknown primitive " + ft.label);
      TypeGraph g = empty_type();
      g.add_field("F0", kResProvided, "I0");
      if (ft.label != kDefaultPrimitive) g.labels["F0"] = ft.label;
      return g;
    }
    case Op::product: return juxtapose(translate(*ft.left, primitives), translate(*ft.right, primitives));
    case Op::arrow: return bowtie(dual(translate(*ft.left, primitives)), translate(*ft.right, primitives));
    case Op::bang: {
      const TypeGraph inner = translate(*ft.left, primitives);
      TypeGraph g;
      Namer nm;
      const Id root = nm.iface();
      g.add_interface(root);
      const Id f = nm.field();
      g.add_field(f, kCtorProvided, root);
      const Id sub = nm.iface();
      g.add_interface(sub, root);
      g.ctor_iface.emplace(f, sub);
      std::map<Id, Id> h;
      graft(g, inner, root_of(inner), sub, nm, h);
      return g;
    }
  }
  return empty_type();
}

}  // namespace idg

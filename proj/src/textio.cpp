#include "idg/textio.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace idg {
namespace {

// --- printing --------------------------------------------------------------

struct Out {
  std::ostringstream os;

  void section(const std::string& name, const std::vector<std::string>& recs) {
    if (recs.empty()) return;
    os << name << ":";
    for (const auto& r : recs) os << ' ' << r;
    os << '\n';
  }
};

std::string rec(const Id& a, const Id& b) { return "(" + a + "," + b + ")"; }

std::vector<std::string> pairs(const Relation& r) {
  std::vector<std::string> out;
  for (const auto& [a, b] : r) out.push_back(rec(a, b));
  return out;
}

void type_sections(Out& o, const TypeGraph& g, const std::string& p) {
  o.section(p + "I", {g.interfaces.begin(), g.interfaces.end()});
  std::vector<std::string> fields, labels;
  for (const auto& [f, s] : g.fields) {
    fields.push_back(f + ":" + to_string(s));
    if (!s.is_ctor()) labels.push_back(f + ":" + g.label_of(f));
  }
  o.section(p + "F", fields);
  o.section(p + "R_R", pairs(g.residence));
  o.section(p + "R_I", pairs(g.ctor_iface));
  o.section(p + "R_C", pairs(g.connectivity));
  o.section(p + "L", labels);
}

void term_sections(Out& o, const TermGraph& t) {
  o.section("B", {t.boxes.begin(), t.boxes.end()});
  o.section("N", {t.nodes.begin(), t.nodes.end()});
  o.section("D", {t.lets.begin(), t.lets.end()});
  std::vector<std::string> ports;
  for (const auto& [p, s] : t.ports) ports.push_back(p + ":" + to_string(s));
  o.section("P", ports);
  o.section("R_R", pairs(t.residence));
  o.section("R_A", pairs(t.attachment));
  o.section("R_WR", pairs(t.res_wiring));
  o.section("R_WC", pairs(t.ctor_wiring));
  o.section("R_CA", pairs(t.ctor_arg));
  o.section("R_CU", pairs(t.ctor_usage));
  o.section("R_DI", pairs(t.let_iface));
  std::vector<std::string> dc;
  for (const auto& [d, frag] : t.let_corr)
    for (const auto& [k, v] : frag) dc.push_back("(" + d + "," + k + "," + v + ")");
  o.section("R_DC", dc);
  type_sections(o, t.internal, "T.");
}

void corr_sections(Out& o, const Correspondence& c) {
  std::vector<std::string> recs;
  for (const auto& [k, v] : c) recs.push_back(rec(k, v));
  o.section("C", recs);
}

std::string header(const char* kind) { return "idg " + std::to_string(kFormatVersion) + " " + kind + "\n"; }

// --- parsing ---------------------------------------------------------------

enum class Block { type, term, correspondence };

struct Token {
  std::string text;
  std::size_t column;
};

struct Reader {
  std::size_t line = 0;
  std::string section;

  [[noreturn]] void fail(std::size_t col, const std::string& msg) const { throw ParseError(line, col, section, msg); }

  void check_id(const Token& t, const std::string& id) const {
    if (id.empty()) fail(t.column, "empty id");
    for (char ch : id)
      if (ch == '(' || ch == ')' || ch == ',') fail(t.column, "bad character in id '" + id + "'");
  }

  std::vector<Id> tuple(const Token& t, std::size_t n) const {
    const std::string& s = t.text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail(t.column, "expected a parenthesised record");
    std::vector<Id> parts;
    std::string cur;
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
      if (s[k] == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += s[k];
      }
    }
    parts.push_back(cur);
    if (parts.size() != n) fail(t.column, "expected " + std::to_string(n) + " ids");
    for (const auto& p : parts)
      if (p.empty() || p.find_first_of("()") != std::string::npos) fail(t.column, "bad id in record");
    return parts;
  }

  std::pair<Id, std::string> tagged(const Token& t) const {
    const auto k = t.text.rfind(':');
    if (k == std::string::npos || k == 0 || k + 1 == t.text.size()) fail(t.column, "expected id:value");
    return {t.text.substr(0, k), t.text.substr(k + 1)};
  }

  Sort sort(const Token& t, const std::string& s) const {
    auto v = parse_sort(s);
    if (!v) fail(t.column, "bad sort '" + s + "'");
    return *v;
  }

  std::pair<Id, Id> pair(const Token& t) const {
    auto p = tuple(t, 2);
    return {p[0], p[1]};
  }
};

using Handler = std::function<void(Reader&, const Token&)>;

void add_type_handlers(std::map<std::string, Handler>& h, TypeGraph& g, const std::string& p) {
  h[p + "I"] = [&g](Reader& r, const Token& t) {
    r.check_id(t, t.text);
    g.interfaces.insert(t.text);
  };
  h[p + "F"] = [&g](Reader& r, const Token& t) {
    auto [id, s] = r.tagged(t);
    g.fields[id] = r.sort(t, s);
  };
  h[p + "R_R"] = [&g](Reader& r, const Token& t) { g.residence.insert(r.pair(t)); };
  h[p + "R_I"] = [&g](Reader& r, const Token& t) { g.ctor_iface.insert(r.pair(t)); };
  h[p + "R_C"] = [&g](Reader& r, const Token& t) {
    auto [a, b] = r.pair(t);
    g.connectivity.insert({a, b});
  };
  h[p + "L"] = [&g](Reader& r, const Token& t) {
    auto [id, l] = r.tagged(t);
    if (l != kDefaultPrimitive) g.labels[id] = l;
  };
}

void add_term_handlers(std::map<std::string, Handler>& h, TermGraph& g) {
  h["B"] = [&g](Reader& r, const Token& t) {
    r.check_id(t, t.text);
    g.boxes.insert(t.text);
  };
  h["N"] = [&g](Reader& r, const Token& t) {
    r.check_id(t, t.text);
    g.nodes.insert(t.text);
  };
  h["D"] = [&g](Reader& r, const Token& t) {
    r.check_id(t, t.text);
    g.lets.insert(t.text);
  };
  h["P"] = [&g](Reader& r, const Token& t) {
    auto [id, s] = r.tagged(t);
    g.ports[id] = r.sort(t, s);
  };
  h["R_R"] = [&g](Reader& r, const Token& t) { g.residence.insert(r.pair(t)); };
  h["R_A"] = [&g](Reader& r, const Token& t) { g.attachment.insert(r.pair(t)); };
  h["R_WR"] = [&g](Reader& r, const Token& t) { g.res_wiring.insert(r.pair(t)); };
  h["R_WC"] = [&g](Reader& r, const Token& t) { g.ctor_wiring.insert(r.pair(t)); };
  h["R_CA"] = [&g](Reader& r, const Token& t) { g.ctor_arg.insert(r.pair(t)); };
  h["R_CU"] = [&g](Reader& r, const Token& t) { g.ctor_usage.insert(r.pair(t)); };
  h["R_DI"] = [&g](Reader& r, const Token& t) { g.let_iface.insert(r.pair(t)); };
  h["R_DC"] = [&g](Reader& r, const Token& t) {
    auto p = r.tuple(t, 3);
    auto& frag = g.let_corr[p[0]];
    auto [it, fresh] = frag.emplace(p[1], p[2]);
    if (!fresh && it->second != p[2]) r.fail(t.column, "component mapped twice in one fragment");
  };
  add_type_handlers(h, g.internal, "T.");
}

void add_corr_handlers(std::map<std::string, Handler>& h, Correspondence& c) {
  h["C"] = [&c](Reader& r, const Token& t) {
    auto [k, v] = r.pair(t);
    auto [it, fresh] = c.emplace(k, v);
    if (!fresh && it->second != v) r.fail(t.column, "component mapped twice");
  };
}

std::vector<Token> tokens(const std::string& line, std::size_t from) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ParseError::ParseError(std::size_t l, std::size_t c, std::string s, const std::string& message)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                         (s.empty() ? "" : ", section " + s) + ": " + message),
      line(l),
      column(c),
      section(std::move(s)) {}

std::string print(const TypeGraph& g) {
  Out o;
  type_sections(o, g, "");
  return header("type") + o.os.str();
}

std::string print(const TermGraph& t) {
  Out o;
  term_sections(o, t);
  return header("term") + o.os.str();
}

std::string print(const Correspondence& c) {
  Out o;
  corr_sections(o, c);
  return header("correspondence") + o.os.str();
}

std::string print(const Bundle& b) {
  Out o;
  o.os << "[type]\n";
  type_sections(o, b.type, "");
  o.os << "[term]\n";
  term_sections(o, b.term);
  o.os << "[correspondence]\n";
  corr_sections(o, b.external);
  return header("bundle") + o.os.str();
}

Document parse_document(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  Reader r;
  std::string kind;
  while (std::getline(in, raw)) {
    ++r.line;
    const std::string l = trim(raw);
    if (l.empty() || l[0] == '#') continue;
    std::istringstream hs(l);
    std::string magic, version;
    hs >> magic >> version >> kind;
    if (magic != "idg") r.fail(1, "expected header 'idg <version> <kind>'");
    if (version != std::to_string(kFormatVersion)) r.fail(5, "unsupported version " + version);
    break;
  }
  if (kind.empty()) throw ParseError(r.line == 0 ? 1 : r.line, 1, "", "missing header");

  TypeGraph type;
  TermGraph term;
  Correspondence corr;
  std::map<std::string, Handler> handlers;
  std::optional<Block> block;
  const bool bundle = kind == "bundle";
  auto enter = [&](Block b) {
    handlers.clear();
    if (b == Block::type) add_type_handlers(handlers, type, "");
    if (b == Block::term) add_term_handlers(handlers, term);
    if (b == Block::correspondence) add_corr_handlers(handlers, corr);
    block = b;
  };
  if (kind == "type") enter(Block::type);
  else if (kind == "term") enter(Block::term);
  else if (kind == "correspondence") enter(Block::correspondence);
  else if (!bundle) r.fail(1, "unknown document kind '" + kind + "'");

  std::set<std::string> seen_blocks;
  while (std::getline(in, raw)) {
    ++r.line;
    r.section.clear();
    const std::string l = trim(raw);
    if (l.empty() || l[0] == '#') continue;
    if (l.front() == '[') {
      if (!bundle) r.fail(1, "blocks are only allowed in bundles");
      static const std::map<std::string, Block> names{
          {"[type]", Block::type}, {"[term]", Block::term}, {"[correspondence]", Block::correspondence}};
      auto it = names.find(l);
      if (it == names.end()) r.fail(1, "unknown block " + l);
      if (!seen_blocks.insert(l).second) r.fail(1, "repeated block " + l);
      enter(it->second);
      continue;
    }
    const auto colon = raw.find(':');
    if (colon == std::string::npos) r.fail(1, "expected 'SECTION: records'");
    r.section = trim(raw.substr(0, colon));
    if (!block) r.fail(1, "section outside a block");
    auto h = handlers.find(r.section);
    if (h == handlers.end()) r.fail(1, "unknown section");
    for (const auto& t : tokens(raw, colon + 1)) h->second(r, t);
  }
  if (kind == "type") return type;
  if (kind == "term") return term;
  if (kind == "correspondence") return corr;
  return Bundle{std::move(type), std::move(term), std::move(corr)};
}

namespace {

template <class T>
T expect_kind(const std::string& text, const char* kind) {
  Document d = parse_document(text);
  if (auto* v = std::get_if<T>(&d)) return std::move(*v);
  throw ParseError(1, 1, "", std::string("expected a ") + kind + " document");
}

}  // namespace

TypeGraph parse_type(const std::string& text) { return expect_kind<TypeGraph>(text, "type"); }
TermGraph parse_term(const std::string& text) { return expect_kind<TermGraph>(text, "term"); }
Correspondence parse_correspondence(const std::string& text) {
  return expect_kind<Correspondence>(text, "correspondence");
}
Bundle parse_bundle(const std::string& text) { return expect_kind<Bundle>(text, "bundle"); }

Bundle read_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace idg

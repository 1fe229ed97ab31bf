#include <cctype>
#include <map>
#include <sstream>

#include "idg/encodings.hpp"

namespace idg {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError(what + " at column " + std::to_string(i + 1));
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool done() {
    skip();
    return i == s.size();
  }
  int number() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a number");
    return std::stoi(s.substr(start, i - start));
  }
  std::string name() {
    skip();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
    if (start == i) fail("expected a name");
    return s.substr(start, i - start);
  }
};

BinTree tree(Cursor& c) {
  c.expect('(');
  if (c.eat(')')) return BinTree::leaf();
  BinTree l = tree(c);
  BinTree r = tree(c);
  c.expect(')');
  return BinTree::branch(std::move(l), std::move(r));
}

struct LambdaParser {
  Cursor c;
  std::vector<std::string> scope;

  bool atom_start() {
    c.skip();
    if (c.i >= c.s.size()) return false;
    char ch = c.s[c.i];
    return ch == '(' || ch == '\\' || std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }

  LambdaTerm term() {
    LambdaTerm t = atom();
    while (atom_start()) t = LambdaTerm::app(std::move(t), atom());
    return t;
  }

  LambdaTerm atom() {
    if (c.eat('\\')) {
      std::vector<std::string> names{c.name()};
      while (!c.eat('.')) names.push_back(c.name());
      for (const auto& n : names) scope.push_back(n);
      LambdaTerm body = term();
      for (std::size_t k = 0; k < names.size(); ++k) {
        scope.pop_back();
        body = LambdaTerm::abs(std::move(body));
      }
      return body;
    }
    if (c.eat('(')) {
      LambdaTerm t = term();
      c.expect(')');
      return t;
    }
    const std::string n = c.name();
    for (std::size_t k = scope.size(); k-- > 0;)
      if (scope[k] == n) return LambdaTerm::var(static_cast<int>(scope.size() - 1 - k));
    c.fail("unbound variable " + n);
  }
};

void print(const LambdaTerm& t, int depth, std::ostream& os, bool arg_pos, bool fn_pos) {
  switch (t.kind) {
    case LambdaTerm::Kind::var: os << "x" << depth - 1 - t.index; return;
    case LambdaTerm::Kind::abs:
      if (arg_pos || fn_pos) os << "(";
      os << "\\x" << depth << ". ";
      print(t.kids[0], depth + 1, os, false, false);
      if (arg_pos || fn_pos) os << ")";
      return;
    case LambdaTerm::Kind::app:
      if (arg_pos) os << "(";
      print(t.kids[0], depth, os, false, true);
      os << " ";
      print(t.kids[1], depth, os, true, false);
      if (arg_pos) os << ")";
      return;
  }
}

}  // namespace

std::size_t BinTree::size() const {
  std::size_t n = 1;
  for (const auto& k : kids) n += k.size();
  return n;
}

bool LambdaTerm::closed(int d) const {
  switch (kind) {
    case Kind::var: return index >= 0 && index < d;
    case Kind::abs: return kids[0].closed(d + 1);
    case Kind::app: return kids[0].closed(d) && kids[1].closed(d);
  }
  return false;
}

int LambdaTerm::depth() const {
  int d = 0;
  for (const auto& k : kids) d = std::max(d, k.depth());
  return d + 1;
}

BinTree parse_tree(const std::string& text) {
  Cursor c{text};
  BinTree t = tree(c);
  if (!c.done()) c.fail("trailing input");
  return t;
}

std::string to_string(const BinTree& t) {
  if (t.kids.empty()) return "()";
  return "(" + to_string(t.kids[0]) + " " + to_string(t.kids[1]) + ")";
}

Multigraph parse_multigraph(const std::string& text) {
  Cursor c{text};
  Multigraph g;
  if (c.name() != "n") c.fail("expected 'n='");
  c.expect('=');
  g.vertices = c.number();
  if (c.eat(';')) {
    while (!c.done()) {
      const int a = c.number();
      c.expect('-');
      c.expect('>');
      const int b = c.number();
      if (a >= g.vertices || b >= g.vertices) c.fail("vertex out of range");
      g.edges.emplace_back(a, b);
    }
  }
  if (!c.done()) c.fail("trailing input");
  return g;
}

std::string to_string(const Multigraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertices << ";";
  for (auto [a, b] : g.edges) os << " " << a << "->" << b;
  return os.str();
}

LambdaTerm parse_lambda(const std::string& text) {
  LambdaParser p{Cursor{text}, {}};
  LambdaTerm t = p.term();
  if (!p.c.done()) p.c.fail("trailing input");
  return t;
}

std::string to_string(const LambdaTerm& t) {
  std::ostringstream os;
  print(t, 0, os, false, false);
  return os.str();
}

}  // namespace idg

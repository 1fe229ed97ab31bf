#include "idg/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

#include "idg/check.hpp"
#include "idg/validate.hpp"

namespace idg {
namespace {

using Children = std::multimap<Id, Id>;

Children children_index(const Relation& residence) {
  Children out;
  for (const auto& [c, p] : residence) out.emplace(p, c);
  return out;
}

// Everything below `root` in a residence forest, `root` excluded.
std::vector<Id> below(const Relation& residence, const Id& root) {
  const Children kids = children_index(residence);
  std::vector<Id> out;
  std::deque<Id> todo{root};
  while (!todo.empty()) {
    Id cur = todo.front();
    todo.pop_front();
    auto [lo, hi] = kids.equal_range(cur);
    for (auto it = lo; it != hi; ++it) {
      out.push_back(it->second);
      todo.push_back(it->second);
    }
  }
  return out;
}

template <class Pred>
void erase_pairs(Relation& rel, Pred drop) {
  for (auto it = rel.begin(); it != rel.end();) it = drop(*it) ? rel.erase(it) : std::next(it);
}

struct Work {
  TermGraph t;
  Correspondence c;
  TraceEntry entry;
  std::map<std::string, int> counters;

  bool used(const Id& id) const {
    return t.contains(id) || t.internal.interfaces.count(id) || t.internal.fields.count(id);
  }

  Id fresh(const Id& orig) {
    const std::string base = orig.substr(0, orig.find('~'));
    int& k = counters[base];
    Id id;
    do id = base + "~" + std::to_string(++k);
    while (used(id));
    entry.fresh.emplace_back(orig, id);
    return id;
  }

  // Copies the internal subtree under `root` as a new root; extends `h`.
  Id copy_type_subtree(const Id& root, std::map<Id, Id>& h) {
    TypeGraph& g = t.internal;
    std::vector<Id> members{root};
    for (const auto& m : below(g.residence, root)) members.push_back(m);
    const std::set<Id> in(members.begin(), members.end());
    for (const auto& m : members) h[m] = fresh(m);
    for (const auto& m : members) {
      if (g.interfaces.count(m)) g.interfaces.insert(h[m]);
      if (auto f = g.fields.find(m); f != g.fields.end()) g.fields[h[m]] = f->second;
      if (auto l = g.labels.find(m); l != g.labels.end()) g.labels[h[m]] = l->second;
    }
    const Relation res = g.residence, ri = g.ctor_iface, rc = g.connectivity;
    for (const auto& [x, y] : res)
      if (x != root && in.count(x)) g.residence.emplace(h[x], h[y]);
    for (const auto& [x, y] : ri)
      if (in.count(x) && in.count(y)) g.ctor_iface.emplace(h[x], h[y]);
    for (const auto& [x, y] : rc)
      if (in.count(x) && in.count(y)) g.connect(h[x], h[y]);
    return h[root];
  }

  void erase_type_subtree(const Id& root) {
    TypeGraph& g = t.internal;
    std::set<Id> gone{root};
    for (const auto& m : below(g.residence, root)) gone.insert(m);
    for (const auto& m : gone) {
      g.interfaces.erase(m);
      g.fields.erase(m);
      g.labels.erase(m);
    }
    auto touches = [&](const std::pair<Id, Id>& e) { return gone.count(e.first) || gone.count(e.second); };
    erase_pairs(g.residence, touches);
    erase_pairs(g.ctor_iface, touches);
    erase_pairs(g.connectivity, touches);
  }

  // Removes term components, every pair touching them and their
  // correspondence entries. Let-bindings take their fragment and their
  // interface subtree with them.
  void erase_components(const std::set<Id>& gone) {
    for (const auto& x : gone) {
      if (t.lets.count(x)) {
        if (auto i = image_of(t.let_iface, x)) erase_type_subtree(*i);
        t.let_corr.erase(x);
      }
      t.boxes.erase(x);
      t.nodes.erase(x);
      t.lets.erase(x);
      t.ports.erase(x);
      c.erase(x);
      for (auto& [_, frag] : t.let_corr) frag.erase(x);
    }
    auto touches = [&](const std::pair<Id, Id>& e) { return gone.count(e.first) || gone.count(e.second); };
    for (Relation* r : {&t.residence, &t.attachment, &t.res_wiring, &t.ctor_wiring, &t.ctor_arg, &t.ctor_usage,
                        &t.let_iface})
      erase_pairs(*r, touches);
  }

  std::optional<Id> wire_partner(const Id& p) const {
    for (const auto& [a, b] : t.res_wiring) {
      if (a == p) return b;
      if (b == p) return a;
    }
    return std::nullopt;
  }

  // Port of `owner` that the fragment of `let` maps to `field`.
  Id port_for(const Id& owner, const Id& let, const Id& field) const {
    const auto& frag = t.let_corr.at(let);
    for (const auto& p : ports_of(t, owner)) {
      auto it = frag.find(p);
      if (it != frag.end() && it->second == field) return p;
    }
    throw UsageError("no port of " + owner + " corresponds to " + field);
  }

  // Adds the constructor-wiring pair that licenses each usage crossing
  // into a nested box.
  void license_usages() {
    for (const auto& [m, port] : Relation(t.ctor_usage)) {
      auto bm = parent_of(t.residence, m);
      auto bc = parent_of(t.residence, port);
      if (!bm || !bc || *bm == *bc) continue;
      Id inner = *bm;
      std::optional<Id> up;
      while ((up = parent_of(t.residence, inner)) && *up != *bc) inner = *up;
      if (!up) continue;
      if (auto recv = image_of(t.ctor_arg, inner)) t.ctor_wiring.emplace(port, *recv);
    }
  }

  void substitute(const Id& d, const Id& b, const Id& n);
};

void Work::substitute(const Id& d, const Id& b, const Id& n) {
  const Id iface = image_of(t.let_iface, d).value();
  const Id home = parent_of(t.residence, n).value();

  // Copy domain: the ports of the body and everything residing in it.
  std::set<Id> dom;
  for (const auto& p : ports_of(t, b)) dom.insert(p);
  for (const auto& x : below(t.residence, b)) dom.insert(x);

  std::map<Id, Id> h;
  for (const auto& x : dom) h[x] = fresh(x);
  auto hx = [&](const Id& x) {
    auto it = h.find(x);
    return it == h.end() ? x : it->second;
  };

  std::map<Id, Id> th;  // internal-type copies for nested bindings
  for (const auto& x : dom) {
    if (t.boxes.count(x)) t.boxes.insert(h[x]);
    if (t.nodes.count(x)) t.nodes.insert(h[x]);
    if (t.lets.count(x)) {
      t.lets.insert(h[x]);
      if (auto i = image_of(t.let_iface, x)) t.let_iface.emplace(h[x], copy_type_subtree(*i, th));
    }
    if (auto p = t.ports.find(x); p != t.ports.end()) t.ports[h[x]] = p->second;
  }

  for (Relation* r : {&t.residence, &t.attachment, &t.res_wiring, &t.ctor_wiring, &t.ctor_arg, &t.ctor_usage}) {
    const Relation snapshot = *r;
    for (const auto& [x, y] : snapshot) {
      if (!dom.count(x) && !dom.count(y)) continue;
      if (y == b && r == &t.attachment) continue;  // body ports are re-attached below
      if (y == b && r == &t.residence) {
        r->emplace(h.at(x), home);
        continue;
      }
      r->emplace(hx(x), hx(y));
    }
  }

  const auto frags = t.let_corr;
  for (const auto& x : dom) {
    if (auto it = c.find(x); it != c.end()) c[h[x]] = it->second;
    for (const auto& [e, frag] : frags) {
      auto it = frag.find(x);
      if (it == frag.end()) continue;
      if (dom.count(e)) t.let_corr[h[e]][h[x]] = th.at(it->second);
      else t.let_corr[e][h[x]] = it->second;
    }
  }

  auto& frag_d = t.let_corr[d];
  for (const auto& f : fields_of(t.internal, iface)) {
    const Id pn = port_for(n, d, f);
    const Id pb = h.at(port_for(b, d, f));
    frag_d.erase(pn);
    frag_d.erase(pb);
    if (!t.internal.fields.at(f).is_ctor()) {
      auto x = wire_partner(pn);
      auto y = wire_partner(pb);
      erase_pairs(t.res_wiring, [&](const auto& e) {
        return e.first == pn || e.second == pn || e.first == pb || e.second == pb;
      });
      if (x && y && *x != pb && *y != pn) {
        if (t.ports.at(*x).is_provider()) t.res_wiring.emplace(*x, *y);
        else t.res_wiring.emplace(*y, *x);
      }
      for (const auto& p : {pn, pb}) {
        t.ports.erase(p);
        erase_pairs(t.attachment, [&](const auto& e) { return e.first == p; });
        erase_pairs(t.residence, [&](const auto& e) { return e.first == p; });
      }
      continue;
    }

    // Constructor pair: bind it with a fresh let-binding.
    const Id o = fresh(d);
    t.add_let(o, home);
    erase_pairs(t.attachment, [&](const auto& e) { return e.first == pn; });
    t.attachment.emplace(pn, o);
    t.attachment.emplace(pb, o);
    std::map<Id, Id> tf;
    const Id sub = image_of(t.internal.ctor_iface, f).value();
    t.let_iface.emplace(o, copy_type_subtree(sub, tf));
    auto& frag_o = t.let_corr[o];

    const DescentForest forest = descent_forest(t);
    std::vector<Id> moving;
    for (const auto& [x, _] : frag_d) {
      const auto ch = forest.chain(x);
      if (std::find(ch.begin() + 1, ch.end(), pn) != ch.end() || std::find(ch.begin() + 1, ch.end(), pb) != ch.end())
        moving.push_back(x);
    }
    for (const auto& x : moving) {
      frag_o[x] = tf.at(frag_d.at(x));
      frag_d.erase(x);
    }
  }

  erase_components({n});
  license_usages();
}

Work start(const TermGraph& t, const Correspondence& c, const Id& let) {
  Work w{t, c, {let, {}}, {}};
  return w;
}

struct LetParts {
  Id iface, body;
  std::vector<Id> uses;
  std::set<Id> ports;
};

LetParts parts_of(const TermGraph& t, const Id& d) {
  if (!t.lets.count(d)) throw UsageError("unknown let-binding " + d);
  LetParts lp;
  lp.iface = image_of(t.let_iface, d).value_or("");
  std::optional<Id> body;
  for (const auto& p : ports_of(t, d)) {
    lp.ports.insert(p);
    const Sort s = t.ports.at(p);
    if (s == kCtorReceived) body = preimage_of(t.ctor_arg, p);
    if (s == kCtorProvided) lp.uses = preimages_of(t.ctor_usage, p);
  }
  if (!body) throw UsageError("let-binding " + d + " has no body");
  lp.body = *body;
  std::sort(lp.uses.begin(), lp.uses.end());
  auto it = t.let_corr.find(d);
  auto covered = [&](const Id& x) {
    return it != t.let_corr.end() && it->second.count(x) && it->second.at(x) == lp.iface;
  };
  if (!covered(lp.body)) throw UsageError("body of " + d + " is not covered by its fragment");
  for (const auto& n : lp.uses) {
    if (!covered(n)) throw UsageError("occurrence " + n + " of " + d + " is not covered by its fragment");
    if (box_within(t, parent_of(t.residence, n).value_or(""), lp.body))
      throw UsageError("occurrence " + n + " lies inside the body of " + d);
  }
  return lp;
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::outermost_first: return "outermost-first";
    case Strategy::innermost_first: return "innermost-first";
    case Strategy::id_order: return "id-order";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& text) {
  for (auto s : {Strategy::outermost_first, Strategy::innermost_first, Strategy::id_order})
    if (text == to_string(s)) return s;
  return std::nullopt;
}

RewriteResult substitute(const TermGraph& t, const Correspondence& c, const Id& let, const Id& body, const Id& node) {
  const LetParts lp = parts_of(t, let);
  if (lp.body != body || std::find(lp.uses.begin(), lp.uses.end(), node) == lp.uses.end())
    throw UsageError(body + " and " + node + " are not body and occurrence of " + let);
  Work w = start(t, c, let);
  w.substitute(let, body, node);
  return {std::move(w.t), std::move(w.c), {std::move(w.entry)}};
}

RewriteResult inline_let(const TermGraph& t, const Correspondence& c, const Id& let) {
  const LetParts lp = parts_of(t, let);
  Work w = start(t, c, let);
  for (const auto& n : lp.uses) w.substitute(let, lp.body, n);

  std::set<Id> gone{let, lp.body};
  gone.insert(lp.ports.begin(), lp.ports.end());
  for (const auto& p : ports_of(w.t, lp.body)) gone.insert(p);
  for (const auto& x : below(w.t.residence, lp.body)) gone.insert(x);
  w.erase_components(gone);
  return {std::move(w.t), std::move(w.c), {std::move(w.entry)}};
}

ReductionCheckFailed::ReductionCheckFailed(RewriteResult r, Diagnostics d)
    : std::runtime_error("reduction result fails checks"), result(std::move(r)), diagnostics(std::move(d)) {}

RewriteResult reduce_step(const TypeGraph& type, const TermGraph& t, const Correspondence& c, const Id& let) {
  RewriteResult r = inline_let(t, c, let);
  Diagnostics d = check_bundle({type, r.term, r.external});
  if (!d.empty()) throw ReductionCheckFailed(std::move(r), std::move(d));
  return r;
}

std::vector<Id> list_redexes(const TermGraph& t) { return {t.lets.begin(), t.lets.end()}; }

std::optional<Id> choose_redex(const TermGraph& t, Strategy s) {
  std::optional<Id> best;
  int best_depth = 0;
  for (const auto& d : t.lets) {
    if (s == Strategy::id_order) return d;
    const int depth = residence_depth(t, d);
    const bool better = !best || (s == Strategy::outermost_first ? depth < best_depth : depth > best_depth);
    if (better) {
      best = d;
      best_depth = depth;
    }
  }
  return best;
}

StepLimitExceeded::StepLimitExceeded(RewriteResult p)
    : std::runtime_error("step-limit-exceeded"), partial(std::move(p)) {}

std::size_t default_max_steps() {
  if (const char* env = std::getenv("IDG_MAX_STEPS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 10000;
}

RewriteResult normalize(const TermGraph& t, const Correspondence& c, Strategy s, std::size_t max_steps) {
  RewriteResult cur{t, c, {}};
  while (auto d = choose_redex(cur.term, s)) {
    if (cur.trace.size() >= max_steps) throw StepLimitExceeded(std::move(cur));
    RewriteResult next = inline_let(cur.term, cur.external, *d);
    cur.term = std::move(next.term);
    cur.external = std::move(next.external);
    cur.trace.push_back(std::move(next.trace.front()));
  }
  return cur;
}

}  // namespace idg

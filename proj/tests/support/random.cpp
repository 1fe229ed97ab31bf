#include "random.hpp"

#include <algorithm>

#include "idg/correspondence.hpp"
#include "idg/equality.hpp"

namespace idg::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class C>
const auto& pick(Rng& rng, const C& c) {
  auto it = c.begin();
  std::advance(it, uniform(rng, 0, static_cast<int>(c.size()) - 1));
  return *it;
}

Sort any_sort(Rng& rng) {
  return Sort{coin(rng) ? Kind::constructor : Kind::resource, coin(rng) ? Polarity::provided : Polarity::received};
}

LambdaTerm lambda_at(Rng& rng, int depth, int bound) {
  std::vector<int> choices;
  if (bound > 0) choices.push_back(0);
  if (depth > 1) {
    choices.push_back(1);
    choices.push_back(2);
  }
  switch (choices[uniform(rng, 0, static_cast<int>(choices.size()) - 1)]) {
    case 0: return LambdaTerm::var(uniform(rng, 0, bound - 1));
    case 1: return LambdaTerm::abs(lambda_at(rng, depth - 1, bound + 1));
    default: return LambdaTerm::app(lambda_at(rng, depth - 1, bound), lambda_at(rng, depth - 1, bound));
  }
}

}  // namespace

AdjacencyMatrix graph(Rng& rng, std::size_t n, double p) {
  AdjacencyMatrix g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng, p)) g.set(a, b);
  return g;
}

BinTree tree(Rng& rng, int leaves) {
  if (leaves <= 1) return BinTree::leaf();
  const int l = uniform(rng, 1, leaves - 1);
  return BinTree::branch(tree(rng, l), tree(rng, leaves - l));
}

Multigraph multigraph(Rng& rng, int max_vertices, int max_edges) {
  Multigraph g;
  g.vertices = uniform(rng, 0, max_vertices);
  if (g.vertices == 0) return g;
  const int e = uniform(rng, 0, max_edges);
  for (int k = 0; k < e; ++k) g.edges.emplace_back(uniform(rng, 0, g.vertices - 1), uniform(rng, 0, g.vertices - 1));
  return g;
}

LambdaTerm lambda(Rng& rng, int depth) {
  // a closed term needs a binder before any variable
  return LambdaTerm::abs(lambda_at(rng, std::max(1, depth - 1), 1));
}

std::pair<TermGraph, Correspondence> term(Rng& rng, int n) {
  TermGraph t;
  Correspondence c;
  std::vector<Id> boxes{"z"}, nodes, lets, owners{"z"};
  t.add_box("z");
  c["z"] = "Z";
  for (int k = 1, nb = uniform(rng, 1, std::min(3, n)); k < nb; ++k) {
    const Id b = "b" + std::to_string(k);
    t.add_box(b, pick(rng, boxes));
    boxes.push_back(b);
    owners.push_back(b);
  }
  for (int k = 0, nn = uniform(rng, 0, n); k < nn; ++k) {
    const Id x = "n" + std::to_string(k);
    t.add_node(x, pick(rng, boxes));
    nodes.push_back(x);
    owners.push_back(x);
  }
  for (int k = 0, nd = uniform(rng, 0, std::min(2, n)); k < nd; ++k) {
    const Id d = "d" + std::to_string(k);
    t.add_let(d, pick(rng, boxes));
    lets.push_back(d);
    owners.push_back(d);
    const Id i = "I" + std::to_string(k);
    t.internal.add_interface(i);
    t.let_iface.emplace(d, i);
    for (int f = 0, nf = uniform(rng, 0, 2); f < nf; ++f)
      t.internal.add_field(i + "f" + std::to_string(f), any_sort(rng), i);
  }
  std::vector<Id> ports;
  for (int k = 0, np = uniform(rng, 1, n); k < np; ++k) {
    const Id p = "p" + std::to_string(k);
    t.add_port(p, any_sort(rng), pick(rng, owners));
    ports.push_back(p);
    if (coin(rng, 0.3)) c[p] = coin(rng) ? "A" : "B";
  }
  for (int k = 0, nw = uniform(rng, 0, 3); k < nw; ++k) {
    const Id& a = pick(rng, ports);
    const Id& b = pick(rng, ports);
    if (a == b) continue;
    (t.ports[a].is_ctor() ? t.ctor_wiring : t.res_wiring).emplace(a, b);
  }
  if (!nodes.empty() && coin(rng)) t.ctor_usage.emplace(pick(rng, nodes), pick(rng, ports));
  if (boxes.size() > 1 && coin(rng)) t.ctor_arg.emplace(pick(rng, boxes), pick(rng, ports));
  for (const auto& d : lets) {
    std::vector<Id> targets;
    for (const auto& [x, _] : t.internal.fields) targets.push_back(x);
    for (const auto& x : t.internal.interfaces) targets.push_back(x);
    for (int k = 0, nk = uniform(rng, 0, 2); k < nk; ++k)
      t.let_corr[d].emplace(pick(rng, owners), pick(rng, targets));
  }
  return {t, c};
}

std::pair<TermGraph, Correspondence> shuffle(Rng& rng, const TermGraph& t, const Correspondence& c) {
  std::vector<Id> ids;
  for (const auto& x : t.boxes) ids.push_back(x);
  for (const auto& x : t.nodes) ids.push_back(x);
  for (const auto& x : t.lets) ids.push_back(x);
  for (const auto& [x, _] : t.ports) ids.push_back(x);
  for (const auto& x : t.internal.interfaces) ids.push_back(x);
  for (const auto& [x, _] : t.internal.fields) ids.push_back(x);
  std::vector<int> perm(ids.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  std::shuffle(perm.begin(), perm.end(), rng);
  Relabeling h;
  for (std::size_t k = 0; k < ids.size(); ++k) h.ids[ids[k]] = "r" + std::to_string(perm[k]);
  return {relabel(h, t), relabel(h, c)};
}

std::pair<TermGraph, Correspondence> mutate(Rng& rng, TermGraph t, Correspondence c) {
  switch (uniform(rng, 0, 4)) {
    case 0: {
      auto& [p, s] = *std::next(t.ports.begin(), uniform(rng, 0, static_cast<int>(t.ports.size()) - 1));
      s.polarity = flip(s.polarity);
      (void)p;
      break;
    }
    case 1:
      if (!t.res_wiring.empty()) t.res_wiring.erase(pick(rng, t.res_wiring));
      else t.res_wiring.emplace(t.ports.begin()->first, std::prev(t.ports.end())->first);
      break;
    case 2: {
      const Id& p = pick(rng, t.ports).first;
      if (c.count(p)) c.erase(p);
      else c[p] = "A";
      break;
    }
    case 3: {
      // move one port to another owner
      const Id p = pick(rng, t.ports).first;
      std::vector<Id> owners(t.boxes.begin(), t.boxes.end());
      owners.insert(owners.end(), t.nodes.begin(), t.nodes.end());
      const Id o = pick(rng, owners);
      for (auto it = t.attachment.begin(); it != t.attachment.end(); ++it)
        if (it->first == p) {
          t.attachment.erase(it);
          break;
        }
      t.attachment.emplace(p, o);
      break;
    }
    default:
      if (!t.ctor_wiring.empty()) t.ctor_wiring.erase(pick(rng, t.ctor_wiring));
      else t.ctor_usage.emplace(*t.boxes.begin(), t.ports.begin()->first);
      break;
  }
  return {t, c};
}

bool swap_wires(Rng& rng, Bundle& b) {
  std::vector<std::pair<Id, Id>> wires(b.term.res_wiring.begin(), b.term.res_wiring.end());
  std::shuffle(wires.begin(), wires.end(), rng);
  auto field = [&](const Id& p) {
    auto tgt = lookup(b.external, b.term, p);
    return tgt ? tgt->id : Id{};
  };
  for (std::size_t i = 0; i < wires.size(); ++i)
    for (std::size_t j = i + 1; j < wires.size(); ++j) {
      const auto& [a, x] = wires[i];
      const auto& [c, y] = wires[j];
      if (x == y || field(x).empty() || field(x) != field(y) || field(a) != field(c)) continue;
      b.term.res_wiring.erase(wires[i]);
      b.term.res_wiring.erase(wires[j]);
      b.term.res_wiring.emplace(a, y);
      b.term.res_wiring.emplace(c, x);
      return true;
    }
  return false;
}

Bundle wf_instance(Rng& rng, std::size_t max_ports) {
  for (;;) {
    Bundle b;
    switch (uniform(rng, 0, 3)) {
      case 0: b = encode_tree(tree(rng, uniform(rng, 2, 6))); break;
      case 1: b = encode_multigraph(multigraph(rng, 3, 3)); break;
      case 2: b = encode_lambda(lambda(rng, uniform(rng, 2, 4))); break;
      default: b = lambda_scope_escape(coin(rng)); break;
    }
    if (b.term.ports.size() > max_ports) continue;
    for (int k = 0, n = uniform(rng, 0, 3); k < n; ++k) swap_wires(rng, b);
    return b;
  }
}

}  // namespace idg::gen

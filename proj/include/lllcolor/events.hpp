#pragma once

// Concrete bad-event families over a graph. Each family carries the
// events (scope, probability, anchors), the weight ansatz that saturates
// the improved condition, and enough structure to emit a DependencyGraph
// with per-event clique covers (one clique per anchor element: all
// events whose scope contains that edge/vertex).

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lllcolor/bounds.hpp"
#include "lllcolor/graph.hpp"
#include "lllcolor/lll.hpp"

namespace lllcolor {

enum class EventKind {
  AdjacentEdgePair,
  RecoloredPair,
  EvenCycleBichromatic,
  CycleMonoOrBichromatic,
  OddCycleMonochromatic,
  EtaStar,
  HalfMonoCycle,
  BaseBichromaticCycle,
  VertexEdge,
  Path4,
  Path3,
  InducedC4,
  SpecialPair,
  FrugalSet,
};

inline std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::AdjacentEdgePair: return "AdjacentEdgePair";
    case EventKind::RecoloredPair: return "RecoloredPair";
    case EventKind::EvenCycleBichromatic: return "EvenCycleBichromatic";
    case EventKind::CycleMonoOrBichromatic: return "CycleMonoOrBichromatic";
    case EventKind::OddCycleMonochromatic: return "OddCycleMonochromatic";
    case EventKind::EtaStar: return "EtaStar";
    case EventKind::HalfMonoCycle: return "HalfMonoCycle";
    case EventKind::BaseBichromaticCycle: return "BaseBichromaticCycle";
    case EventKind::VertexEdge: return "VertexEdge";
    case EventKind::Path4: return "Path4";
    case EventKind::Path3: return "Path3";
    case EventKind::InducedC4: return "InducedC4";
    case EventKind::SpecialPair: return "SpecialPair";
    case EventKind::FrugalSet: return "FrugalSet";
  }
  return "?";
}

struct BadEvent {
  EventKind kind;
  std::vector<int> scope;  // sorted variable indices (edges or vertices)
  double p = 0.0;
  double mu = 0.0;  // paper ansatz weight, packaged with the family
  // Kind-specific structure the scope set alone cannot express:
  //  Path3/Path4/InducedC4: the vertex sequence along the path/cycle;
  //  HalfMonoCycle/BaseBichromaticCycle: one alternate half (edge indices,
  //  the monochromatic half for HalfMonoCycle).
  std::vector<int> aux;
};

enum class Variant { acyclic_edge, girth_eta, delta_plus_2, acyclic_vertex, star, frugal };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::acyclic_edge: return "acyclic-edge";
    case Variant::girth_eta: return "girth-eta";
    case Variant::delta_plus_2: return "delta-plus-2";
    case Variant::acyclic_vertex: return "acyclic-vertex";
    case Variant::star: return "star";
    case Variant::frugal: return "frugal";
  }
  return "?";
}

struct EventFamily {
  Variant variant;
  long long colors = 0;  // N
  int eta = 0;
  int beta = 0;
  double w = 0.0;  // recolor rate c/Delta (delta-plus-2 only)
  std::vector<BadEvent> events;
  // variable universe size (edge count or vertex count), for audits
  int variable_count = 0;

  // Dependency graph with intersection adjacency and anchor clique covers.
  DependencyGraph dependency_graph() const {
    DependencyGraph d;
    for (const auto& e : events) d.add_event(e.p, e.mu);
    std::map<int, std::vector<int>> by_var;
    for (int i = 0; i < static_cast<int>(events.size()); ++i)
      for (int v : events[i].scope) by_var[v].push_back(i);
    for (auto& [v, ids] : by_var)
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) d.add_edge(ids[a], ids[b]);
    for (int i = 0; i < static_cast<int>(events.size()); ++i) {
      std::vector<std::vector<int>> cover;
      for (int v : events[i].scope) cover.push_back(by_var[v]);
      d.set_clique_cover(i, std::move(cover));
    }
    return d;
  }
};

namespace detail {

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Vertex sequence around a cycle given as an edge-index set.
inline std::vector<int> cycle_vertex_sequence(const Graph& g, const CycleEdges& c) {
  std::map<int, std::vector<int>> next;  // vertex -> incident cycle edges
  for (int e : c) {
    next[g.edge(e).first].push_back(e);
    next[g.edge(e).second].push_back(e);
  }
  std::vector<int> seq;
  int start = next.begin()->first;
  int v = start, prev_edge = -1;
  do {
    seq.push_back(v);
    int e = (next[v][0] != prev_edge) ? next[v][0] : next[v][1];
    v = g.other_end(e, v);
    prev_edge = e;
  } while (v != start);
  return seq;
}

// Edge indices of one alternate half of an even cycle, starting from the
// lexicographically smallest edge.
inline std::pair<std::vector<int>, std::vector<int>> cycle_halves(const Graph& g,
                                                                  const CycleEdges& c) {
  auto seq = cycle_vertex_sequence(g, c);
  std::vector<int> a, b;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int e = *g.edge_index(seq[i], seq[(i + 1) % seq.size()]);
    (i % 2 == 0 ? a : b).push_back(e);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b < a) std::swap(a, b);
  return {a, b};
}

inline void subsets_of_size(const std::vector<int>& items, int k,
                            const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      emit(cur);
      return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= items.size(); ++i) {
      cur.push_back(items[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// --- item (a): adjacent-pair + properly-bichromatic even-cycle events ---

inline EventFamily build_acyclic_edge(const Graph& g, long long n_colors, int max_cycle_len,
                                      std::size_t cap = kDefaultEnumerationCap) {
  if (n_colors < 2) throw std::invalid_argument("build_acyclic_edge: N must be >= 2");
  EventFamily fam;
  fam.variant = Variant::acyclic_edge;
  fam.colors = n_colors;
  fam.variable_count = g.edge_count();
  const int delta = g.max_degree();
  const double mu1 = (delta >= 2 ? bound_acyclic_edge(std::max(delta, 3)).alpha / (delta - 1) : 0.5);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        fam.events.push_back({EventKind::AdjacentEdgePair,
                              detail::sorted({inc[i], inc[j]}), 1.0 / n_colors, mu1, {}});
  }
  for (const auto& c : enumerate_cycles(g, max_cycle_len, cap)) {
    if (c.size() % 2 != 0) continue;
    const int two_k = static_cast<int>(c.size());
    fam.events.push_back({EventKind::EvenCycleBichromatic, c,
                          std::pow(static_cast<double>(n_colors), -(two_k - 2)),
                          std::pow(mu1, two_k - 2), {}});
  }
  return fam;
}

// --- item (b) stage 1: eta-star + cycle events, girth >= 5 ---

inline EventFamily build_girth_variant(const Graph& g, long long n_colors, int eta,
                                       int max_cycle_len,
                                       std::size_t cap = kDefaultEnumerationCap) {
  if (eta < 2) throw std::invalid_argument("build_girth_variant: eta must be >= 2");
  auto gg = girth(g);
  if (gg && *gg < 5) throw std::invalid_argument("build_girth_variant: girth must be >= 5");
  EventFamily fam;
  fam.variant = Variant::girth_eta;
  fam.colors = n_colors;
  fam.eta = eta;
  fam.variable_count = g.edge_count();
  const int delta = g.max_degree();
  double mu = 0.5;
  if (delta >= 3)
    mu = bound_girth_acyclic_edge(delta, std::max(gg.value_or(5), 5), eta).alpha / (delta - 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    detail::subsets_of_size(g.incident_edges(v), eta + 1, [&](const std::vector<int>& s) {
      fam.events.push_back({EventKind::EtaStar, detail::sorted(s),
                            std::pow(static_cast<double>(n_colors), -eta),
                            std::pow(mu, eta), {}});
    });
  }
  for (const auto& c : enumerate_cycles(g, max_cycle_len, cap)) {
    const int len = static_cast<int>(c.size());
    if (len % 2 == 0) {
      // exactly N^2 / N^len good-bad colorings: mono (N) + properly bichromatic (N(N-1))
      fam.events.push_back({EventKind::CycleMonoOrBichromatic, c,
                            std::pow(static_cast<double>(n_colors), -(len - 2)),
                            std::pow(mu, len - 2), {}});
    } else {
      fam.events.push_back({EventKind::OddCycleMonochromatic, c,
                            std::pow(static_cast<double>(n_colors), -(len - 1)),
                            std::pow(mu, len - 1), {}});
    }
  }
  return fam;
}

// --- item (c): recoloring indicators over a proper base coloring ---

// base[e] is the base color of edge e; events are over the per-edge
// recolor indicators, each drawn with probability w = c/Delta.
inline EventFamily build_delta_plus_2(const Graph& g, const std::vector<int>& base,
                                      double w, int max_cycle_len,
                                      std::size_t cap = kDefaultEnumerationCap) {
  if (static_cast<int>(base.size()) != g.edge_count())
    throw std::invalid_argument("build_delta_plus_2: base coloring size mismatch");
  if (!(w > 0.0 && w <= 0.5))
    throw std::invalid_argument("build_delta_plus_2: need 0 < c/Delta <= 1/2");
  const int delta = std::max(g.max_degree(), 1);
  int base_colors = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      base_colors = std::max(base_colors, base[inc[i]] + 1);
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (base[inc[i]] == base[inc[j]])
          throw std::invalid_argument("build_delta_plus_2: base coloring is not proper");
    }
  }
  if (base_colors > delta + 1)
    throw std::invalid_argument("build_delta_plus_2: base coloring uses more than Delta+1 colors");

  EventFamily fam;
  fam.variant = Variant::delta_plus_2;
  fam.colors = delta + 2;
  fam.w = w;
  fam.variable_count = g.edge_count();
  double alpha = 0.155;
  if (delta >= 3) alpha = girth_threshold_delta_plus_2(delta).alpha;
  const double mu_pair = alpha * alpha / (static_cast<double>(delta) * delta);

  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        fam.events.push_back({EventKind::RecoloredPair,
                              detail::sorted({inc[i], inc[j]}), w * w, mu_pair, {}});
  }
  for (const auto& c : enumerate_cycles(g, max_cycle_len, cap)) {
    if (c.size() % 2 != 0) continue;  // only even cycles can be bichromatic/half-mono
    const int k = static_cast<int>(c.size()) / 2;
    auto [ha, hb] = detail::cycle_halves(g, c);
    auto mono = [&](const std::vector<int>& h) {
      for (int e : h)
        if (base[e] != base[h.front()]) return false;
      return true;
    };
    std::set<int> colors_used;
    for (int e : c) colors_used.insert(base[e]);
    if (colors_used.size() == 2 && mono(ha) && mono(hb)) {
      double p = std::pow(1 - w, 2 * k) + 2 * std::pow(w * (1 - w), k);
      fam.events.push_back({EventKind::BaseBichromaticCycle, c, p, mu_pair, ha});
    } else if (mono(ha) != mono(hb)) {
      double p = std::pow(w * (1 - w), k);
      fam.events.push_back({EventKind::HalfMonoCycle, c, p,
                            std::pow(alpha / delta, k), mono(ha) ? ha : hb});
    }
  }
  return fam;
}

// --- item (d): vertex events for acyclic vertex coloring ---

inline EventFamily build_acyclic_vertex(const Graph& g, long long n_colors,
                                        std::size_t cap = kDefaultEnumerationCap) {
  if (n_colors < 2) throw std::invalid_argument("build_acyclic_vertex: N must be >= 2");
  EventFamily fam;
  fam.variant = Variant::acyclic_vertex;
  fam.colors = n_colors;
  fam.variable_count = g.vertex_count();
  const int delta = std::max(g.max_degree(), 1);
  const double mu = 0.34 / std::pow(delta, 4.0 / 3.0);
  const double inv_n = 1.0 / static_cast<double>(n_colors);

  for (const auto& [u, v] : g.edges())
    fam.events.push_back({EventKind::VertexEdge, detail::sorted({u, v}), inv_n, mu, {}});

  for (const auto& path : enumerate_paths(g, 4, cap))
    fam.events.push_back({EventKind::Path4, detail::sorted(path),
                          inv_n * inv_n * inv_n, mu * mu * mu, path});

  auto specials = special_pairs(g);
  std::set<std::pair<int, int>> special_set(specials.begin(), specials.end());

  for (const auto& c : enumerate_cycles(g, 4, cap)) {
    if (c.size() != 4) continue;
    auto seq = detail::cycle_vertex_sequence(g, c);
    // induced: no chord between the two opposite pairs
    if (g.adjacent(seq[0], seq[2]) || g.adjacent(seq[1], seq[3])) continue;
    auto is_special = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return special_set.count({a, b}) > 0;
    };
    if (is_special(seq[0], seq[2]) || is_special(seq[1], seq[3])) continue;
    fam.events.push_back({EventKind::InducedC4, detail::sorted(seq),
                          inv_n * inv_n, mu * mu, seq});
  }

  for (auto [u, v] : specials)
    fam.events.push_back({EventKind::SpecialPair, detail::sorted({u, v}), inv_n, mu, {}});
  return fam;
}

// --- item (e): star coloring events ---

inline EventFamily build_star(const Graph& g, long long n_colors,
                              std::size_t cap = kDefaultEnumerationCap) {
  if (n_colors < 2) throw std::invalid_argument("build_star: N must be >= 2");
  EventFamily fam;
  fam.variant = Variant::star;
  fam.colors = n_colors;
  fam.variable_count = g.vertex_count();
  const int delta = std::max(g.max_degree(), 1);
  const double mu = star_alpha0(delta) / std::pow(delta, 1.5);
  const double inv_n = 1.0 / static_cast<double>(n_colors);
  for (const auto& [u, v] : g.edges())
    fam.events.push_back({EventKind::VertexEdge, detail::sorted({u, v}), inv_n, mu, {}});
  for (const auto& path : enumerate_paths(g, 3, cap))
    fam.events.push_back({EventKind::Path3, detail::sorted(path), inv_n * inv_n, mu * mu, path});
  return fam;
}

// --- item (f): frugal coloring events ---

inline EventFamily build_frugal(const Graph& g, long long n_colors, int beta,
                                std::size_t cap = kDefaultEnumerationCap) {
  if (beta < 2 || n_colors < 2)
    throw std::invalid_argument("build_frugal: need beta >= 2 and N >= 2");
  EventFamily fam;
  fam.variant = Variant::frugal;
  fam.colors = n_colors;
  fam.beta = beta;
  fam.variable_count = g.vertex_count();
  const int delta = std::max(g.max_degree(), 1);
  // A single rate alpha/Delta must satisfy the pair condition and the
  // frugal-set condition simultaneously, so pick the alpha minimizing the
  // larger of the two color-count requirements at this Delta (the two
  // headline constants have different optimizers).
  auto requirement = [&](double a) {
    const double gv = 1 + a + std::pow(a, 1.0 + beta);
    const double f_pair = gv * gv / a * delta;
    const double f_set = std::pow(gv / a, 1.0 + 1.0 / beta) *
                         std::pow(static_cast<double>(delta), 1.0 + 1.0 / beta) /
                         std::pow(factorial_d(beta), 1.0 / beta);
    return std::max(f_pair, f_set);
  };
  const double alpha = minimize_univariate(requirement, kAlphaBracketLo, kAlphaOpenBracketHi).x;
  const double mu = alpha / delta;
  const double mu_set = factorial_d(beta) * std::pow(mu, 1 + beta);
  const double inv_n = 1.0 / static_cast<double>(n_colors);
  for (const auto& [u, v] : g.edges())
    fam.events.push_back({EventKind::VertexEdge, detail::sorted({u, v}), inv_n, mu, {}});
  std::set<std::vector<int>> seen;  // the same set can appear in two neighborhoods
  for (int v = 0; v < g.vertex_count(); ++v) {
    detail::subsets_of_size(g.neighbors(v), beta + 1, [&](const std::vector<int>& s) {
      if (static_cast<std::size_t>(seen.size()) >= cap)
        throw cap_exceeded("build_frugal: frugal-set enumeration exceeded cap");
      if (seen.insert(s).second)
        fam.events.push_back({EventKind::FrugalSet, s,
                              std::pow(static_cast<double>(n_colors), -beta), mu_set, {}});
    });
  }
  return fam;
}

// Does the event occur under the given assignment? For delta-plus-2
// families, `assignment` holds the 0/1 recolor indicators. Cycle events
// need the host graph to walk the cycle.
inline bool event_occurs(const BadEvent& ev, const std::vector<int>& assignment,
                         const Graph& g) {
  auto same = [&](int a, int b) { return assignment[a] == assignment[b]; };
  switch (ev.kind) {
    case EventKind::AdjacentEdgePair:
    case EventKind::VertexEdge:
    case EventKind::SpecialPair:
      return same(ev.scope[0], ev.scope[1]);
    case EventKind::RecoloredPair:
      // indicator semantics: bad only when both edges were recolored
      return assignment[ev.scope[0]] == 1 && assignment[ev.scope[1]] == 1;
    case EventKind::EtaStar:
    case EventKind::FrugalSet:
    case EventKind::OddCycleMonochromatic: {
      for (std::size_t i = 1; i < ev.scope.size(); ++i)
        if (!same(ev.scope[0], ev.scope[i])) return false;
      return true;
    }
    case EventKind::Path4:
      return same(ev.aux[0], ev.aux[2]) && same(ev.aux[2], ev.aux[4]) && same(ev.aux[1], ev.aux[3]);
    case EventKind::Path3:
    case EventKind::InducedC4:
      return same(ev.aux[0], ev.aux[2]) && same(ev.aux[1], ev.aux[3]);
    case EventKind::EvenCycleBichromatic:
    case EventKind::CycleMonoOrBichromatic: {
      auto seq = detail::cycle_vertex_sequence(g, ev.scope);
      std::vector<int> cols;
      for (std::size_t i = 0; i < seq.size(); ++i)
        cols.push_back(assignment[*g.edge_index(seq[i], seq[(i + 1) % seq.size()])]);
      bool mono = true, alternating = true;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] != cols[0]) mono = false;
        if (cols[i] != cols[i % 2]) alternating = false;
      }
      if (mono) return ev.kind == EventKind::CycleMonoOrBichromatic;
      return alternating && cols[0] != cols[1];
    }
    case EventKind::BaseBichromaticCycle: {
      bool none_recolored = true;
      for (int e : ev.scope)
        if (assignment[e]) { none_recolored = false; break; }
      if (none_recolored) return true;
      auto half_state = [&](const std::vector<int>& h) {
        int cnt = 0;
        for (int e : h) cnt += assignment[e] ? 1 : 0;
        return cnt;  // 0 = untouched, |h| = fully recolored
      };
      std::vector<int> other;
      std::set<int> in_half(ev.aux.begin(), ev.aux.end());
      for (int e : ev.scope)
        if (!in_half.count(e)) other.push_back(e);
      int a = half_state(ev.aux), b = half_state(other);
      int ha = static_cast<int>(ev.aux.size()), hb = static_cast<int>(other.size());
      return (a == ha && b == 0) || (a == 0 && b == hb);
    }
    case EventKind::HalfMonoCycle: {
      // becomes properly bichromatic: non-mono half fully recolored,
      // mono half untouched
      std::set<int> mono_half(ev.aux.begin(), ev.aux.end());
      for (int e : ev.scope) {
        bool in_mono = mono_half.count(e) > 0;
        if (in_mono && assignment[e]) return false;
        if (!in_mono && !assignment[e]) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace lllcolor

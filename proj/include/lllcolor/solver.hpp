#pragma once

// Resample-until-quiet solver over a bad-event family, plus the two
// composite pipelines: the two-stage scheme for high-girth graphs
// (eta-stage coloring, then forest expansion) and the recoloring scheme
// that upgrades a Delta+1 proper edge coloring to an acyclic one with a
// single extra color.
//
// Determinism contract: with a fixed seed the run is bit-reproducible.
// The violated event chosen for resampling is always the first in (kind
// tag, lexicographic scope) order, and the variables of its scope are
// redrawn in increasing index order, one draw each.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lllcolor/events.hpp"
#include "lllcolor/graph.hpp"
#include "lllcolor/rng.hpp"
#include "lllcolor/verify.hpp"
#include "lllcolor/vizing.hpp"

namespace lllcolor {

struct SolveReport {
  std::string variant;
  int n = 0;  // vertices
  int m = 0;  // edges
  long long colors = 0;
  std::vector<int> assignment;
  std::uint64_t seed = 0;
  long long resamples = 0;
  bool valid = false;
};

inline nlohmann::ordered_json to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["variant"] = r.variant;
  j["n"] = r.n;
  j["m"] = r.m;
  j["colors"] = r.colors;
  j["assignment"] = r.assignment;
  j["seed"] = r.seed;
  j["resamples"] = r.resamples;
  j["valid"] = r.valid;
  return j;
}

constexpr long long kDefaultMaxResamples = 1'000'000;

namespace detail {

inline std::vector<int> event_order(const EventFamily& fam) {
  std::vector<int> order(fam.events.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ea = fam.events[a];
    const auto& eb = fam.events[b];
    if (ea.kind != eb.kind) return static_cast<int>(ea.kind) < static_cast<int>(eb.kind);
    return ea.scope < eb.scope;
  });
  return order;
}

inline void draw(const EventFamily& fam, Rng& rng, int var, std::vector<int>& assignment) {
  if (fam.variant == Variant::delta_plus_2)
    assignment[var] = rng.bernoulli(fam.w) ? 1 : 0;
  else
    assignment[var] = static_cast<int>(rng.below(static_cast<std::uint64_t>(fam.colors)));
}

}  // namespace detail

// Moser-Tardos resampling over the family's variables. Returns when no
// event occurs (valid) or the resample budget is exhausted (not valid);
// the assignment of the last state is reported either way.
inline SolveReport resample_solve(const Graph& g, const EventFamily& fam, std::uint64_t seed,
                                  long long max_resamples = kDefaultMaxResamples) {
  SolveReport rep;
  rep.variant = to_string(fam.variant);
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.colors = fam.colors;
  rep.seed = seed;

  Rng rng(seed);
  std::vector<int> assignment(fam.variable_count);
  for (int v = 0; v < fam.variable_count; ++v) detail::draw(fam, rng, v, assignment);

  const auto order = detail::event_order(fam);
  while (true) {
    int violated = -1;
    for (int idx : order)
      if (event_occurs(fam.events[idx], assignment, g)) { violated = idx; break; }
    if (violated == -1) {
      rep.valid = true;
      break;
    }
    if (rep.resamples >= max_resamples) break;
    ++rep.resamples;
    for (int v : fam.events[violated].scope) detail::draw(fam, rng, v, assignment);
  }
  rep.assignment = assignment;
  return rep;
}

// Expand an eta-stage edge coloring into a proper acyclic one: each stage
// color class is a forest of maximum degree <= eta, so eta subcolors
// suffice when edges are colored parent-first. Final color = stage * eta
// + subcolor. Throws if a class is not such a forest.
inline std::vector<int> expand_eta_coloring(const Graph& g, const std::vector<int>& stage,
                                            int eta) {
  if (static_cast<int>(stage.size()) != g.edge_count())
    throw std::invalid_argument("expand_eta_coloring: stage coloring size mismatch");
  if (eta < 1) throw std::invalid_argument("expand_eta_coloring: eta must be >= 1");
  std::vector<int> out(g.edge_count(), -1);
  std::vector<int> sub(g.edge_count(), -1);
  std::set<int> classes(stage.begin(), stage.end());
  for (int cls : classes) {
    // BFS over the class subgraph, coloring each tree edge on discovery
    std::vector<char> visited(g.vertex_count(), 0);
    for (int root = 0; root < g.vertex_count(); ++root) {
      if (visited[root]) continue;
      bool touches = false;
      for (int e : g.incident_edges(root))
        if (stage[e] == cls) { touches = true; break; }
      if (!touches) continue;
      visited[root] = 1;
      std::vector<int> queue{root};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int e : g.incident_edges(u)) {
          if (stage[e] != cls) continue;
          int w = g.other_end(e, u);
          if (sub[e] != -1) continue;  // already colored from the other side
          if (visited[w])
            throw std::invalid_argument("expand_eta_coloring: stage class contains a cycle");
          // smallest subcolor unused on the colored class edges at u or w
          std::vector<char> used(eta, 0);
          for (int x : {u, w})
            for (int f : g.incident_edges(x))
              if (stage[f] == cls && sub[f] != -1) used[sub[f]] = 1;
          int pick = -1;
          for (int s = 0; s < eta; ++s)
            if (!used[s]) { pick = s; break; }
          if (pick == -1)
            throw std::invalid_argument("expand_eta_coloring: stage class degree exceeds eta");
          sub[e] = pick;
          out[e] = stage[e] * eta + pick;
          visited[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

// Two-stage pipeline for graphs of girth >= 5: resample an eta-stage
// coloring with stage_colors colors, then expand. Final palette is
// stage_colors * eta.
inline SolveReport solve_girth_pipeline(const Graph& g, long long stage_colors, int eta,
                                        std::uint64_t seed,
                                        long long max_resamples = kDefaultMaxResamples,
                                        int max_cycle_len = -1,
                                        std::size_t cap = kDefaultEnumerationCap) {
  if (max_cycle_len < 0) max_cycle_len = g.vertex_count();
  auto fam = build_girth_variant(g, stage_colors, eta, std::max(max_cycle_len, 3), cap);
  SolveReport rep = resample_solve(g, fam, seed, max_resamples);
  rep.variant = "girth-eta";
  if (!rep.valid) return rep;
  rep.assignment = expand_eta_coloring(g, rep.assignment, eta);
  rep.colors = stage_colors * eta;
  Coloring c{ColoringTarget::edges, rep.assignment, rep.colors};
  rep.valid = !verify(g, c, VerifyVariant::acyclic_edge).has_value();
  return rep;
}

// Recoloring pipeline: proper Delta+1 base coloring, then resample the
// per-edge recolor indicators (rate w = c0/Delta) until no bad event
// occurs; recolored edges all move to the one extra color. Cycles longer
// than max_cycle_len are not covered by events, so the final coloring is
// verified outright; on a miss the run restarts with a fresh stream.
inline SolveReport solve_delta_plus_2(const Graph& g, std::uint64_t seed,
                                      long long max_resamples = kDefaultMaxResamples,
                                      int max_cycle_len = -1,
                                      std::size_t cap = kDefaultEnumerationCap,
                                      int max_restarts = 16) {
  const int delta = std::max(g.max_degree(), 1);
  if (max_cycle_len < 0) max_cycle_len = g.vertex_count();
  auto base = vizing_proper_edge_coloring(g);
  const auto thr = girth_threshold_delta_plus_2(std::max(delta, 3));
  const double w = std::min(thr.constant / delta, 0.5);
  auto fam = build_delta_plus_2(g, base, w, std::max(max_cycle_len, 3), cap);

  SolveReport rep;
  long long spent = 0;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    rep = resample_solve(g, fam, seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ull,
                         max_resamples - spent);
    spent += rep.resamples;
    rep.resamples = spent;
    rep.seed = seed;
    rep.variant = "delta-plus-2";
    rep.colors = delta + 2;
    if (!rep.valid) break;
    std::vector<int> colored(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
      colored[e] = rep.assignment[e] ? delta + 1 : base[e];
    Coloring c{ColoringTarget::edges, colored, delta + 2};
    if (!verify(g, c, VerifyVariant::acyclic_edge)) {
      rep.assignment = colored;
      rep.valid = true;
      return rep;
    }
    rep.valid = false;  // an uncovered long cycle slipped through
    if (spent >= max_resamples) break;
  }
  return rep;
}

// One-shot solve entry point for the event-family variants that color
// directly (everything except the two pipelines above).
inline SolveReport solve_variant(const Graph& g, Variant variant, long long n_colors,
                                 std::uint64_t seed, int eta = 2, int beta = 2,
                                 long long max_resamples = kDefaultMaxResamples,
                                 int max_cycle_len = -1,
                                 std::size_t cap = kDefaultEnumerationCap) {
  if (max_cycle_len < 0) max_cycle_len = g.vertex_count();
  max_cycle_len = std::max(max_cycle_len, 3);
  EventFamily fam;
  switch (variant) {
    case Variant::acyclic_edge: fam = build_acyclic_edge(g, n_colors, max_cycle_len, cap); break;
    case Variant::girth_eta:
      return solve_girth_pipeline(g, n_colors, eta, seed, max_resamples, max_cycle_len, cap);
    case Variant::delta_plus_2:
      return solve_delta_plus_2(g, seed, max_resamples, max_cycle_len, cap);
    case Variant::acyclic_vertex: fam = build_acyclic_vertex(g, n_colors, cap); break;
    case Variant::star: fam = build_star(g, n_colors, cap); break;
    case Variant::frugal: fam = build_frugal(g, n_colors, beta, cap); break;
  }
  SolveReport rep = resample_solve(g, fam, seed, max_resamples);
  if (rep.valid) {
    // independent validation of the finished coloring
    VerifyVariant vv = VerifyVariant::acyclic_edge;
    VerifyParams params;
    params.beta = beta;
    switch (variant) {
      case Variant::acyclic_edge: vv = VerifyVariant::acyclic_edge; break;
      case Variant::acyclic_vertex: vv = VerifyVariant::acyclic_vertex; break;
      case Variant::star: vv = VerifyVariant::star; break;
      case Variant::frugal: vv = VerifyVariant::frugal; break;
      default: break;
    }
    Coloring c{variant == Variant::acyclic_edge ? ColoringTarget::edges : ColoringTarget::vertices,
               rep.assignment, rep.colors};
    rep.valid = !verify(g, c, vv, params).has_value();
  }
  return rep;
}

}  // namespace lllcolor

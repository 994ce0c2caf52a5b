#pragma once

// Abstract dependency graphs and the two local-lemma conditions:
//   classic:          p_x <= mu_x / phi_x(mu),   phi product form
//   improved-exact:   p_x <= mu_x / phi*_x(mu),  phi* = independent-set
//                     polynomial of the subgraph induced by Gamma*(x)
//   improved-clique:  phi* replaced by its clique-cover product bound.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lllcolor/graph.hpp"  // cap_exceeded

namespace lllcolor {

struct LllEvent {
  double p = 0.0;   // probability
  double mu = 0.0;  // weight
};

class DependencyGraph {
 public:
  DependencyGraph() = default;

  DependencyGraph(std::vector<LllEvent> events, const std::vector<std::pair<int, int>>& edges)
      : events_(std::move(events)), adj_(events_.size()) {
    for (auto [i, j] : edges) add_edge(i, j);
  }

  void add_event(double p, double mu) {
    events_.push_back({p, mu});
    adj_.emplace_back();
  }

  void add_edge(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("dependency adjacency must be irreflexive");
    if (adj_[i].insert(j).second) adj_[j].insert(i);
  }

  // Declare a clique cover of Gamma*(i). Each clique must be a clique in
  // the adjacency relation, contain only members of Gamma*(i), and the
  // union must equal Gamma*(i).
  void set_clique_cover(int i, std::vector<std::vector<int>> cliques) {
    check_index(i);
    std::set<int> covered;
    for (const auto& c : cliques) {
      for (std::size_t a = 0; a < c.size(); ++a) {
        int y = c[a];
        check_index(y);
        if (y != i && !adj_[i].count(y))
          throw std::invalid_argument("clique member outside Gamma*(x)");
        covered.insert(y);
        for (std::size_t b = a + 1; b < c.size(); ++b)
          if (c[a] != c[b] && !adj_[c[a]].count(c[b]))
            throw std::invalid_argument("declared clique is not a clique");
      }
    }
    std::set<int> gamma_star(adj_[i].begin(), adj_[i].end());
    gamma_star.insert(i);
    if (covered != gamma_star)
      throw std::invalid_argument("clique cover union does not equal Gamma*(x)");
    if (covers_.size() < events_.size()) covers_.resize(events_.size());
    covers_[i] = std::move(cliques);
  }

  std::size_t size() const { return events_.size(); }
  const LllEvent& event(int i) const { return events_[i]; }
  LllEvent& event(int i) { return events_[i]; }
  const std::set<int>& neighbors(int i) const { return adj_[i]; }
  bool has_cover(int i) const {
    return static_cast<std::size_t>(i) < covers_.size() && !covers_[i].empty();
  }
  const std::vector<std::vector<int>>& cover(int i) const { return covers_[i]; }

  void set_mu(const std::vector<double>& mu) {
    if (mu.size() != events_.size()) throw std::invalid_argument("mu size mismatch");
    for (std::size_t i = 0; i < mu.size(); ++i) events_[i].mu = mu[i];
  }

 private:
  void check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= events_.size())
      throw std::invalid_argument("event index out of range");
  }

  std::vector<LllEvent> events_;
  std::vector<std::set<int>> adj_;
  std::vector<std::vector<std::vector<int>>> covers_;
};

constexpr int kPhiStarExactCap = 25;

// phi_x(mu) = (1 + mu_x) * prod_{y in Gamma(x)} (1 + mu_y).
inline double phi_classic(const DependencyGraph& d, int x) {
  double v = 1.0 + d.event(x).mu;
  for (int y : d.neighbors(x)) v *= 1.0 + d.event(y).mu;
  return v;
}

// phi*_x(mu) = 1 + sum over nonempty independent subsets R of Gamma*(x)
// of prod_{y in R} mu_y. Recursion over the sorted neighborhood with
// independence pruning; |Gamma*(x)| is capped.
inline double phi_star_exact(const DependencyGraph& d, int x) {
  std::vector<int> gs(d.neighbors(x).begin(), d.neighbors(x).end());
  gs.push_back(x);
  std::sort(gs.begin(), gs.end());
  if (static_cast<int>(gs.size()) > kPhiStarExactCap)
    throw cap_exceeded("phi_star_exact: |Gamma*(x)| exceeds cap; use the clique bound");

  const std::size_t k = gs.size();
  // local adjacency among gs
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (d.neighbors(gs[a]).count(gs[b])) adj[a][b] = adj[b][a] = 1;

  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from, double prod) -> double {
    double total = 0.0;
    for (std::size_t i = from; i < k; ++i) {
      bool indep = true;
      for (std::size_t c : chosen)
        if (adj[c][i]) { indep = false; break; }
      if (!indep) continue;
      double term = prod * d.event(gs[i]).mu;
      chosen.push_back(i);
      total += term + self(self, i + 1, term);
      chosen.pop_back();
    }
    return total;
  };
  return 1.0 + rec(rec, 0, 1.0);
}

// Clique-cover product bound: prod_i [1 + sum_{y in c_i} mu_y].
inline double phi_star_clique_bound(const DependencyGraph& d, int x) {
  if (!d.has_cover(x))
    throw std::invalid_argument("phi_star_clique_bound: no clique cover declared for event");
  double v = 1.0;
  for (const auto& c : d.cover(x)) {
    double s = 0.0;
    for (int y : c) s += d.event(y).mu;
    v *= 1.0 + s;
  }
  return v;
}

enum class LllMode { classic, improved_exact, improved_clique };

inline std::string to_string(LllMode m) {
  switch (m) {
    case LllMode::classic: return "classic";
    case LllMode::improved_exact: return "improved-exact";
    case LllMode::improved_clique: return "improved-clique";
  }
  return "?";
}

struct EventCheck {
  double p = 0.0;
  double bound = 0.0;  // mu_x / phi(.)
  bool pass = false;
  double margin = 0.0;  // bound - p
};

struct ConditionReport {
  LllMode mode = LllMode::classic;
  bool pass = true;
  std::vector<EventCheck> events;
};

// Per-event test p_x <= mu_x / phi(.), with a small relative slack to
// absorb rounding in equality-saturating weight choices.
inline ConditionReport check_condition(const DependencyGraph& d, LllMode mode) {
  constexpr double kSlack = 1e-12;
  ConditionReport rep;
  rep.mode = mode;
  for (int x = 0; x < static_cast<int>(d.size()); ++x) {
    double phi = 0.0;
    switch (mode) {
      case LllMode::classic: phi = phi_classic(d, x); break;
      case LllMode::improved_exact: phi = phi_star_exact(d, x); break;
      case LllMode::improved_clique: phi = phi_star_clique_bound(d, x); break;
    }
    EventCheck ec;
    ec.p = d.event(x).p;
    ec.bound = d.event(x).mu / phi;
    ec.pass = ec.p <= ec.bound * (1.0 + kSlack);
    ec.margin = ec.bound - ec.p;
    rep.events.push_back(ec);
    rep.pass = rep.pass && ec.pass;
  }
  return rep;
}

// JSON schema: {events:[{p, mu}], edges:[[i,j]], cliques:{"i":[[...],...]}}
inline DependencyGraph dependency_graph_from_json(const nlohmann::json& j) {
  DependencyGraph d;
  for (const auto& e : j.at("events"))
    d.add_event(e.at("p").get<double>(), e.value("mu", 0.0));
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) d.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  if (j.contains("cliques"))
    for (auto it = j.at("cliques").begin(); it != j.at("cliques").end(); ++it)
      d.set_clique_cover(std::stoi(it.key()), it.value().get<std::vector<std::vector<int>>>());
  return d;
}

inline nlohmann::ordered_json dependency_graph_to_json(const DependencyGraph& d) {
  nlohmann::ordered_json j;
  j["events"] = nlohmann::ordered_json::array();
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    j["events"].push_back({{"p", d.event(i).p}, {"mu", d.event(i).mu}});
  j["edges"] = nlohmann::ordered_json::array();
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    for (int y : d.neighbors(i))
      if (i < y) j["edges"].push_back({i, y});
  nlohmann::ordered_json cl = nlohmann::ordered_json::object();
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d.has_cover(i)) cl[std::to_string(i)] = d.cover(i);
  if (!cl.empty()) j["cliques"] = cl;
  return j;
}

}  // namespace lllcolor

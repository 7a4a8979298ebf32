#pragma once

#include <map>
#include <string>
#include <vector>

#include "stepalg/rational.hpp"
#include "stepalg/root_system.hpp"

namespace stepalg {

// A finite weight basis of a module graded by the subalgebra's raising
// operators: node weights nu_i and, for each simple root alpha of the
// subalgebra, the matrix pi^alpha of the raising action in that basis.
// The matrix convention is pi[alpha][(i,j)] != 0 only when
// nu_i - nu_j = alpha (the action moves basis vector j up to i).
struct GradedModule {
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  // simple-root index (0-based, ambient numbering) -> entries (i,j) -> value
  std::map<int, std::map<std::pair<int, int>, Rat>> action;

  int size() const { return static_cast<int>(weights.size()); }
};

// One arrow i <- j of the diagram, labeled by the simple root alpha
// carrying it and the matrix entry.
struct HasseArrow {
  int to = 0;    // i, the higher node
  int from = 0;  // j
  int alpha_index = 0;
  Rat entry;
};

// The Hasse diagram of a graded module: nodes = basis vectors, arrows =
// nonzero single-step raising entries, plus the induced strict partial
// order (path reachability) and its longest-path lengths.
class HasseDiagram {
 public:
  const GradedModule& module() const { return mod_; }
  int size() const { return mod_.size(); }
  const std::vector<HasseArrow>& arrows() const { return arrows_; }
  const Weight& weight(int node) const {
    return mod_.weights.at(static_cast<std::size_t>(node));
  }
  const std::string& label(int node) const {
    return mod_.labels.at(static_cast<std::size_t>(node));
  }

  // Strict descent: i is above j via a nonempty arrow path.
  bool above(int i, int j) const {
    return reach_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
  bool comparable(int i, int j) const { return i == j || above(i, j) || above(j, i); }

  friend HasseDiagram build_diagram(GradedModule mod);

 private:
  GradedModule mod_;
  std::vector<HasseArrow> arrows_;
  std::vector<std::vector<bool>> reach_;
};

HasseDiagram build_diagram(GradedModule mod);

// A route: a strictly descending node sequence (consecutive descent
// suffices; transitivity gives the rest).  Routes of length 0 are single
// nodes.
struct Route {
  std::vector<int> nodes;

  int max_node() const { return nodes.front(); }
  int min_node() const { return nodes.back(); }
  int length() const { return static_cast<int>(nodes.size()) - 1; }
  bool contains(int v) const {
    for (int n : nodes)
      if (n == v) return true;
    return false;
  }
  friend bool operator==(const Route& a, const Route& b) { return a.nodes == b.nodes; }
  friend bool operator!=(const Route& a, const Route& b) { return !(a == b); }
  // Deterministic order: length first, then node sequence.
  friend bool operator<(const Route& a, const Route& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  }
  friend std::ostream& operator<<(std::ostream& os, const Route& r);
};

bool is_route(const HasseDiagram& d, const std::vector<int>& nodes);

// Weight of a route viewed in the phi module (nu_min - nu_max) resp. the
// psi module (-nu_max).
Weight phi_weight(const HasseDiagram& d, const Route& r);
Weight psi_weight(const HasseDiagram& d, const Route& r);

// All routes with the given top node, sorted by length then node order;
// the length-0 route comes first.
std::vector<Route> enumerate_routes(const HasseDiagram& d, int top);

// Simple pairs (l, r) for a given simple root: the arrows carrying it,
// as (upper node, lower node, entry).
struct SimplePair {
  int l = 0, r = 0;
  Rat entry;
};
std::vector<SimplePair> simple_pairs(const HasseDiagram& d, int alpha_index);

// Union of two routes with min(a) strictly above max(b): concatenation
// of the node lists.  Throws when the precondition fails.
Route route_union(const HasseDiagram& d, const Route& a, const Route& b);
// Concatenation sharing one node: min(a) == max(b).
Route route_concat(const HasseDiagram& d, const Route& a, const Route& b);

// GraphViz DOT rendering; arrows point from the lower to the upper node
// and are labeled by their simple root.
std::string to_dot(const HasseDiagram& d, const RootSystem& rs);

}  // namespace stepalg

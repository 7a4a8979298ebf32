#include "stepalg/hasse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stepalg {

HasseDiagram build_diagram(GradedModule mod) {
  HasseDiagram d;
  const int n = mod.size();
  for (const auto& [alpha, entries] : mod.action)
    for (const auto& [ij, v] : entries) {
      if (stepalg::is_zero(v)) continue;
      const auto [i, j] = ij;
      if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("action entry out of range");
      d.arrows_.push_back({i, j, alpha, v});
    }
  // Path reachability by repeated relaxation; the weight grading makes
  // cycles impossible, which we check for robustness.
  d.reach_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& a : d.arrows_) d.reach_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.from)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (d.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          for (int j = 0; j < n; ++j)
            if (d.reach_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] &&
                !d.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
              d.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
              changed = true;
            }
  }
  for (int i = 0; i < n; ++i)
    if (d.reach_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
      throw std::invalid_argument("graded module action has a cycle");
  d.mod_ = std::move(mod);
  return d;
}

std::ostream& operator<<(std::ostream& os, const Route& r) {
  os << '(';
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    if (i) os << ',';
    os << r.nodes[i];
  }
  return os << ')';
}

bool is_route(const HasseDiagram& d, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
    if (!d.above(nodes[k], nodes[k + 1])) return false;
  return true;
}

Weight phi_weight(const HasseDiagram& d, const Route& r) {
  return d.weight(r.min_node()) - d.weight(r.max_node());
}

Weight psi_weight(const HasseDiagram& d, const Route& r) {
  return -d.weight(r.max_node());
}

std::vector<Route> enumerate_routes(const HasseDiagram& d, int top) {
  if (top < 0 || top >= d.size()) throw std::invalid_argument("node out of range");
  std::vector<Route> out;
  std::vector<int> cur{top};
  // Depth-first extension by any node strictly below the current tail.
  auto extend = [&](auto&& self) -> void {
    out.push_back(Route{cur});
    for (int j = 0; j < d.size(); ++j)
      if (d.above(cur.back(), j)) {
        cur.push_back(j);
        self(self);
        cur.pop_back();
      }
  };
  extend(extend);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplePair> simple_pairs(const HasseDiagram& d, int alpha_index) {
  std::vector<SimplePair> out;
  for (const auto& a : d.arrows())
    if (a.alpha_index == alpha_index) out.push_back({a.to, a.from, a.entry});
  std::sort(out.begin(), out.end(), [](const SimplePair& a, const SimplePair& b) {
    return std::pair(a.l, a.r) < std::pair(b.l, b.r);
  });
  return out;
}

Route route_union(const HasseDiagram& d, const Route& a, const Route& b) {
  if (!d.above(a.min_node(), b.max_node()))
    throw std::invalid_argument("route union requires min(a) above max(b)");
  Route r = a;
  r.nodes.insert(r.nodes.end(), b.nodes.begin(), b.nodes.end());
  return r;
}

Route route_concat(const HasseDiagram& d, const Route& a, const Route& b) {
  (void)d;
  if (a.min_node() != b.max_node())
    throw std::invalid_argument("route concatenation requires min(a) == max(b)");
  Route r = a;
  r.nodes.insert(r.nodes.end(), b.nodes.begin() + 1, b.nodes.end());
  return r;
}

std::string to_dot(const HasseDiagram& d, const RootSystem& rs) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < d.size(); ++i) {
    os << "  n" << i << " [label=\"" << d.label(i) << "\\n" ;
    const Weight& w = d.weight(i);
    os << '(';
    for (std::size_t k = 0; k < w.dim(); ++k) {
      if (k) os << ',';
      os << to_string(w[k]);
    }
    os << ")\"];\n";
  }
  for (const auto& a : d.arrows()) {
    os << "  n" << a.from << " -> n" << a.to << " [label=\"alpha_"
       << (a.alpha_index + 1);
    if (a.entry != 1) os << " (" << to_string(a.entry) << ")";
    os << "\"];\n";
  }
  (void)rs;
  os << "}\n";
  return os.str();
}

}  // namespace stepalg

#include "stepalg/route_calculus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stepalg {

namespace {

// Union of a route with {l, r}, if the result is again a route whose
// maximal node is `top`; nullopt otherwise.
std::optional<Route> merged_route(const HasseDiagram& d, const Route& m, int l, int r,
                                  int top) {
  std::vector<int> nodes = m.nodes;
  if (!m.contains(l)) nodes.push_back(l);
  if (!m.contains(r)) nodes.push_back(r);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (!d.comparable(nodes[a], nodes[b])) return std::nullopt;
  std::sort(nodes.begin(), nodes.end(),
            [&](int a, int b) { return d.above(a, b); });
  if (nodes.front() != top) return std::nullopt;
  Route merged{nodes};
  if (!is_route(d, merged.nodes)) return std::nullopt;
  return merged;
}

Route erase_nodes(const Route& m, std::initializer_list<int> drop) {
  Route out;
  for (int n : m.nodes)
    if (std::find(drop.begin(), drop.end(), n) == drop.end()) out.nodes.push_back(n);
  return out;
}

}  // namespace

std::vector<Chain> classify_chains(const HasseDiagram& d, int l, int r, int top) {
  if (!d.above(l, r)) throw std::invalid_argument("classify_chains: l must lie above r");
  std::map<std::vector<int>, Chain> grouped;
  std::vector<Chain> singletons;
  for (const Route& m : enumerate_routes(d, top)) {
    bool touches = m.contains(l) || m.contains(r);
    auto merged = touches ? merged_route(d, m, l, r, top) : std::nullopt;
    if (!touches || !merged) {
      Chain c;
      c.kind = 1;
      c.l = l;
      c.r = r;
      c.top = top;
      c.members = {m};
      singletons.push_back(std::move(c));
      continue;
    }
    int kind = (top == l) ? 2 : 3;
    Route key = (kind == 2) ? erase_nodes(m, {r}) : erase_nodes(m, {l, r});
    Chain& c = grouped[key.nodes];
    if (c.members.empty()) {
      c.kind = kind;
      c.l = l;
      c.r = r;
      c.top = top;
    }
    c.members.push_back(m);
  }
  std::vector<Chain> out = std::move(singletons);
  for (auto& [key, c] : grouped) {
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    if (a.members.front() != b.members.front()) return a.members.front() < b.members.front();
    return a.kind < b.kind;
  });
  return out;
}

}  // namespace stepalg

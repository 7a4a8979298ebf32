#pragma once

#include <cassert>
#include <vector>

#include "stepalg/hasse.hpp"
#include "stepalg/scalar_ops.hpp"

namespace stepalg {

// Formal linear combinations of routes over a scalar field S (classical
// Cartan fractions or quantum q-fractions).  Scalars are always written
// to the right of their route; moving a Cartan expression across a route
// applies the translation by the route's weight, which is what the
// *_normalized helpers below account for.
template <class S>
struct RouteVector {
  std::map<Route, S> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Route& r, const S& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms.emplace(r, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  RouteVector& operator+=(const RouteVector& o) {
    for (const auto& [r, s] : o.terms) add(r, s);
    return *this;
  }
  RouteVector& operator*=(const S& c) {
    std::map<Route, S> out;
    for (auto& [r, s] : terms) {
      S v = s * c;
      if (!v.is_zero()) out.emplace(r, std::move(v));
    }
    terms = std::move(out);
    return *this;
  }
  friend bool operator==(const RouteVector& a, const RouteVector& b) {
    return a.terms == b.terms;
  }
};

// A sum of tensor products (left route) ⊗ (right route) · scalar with the
// scalar pushed fully to the right.  The same representation serves both
// phi⊗phi and phi⊗psi values; which translation applies when scalars
// cross the right leg is decided at construction time.
template <class S>
struct TensorVector {
  std::map<std::pair<Route, Route>, S> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Route& a, const Route& b, const S& s) {
    if (s.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = terms.emplace(std::move(key), s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  TensorVector& operator+=(const TensorVector& o) {
    for (const auto& [k, s] : o.terms) add(k.first, k.second, s);
    return *this;
  }
  TensorVector& operator*=(const S& c) {
    std::map<std::pair<Route, Route>, S> out;
    for (auto& [k, s] : terms) {
      S v = s * c;
      if (!v.is_zero()) out.emplace(k, std::move(v));
    }
    terms = std::move(out);
    return *this;
  }
  TensorVector& operator*=(const Rat& c) {
    std::map<std::pair<Route, Route>, S> out;
    for (auto& [k, s] : terms) {
      S v = s * c;
      if (!v.is_zero()) out.emplace(k, std::move(v));
    }
    terms = std::move(out);
    return *this;
  }
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.terms == b.terms;
  }
};

inline AffineForm node_eta(const HasseDiagram& d, const RootSystem& rs, int node) {
  return eta_form(rs, d.weight(node));
}

// The derivative with respect to a simple pair (l, r), acting on a route
// seen as a chain of length-one concatenation factors.  On one factor:
//
//   (l,r) -> (l) ⊗ (r) [h_a]        (a = nu_l - nu_r)
//   (l,j) -> -(l) ⊗ q^{-h_a} (r,j)   if r is above j, else 0
//   (i,r) -> (i,l) q^{h_a} ⊗ (r)     if i is above l, else 0
//
// extended as a derivation; at most one factor contributes per route.
// Returned scalars are right-normalized against the full right leg (a
// phi route, translation by nu_min - nu_max), so the bracket argument
// and exponents come out as h_a + (a, nu_j - nu_r) with j the route's
// bottom node.
template <class S>
TensorVector<S> partial_op(const HasseDiagram& d, const RootSystem& rs, int l,
                           int r, const Route& m) {
  using Ops = ScalarOps<S>;
  TensorVector<S> out;
  const auto& nodes = m.nodes;
  if (nodes.size() < 2) return out;
  const Weight alpha = d.weight(l) - d.weight(r);
  const AffineForm h_alpha = AffineForm::h_of(rs, alpha);
  const int bottom = nodes.back();
  const AffineForm arg =
      h_alpha + AffineForm::constant(rs.rank(),
                                     dot(alpha, d.weight(bottom) - d.weight(r)));

  for (std::size_t t = 0; t + 1 < nodes.size(); ++t) {
    const int a = nodes[t], b = nodes[t + 1];
    if (a == l && b == r) {
      Route left{std::vector<int>(nodes.begin(), nodes.begin() + static_cast<long>(t) + 1)};
      Route right{std::vector<int>(nodes.begin() + static_cast<long>(t) + 1, nodes.end())};
      out.add(left, right, Ops::bracket(arg));
    } else if (a == l) {
      if (!d.above(r, b)) continue;
      Route left{std::vector<int>(nodes.begin(), nodes.begin() + static_cast<long>(t) + 1)};
      std::vector<int> rv{r};
      rv.insert(rv.end(), nodes.begin() + static_cast<long>(t) + 1, nodes.end());
      out.add(left, Route{std::move(rv)}, -Ops::exp_factor(-arg));
    } else if (b == r) {
      if (!d.above(a, l)) continue;
      std::vector<int> lv(nodes.begin(), nodes.begin() + static_cast<long>(t) + 1);
      lv.push_back(l);
      Route right{std::vector<int>(nodes.begin() + static_cast<long>(t) + 1, nodes.end())};
      out.add(Route{std::move(lv)}, right, Ops::exp_factor(arg));
    }
  }
  return out;
}

// The localized action on psi routes, defined through the derivative:
//
//   nabla(m) = (partial m) · ((l) ⊗ (j))  +  (m ⊗ (r)) · nabla(j),
//   nabla(j) = -delta_{l j} (l) ⊗ (r) q^{-(eta_l - eta_r)},
//
// with j = min(m).  Composing the phi-normalized derivative terms with
// the zero-length psi route (j) retranslates their scalars by -nu_j;
// that is exactly what turns h_a + (a, nu_j - nu_r) into eta_l - eta_r
// and friends, so the closed forms tested elsewhere drop out.
template <class S>
TensorVector<S> nabla_op(const HasseDiagram& d, const RootSystem& rs, int l,
                         int r, const Route& m) {
  using Ops = ScalarOps<S>;
  TensorVector<S> out;
  const int j = m.min_node();

  TensorVector<S> der = partial_op<S>(d, rs, l, r, m);
  const Weight minus_nu_j = -d.weight(j);
  for (const auto& [key, s] : der.terms) {
    assert(key.first.min_node() == l);
    out.add(key.first, key.second, Ops::shifted(s, rs, minus_nu_j));
  }

  if (j == l) {
    const AffineForm diff = node_eta(d, rs, l) - node_eta(d, rs, r);
    out.add(m, Route{{r}}, -Ops::exp_factor(-diff));
  }
  return out;
}

// Tilde normalization: the route (i, m_1, ..., m_k) acquires the Cartan
// factor B^i_{m_1} ... B^i_{m_k} with B^i_j = b_factor(eta_i - eta_j).
template <class S>
S tilde_factor(const HasseDiagram& d, const RootSystem& rs, const Route& m) {
  using Ops = ScalarOps<S>;
  S b = Ops::one(rs.rank());
  const AffineForm eta_top = node_eta(d, rs, m.max_node());
  for (std::size_t t = 1; t < m.nodes.size(); ++t)
    b *= Ops::b_factor(eta_top - node_eta(d, rs, m.nodes[t]));
  return b;
}

template <class S>
RouteVector<S> tilde(const HasseDiagram& d, const RootSystem& rs, const Route& m) {
  RouteVector<S> v;
  v.add(m, tilde_factor<S>(d, rs, m));
  return v;
}

// Chains: the orbit decomposition of the routes from a fixed top node
// under inserting/removing the simple pair (l, r).
//   kind 1: the pair cannot be inserted (disjoint or no common route);
//   kind 2: top == l, members (l,rho) and (l,r,rho);
//   kind 3: top above l, members (ell,l,rho), (ell,l,r,rho), (ell,r,rho).
struct Chain {
  int kind = 1;
  int l = -1, r = -1;
  int top = -1;
  std::vector<Route> members;
};

std::vector<Chain> classify_chains(const HasseDiagram& d, int l, int r, int top);

// Sum of the tilde-normalized members; a 2- or 3-chain is killed by
// nabla for the pair it was built from.
template <class S>
RouteVector<S> chain_vector(const HasseDiagram& d, const RootSystem& rs, const Chain& c) {
  RouteVector<S> v;
  for (const auto& m : c.members) v += tilde<S>(d, rs, m);
  return v;
}

template <class S>
TensorVector<S> apply_nabla(const HasseDiagram& d, const RootSystem& rs, int l,
                            int r, const RouteVector<S>& v) {
  TensorVector<S> out;
  for (const auto& [m, s] : v.terms) {
    TensorVector<S> t = nabla_op<S>(d, rs, l, r, m);
    t *= s;
    out += t;
  }
  return out;
}

template <class S>
bool verify_chain_killed(const HasseDiagram& d, const RootSystem& rs, const Chain& c) {
  return apply_nabla<S>(d, rs, c.l, c.r, chain_vector<S>(d, rs, c)).is_zero();
}

}  // namespace stepalg

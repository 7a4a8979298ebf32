#include "stepalg/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stepalg {

const char* to_string(Side s) { return s == Side::minus ? "minus" : "plus"; }

ComplementModel::ComplementModel(std::shared_ptr<const AlgebraContext> ctx,
                                 int class_index, Side side)
    : ctx_(std::move(ctx)), class_index_(class_index), side_(side) {
  const LeviPair& lp = ctx_->levi();
  const RootSystem& rs = lp.ambient();
  const QuasiRootClass& qc =
      lp.classes().at(static_cast<std::size_t>(class_index));

  // Node weights are the signed roots of the realization vectors: +mu on
  // the minus side, -mu on the plus side.  Sorting ascending by (height,
  // lex) makes node rank compatible with the diagram order.
  std::vector<Weight> nus;
  nus.reserve(qc.roots.size());
  for (const Weight& mu : qc.roots)
    nus.push_back(side == Side::minus ? mu : -mu);
  std::sort(nus.begin(), nus.end(), [&](const Weight& a, const Weight& b) {
    const Rat ha = rs.height_rat(a), hb = rs.height_rat(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  GradedModule mod;
  for (const Weight& nu : nus) {
    const int id = ctx_->id_of_root(nu);
    if (id < 0) throw std::logic_error("complement model: missing realization vector");
    mod.labels.push_back(ctx_->symbol(id).label);
    mod.weights.push_back(nu);
  }
  const int n = static_cast<int>(nus.size());
  for (int ai : lp.levi_indices()) {
    const Weight& alpha = rs.simple_root(ai);
    std::map<std::pair<int, int>, Rat> mat;
    for (int j = 0; j < n; ++j) {
      const Weight target = nus[static_cast<std::size_t>(j)] + alpha;
      for (int i = 0; i < n; ++i) {
        if (nus[static_cast<std::size_t>(i)] != target) continue;
        Rat c = ctx_->structure_constant(alpha, nus[static_cast<std::size_t>(j)]);
        if (!stepalg::is_zero(c)) mat[{i, j}] = std::move(c);
      }
    }
    mod.action[ai] = std::move(mat);
  }
  diagram_ = build_diagram(std::move(mod));

  psi_ids_.reserve(nus.size());
  for (int i = 0; i < diagram_.size(); ++i) {
    const int id = ctx_->id_of_root(-diagram_.weight(i));
    if (id < 0) throw std::logic_error("complement model: missing dual vector");
    psi_ids_.push_back(id);
  }
}

const QuasiRootClass& ComplementModel::quasi_class() const {
  return ctx_->levi().classes().at(static_cast<std::size_t>(class_index_));
}

int ComplementModel::node_of_psi(int id) const {
  for (std::size_t i = 0; i < psi_ids_.size(); ++i)
    if (psi_ids_[i] == id) return static_cast<int>(i);
  return -1;
}

std::optional<std::pair<Rat, int>> ComplementModel::phi_entry(int i, int j) const {
  const LeviPair& lp = ctx_->levi();
  const Weight beta = node_weight(i) - node_weight(j);
  if (!lp.is_g_positive_root(beta)) return std::nullopt;
  Rat pi = ctx_->structure_constant(beta, node_weight(j));
  if (stepalg::is_zero(pi)) return std::nullopt;
  const int f_id = ctx_->id_of_root(-beta);
  return std::make_pair(std::move(pi), f_id);
}

AlgebraElement ComplementModel::phi(int i, int j) const {
  auto entry = phi_entry(i, j);
  if (!entry) return ctx_->zero_element();
  return ctx_->generator(entry->second) * entry->first;
}

ComplementModel build_complement_model(std::shared_ptr<const AlgebraContext> ctx,
                                       int class_index, Side side) {
  return ComplementModel(std::move(ctx), class_index, side);
}

std::vector<ComplementModel> all_complement_models(
    const std::shared_ptr<const AlgebraContext>& ctx) {
  std::vector<ComplementModel> out;
  const int nc = static_cast<int>(ctx->levi().classes().size());
  for (int c = 0; c < nc; ++c)
    for (Side s : {Side::minus, Side::plus}) out.emplace_back(ctx, c, s);
  return out;
}

AlgebraElement p_phi(const ComplementModel& m, const Route& r) {
  AlgebraElement el = m.context()->one_element();
  for (std::size_t t = 0; t + 1 < r.nodes.size(); ++t) {
    el = multiply(el, m.phi(r.nodes[t], r.nodes[t + 1]));
    if (el.is_zero()) break;
  }
  return el;
}

AlgebraElement p_psi(const ComplementModel& m, const Route& r) {
  return reduce_mod_jplus(multiply(p_phi(m, r), m.psi(r.min_node())));
}

Rat route_pi_product(const ComplementModel& m, const Route& r) {
  Rat pi = 1;
  for (std::size_t t = 0; t + 1 < r.nodes.size(); ++t) {
    auto entry = m.phi_entry(r.nodes[t], r.nodes[t + 1]);
    if (!entry) return 0;
    pi *= entry->first;
  }
  return pi;
}

AlgebraElement p_phi_psi(const ComplementModel& m, const TensorVector<CartanScalar>& t) {
  AlgebraElement out = m.context()->zero_element();
  for (const auto& [key, s] : t.terms)
    out += reduce_mod_jplus(multiply(p_phi(m, key.first), p_psi(m, key.second)) * s);
  return out;
}

std::pair<AlgebraElement, AlgebraElement> intertwine_sides(
    const ComplementModel& m, int alpha_index, const Route& r) {
  const HasseDiagram& d = m.diagram();
  const RootSystem& rs = m.context()->roots();
  TensorVector<CartanScalar> total;
  for (const SimplePair& p : simple_pairs(d, alpha_index)) {
    TensorVector<CartanScalar> t = nabla_op<CartanScalar>(d, rs, p.l, p.r, r);
    t *= p.entry;
    total += t;
  }
  AlgebraElement lhs = p_phi_psi(m, total);
  AlgebraElement rhs =
      reduce_mod_jplus(act_raising(rs.simple_root(alpha_index), p_psi(m, r)));
  return {std::move(lhs), std::move(rhs)};
}

bool intertwine_check(const ComplementModel& m, int alpha_index, const Route& r) {
  auto [lhs, rhs] = intertwine_sides(m, alpha_index, r);
  return lhs == rhs;
}

MickelssonGenerator canonical_element(const ComplementModel& m, int node) {
  const HasseDiagram& d = m.diagram();
  const RootSystem& rs = m.context()->roots();
  MickelssonGenerator g;
  g.node = node;
  AlgebraElement z = m.context()->zero_element();
  for (const Route& r : enumerate_routes(d, node)) {
    const Rat pi = route_pi_product(m, r);
    if (stepalg::is_zero(pi)) continue;
    CartanScalar b = tilde_factor<CartanScalar>(d, rs, r);
    z += p_psi(m, r) * b;
    // Stored coefficient is the full one of the route's bare word.
    g.routes.emplace_back(r, b * pi);
  }
  g.element = std::move(z);
  return g;
}

MickelssonGenerator levi_generator(const ComplementModel& m, int node) {
  const auto& ctx = m.context();
  const RootSystem& rs = ctx->roots();
  const LeviPair& lp = ctx->levi();

  std::map<Weight, int> node_of;
  for (int i = 0; i < m.node_count(); ++i) node_of[m.node_weight(i)] = i;

  const Weight& nu_top = m.node_weight(node);
  const AffineForm eta_top = eta_form(rs, nu_top);

  MickelssonGenerator g;
  g.node = node;
  AlgebraElement z = ctx->generator(m.psi_id(node));
  g.routes.emplace_back(Route{{node}}, CartanScalar::one(rs.rank()));

  // Tuples (alpha_1, ..., alpha_k) of positive subalgebra roots whose
  // partial differences nu - alpha_1 - ... - alpha_j stay inside the
  // class; each contributes f_{alpha_1}...f_{alpha_k} e_{-nu_k} times
  // prod_j N_j / (eta_nu - eta_{nu_j}).
  std::vector<int> f_word;
  std::vector<int> route_nodes{node};
  std::function<void(const Weight&, const CartanScalar&)> descend =
      [&](const Weight& nu_prev, const CartanScalar& coeff) {
        for (const Weight& alpha : lp.g_positive_roots()) {
          const Weight nu_next = nu_prev - alpha;
          auto it = node_of.find(nu_next);
          if (it == node_of.end()) continue;
          const Rat n_const = ctx->structure_constant(alpha, nu_next);
          if (stepalg::is_zero(n_const)) continue;
          CartanScalar step = coeff;
          step *= CartanScalar::inverse_affine(eta_top - eta_form(rs, nu_next));
          step *= n_const;
          f_word.push_back(ctx->id_of_root(-alpha));
          route_nodes.push_back(it->second);

          std::vector<int> word = f_word;
          word.push_back(ctx->id_of_root(-nu_next));
          z += reduce_mod_jplus(ctx->word_element(word) * step);
          g.routes.emplace_back(Route{route_nodes}, step);

          descend(nu_next, step);
          f_word.pop_back();
          route_nodes.pop_back();
        }
      };
  descend(nu_top, CartanScalar::one(rs.rank()));
  g.element = std::move(z);
  std::sort(g.routes.begin(), g.routes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return g;
}

AlgebraElement route_word_element(const ComplementModel& m, const Route& r) {
  const auto& ctx = m.context();
  std::vector<int> word;
  for (std::size_t t = 0; t + 1 < r.nodes.size(); ++t) {
    const Weight beta = m.node_weight(r.nodes[t]) - m.node_weight(r.nodes[t + 1]);
    const int f_id = ctx->id_of_root(-beta);
    if (f_id < 0) throw std::invalid_argument("route step is not a root difference");
    word.push_back(f_id);
  }
  word.push_back(m.psi_id(r.min_node()));
  return reduce_mod_jplus(ctx->word_element(word));
}

Rat structure_n(const AlgebraContext& ctx, Side side_of_vector,
                const Weight& alpha, const Weight& mu) {
  const Weight signed_mu = side_of_vector == Side::minus ? mu : -mu;
  return ctx.structure_constant(alpha, signed_mu);
}

std::optional<InvarianceWitness> verify_invariance(const AlgebraElement& z) {
  const auto& ctx = z.context();
  if (!ctx) throw std::invalid_argument("verify_invariance: element without context");
  for (const Weight& alpha : ctx->levi().g_simple_roots()) {
    AlgebraElement w = reduce_mod_jplus(act_raising(alpha, z));
    if (!w.is_zero()) return InvarianceWitness{alpha, std::move(w)};
  }
  return std::nullopt;
}

std::function<bool(const PBWMonomial&, const PBWMonomial&)> complement_node_order(
    const ComplementModel& m) {
  // Captured by value: the comparator may outlive the model reference.
  ComplementModel model = m;
  auto key = [model](const PBWMonomial& mon) {
    int deg = 0;
    std::vector<int> ranks;
    for (const auto& [id, pow] : mon) {
      const SortClass cls = model.context()->symbol(id).cls;
      if (cls != SortClass::complement_minus && cls != SortClass::complement_plus)
        continue;
      deg += pow;
      const int node = model.node_of_psi(id);
      for (int t = 0; t < pow; ++t) ranks.push_back(node);
    }
    return std::make_pair(deg, std::move(ranks));
  };
  return [key](const PBWMonomial& a, const PBWMonomial& b) {
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return a < b;
  };
}

bool pbw_leading_check(const ComplementModel& m,
                       const std::vector<MickelssonGenerator>& gens) {
  auto less = complement_node_order(m);
  std::set<PBWMonomial> leads;
  for (const MickelssonGenerator& g : gens) {
    if (g.element.is_zero()) return false;
    auto [mon, coeff] = leading_term(g.element, less);
    const PBWMonomial expected{{m.psi_id(g.node), 1}};
    if (mon != expected) return false;
    if (!coeff.is_one()) return false;
    leads.insert(mon);
  }
  return leads.size() == gens.size();
}

}  // namespace stepalg

#include "stepalg/serialize.hpp"

#include <sstream>

namespace stepalg {

namespace {

std::string rat_str(const Rat& r) { return to_string(r); }

// "E[3,1]" -> "E_{3,1}" for LaTeX subscripts.
std::string latex_label(const std::string& label) {
  std::string out;
  out.reserve(label.size() + 2);
  for (char c : label) {
    if (c == '[')
      out += "_{";
    else if (c == ']')
      out += '}';
    else
      out += c;
  }
  return out;
}

std::string poly_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool neg = sgn(coeff) < 0;
    const Rat abs_c = neg ? Rat(-coeff) : coeff;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool unit = abs_c == 1 && Poly::total_degree(mono) > 0;
    if (!unit) os << rat_str(abs_c);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      os << "h_{" << i + 1 << "}";
      if (mono[i] > 1) os << "^{" << mono[i] << "}";
    }
  }
  return os.str();
}

}  // namespace

ordered_json weight_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (const Rat& c : w.coords()) a.push_back(rat_str(c));
  return a;
}

Weight parse_weight(const ordered_json& j) {
  std::vector<Rat> coords;
  for (const auto& c : j) coords.push_back(parse_rat(c.get<std::string>()));
  return Weight(std::move(coords));
}

ordered_json affine_json(const AffineForm& f) {
  ordered_json j;
  ordered_json lin = ordered_json::array();
  for (const Rat& c : f.linear()) lin.push_back(rat_str(c));
  j["lin"] = std::move(lin);
  j["const"] = rat_str(f.constant_term());
  return j;
}

AffineForm parse_affine(const ordered_json& j) {
  std::vector<Rat> lin;
  for (const auto& c : j.at("lin")) lin.push_back(parse_rat(c.get<std::string>()));
  return AffineForm(std::move(lin), parse_rat(j.at("const").get<std::string>()));
}

ordered_json cartan_scalar_json(const CartanScalar& s) {
  ordered_json j;
  j["rank"] = s.rank();
  ordered_json num = ordered_json::array();
  for (const auto& [mono, coeff] : s.numerator().terms()) {
    ordered_json exps = ordered_json::array();
    for (int e : mono) exps.push_back(e);
    num.push_back(ordered_json::array({rat_str(coeff), std::move(exps)}));
  }
  j["num"] = std::move(num);
  ordered_json den = ordered_json::array();
  for (const auto& [form, power] : s.denominator_factors())
    den.push_back(ordered_json::array({affine_json(form), power}));
  j["den"] = std::move(den);
  return j;
}

CartanScalar parse_cartan_scalar(const ordered_json& j) {
  const int rank = j.at("rank").get<int>();
  Poly num(rank);
  for (const auto& term : j.at("num")) {
    Poly mono = Poly::constant(rank, parse_rat(term.at(0).get<std::string>()));
    const auto& exps = term.at(1);
    for (int i = 0; i < rank; ++i) {
      const int e = exps.at(static_cast<std::size_t>(i)).get<int>();
      if (e > 0) mono *= Poly::variable(rank, i, e);
    }
    num += mono;
  }
  CartanScalar s(std::move(num));
  for (const auto& factor : j.at("den")) {
    const AffineForm f = parse_affine(factor.at(0));
    const int power = factor.at(1).get<int>();
    for (int p = 0; p < power; ++p) s *= CartanScalar::inverse_affine(f);
  }
  return s;
}

ordered_json describe_json(const LeviPair& lp) {
  const RootSystem& rs = lp.ambient();
  ordered_json j;
  j["algebra"] = {{"series", std::string(1, rs.series())}, {"rank", rs.rank()}};
  ordered_json levi = ordered_json::array();
  for (int i : lp.levi_indices()) levi.push_back(i + 1);
  j["levi"] = std::move(levi);
  ordered_json gp = ordered_json::array();
  for (const Weight& w : lp.g_positive_roots()) gp.push_back(weight_json(w));
  j["subalgebra_positive_roots"] = std::move(gp);
  ordered_json cp = ordered_json::array();
  for (const Weight& w : lp.complement_positive_roots()) cp.push_back(weight_json(w));
  j["complement_positive_roots"] = std::move(cp);
  ordered_json classes = ordered_json::array();
  for (std::size_t k = 0; k < lp.classes().size(); ++k) {
    ordered_json c;
    c["index"] = static_cast<int>(k);
    ordered_json roots = ordered_json::array();
    for (const Weight& w : lp.classes()[k].roots) roots.push_back(weight_json(w));
    c["roots"] = std::move(roots);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  ordered_json cartan;
  cartan["dimension"] = rs.rank();
  ordered_json sub = ordered_json::array();
  for (int i : lp.levi_indices()) sub.push_back(i + 1);
  cartan["subalgebra_coordinates"] = std::move(sub);
  cartan["center_dimension"] = rs.rank() - static_cast<int>(lp.levi_indices().size());
  j["cartan"] = std::move(cartan);
  return j;
}

ordered_json model_json(const ComplementModel& m) {
  ordered_json j;
  j["class_index"] = m.class_index();
  j["side"] = to_string(m.side());
  ordered_json roots = ordered_json::array();
  for (const Weight& w : m.quasi_class().roots) roots.push_back(weight_json(w));
  j["roots"] = std::move(roots);
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < m.node_count(); ++i) {
    ordered_json n;
    n["index"] = i;
    n["label"] = m.node_label(i);
    n["weight"] = weight_json(m.node_weight(i));
    n["dual"] = m.context()->symbol(m.psi_id(i)).label;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  ordered_json arrows = ordered_json::array();
  for (const HasseArrow& a : m.diagram().arrows()) {
    ordered_json e;
    e["from"] = a.from;
    e["to"] = a.to;
    e["root"] = weight_json(m.context()->roots().simple_root(a.alpha_index));
    e["entry"] = rat_str(a.entry);
    arrows.push_back(std::move(e));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

ordered_json generator_json(const ComplementModel& m, const MickelssonGenerator& g) {
  ordered_json j;
  j["node"] = g.node;
  j["label"] = m.node_label(g.node);
  j["psi"] = m.context()->symbol(m.psi_id(g.node)).label;
  ordered_json terms = ordered_json::array();
  for (const auto& [route, coeff] : g.routes) {
    ordered_json t;
    ordered_json route_labels = ordered_json::array();
    for (int n : route.nodes) route_labels.push_back(m.node_label(n));
    t["route"] = std::move(route_labels);
    ordered_json word = ordered_json::array();
    for (std::size_t s = 0; s + 1 < route.nodes.size(); ++s) {
      const Weight beta =
          m.node_weight(route.nodes[s]) - m.node_weight(route.nodes[s + 1]);
      word.push_back(m.context()->symbol(m.context()->id_of_root(-beta)).label);
    }
    word.push_back(m.context()->symbol(m.psi_id(route.min_node())).label);
    t["monomial"] = std::move(word);
    t["coefficient"] = cartan_scalar_json(coeff);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement parse_generator_element(const ComplementModel& m,
                                       const ordered_json& generator) {
  const auto& ctx = m.context();
  AlgebraElement z = ctx->zero_element();
  for (const auto& term : generator.at("terms")) {
    std::vector<int> ids;
    for (const auto& lbl : term.at("monomial")) {
      const int id = ctx->id_of_label(lbl.get<std::string>());
      if (id < 0) throw std::invalid_argument("unknown generator label in document");
      ids.push_back(id);
    }
    z += reduce_mod_jplus(ctx->word_element(ids) *
                          parse_cartan_scalar(term.at("coefficient")));
  }
  return z;
}

ordered_json document_json(const LeviPair& lp,
                           const std::vector<ComplementModel>& models,
                           const std::vector<std::vector<MickelssonGenerator>>& gens,
                           ordered_json verification) {
  const RootSystem& rs = lp.ambient();
  ordered_json j;
  j["algebra"] = {{"series", std::string(1, rs.series())}, {"rank", rs.rank()}};
  ordered_json levi = ordered_json::array();
  for (int i : lp.levi_indices()) levi.push_back(i + 1);
  j["levi"] = std::move(levi);
  ordered_json classes = ordered_json::array();
  for (const ComplementModel& m : models) classes.push_back(model_json(m));
  j["classes"] = std::move(classes);
  ordered_json gj = ordered_json::array();
  for (std::size_t k = 0; k < models.size(); ++k) {
    for (const MickelssonGenerator& g : gens.at(k)) {
      ordered_json one;
      one["class_index"] = models[k].class_index();
      one["side"] = to_string(models[k].side());
      ordered_json body = generator_json(models[k], g);
      for (auto& [key, val] : body.items()) one[key] = std::move(val);
      gj.push_back(std::move(one));
    }
  }
  j["generators"] = std::move(gj);
  j["verification"] = std::move(verification);
  return j;
}

std::string affine_latex(const AffineForm& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < f.rank(); ++i) {
    const Rat& c = f.linear()[static_cast<std::size_t>(i)];
    if (stepalg::is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    const Rat abs_c = neg ? Rat(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (abs_c != 1) os << rat_str(abs_c);
    os << "h_{" << i + 1 << "}";
  }
  const Rat& c0 = f.constant_term();
  if (!stepalg::is_zero(c0)) {
    if (first)
      os << rat_str(c0);
    else
      os << (sgn(c0) < 0 ? " - " : " + ") << rat_str(sgn(c0) < 0 ? Rat(-c0) : c0);
  } else if (first) {
    os << "0";
  }
  return os.str();
}

std::string cartan_scalar_latex(const CartanScalar& s) {
  const std::string num = poly_latex(s.numerator());
  if (s.denominator_factors().empty()) return num;
  std::ostringstream den;
  for (const auto& [form, power] : s.denominator_factors()) {
    den << "(" << affine_latex(form) << ")";
    if (power > 1) den << "^{" << power << "}";
  }
  return "\\frac{" + num + "}{" + den.str() + "}";
}

std::string generator_latex(const ComplementModel& m, const MickelssonGenerator& g) {
  std::ostringstream os;
  os << "z_{" << latex_label(m.node_label(g.node)) << "} = ";
  bool first = true;
  for (const auto& [route, coeff] : g.routes) {
    if (!first) os << " + ";
    first = false;
    for (std::size_t s = 0; s + 1 < route.nodes.size(); ++s)
      os << "\\varphi_{" << latex_label(m.node_label(route.nodes[s])) << ","
         << latex_label(m.node_label(route.nodes[s + 1])) << "}";
    os << "\\psi_{" << latex_label(m.node_label(route.min_node())) << "}";
    if (route.length() > 0) {
      // The displayed scalar is the tilde part: stored coefficient with
      // the phi matrix entries divided back out.
      const Rat pi = route_pi_product(m, route);
      CartanScalar tilde = coeff;
      tilde *= Rat(1) / pi;
      os << "\\," << cartan_scalar_latex(tilde);
    }
  }
  return os.str();
}

std::string generator_text(const ComplementModel& m, const MickelssonGenerator& g) {
  std::ostringstream os;
  os << "z[" << m.node_label(g.node) << "] = " << g.element << '\n';
  for (const auto& [route, coeff] : g.routes) {
    if (route.length() == 0) continue;
    os << "  route " << route << ": coefficient " << coeff << '\n';
  }
  return os.str();
}

}  // namespace stepalg

#include "stepalg/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace stepalg {

const char* to_string(SortClass c) {
  switch (c) {
    case SortClass::g_minus: return "g_minus";
    case SortClass::complement_minus: return "complement_minus";
    case SortClass::complement_plus: return "complement_plus";
    case SortClass::g_plus: return "g_plus";
  }
  return "?";
}

std::shared_ptr<const AlgebraContext> AlgebraContext::make(LeviPair lp) {
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext(std::move(lp)));
  const RootSystem& rs = ctx->lp_.ambient();

  struct Pending {
    Weight signed_root;
    Weight positive;  // |root|, for the tie-break key
    SortClass cls;
  };
  std::vector<Pending> pend;
  for (const auto& beta : rs.positive_roots()) {
    bool in_g = ctx->lp_.is_g_positive_root(beta);
    pend.push_back({beta, beta,
                    in_g ? SortClass::g_plus : SortClass::complement_plus});
    pend.push_back({-beta, beta,
                    in_g ? SortClass::g_minus : SortClass::complement_minus});
  }
  // PBW total order: sort class, then height of the positive counterpart,
  // then its lexicographic epsilon coordinates.
  std::sort(pend.begin(), pend.end(), [&](const Pending& a, const Pending& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    int ha = height(rs, a.positive), hb = height(rs, b.positive);
    if (ha != hb) return ha < hb;
    return a.positive < b.positive;
  });

  for (const auto& p : pend) {
    GeneratorSymbol s;
    s.id = static_cast<int>(ctx->symbols_.size());
    s.weight = p.signed_root;
    s.cls = p.cls;
    auto ij = rs.matrix_unit_indices(p.signed_root);
    s.row = ij->first;
    s.col = ij->second;
    s.label = "E[" + std::to_string(s.row + 1) + "," + std::to_string(s.col + 1) + "]";
    ctx->by_root_[s.weight] = s.id;
    ctx->symbols_.push_back(std::move(s));
  }
  return ctx;
}

int AlgebraContext::id_of_root(const Weight& signed_root) const {
  auto it = by_root_.find(signed_root);
  return it == by_root_.end() ? -1 : it->second;
}

int AlgebraContext::id_of_label(const std::string& label) const {
  for (const auto& s : symbols_)
    if (s.label == label) return s.id;
  return -1;
}

// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb; when both deltas fire the
// result is the Cartan element E_aa - E_bb = h_{eps_a - eps_b}.
BracketResult AlgebraContext::bracket(int x, int y) const {
  const GeneratorSymbol& X = symbol(x);
  const GeneratorSymbol& Y = symbol(y);
  const RootSystem& rs = lp_.ambient();
  BracketResult r;
  r.cartan = AffineForm(rs.rank());
  const int a = X.row, b = X.col, c = Y.row, d = Y.col;
  if (b == c && d == a) {
    r.cartan = AffineForm::h_of(rs, rs.root_eps(a, b));
    return r;
  }
  if (b == c) {
    r.root_id = id_of_root(rs.root_eps(a, d));
    r.root_coeff = 1;
  } else if (d == a) {
    r.root_id = id_of_root(rs.root_eps(c, b));
    r.root_coeff = -1;
  }
  return r;
}

Rat AlgebraContext::structure_constant(const Weight& alpha, const Weight& mu) const {
  int x = id_of_root(alpha), y = id_of_root(mu);
  if (x < 0 || y < 0) return 0;
  BracketResult br = bracket(x, y);
  if (br.root_id < 0) return 0;
  if (symbol(br.root_id).weight != alpha + mu) return 0;
  return br.root_coeff;
}

Weight AlgebraContext::word_weight(const std::vector<int>& word) const {
  Weight w = Weight::zero(lp_.ambient().dim());
  for (int id : word) w += symbol(id).weight;
  return w;
}

Weight AlgebraContext::monomial_weight(const PBWMonomial& m) const {
  Weight w = Weight::zero(lp_.ambient().dim());
  for (const auto& [id, p] : m) w += symbol(id).weight * Rat(p);
  return w;
}

long AlgebraContext::inversions(const std::vector<int>& word) {
  long n = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++n;
  return n;
}

std::map<PBWMonomial, CartanScalar> AlgebraContext::straighten(
    const std::vector<int>& word) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
  }
  auto result = straighten_uncached(word);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(word, result);
  return result;
}

std::map<PBWMonomial, CartanScalar> AlgebraContext::straighten_uncached(
    const std::vector<int>& word) const {
  const int n = rank();
  std::map<PBWMonomial, CartanScalar> out;

  // Find the first descent.  Sorted words collapse into a monomial.
  std::size_t p = 0;
  while (p + 1 < word.size() && word[p] <= word[p + 1]) ++p;
  if (word.size() < 2 || p + 1 == word.size()) {
    PBWMonomial m;
    for (int id : word) {
      if (!m.empty() && m.back().first == id)
        ++m.back().second;
      else
        m.emplace_back(id, 1);
    }
    out.emplace(std::move(m), CartanScalar::one(n));
    return out;
  }

  // One rewrite step: x y = y x + [x, y].  The swap strictly lowers the
  // inversion count at fixed length; bracket terms are strictly shorter,
  // so the recursion terminates.
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    ++steps_;
  }
  const int x = word[p], y = word[p + 1];

  std::vector<int> swapped = word;
  std::swap(swapped[p], swapped[p + 1]);
  out = straighten(swapped);

  BracketResult br = bracket(x, y);
  if (br.root_id >= 0) {
    std::vector<int> shorter(word.begin(), word.begin() + static_cast<long>(p));
    shorter.push_back(br.root_id);
    shorter.insert(shorter.end(), word.begin() + static_cast<long>(p) + 2, word.end());
    for (auto& [m, c] : straighten(shorter)) {
      CartanScalar add = c * br.root_coeff;
      auto [it, fresh] = out.emplace(m, add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  if (!br.cartan.is_zero()) {
    std::vector<int> rest(word.begin(), word.begin() + static_cast<long>(p));
    std::vector<int> suffix(word.begin() + static_cast<long>(p) + 2, word.end());
    rest.insert(rest.end(), suffix.begin(), suffix.end());
    // The extracted Cartan form crosses the suffix: h v = v tau_{wt v}(h).
    CartanScalar h = CartanScalar::from_affine(br.cartan)
                         .shifted(lp_.ambient(), word_weight(suffix));
    for (auto& [m, c] : straighten(rest)) {
      CartanScalar add = c * h;
      if (add.is_zero()) continue;
      auto [it, fresh] = out.emplace(m, add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

AlgebraElement AlgebraContext::zero_element() const {
  return AlgebraElement(shared_from_this(), {});
}

AlgebraElement AlgebraContext::one_element() const {
  return AlgebraElement(shared_from_this(), {{PBWMonomial{}, CartanScalar::one(rank())}});
}

AlgebraElement AlgebraContext::generator(int id) const {
  symbol(id);  // bounds check
  return AlgebraElement(shared_from_this(),
                        {{PBWMonomial{{id, 1}}, CartanScalar::one(rank())}});
}

AlgebraElement AlgebraContext::scalar_element(CartanScalar c) const {
  return AlgebraElement(shared_from_this(), {{PBWMonomial{}, std::move(c)}});
}

AlgebraElement AlgebraContext::word_element(const std::vector<int>& ids) const {
  return AlgebraElement(shared_from_this(), straighten(ids));
}

void AlgebraElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  return *this += -AlgebraElement(o);
}

AlgebraElement operator-(AlgebraElement a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

AlgebraElement& AlgebraElement::operator*=(const CartanScalar& c) {
  for (auto& [m, v] : terms_) v *= c;
  prune();
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& c) {
  for (auto& [m, v] : terms_) v *= c;
  prune();
  return *this;
}

namespace {
std::vector<int> flatten(const PBWMonomial& m) {
  std::vector<int> w;
  for (const auto& [id, p] : m)
    for (int k = 0; k < p; ++k) w.push_back(id);
  return w;
}
}  // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  const auto& ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (!ctx) return {};
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
    throw std::invalid_argument("elements from different algebra contexts");
  const RootSystem& rs = ctx->roots();
  AlgebraElement out = ctx->zero_element();
  for (const auto& [ma, ca] : a.terms_) {
    std::vector<int> wa = flatten(ma);
    for (const auto& [mb, cb] : b.terms_) {
      std::vector<int> w = wa;
      std::vector<int> wb = flatten(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      // Coefficients cross to the right:  ca m_b = m_b tau_{wt m_b}(ca).
      CartanScalar coeff = ca.shifted(rs, ctx->monomial_weight(mb)) * cb;
      if (coeff.is_zero()) continue;
      for (auto& [m, c] : ctx->straighten(w)) {
        CartanScalar add = c * coeff;
        if (add.is_zero()) continue;
        auto [it, fresh] = out.terms_.emplace(m, add);
        if (!fresh) {
          it->second += add;
          if (it->second.is_zero()) out.terms_.erase(it);
        }
      }
    }
  }
  return out;
}

AlgebraElement act_raising(const Weight& alpha, const AlgebraElement& a) {
  const auto& ctx = a.context();
  if (!ctx) throw std::invalid_argument("element has no context");
  const auto& gs = ctx->levi().g_simple_roots();
  if (std::find(gs.begin(), gs.end(), alpha) == gs.end())
    throw std::invalid_argument("act_raising requires a simple root of the subalgebra");
  int id = ctx->id_of_root(alpha);
  return multiply(ctx->generator(id), a);
}

namespace {
AlgebraElement filter_terms(
    const AlgebraElement& a,
    const std::function<bool(const PBWMonomial&)>& keep) {
  if (!a.context()) return a;
  std::map<PBWMonomial, CartanScalar> kept;
  for (const auto& [m, c] : a.terms())
    if (keep(m)) kept.emplace(m, c);
  return AlgebraElement(a.context(), std::move(kept));
}
}  // namespace

AlgebraElement reduce_mod_jplus(const AlgebraElement& a) {
  const auto ctx = a.context();
  return filter_terms(a, [ctx](const PBWMonomial& m) {
    return m.empty() || ctx->symbol(m.back().first).cls != SortClass::g_plus;
  });
}

AlgebraElement double_coset_reduce(const AlgebraElement& a) {
  const auto ctx = a.context();
  return filter_terms(reduce_mod_jplus(a), [ctx](const PBWMonomial& m) {
    return m.empty() || ctx->symbol(m.front().first).cls != SortClass::g_minus;
  });
}

std::pair<PBWMonomial, CartanScalar> leading_term(
    const AlgebraElement& a,
    const std::function<bool(const PBWMonomial&, const PBWMonomial&)>& less) {
  if (a.is_zero()) throw std::domain_error("leading term of zero element");
  auto best = a.terms().begin();
  for (auto it = std::next(best); it != a.terms().end(); ++it)
    if (less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

bool monomial_graded_lex_less(const PBWMonomial& a, const PBWMonomial& b) {
  int da = 0, db = 0;
  for (const auto& [id, p] : a) da += p;
  for (const auto& [id, p] : b) db += p;
  if (da != db) return da < db;
  return a < b;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) {
  if (a.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    if (m.empty()) {
      os << '(' << c << ')';
    } else {
      for (const auto& [id, p] : m) {
        os << a.context()->symbol(id).label;
        if (p > 1) os << '^' << p;
      }
      if (!c.is_one()) os << "·(" << c << ')';
    }
    first = false;
  }
  return os;
}

}  // namespace stepalg

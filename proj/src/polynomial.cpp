#include "stepalg/polynomial.hpp"

#include <optional>
#include <stdexcept>

namespace stepalg {

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

std::optional<AffineForm> Poly::as_affine() const {
  AffineForm f(rank_);
  for (const auto& [m, c] : terms_) {
    int d = total_degree(m);
    if (d > 1) return std::nullopt;
    if (d == 0) {
      f += AffineForm::constant(rank_, c);
    } else {
      for (int i = 0; i < rank_; ++i)
        if (m[static_cast<std::size_t>(i)] == 1)
          f += c * AffineForm::coordinate(rank_, i);
    }
  }
  return f;
}

Poly& Poly::operator+=(const Poly& o) {
  if (rank_ != o.rank_) {
    if (is_zero()) rank_ = o.rank_;
    else if (!o.is_zero()) throw std::invalid_argument("polynomial rank mismatch");
  }
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh && stepalg::is_zero(it->second += c)) terms_.erase(it);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (rank_ != o.rank_) {
    if (is_zero()) rank_ = o.rank_;
    else if (!o.is_zero()) throw std::invalid_argument("polynomial rank mismatch");
  }
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, -c);
    if (!fresh && stepalg::is_zero(it->second -= c)) terms_.erase(it);
  }
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (stepalg::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.rank_ != b.rank_ && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("polynomial rank mismatch");
  Poly r(a.is_zero() ? b.rank_ : a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Mono m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      Rat c = ca * cb;
      auto [it, fresh] = r.terms_.emplace(std::move(m), c);
      if (!fresh && stepalg::is_zero(it->second += c)) r.terms_.erase(it);
    }
  return r;
}

Poly Poly::shifted(const std::vector<Rat>& shift) const {
  if (static_cast<int>(shift.size()) != rank_)
    throw std::invalid_argument("shift vector length mismatch");
  Poly result(rank_);
  for (const auto& [m, c] : terms_) {
    // Expand prod_i (h_i + s_i)^{e_i} term by term.
    Poly factor = Poly::constant(rank_, c);
    for (int i = 0; i < rank_; ++i) {
      int e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      Poly base = Poly::variable(rank_, i) +
                  Poly::constant(rank_, shift[static_cast<std::size_t>(i)]);
      for (int k = 0; k < e; ++k) factor = factor * base;
    }
    result += factor;
  }
  return result;
}

Rat Poly::evaluate(const std::vector<Rat>& vals) const {
  if (static_cast<int>(vals.size()) != rank_)
    throw std::invalid_argument("evaluation vector length mismatch");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < rank_; ++i)
      for (int k = 0; k < m[static_cast<std::size_t>(i)]; ++k)
        t *= vals[static_cast<std::size_t>(i)];
    total += t;
  }
  return total;
}

std::optional<Poly> Poly::divide_by_affine(const AffineForm& f) const {
  if (f.rank() != rank_) throw std::invalid_argument("affine form rank mismatch");
  if (f.is_zero()) throw std::invalid_argument("division by zero form");
  if (is_zero()) return Poly(rank_);

  // Pick the pivot variable: first coordinate with nonzero coefficient.
  int pivot = -1;
  for (int i = 0; i < rank_; ++i)
    if (!stepalg::is_zero(f.linear()[static_cast<std::size_t>(i)])) {
      pivot = i;
      break;
    }
  if (pivot < 0) {
    // Constant divisor.
    Poly q = *this;
    q *= 1 / f.constant_term();
    return q;
  }
  const Rat& cv = f.linear()[static_cast<std::size_t>(pivot)];

  // Repeatedly cancel the highest pivot-degree terms:  rem = q*f + rem'
  // with deg_pivot(rem') eventually 0; exact iff the final remainder is 0.
  Poly quotient(rank_), rem = *this;
  while (true) {
    int top = 0;
    for (const auto& [m, c] : rem.terms_)
      top = std::max(top, m[static_cast<std::size_t>(pivot)]);
    if (top == 0) break;
    Poly lead(rank_);
    for (const auto& [m, c] : rem.terms_)
      if (m[static_cast<std::size_t>(pivot)] == top) {
        Mono mm = m;
        mm[static_cast<std::size_t>(pivot)] = top - 1;
        lead.terms_[std::move(mm)] = c / cv;
      }
    quotient += lead;
    rem -= lead * Poly::from_affine(f);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [m, c] : p.terms_) {
    if (!first && sgn(c) > 0) os << '+';
    bool unit = (c == 1 || c == -1) && Poly::total_degree(m) > 0;
    if (c == -1 && unit)
      os << '-';
    else if (!unit)
      os << c;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any || !unit) os << '*';
      os << 'h' << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
      any = true;
    }
    first = false;
  }
  return os;
}

}  // namespace stepalg

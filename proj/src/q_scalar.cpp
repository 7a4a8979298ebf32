#include "stepalg/q_scalar.hpp"

#include <stdexcept>

namespace stepalg {

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (rank_ != o.rank_) {
    if (is_zero()) rank_ = o.rank_;
    else if (!o.is_zero()) throw std::invalid_argument("q-laurent rank mismatch");
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh && stepalg::is_zero(it->second += c)) terms_.erase(it);
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  return *this += -QLaurent(o);
}

QLaurent& QLaurent::operator*=(const Rat& c) {
  if (stepalg::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.rank_ != b.rank_ && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("q-laurent rank mismatch");
  QLaurent r(a.is_zero() ? b.rank_ : a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Rat c = ca * cb;
      auto [it, fresh] = r.terms_.emplace(ea + eb, c);
      if (!fresh && stepalg::is_zero(it->second += c)) r.terms_.erase(it);
    }
  return r;
}

QLaurent QLaurent::shifted(const RootSystem& rs, const Weight& mu) const {
  QLaurent r(rank_);
  for (const auto& [e, c] : terms_) {
    auto [it, fresh] = r.terms_.emplace(e.shifted(rs, mu), c);
    if (!fresh && stepalg::is_zero(it->second += c)) r.terms_.erase(it);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const QLaurent& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [e, c] : x.terms_) {
    if (!first && sgn(c) > 0) os << '+';
    if (c == -1)
      os << '-';
    else if (c != 1 || e.is_zero())
      os << c;
    if (!e.is_zero()) {
      if (c != 1 && c != -1) os << '*';
      os << "q^(" << e << ')';
    }
    first = false;
  }
  return os;
}

QScalar::QScalar(QLaurent num, QLaurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = QLaurent::one(den_.rank());
    return;
  }
  // Divide through by the leading denominator term (largest exponent in
  // the canonical order): an invertible monomial, so the value is
  // unchanged and the denominator gets leading term 1 * q^0.
  const auto& lead = *den_.terms().rbegin();
  QLaurent unit = QLaurent::q_power(-lead.first, 1 / lead.second);
  num_ = num_ * unit;
  den_ = den_ * unit;
}

QScalar& QScalar::operator*=(const QScalar& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator*=(const Rat& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = QLaurent::one(den_.rank());
  return *this;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -QScalar(o); }

QScalar QScalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  return QScalar(den_, num_);
}

bool operator==(const QScalar& a, const QScalar& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

QScalar QScalar::shifted(const RootSystem& rs, const Weight& mu) const {
  QScalar r;
  r.num_ = num_.shifted(rs, mu);
  r.den_ = den_.shifted(rs, mu);
  r.normalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) {
  if (s.den_ == QLaurent::one(s.den_.rank())) return os << s.num_;
  return os << '(' << s.num_ << ")/(" << s.den_ << ')';
}

QScalar q_bracket(const AffineForm& eta) {
  const int n = eta.rank();
  AffineForm one_form = AffineForm::constant(n, 1);
  QLaurent num = QLaurent::q_power(eta) - QLaurent::q_power(-eta);
  QLaurent den = QLaurent::q_power(one_form) - QLaurent::q_power(-one_form);
  return QScalar(std::move(num), std::move(den));
}

}  // namespace stepalg

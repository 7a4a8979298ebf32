#include "stepalg/affine_form.hpp"

namespace stepalg {

Rat AffineForm::make_primitive() {
  // lcm of denominators, gcd of numerators -> integer primitive vector.
  mpz_class den_lcm = 1, num_gcd = 0;
  auto fold = [&](const Rat& c) {
    if (stepalg::is_zero(c)) return;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    num_gcd = g;
  };
  for (const auto& c : lin_) fold(c);
  fold(cst_);
  if (num_gcd == 0) return 1;  // zero form, leave as is

  Rat factor(num_gcd, den_lcm);
  factor.canonicalize();
  const Rat* leading = &cst_;
  for (const auto& c : lin_)
    if (!stepalg::is_zero(c)) {
      leading = &c;
      break;
    }
  if (sgn(*leading) < 0) factor = -factor;
  Rat inv_factor = 1 / factor;
  for (auto& c : lin_) c *= inv_factor;
  cst_ *= inv_factor;
  return factor;
}

std::ostream& operator<<(std::ostream& os, const AffineForm& f) {
  bool first = true;
  for (std::size_t i = 0; i < f.lin_.size(); ++i) {
    const Rat& c = f.lin_[i];
    if (stepalg::is_zero(c)) continue;
    if (!first && sgn(c) > 0) os << '+';
    if (c == -1)
      os << '-';
    else if (c != 1)
      os << c << '*';
    os << "h" << (i + 1);
    first = false;
  }
  if (first)
    os << f.cst_;
  else if (!stepalg::is_zero(f.cst_)) {
    if (sgn(f.cst_) > 0) os << '+';
    os << f.cst_;
  }
  return os;
}

AffineForm eta_form(const RootSystem& rs, const Weight& mu) {
  AffineForm f = AffineForm::h_of(rs, mu);
  return f + AffineForm::constant(rs.rank(),
                                  dot(mu, rs.rho()) - dot(mu, mu) / 2);
}

}  // namespace stepalg

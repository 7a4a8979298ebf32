#include "stepalg/root_system.hpp"

#include <stdexcept>

namespace stepalg {

RootSystem RootSystem::build(char series, int rank) {
  if (series != 'A')
    throw std::invalid_argument(std::string("unsupported series '") + series +
                                "': only the A series is implemented");
  if (rank < 1 || rank > 12)
    throw std::invalid_argument("rank out of range (1..12)");

  RootSystem rs;
  rs.series_ = series;
  rs.rank_ = rank;
  const std::size_t d = static_cast<std::size_t>(rank) + 1;

  for (int i = 0; i < rank; ++i) rs.simple_.push_back(rs.root_eps(i, i + 1));

  // eps_i - eps_j for i < j, enumerated by height then lexicographically;
  // height of eps_i - eps_j is j - i, so enumerate by gap first.
  for (int gap = 1; gap <= rank; ++gap)
    for (int i = 0; i + gap < static_cast<int>(d); ++i)
      rs.positive_.push_back(rs.root_eps(i, i + gap));

  Weight rho = Weight::zero(d);
  for (const auto& b : rs.positive_) rho += b;
  rs.rho_ = rho * rat(1, 2);
  return rs;
}

Weight RootSystem::eps(int i) const {
  Weight w = Weight::zero(dim());
  w[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight RootSystem::root_eps(int i, int j) const {
  Weight w = Weight::zero(dim());
  w[static_cast<std::size_t>(i)] = 1;
  w[static_cast<std::size_t>(j)] = -1;
  return w;
}

std::optional<std::pair<int, int>> RootSystem::matrix_unit_indices(
    const Weight& w) const {
  if (w.dim() != dim()) return std::nullopt;
  int pos = -1, neg = -1;
  for (std::size_t k = 0; k < w.dim(); ++k) {
    if (stepalg::is_zero(w[k])) continue;
    if (w[k] == 1 && pos < 0)
      pos = static_cast<int>(k);
    else if (w[k] == -1 && neg < 0)
      neg = static_cast<int>(k);
    else
      return std::nullopt;
  }
  if (pos < 0 || neg < 0) return std::nullopt;
  return std::make_pair(pos, neg);
}

bool RootSystem::is_root(const Weight& w) const {
  return matrix_unit_indices(w).has_value();
}

bool RootSystem::is_positive_root(const Weight& w) const {
  auto ij = matrix_unit_indices(w);
  return ij && ij->first < ij->second;
}

std::vector<Rat> RootSystem::simple_coords(const Weight& mu) const {
  if (mu.dim() != dim())
    throw std::invalid_argument("weight dimension does not match root system");
  // mu = sum_i c_i alpha_i  <=>  c_i = mu_1 + ... + mu_i, provided the
  // coordinates sum to zero (mu lies in the span of the roots).
  std::vector<Rat> c(static_cast<std::size_t>(rank_));
  Rat partial = 0;
  for (int i = 0; i < rank_; ++i) {
    partial += mu[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(i)] = partial;
  }
  partial += mu[static_cast<std::size_t>(rank_)];
  if (!stepalg::is_zero(partial))
    throw std::domain_error("weight is not in the root span (coords must sum to 0)");
  return c;
}

Rat RootSystem::height_rat(const Weight& mu) const {
  Rat h = 0;
  for (const auto& c : simple_coords(mu)) h += c;
  return h;
}

RootSystem build_root_system(char series, int rank) {
  return RootSystem::build(series, rank);
}

int height(const RootSystem& rs, const Weight& mu) {
  auto coords = rs.simple_coords(mu);
  long h = 0;
  for (const auto& c : coords) {
    if (!is_integer(c))
      throw std::domain_error("height undefined: fractional simple-root coefficient");
    if (sgn(c) < 0)
      throw std::domain_error("height undefined: negative simple-root coefficient");
    h += c.get_num().get_si();
  }
  return static_cast<int>(h);
}

}  // namespace stepalg

#include "stepalg/levi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stepalg {

namespace {

// Sort key used everywhere a deterministic root order is needed.
bool root_less(const RootSystem& rs, const Weight& a, const Weight& b) {
  Rat ha = rs.height_rat(a), hb = rs.height_rat(b);
  int c = cmp(ha, hb);
  if (c != 0) return c < 0;
  return a < b;
}

}  // namespace

LeviPair::LeviPair(RootSystem ambient, std::vector<int> levi_1based)
    : rs_(std::move(ambient)) {
  std::set<int> seen;
  for (int i : levi_1based) {
    if (i < 1 || i > rs_.rank())
      throw std::invalid_argument("levi index out of range");
    if (!seen.insert(i - 1).second)
      throw std::invalid_argument("duplicate levi index");
  }
  levi_.assign(seen.begin(), seen.end());

  for (int i : levi_) g_simple_.push_back(rs_.simple_root(i));

  // A positive root eps_i - eps_j = alpha_i + ... + alpha_{j-1} belongs
  // to g iff every simple constituent does.
  for (const auto& b : rs_.positive_roots()) {
    auto coords = rs_.simple_coords(b);
    bool in_g = true;
    for (int k = 0; k < rs_.rank(); ++k)
      if (!stepalg::is_zero(coords[static_cast<std::size_t>(k)]) &&
          !in_levi(k)) {
        in_g = false;
        break;
      }
    (in_g ? g_positive_ : complement_).push_back(b);
  }

  // Quasi-root classes: connected components of the complement roots
  // under mu -> mu ± alpha, alpha a simple root of g.  These are the
  // weight supports of the irreducible summands of the complement.
  std::vector<bool> used(complement_.size(), false);
  auto find_index = [&](const Weight& w) -> int {
    for (std::size_t k = 0; k < complement_.size(); ++k)
      if (complement_[k] == w) return static_cast<int>(k);
    return -1;
  };
  std::vector<QuasiRootClass> classes;
  for (std::size_t s = 0; s < complement_.size(); ++s) {
    if (used[s]) continue;
    QuasiRootClass cls;
    std::vector<int> queue{static_cast<int>(s)};
    used[s] = true;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      cls.roots.push_back(complement_[static_cast<std::size_t>(cur)]);
      for (const auto& alpha : g_simple_) {
        for (int sign : {+1, -1}) {
          Weight w = complement_[static_cast<std::size_t>(cur)] +
                     alpha * Rat(sign);
          int idx = find_index(w);
          if (idx >= 0 && !used[static_cast<std::size_t>(idx)]) {
            used[static_cast<std::size_t>(idx)] = true;
            queue.push_back(idx);
          }
        }
      }
    }
    std::sort(cls.roots.begin(), cls.roots.end(),
              [&](const Weight& a, const Weight& b) { return root_less(rs_, a, b); });
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const QuasiRootClass& a, const QuasiRootClass& b) {
              return root_less(rs_, a.roots.front(), b.roots.front());
            });
  classes_ = std::move(classes);
}

bool LeviPair::in_levi(int i) const {
  return std::binary_search(levi_.begin(), levi_.end(), i);
}

bool LeviPair::is_g_positive_root(const Weight& w) const {
  return std::find(g_positive_.begin(), g_positive_.end(), w) != g_positive_.end();
}

bool LeviPair::is_complement_positive_root(const Weight& w) const {
  return std::find(complement_.begin(), complement_.end(), w) != complement_.end();
}

LeviPair levi_pair(const RootSystem& rs, const std::vector<int>& subset_1based) {
  return LeviPair(rs, subset_1based);
}

}  // namespace stepalg

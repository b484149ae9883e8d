#include "specdecay/search.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace specdecay {

SupSearchResult sup_search(const std::function<double(double)>& g, double lo, double hi,
                           const GridPolicy& policy) {
  if (!(lo < hi)) throw std::invalid_argument("sup_search: empty domain");
  if (policy.points < 3) throw std::invalid_argument("sup_search: need at least 3 grid points");
  if (policy.log_spaced && !(lo > 0.0))
    throw std::invalid_argument("sup_search: log spacing requires lo > 0");

  // Work in a u-coordinate where the grid is uniform.
  const double ulo = policy.log_spaced ? std::log(lo) : lo;
  const double uhi = policy.log_spaced ? std::log(hi) : hi;
  auto to_x = [&](double u) { return policy.log_spaced ? std::exp(u) : u; };

  SupSearchResult best;
  auto eval = [&](double u) {
    const double x = to_x(u);
    const double v = g(x);
    ++best.evals;
    if (v > best.value || best.evals == 1) {
      best.value = v;
      best.argmax = x;
    }
    return v;
  };

  const std::size_t n = policy.points;
  std::vector<double> us(n), vs(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    us[i] = ulo + (uhi - ulo) * static_cast<double>(i) / static_cast<double>(n - 1);
    vs[i] = eval(us[i]);
    if (vs[i] > vs[k]) k = i;
  }

  // Golden-section refinement inside the bracket around the best grid point.
  double a = us[k == 0 ? 0 : k - 1];
  double b = us[k + 1 >= n ? n - 1 : k + 1];
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double u1 = b - phi * (b - a);
  double u2 = a + phi * (b - a);
  double f1 = eval(u1), f2 = eval(u2);
  const double min_step = policy.refine_frac * (uhi - ulo);
  while (b - a > min_step) {
    if (f1 < f2) {
      a = u1;
      u1 = u2;
      f1 = f2;
      u2 = a + phi * (b - a);
      f2 = eval(u2);
    } else {
      b = u2;
      u2 = u1;
      f2 = f1;
      u1 = b - phi * (b - a);
      f1 = eval(u1);
    }
  }
  return best;
}

}  // namespace specdecay

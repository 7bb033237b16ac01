#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace coloedr {

// Shared panel budget across one logical integral (default cap 1e6 panels).
struct QuadratureBudget {
  std::int64_t panels = 0;
  std::int64_t max_panels = 1000000;
};

namespace detail {

template <typename F>
double simpson_panel(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adapt(const F& f, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth, QuadratureBudget& budget) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_panel<F>(a, fa, m, fm, flm);
  const double right = simpson_panel<F>(m, fm, b, fb, frm);
  budget.panels += 2;
  const double delta = left + right - whole;
  if (depth <= 0 || budget.panels >= budget.max_panels || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, budget) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, budget);
}

}  // namespace detail

// Adaptive Simpson with Richardson extrapolation; absolute tolerance.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol,
                 QuadratureBudget* budget = nullptr) {
  if (!(b > a)) return 0.0;
  QuadratureBudget local;
  QuadratureBudget& bud = budget ? *budget : local;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = detail::simpson_panel<F>(a, fa, b, fb, fm);
  return detail::adapt(f, a, fa, b, fb, m, fm, whole, abs_tol, 52, bud);
}

// Splits [a, b] at the given interior kinks so every adaptive panel sees a
// smooth integrand; the tolerance is apportioned by segment width.
template <typename F>
double integrate_segmented(const F& f, double a, double b, std::vector<double> kinks,
                           double abs_tol) {
  if (!(b > a)) return 0.0;
  kinks.erase(std::remove_if(kinks.begin(), kinks.end(),
                             [&](double x) { return !(x > a) || !(x < b); }),
              kinks.end());
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  std::vector<double> cuts;
  cuts.reserve(kinks.size() + 2);
  cuts.push_back(a);
  cuts.insert(cuts.end(), kinks.begin(), kinks.end());
  cuts.push_back(b);

  QuadratureBudget budget;
  const double total = b - a;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double w = cuts[i + 1] - cuts[i];
    sum += integrate(f, cuts[i], cuts[i + 1], abs_tol * std::max(w / total, 1e-6), &budget);
  }
  return sum;
}

}  // namespace coloedr

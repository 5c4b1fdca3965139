#ifndef PACLOGIC_STATS_HPP
#define PACLOGIC_STATS_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace paclogic {

/// Regularized incomplete gamma functions, series/continued-fraction split as
/// in Numerical Recipes; accurate to ~1e-12 for the chi-square tails needed
/// here.
namespace detail {

inline double gamma_series_p(double s, double x) {
  double sum = 1.0 / s;
  double term = sum;
  for (int n = 1; n < 1000; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

inline double gamma_cf_q(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    double an = -static_cast<double>(i) * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace detail

/// Upper regularized incomplete gamma Q(s, x) = Gamma(s,x)/Gamma(s).
inline double gamma_q(double s, double x) {
  if (s <= 0.0 || x < 0.0) throw std::domain_error("gamma_q: invalid arguments");
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) return 1.0 - detail::gamma_series_p(s, x);
  return detail::gamma_cf_q(s, x);
}

/// Upper tail of the chi-square distribution with df degrees of freedom.
inline double chi_square_sf(double stat, double df) {
  if (df <= 0.0) throw std::domain_error("chi_square_sf: df must be positive");
  if (stat <= 0.0) return 1.0;
  return gamma_q(df / 2.0, stat / 2.0);
}

struct ChiSquareResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
};

/// Goodness-of-fit test of observed counts against cell probabilities.
inline ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                                      std::span<const double> probs) {
  if (counts.size() != probs.size() || counts.empty())
    throw std::invalid_argument("chi_square_gof: size mismatch");
  double total = 0.0;
  for (std::uint64_t c : counts) total += static_cast<double>(c);
  ChiSquareResult r;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double expected = total * probs[i];
    if (expected <= 0.0) throw std::invalid_argument("chi_square_gof: zero expected count");
    double d = static_cast<double>(counts[i]) - expected;
    r.statistic += d * d / expected;
  }
  r.df = static_cast<double>(counts.size() - 1);
  r.p_value = chi_square_sf(r.statistic, r.df);
  return r;
}

/// Two-sample chi-square homogeneity test on binned counts (equal or unequal
/// totals; cells empty in both samples are skipped).
inline ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                             std::span<const std::uint64_t> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("chi_square_two_sample: size mismatch");
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  if (na == 0.0 || nb == 0.0)
    throw std::invalid_argument("chi_square_two_sample: empty sample");
  const double ka = std::sqrt(nb / na);
  const double kb = std::sqrt(na / nb);
  ChiSquareResult r;
  int cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ai = static_cast<double>(a[i]);
    double bi = static_cast<double>(b[i]);
    if (ai == 0.0 && bi == 0.0) continue;
    double d = ka * ai - kb * bi;
    r.statistic += d * d / (ai + bi);
    ++cells;
  }
  if (cells < 2) {
    // all mass in one shared cell: identical one-point distributions
    r.df = 1.0;
    r.p_value = 1.0;
    return r;
  }
  r.df = static_cast<double>(cells - 1);
  r.p_value = chi_square_sf(r.statistic, r.df);
  return r;
}

/// Standard error of a binomial proportion estimate.
inline double binomial_stderr(double p_hat, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("binomial_stderr: n must be positive");
  return std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / static_cast<double>(n));
}

}  // namespace paclogic

#endif  // PACLOGIC_STATS_HPP

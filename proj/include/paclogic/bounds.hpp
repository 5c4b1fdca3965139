#ifndef PACLOGIC_BOUNDS_HPP
#define PACLOGIC_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace paclogic::bounds {

/// Closed-form calculators for the worst-case error bounds, the
/// sampling-without-replacement concentration tails, and the PAC error
/// bounds. All floors are exact integer divisions; tails are clamped to
/// [0,1]; values are plain doubles (exactness matters for probabilities of
/// formulas, not for bound magnitudes).

inline std::uint64_t floor_div(std::uint64_t n, std::uint64_t k) {
  if (k == 0) throw std::domain_error("bounds: k must be positive");
  return n / k;
}

inline void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("bounds: delta must lie in (0,1)");
}

/// Which ground literals count toward vacuity: both signs (2 u^a) or
/// positive literals only (u^a).
enum class LiteralConvention { kSigned, kPositiveOnly };

inline double literal_total(std::uint64_t u, std::uint32_t a, LiteralConvention conv) {
  double base = std::pow(static_cast<double>(u), static_cast<double>(a));
  return conv == LiteralConvention::kSigned ? 2.0 * base : base;
}

struct BoundReport {
  std::string theorem;   // stable id: prop3, prop4, thm7, thm8, thm9, thm10
  double value = 0.0;    // reported (tightest) bound
  double alt_value = 0.0;  // second stated form where one exists (thm9)
  double fraction = 0.0;   // per-literal form where stated (thm10: value / u^a)
  bool vacuous = false;
  double literal_total = 0.0;
};

// -- worst case -------------------------------------------------------------

/// (1 - Q) |C|^k k^a : errors of k-entailment given test accuracy Q.
inline double worst_case_k(double q, std::uint64_t c_size, std::uint32_t k, std::uint32_t a) {
  if (a > k) throw std::domain_error("worst_case_k: arity exceeds k");
  return (1.0 - q) * std::pow(static_cast<double>(c_size), k) *
         std::pow(static_cast<double>(k), a);
}

/// Voting strengthening: (1 - Q) |C|^a k^a / gamma when gamma |C|^(k-a) >= 1,
/// otherwise the plain k-entailment bound. gamma = 0 routes to the fallback.
inline double worst_case_voting(double q, std::uint64_t c_size, std::uint32_t k,
                                std::uint32_t a, double gamma) {
  if (a > k) throw std::domain_error("worst_case_voting: arity exceeds k");
  if (gamma < 0.0 || gamma > 1.0)
    throw std::domain_error("worst_case_voting: gamma outside [0,1]");
  if (gamma == 0.0) return worst_case_k(q, c_size, k, a);
  double scale = gamma * std::pow(static_cast<double>(c_size), static_cast<double>(k - a));
  if (scale >= 1.0)
    return (1.0 - q) * std::pow(static_cast<double>(c_size), a) *
           std::pow(static_cast<double>(k), a) / gamma;
  return worst_case_k(q, c_size, k, a);
}

// -- concentration tails ------------------------------------------------------

/// P[deviation >= eps] <= exp(-2 floor(n/k) eps^2), doubled when two-sided.
inline double tail_one_sample(std::uint64_t n, std::uint64_t k, double eps, bool two_sided) {
  if (n < k) throw std::domain_error("tail_one_sample: n < k");
  double b = std::exp(-2.0 * static_cast<double>(floor_div(n, k)) * eps * eps);
  if (two_sided) b *= 2.0;
  return std::min(1.0, b);
}

/// Two-sample tail: exp(-2 eps^2 / (1/floor(n/k) + 1/floor(u/k))).
inline double tail_two_sample(std::uint64_t n, std::uint64_t u, std::uint64_t k, double eps,
                              bool two_sided) {
  if (n < k || u < k) throw std::domain_error("tail_two_sample: sample smaller than k");
  double m1 = static_cast<double>(floor_div(n, k));
  double m2 = static_cast<double>(floor_div(u, k));
  double b = std::exp(-2.0 * eps * eps / (1.0 / m1 + 1.0 / m2));
  if (two_sided) b *= 2.0;
  return std::min(1.0, b);
}

/// Realizable-case tail: P[estimate = 0] <= exp(-floor(n/k) eps) for
/// formulas of true probability at least eps. Note eps, not eps^2.
inline double tail_realizable(std::uint64_t n, std::uint64_t k, double eps) {
  if (n < k) throw std::domain_error("tail_realizable: n < k");
  if (eps < 0.0 || eps > 1.0) throw std::domain_error("tail_realizable: eps outside [0,1]");
  return std::min(1.0, std::exp(-static_cast<double>(floor_div(n, k)) * eps));
}

enum class TailKind { kOneSample, kTwoSample, kRealizable };

/// Smallest eps whose tail bound is at most delta (closed forms, as used
/// inside the PAC proofs).
inline double invert_tail(std::uint64_t n, std::uint64_t k, double delta, TailKind which,
                          std::optional<std::uint64_t> u = std::nullopt,
                          bool two_sided = true) {
  check_delta(delta);
  double m1 = static_cast<double>(floor_div(n, k));
  double lognum = std::log((two_sided ? 2.0 : 1.0) / delta);
  switch (which) {
    case TailKind::kOneSample:
      return std::sqrt(lognum / (2.0 * m1));
    case TailKind::kTwoSample: {
      if (!u) throw std::domain_error("invert_tail: two-sample inversion needs u");
      double m2 = static_cast<double>(floor_div(*u, k));
      return std::sqrt(std::log((two_sided ? 2.0 : 1.0) / delta) * (1.0 / m1 + 1.0 / m2) / 2.0);
    }
    case TailKind::kRealizable:
      return std::log(1.0 / delta) / m1;
  }
  throw std::logic_error("invert_tail: unknown kind");
}

// -- PAC bounds ---------------------------------------------------------------

inline BoundReport make_report(std::string theorem, double value, std::uint64_t u,
                               std::uint32_t a, LiteralConvention conv) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.value = value;
  r.literal_total = literal_total(u, a, conv);
  r.vacuous = value >= r.literal_total;
  return r;
}

/// Expected-error bound for theories with zero training error:
/// (ln|H| + ln(1/delta)) / floor(n/k) * u^k k^a.
inline BoundReport pac_realizable_expected(std::uint64_t n, std::uint64_t u, std::uint32_t k,
                                           std::uint32_t a, std::uint64_t h_size, double delta,
                                           LiteralConvention conv = LiteralConvention::kSigned) {
  if (a > k) throw std::domain_error("pac_realizable_expected: arity exceeds k");
  if (h_size < 1) throw std::domain_error("pac_realizable_expected: |H| must be >= 1");
  check_delta(delta);
  double m = static_cast<double>(floor_div(n, k));
  double v = (std::log(static_cast<double>(h_size)) + std::log(1.0 / delta)) / m *
             std::pow(static_cast<double>(u), k) * std::pow(static_cast<double>(k), a);
  return make_report("thm7", v, u, a, conv);
}

/// General expected-error bound:
/// (1 - Q + sqrt(ln(|H|/delta) / (2 floor(n/k)))) u^k k^a.
inline BoundReport pac_expected(double q_train, std::uint64_t n, std::uint64_t u,
                                std::uint32_t k, std::uint32_t a, std::uint64_t h_size,
                                double delta,
                                LiteralConvention conv = LiteralConvention::kSigned) {
  if (a > k) throw std::domain_error("pac_expected: arity exceeds k");
  if (h_size < 1) throw std::domain_error("pac_expected: |H| must be >= 1");
  check_delta(delta);
  double m = static_cast<double>(floor_div(n, k));
  double dev = std::sqrt(std::log(static_cast<double>(h_size) / delta) / (2.0 * m));
  double v = (1.0 - q_train + dev) * std::pow(static_cast<double>(u), k) *
             std::pow(static_cast<double>(k), a);
  return make_report("thm8", v, u, a, conv);
}

/// Bound on the actual error count. Both stated forms are computed; `value`
/// is the first (tighter) form, `alt_value` the min-floor form.
inline BoundReport pac_actual(double q_train, std::uint64_t n, std::uint64_t u, std::uint32_t k,
                              std::uint32_t a, std::uint64_t h_size, double delta,
                              LiteralConvention conv = LiteralConvention::kSigned) {
  if (a > k) throw std::domain_error("pac_actual: arity exceeds k");
  if (h_size < 1) throw std::domain_error("pac_actual: |H| must be >= 1");
  check_delta(delta);
  double m1 = static_cast<double>(floor_div(n, k));
  double m2 = static_cast<double>(floor_div(u, k));
  double logterm = std::log(2.0 * static_cast<double>(h_size) / delta);
  double dev1 = std::sqrt((m1 + m2) * logterm / (2.0 * m1 * m2));
  double dev2 = std::sqrt(logterm / std::min(m1, m2));
  double scale = std::pow(static_cast<double>(u), k) * std::pow(static_cast<double>(k), a);
  BoundReport r = make_report("thm9", (1.0 - q_train + dev1) * scale, u, a, conv);
  r.alt_value = (1.0 - q_train + dev2) * scale;
  return r;
}

/// Voting-entailment PAC bound plus the per-literal fraction form, which does
/// not grow with the test domain size.
inline BoundReport pac_voting(double q_train, std::uint64_t n, std::uint64_t u, std::uint32_t k,
                              std::uint32_t a, double gamma, std::uint64_t h_size, double delta,
                              LiteralConvention conv = LiteralConvention::kSigned) {
  if (a > k) throw std::domain_error("pac_voting: arity exceeds k");
  if (h_size < 1) throw std::domain_error("pac_voting: |H| must be >= 1");
  if (!(gamma > 0.0) || gamma > 1.0)
    throw std::domain_error("pac_voting: gamma must lie in (0,1]");
  check_delta(delta);
  double m1 = static_cast<double>(floor_div(n, k));
  double m2 = static_cast<double>(floor_div(u, k));
  double dev = std::sqrt(std::log(2.0 * static_cast<double>(h_size) / delta) / std::min(m1, m2));
  double scale = std::pow(static_cast<double>(u), a) * std::pow(static_cast<double>(k), a) / gamma;
  BoundReport r = make_report("thm10", (1.0 - q_train + dev) * scale, u, a, conv);
  r.fraction = r.value / std::pow(static_cast<double>(u), a);
  return r;
}

}  // namespace paclogic::bounds

#endif  // PACLOGIC_BOUNDS_HPP

#ifndef PACLOGIC_REPORT_HPP
#define PACLOGIC_REPORT_HPP

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>

#include "paclogic/harness.hpp"

namespace paclogic {

/// CSV artifacts for experiment and concentration runs. Formatting is fully
/// deterministic: doubles use shortest round-trip form, rationals print as
/// num/den, digests as fixed-width hex. Schema changes bump the version tag
/// in the header line.
inline constexpr const char* kReportSchemaVersion = "1";

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline std::string format_hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

inline std::string trials_csv(const PacExperimentResult& result) {
  const std::size_t H = result.q_global.size();
  const bool voting = result.config.gamma.has_value();
  std::string out = "# paclogic trials schema v";
  out += kReportSchemaVersion;
  out += "\nouter,inner,seed,ups_digest,gam_digest,selected";
  for (std::size_t i = 0; i < H; ++i) {
    const std::string s = std::to_string(i);
    out += ",q_train_" + s + ",q_test_" + s + ",f_k_" + s;
    if (voting) out += ",f_vote_" + s;
    out += ",bound_thm9_" + s;
    if (voting) out += ",bound_thm10_" + s;
  }
  out += ",viol_thm9";
  if (voting) out += ",viol_thm10";
  out += "\n";
  for (const TrialRecord& r : result.trials) {
    out += std::to_string(r.outer) + "," + std::to_string(r.inner) + "," +
           std::to_string(r.seed) + "," + format_hex(r.ups_digest) + "," +
           format_hex(r.gam_digest) + "," + std::to_string(r.selected);
    for (std::size_t i = 0; i < H; ++i) {
      out += "," + r.q_train[i].str() + "," + r.q_test[i].str() + "," +
             std::to_string(r.f_k[i]);
      if (voting) out += "," + std::to_string(r.f_vote[i]);
      out += "," + format_double(r.bound_thm9[i]);
      if (voting) out += "," + format_double(r.bound_thm10[i]);
    }
    out += std::string(",") + (r.viol_thm9 ? "1" : "0");
    if (voting) out += std::string(",") + (r.viol_thm10 ? "1" : "0");
    out += "\n";
  }
  return out;
}

inline std::string outers_csv(const PacExperimentResult& result) {
  const std::size_t H = result.q_global.size();
  std::string out = "# paclogic outer-trials schema v";
  out += kReportSchemaVersion;
  out += "\nouter,seed,ups_digest,selected";
  for (std::size_t i = 0; i < H; ++i) {
    const std::string s = std::to_string(i);
    out += ",q_train_" + s + ",bound_thm7_" + s + ",bound_thm8_" + s + ",mean_f_k_" + s;
  }
  out += ",viol_thm7,viol_thm8\n";
  for (const OuterRecord& r : result.outers) {
    out += std::to_string(r.outer) + "," + std::to_string(r.seed) + "," +
           format_hex(r.ups_digest) + "," + std::to_string(r.selected);
    for (std::size_t i = 0; i < H; ++i) {
      out += "," + r.q_train[i].str() + "," + format_double(r.bound_thm7[i]) + "," +
             format_double(r.bound_thm8[i]) + "," + format_double(r.mean_f_k[i]);
    }
    out += std::string(",") + (r.viol_thm7 ? "1" : "0") + "," + (r.viol_thm8 ? "1" : "0");
    out += "\n";
  }
  return out;
}

inline std::string concentration_csv(const ConcentrationReport& rep) {
  std::string out = "# paclogic concentration schema v";
  out += kReportSchemaVersion;
  out += "\neps,emp_upper,emp_lower,emp_two,bound_one,bound_two\n";
  for (const ConcentrationRow& r : rep.rows) {
    out += format_double(r.eps) + "," + format_double(r.emp_upper) + "," +
           format_double(r.emp_lower) + "," + format_double(r.emp_two) + "," +
           format_double(r.bound_one) + "," + format_double(r.bound_two) + "\n";
  }
  if (!rep.realizable_rows.empty()) {
    out += "# realizable: emp_zero=" + format_double(rep.emp_zero) + "\n";
    out += "eps,bound_realizable\n";
    for (const RealizableRow& r : rep.realizable_rows)
      out += format_double(r.eps) + "," + format_double(r.bound) + "\n";
  }
  return out;
}

}  // namespace paclogic

#endif  // PACLOGIC_REPORT_HPP

#pragma once

// Lucky-statistic polynomials over Q_n and over parking functions.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/census.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/integer.hpp"
#include "stirling/parking.hpp"

namespace stirling {

/// Coefficients a_1..a_n of a polynomial with no constant term.
class CoefficientVector {
 public:
  CoefficientVector() = default;

  /// `coeffs[k-1]` is the coefficient of q^k.
  explicit CoefficientVector(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  unsigned degree_bound() const noexcept { return static_cast<unsigned>(coeffs_.size()); }

  /// a_k for k >= 1; 0 outside the stored range.
  std::uint64_t at(unsigned k) const { return k >= 1 && k <= coeffs_.size() ? coeffs_[k - 1] : 0; }

  const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }

  std::uint64_t sum() const {
    std::uint64_t s = 0;
    for (auto c : coeffs_) s = checked_add(s, c);
    return s;
  }

  bool operator==(const CoefficientVector&) const = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// C_n = binom(2n, n) / (n + 1). Exact for n <= 36; throws OverflowError beyond.
inline std::uint64_t catalan(unsigned n) {
  unsigned __int128 c = 1;
  for (unsigned k = 0; k < n; ++k) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2); the division is exact.
    c = c * (2 * (2 * static_cast<unsigned __int128>(k) + 1));
    c /= (k + 2);
    if (c > UINT64_MAX) throw OverflowError("catalan(" + std::to_string(n) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

/// T_n(q) = sum over Q_n of q^{lucky(w)}, by exhaustive scan.
inline CoefficientVector lucky_polynomial(unsigned n, const ScanOptions& options = {}) {
  const auto table = scan<LuckyCounts>(n, options);
  const auto& counts = table.payload.counts;
  if (!counts.empty() && counts[0] != 0 && n > 0) {
    throw std::logic_error("a Stirling word with no lucky car was found");
  }
  return CoefficientVector(std::vector<std::uint64_t>(counts.begin() + 1, counts.end()));
}

/// Descending powers, e.g. "14q^4 + 49q^3 + 36q^2 + 6q".
inline std::string render_paper_style(const CoefficientVector& p) {
  std::string out;
  for (unsigned k = p.degree_bound(); k >= 1; --k) {
    const auto c = p.at(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    out += 'q';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// q * prod_{i=1}^{n-1} (i + (n-i+1) q), expanded.
inline CoefficientVector gessel_seo_closed_form(unsigned n) {
  if (n < 1) throw std::invalid_argument("closed form is defined for n >= 1");
  std::vector<std::uint64_t> poly{0, 1};  // index = power of q
  for (unsigned i = 1; i + 1 <= n; ++i) {
    const std::uint64_t constant = i;
    const std::uint64_t linear = n - i + 1;
    std::vector<std::uint64_t> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] = checked_add(next[d], checked_mul(poly[d], constant));
      next[d + 1] = checked_add(next[d + 1], checked_mul(poly[d], linear));
    }
    poly = std::move(next);
  }
  return CoefficientVector(std::vector<std::uint64_t>(poly.begin() + 1, poly.end()));
}

/// Default bound for the parking-function cross-check (|PF_6| = 16807).
inline constexpr unsigned default_gessel_seo_bound = 6;

struct GesselSeoCheck {
  CoefficientVector computed;
  CoefficientVector closed_form;
  std::uint64_t parking_functions = 0;
  bool equal = false;
};

/// Tallies q^{lucky(alpha)} over every parking function of length n by
/// simulation and compares with the expanded product.
inline GesselSeoCheck gessel_seo_check(unsigned n, unsigned bound = default_gessel_seo_bound) {
  if (n < 1) throw std::invalid_argument("gessel_seo_check requires n >= 1");
  if (n > bound) {
    throw BoundExceeded("parking-function length " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  GesselSeoCheck result;
  std::vector<std::uint64_t> tally(n, 0);
  auto stream = enumerate_parking_functions(n, bound);
  ParkingRun<> run;
  while (stream.next()) {
    if (run.run(stream.values()) != 0) throw std::logic_error("parking function failed to park");
    ++tally[run.lucky_count() - 1];
    ++result.parking_functions;
  }
  result.computed = CoefficientVector(std::move(tally));
  result.closed_form = gessel_seo_closed_form(n);
  result.equal = result.computed == result.closed_form;
  return result;
}

struct UnimodalityReport {
  bool unimodal = false;
  unsigned mode = 0;  // smallest k attaining the maximum coefficient
};

/// Weakly increasing then weakly decreasing; plateaus are allowed.
inline UnimodalityReport unimodality_report(const CoefficientVector& p) {
  UnimodalityReport report;
  const auto& c = p.coefficients();
  if (c.empty()) return report;
  const auto max_it = std::max_element(c.begin(), c.end());
  report.mode = static_cast<unsigned>(max_it - c.begin()) + 1;
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  report.unimodal = i + 1 == c.size();
  return report;
}

}  // namespace stirling

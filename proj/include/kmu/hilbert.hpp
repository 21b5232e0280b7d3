#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmu/groebner.hpp"
#include "kmu/resolution.hpp"

namespace kmu {

/// numerator(t) / Π (1 - t^{a}) over a multiset of positive weights.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // coefficient of t^i at index i
  std::vector<int> denominator;         // weights, sorted descending

  HilbertSeries() = default;
  HilbertSeries(std::vector<std::int64_t> num, std::vector<int> den);

  bool is_zero() const { return numerator.empty(); }
  /// Power-series coefficients for t^0..t^d_max.
  std::vector<std::int64_t> expand(int d_max) const;
  /// Cancels (1 - t^a) factors dividing the numerator exactly, larger a first.
  HilbertSeries canonical() const;
};

/// Σ_i (-1)^i Σ_j t^{d_ij} over Π (1 - t^{a_i}).
HilbertSeries series_from_resolution(const FreeResolution& res);
/// Series of A/I (graded mode, homogeneous generators).
HilbertSeries hilbert_series(const Ideal& I);

/// dim_k (A/I)_n for n = 0..d_max by Macaulay-matrix ranks only.
std::vector<std::int64_t> brute_dims(const Ideal& I, int d_max);

bool series_equal(const HilbertSeries& p, const HilbertSeries& q);
HilbertSeries add(const HilbertSeries& p, const HilbertSeries& q);
/// P_X + t^k / (1 - t^k) · P_D. Requires k >= 1.
HilbertSeries unprojection_series(const HilbertSeries& px, const HilbertSeries& pd, int k);

std::string poly_to_string(const std::vector<std::int64_t>& coeffs);
/// "(numerator) / (1-t)^3" or "(numerator) / ((1-t)^3*(1-t^2)^2)".
std::string to_string(const HilbertSeries& s);

}  // namespace kmu

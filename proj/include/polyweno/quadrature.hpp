#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "polyweno/grid.hpp"

namespace polyweno {

/// Exact coefficient p/q, rendered to double once.
struct Rational {
  long num;
  long den;
  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// One coefficient of a boundary row, anchored at an offset from the span end
/// it belongs to (offset from index 0 for left rows, from index N for right rows).
struct RowCoefficient {
  int offset;
  Rational weight;
};

/// End-block weights of the generic composite rule, applied to the four
/// nodes nearest each end of a span longer than 6.
inline constexpr std::array<Rational, 4> kGenericEndWeights{
    Rational{251, 720}, Rational{299, 240}, Rational{211, 240}, Rational{739, 720}};

/// Rows for spans 1..7 starting at node 0. Node 0 never carries weight;
/// spans 4..7 reach one node past their right end.
std::span<const RowCoefficient> left_row(int span);

/// Rows for spans 1..6 ending at node N; offsets count backwards from N.
std::span<const RowCoefficient> right_row(int span);

/// Sparse form of a primed-sum row: unit weight over [uniform_lo, uniform_hi]
/// (empty when uniform_lo > uniform_hi) plus at most eight additive corrections.
struct PrimedRow {
  struct Entry {
    int index;
    double weight;
  };
  int uniform_lo = 0;
  int uniform_hi = -1;
  std::array<Entry, 8> corrections{};
  int count = 0;

  bool has_uniform() const noexcept { return uniform_lo <= uniform_hi; }
  std::span<const Entry> entries() const noexcept {
    return {corrections.data(), static_cast<std::size_t>(count)};
  }
  /// Full weight carried by node k.
  double weight(int k) const noexcept;
};

/// Resolve the coefficient row for the span [lo, hi] on nodes 0..last.
/// Throws UnsupportedSpanError for interior spans of length <= 6.
PrimedRow primed_row(int lo, int hi, int last);

/// sum'_{k=lo}^{hi} values_k. Returns 0 for lo == hi.
double weighted_sum(std::span<const double> values, int lo, int hi);

/// dx * weighted_sum(values, lo, hi).
double integrate(std::span<const double> values, const Grid& grid, int lo, int hi);

}  // namespace polyweno

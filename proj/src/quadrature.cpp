#include "polyweno/quadrature.hpp"

#include <string>

#include "polyweno/errors.hpp"

namespace polyweno {
namespace {

using R = Rational;

constexpr RowCoefficient kLeft1[] = {{1, R{55, 24}}, {2, R{-59, 24}}, {3, R{37, 24}}, {4, R{-9, 24}}};
constexpr RowCoefficient kLeft2[] = {{1, R{8, 3}}, {2, R{-5, 3}}, {3, R{4, 3}}, {4, R{-1, 3}}};
constexpr RowCoefficient kLeft3[] = {{1, R{21, 8}}, {2, R{-9, 8}}, {3, R{15, 8}}, {4, R{-3, 8}}};
constexpr RowCoefficient kLeft4[] = {
    {1, R{21, 8}}, {2, R{-7, 6}}, {3, R{29, 12}}, {4, R{1, 6}}, {5, R{-1, 24}}};
constexpr RowCoefficient kLeft5[] = {
    {1, R{21, 8}}, {2, R{-7, 6}}, {3, R{19, 8}}, {4, R{17, 24}}, {5, R{1, 2}}, {6, R{-1, 24}}};
constexpr RowCoefficient kLeft6[] = {{1, R{21, 8}}, {2, R{-7, 6}}, {3, R{19, 8}},  {4, R{2, 3}},
                                     {5, R{25, 24}}, {6, R{1, 2}},  {7, R{-1, 24}}};
constexpr RowCoefficient kLeft7[] = {{1, R{21, 8}}, {2, R{-7, 6}},  {3, R{19, 8}}, {4, R{2, 3}},
                                     {5, R{1, 1}},  {6, R{25, 24}}, {7, R{1, 2}},  {8, R{-1, 24}}};

// Offsets count back from N. Span 1 is the four-point Adams-Moulton row;
// its leading weight is 9/24 (a weight of 9/4 would not integrate constants).
constexpr RowCoefficient kRight1[] = {{0, R{9, 24}}, {1, R{19, 24}}, {2, R{-5, 24}}, {3, R{1, 24}}};
constexpr RowCoefficient kRight2[] = {{0, R{1, 3}}, {1, R{4, 3}}, {2, R{1, 3}}};
constexpr RowCoefficient kRight3[] = {
    {0, R{1, 3}}, {1, R{31, 24}}, {2, R{7, 8}}, {3, R{13, 24}}, {4, R{-1, 24}}};
constexpr RowCoefficient kRight4[] = {{0, R{1, 3}},   {1, R{31, 24}}, {2, R{5, 6}},
                                      {3, R{13, 12}}, {4, R{1, 2}},   {5, R{-1, 24}}};
constexpr RowCoefficient kRight5[] = {{0, R{1, 3}},   {1, R{31, 24}}, {2, R{5, 6}},  {3, R{25, 24}},
                                      {4, R{25, 24}}, {5, R{1, 2}},   {6, R{-1, 24}}};
constexpr RowCoefficient kRight6[] = {{0, R{1, 3}},   {1, R{31, 24}}, {2, R{5, 6}}, {3, R{25, 24}},
                                      {4, R{1, 1}},   {5, R{25, 24}}, {6, R{1, 2}}, {7, R{-1, 24}}};

}  // namespace

std::span<const RowCoefficient> left_row(int span) {
  switch (span) {
    case 1: return kLeft1;
    case 2: return kLeft2;
    case 3: return kLeft3;
    case 4: return kLeft4;
    case 5: return kLeft5;
    case 6: return kLeft6;
    case 7: return kLeft7;
    default: throw UnsupportedSpanError("no left-anchored row for span " + std::to_string(span));
  }
}

std::span<const RowCoefficient> right_row(int span) {
  switch (span) {
    case 1: return kRight1;
    case 2: return kRight2;
    case 3: return kRight3;
    case 4: return kRight4;
    case 5: return kRight5;
    case 6: return kRight6;
    default: throw UnsupportedSpanError("no right-anchored row for span " + std::to_string(span));
  }
}

double PrimedRow::weight(int k) const noexcept {
  double w = (k >= uniform_lo && k <= uniform_hi) ? 1.0 : 0.0;
  for (const auto& e : entries()) {
    if (e.index == k) w += e.weight;
  }
  return w;
}

PrimedRow primed_row(int lo, int hi, int last) {
  if (lo < 0 || hi > last || lo > hi) {
    throw UnsupportedSpanError("span [" + std::to_string(lo) + ", " + std::to_string(hi) +
                               "] outside nodes 0.." + std::to_string(last));
  }
  PrimedRow row;
  const int span = hi - lo;
  if (span == 0) return row;

  if (lo == 0 && span <= 7) {
    for (const auto& c : left_row(span)) {
      row.corrections[row.count++] = {c.offset, c.weight.value()};
    }
    return row;
  }
  if (span > 6) {
    row.uniform_lo = lo;
    row.uniform_hi = hi;
    for (int k = 0; k < 4; ++k) {
      const double corr = kGenericEndWeights[k].value() - 1.0;
      row.corrections[row.count++] = {lo + k, corr};
      row.corrections[row.count++] = {hi - k, corr};
    }
    return row;
  }
  if (hi == last) {
    for (const auto& c : right_row(span)) {
      row.corrections[row.count++] = {last - c.offset, c.weight.value()};
    }
    return row;
  }
  throw UnsupportedSpanError("no composite rule for interior span [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
}

double weighted_sum(std::span<const double> values, int lo, int hi) {
  const int last = static_cast<int>(values.size()) - 1;
  const PrimedRow row = primed_row(lo, hi, last);
  double sum = 0.0;
  for (int k = row.uniform_lo; k <= row.uniform_hi; ++k) sum += values[k];
  for (const auto& e : row.entries()) {
    if (e.index > last) {
      throw UnsupportedSpanError("row for span [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                 "] needs node " + std::to_string(e.index));
    }
    sum += e.weight * values[e.index];
  }
  return sum;
}

double integrate(std::span<const double> values, const Grid& grid, int lo, int hi) {
  return grid.dx() * weighted_sum(values, lo, hi);
}

}  // namespace polyweno

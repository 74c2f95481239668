#include "kdelta/series.hpp"

namespace kdelta {

Series series_one(size_t order) {
  Series s(order + 1, Int(0));
  s[0] = 1;
  return s;
}

Series series_mul_one_minus(const Series& s, long long d) {
  if (d < 1) throw ValidationError("degree must be positive");
  Series out = s;
  for (size_t k = out.size(); k-- > 0;)
    if (k >= static_cast<size_t>(d)) out[k] -= s[k - d];
  return out;
}

Series series_div_one_minus(const Series& s, long long w) {
  if (w < 1) throw ValidationError("weight must be positive");
  // (out * (1 - t^w) = s)  =>  out[k] = s[k] + out[k - w]
  Series out = s;
  for (size_t k = w; k < out.size(); ++k) out[k] += out[k - w];
  return out;
}

Series hilbert_series(const std::vector<long long>& weights,
                      const std::vector<long long>& numerator_degrees,
                      size_t order) {
  Series s = series_one(order);
  for (long long d : numerator_degrees) s = series_mul_one_minus(s, d);
  for (long long w : weights) s = series_div_one_minus(s, w);
  return s;
}

Series rational_series(
    const std::vector<std::pair<long long, long long>>& numerator_terms,
    const std::vector<long long>& denominator_weights, size_t order) {
  Series s(order + 1, Int(0));
  for (const auto& [coeff, power] : numerator_terms) {
    if (power < 0) throw ValidationError("negative power in numerator");
    if (static_cast<size_t>(power) <= order) s[power] += coeff;
  }
  for (long long w : denominator_weights) s = series_div_one_minus(s, w);
  return s;
}

namespace {

// Number of ways to write k >= 0 as a nonnegative combination of weights;
// classic bounded dynamic program (the same recurrence as repeated
// series_div_one_minus, but written as counting for independence).
std::vector<Int> denumerant_table(const std::vector<long long>& weights,
                                  size_t order) {
  std::vector<Int> ways(order + 1, Int(0));
  ways[0] = 1;
  for (long long w : weights) {
    if (w < 1) throw ValidationError("weight must be positive");
    for (size_t k = w; k <= order; ++k) ways[k] += ways[k - w];
  }
  return ways;
}

}  // namespace

Series hilbert_series_by_counting(const std::vector<long long>& weights,
                                  const std::vector<long long>& degrees,
                                  size_t order) {
  std::vector<Int> ways = denumerant_table(weights, order);
  Series out(order + 1, Int(0));
  const size_t subsets = size_t{1} << degrees.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    long long shift = 0;
    int sign = 1;
    for (size_t i = 0; i < degrees.size(); ++i)
      if (mask & (size_t{1} << i)) {
        shift += degrees[i];
        sign = -sign;
      }
    if (shift > static_cast<long long>(order)) continue;
    for (size_t k = shift; k <= order; ++k)
      out[k] += sign * ways[k - shift];
  }
  return out;
}

}  // namespace kdelta

#pragma once

// Truncated integer power series for Hilbert-series identities: products of
// (1 - t^d) numerators over (1 - t^w) denominators, expanded exactly to a
// fixed order, plus an independent counting route (inclusion-exclusion over
// weighted partitions) used to cross-check the algebra.

#include "kdelta/rational.hpp"

#include <vector>

namespace kdelta {

// Coefficients [c0..cN] of a power series truncated at order N.
using Series = std::vector<Int>;

// The series 1.
Series series_one(size_t order);

// Multiplies by the polynomial (1 - t^d) in place semantics (returns copy).
Series series_mul_one_minus(const Series& s, long long d);

// Divides by (1 - t^w): multiplies by 1 + t^w + t^{2w} + ...
Series series_div_one_minus(const Series& s, long long w);

// Expands prod_i (1 - t^{deg_i}) / prod_j (1 - t^{w_j}) to the given order.
Series hilbert_series(const std::vector<long long>& weights,
                      const std::vector<long long>& numerator_degrees,
                      size_t order);

// Expands (sum_i coeff_i t^{p_i}) / prod_j (1 - t^{w_j}) to the given order.
Series rational_series(const std::vector<std::pair<long long, long long>>&
                           numerator_terms,  // (coeff, power)
                       const std::vector<long long>& denominator_weights,
                       size_t order);

// Independent route: the k-th coefficient of 1/prod(1 - t^{w_j}) counts the
// ways to write k as a nonnegative integer combination of the weights
// (denumerant); numerator factors (1 - t^{d_i}) enter by inclusion-exclusion
// over subsets. Exponential in the number of numerator factors, fine for the
// handful used here.
Series hilbert_series_by_counting(const std::vector<long long>& weights,
                                  const std::vector<long long>& degrees,
                                  size_t order);

}  // namespace kdelta

#pragma once

// Representation counts for n = x_1^2+...+x_k^2 + 3(y_1^2+...+y_k^2),
// signs and order distinguished. Production path: theta series
// phi(q)^k phi(q^3)^k. Oracle path: direct lattice counts through a
// cached sum-of-k-squares table.

#include "qseries/series.hpp"

namespace qseries {

struct QuadFormSpec {
    int k = 3; // number of x variables = number of y variables
};

// Exact count of integer solutions, enumerated y-side first: the y-norm
// t ranges over 3t <= n and each residual n - 3t is looked up in the
// sum-of-k-squares table.
Integer omega_enumerate(int k, int n);

// phi(q)^k * phi(q^3)^k; coefficient n = omega^{(k)}(n).
IntSeries omega_series(int k, int order);

inline Integer omega_enumerate(const QuadFormSpec& spec, int n) {
    return omega_enumerate(spec.k, n);
}
inline IntSeries omega_series(const QuadFormSpec& spec, int order) {
    return omega_series(spec.k, order);
}

// r_k(m): representations of m as a sum of k squares (signs and order
// counted), built by repeated convolution of the one-square table.
std::vector<Integer> sum_of_squares_table(int k, int max_n);

} // namespace qseries

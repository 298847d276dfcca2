#include "qseries/quadforms.hpp"

#include "qseries/eta_theta.hpp"

namespace qseries {

std::vector<Integer> sum_of_squares_table(int k, int max_n) {
    if (k < 1 || max_n < 0) throw QSeriesError("sum_of_squares_table: bad args");
    std::vector<Integer> r1(static_cast<size_t>(max_n) + 1, Integer(0));
    for (long x = 0; x * x <= max_n; ++x) r1[x * x] += (x == 0) ? 1 : 2;
    std::vector<Integer> acc = r1;
    for (int fold = 1; fold < k; ++fold) {
        std::vector<Integer> next(static_cast<size_t>(max_n) + 1, Integer(0));
        for (int i = 0; i <= max_n; ++i) {
            if (acc[i] == 0) continue;
            for (long x = 0; i + x * x <= max_n; ++x)
                next[i + x * x] += acc[i] * ((x == 0) ? 1 : 2);
        }
        acc = std::move(next);
    }
    return acc;
}

Integer omega_enumerate(int k, int n) {
    if (k < 1 || n < 0) throw QSeriesError("omega_enumerate: need k >= 1, n >= 0");
    std::vector<Integer> rk = sum_of_squares_table(k, n);
    Integer total = 0;
    for (int t = 0; 3 * t <= n; ++t) {
        if (rk[t] == 0) continue;
        total += rk[t] * rk[n - 3 * t];
    }
    return total;
}

IntSeries omega_series(int k, int order) {
    if (k < 1) throw QSeriesError("omega_series: need k >= 1");
    IntSeries x_part = pow(phi(order), k);
    IntSeries y_part = pow(substitute_power(phi(order / 3), 3, order), k);
    return mul(x_part, y_part);
}

} // namespace qseries

#include "qseries/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qseries {

IntSeries family_series(const PartitionFamilySpec& spec, int order) {
    if (spec.t < 2 || spec.k < 1)
        throw QSeriesError("family_series: need t >= 2, k >= 1");
    return eta_quotient(EtaQuotientSpec{{spec.t, spec.t * spec.k}, {1, -spec.k}},
                        order);
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw QSeriesError("partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw QSeriesError("partition: parts must be nonincreasing");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts.empty()) {
        conj.resize(parts[0]);
        for (int j = 0; j < parts[0]; ++j) {
            int count = 0;
            for (int p : parts)
                if (p > j) ++count;
            conj[j] = count;
        }
    }
    return Partition(std::move(conj));
}

std::multiset<int> hook_multiset(const Partition& p) {
    std::multiset<int> hooks;
    if (p.parts.empty()) return hooks;
    // conj[j] = number of parts > j (0-based column j)
    std::vector<int> conj(p.parts[0], 0);
    for (int part : p.parts)
        for (int j = 0; j < part; ++j) ++conj[j];
    for (size_t i = 0; i < p.parts.size(); ++i)
        for (int j = 0; j < p.parts[i]; ++j) {
            int arm = p.parts[i] - (j + 1);
            int leg = conj[j] - static_cast<int>(i) - 1;
            hooks.insert(arm + leg + 1);
        }
    return hooks;
}

bool is_tcore(const Partition& p, int t) {
    for (int h : hook_multiset(p))
        if (h % t == 0) return false;
    return true;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            fn(Partition(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

Integer tcore_oracle(int t, int n) {
    if (t < 2 || n < 0) throw QSeriesError("tcore_oracle: need t >= 2, n >= 0");
    long count = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (is_tcore(p, t)) ++count;
    });
    return Integer(count);
}

Integer tuple_oracle(int t, int k, int n) {
    if (k < 1) throw QSeriesError("tuple_oracle: need k >= 1");
    std::vector<Integer> core(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) core[i] = tcore_oracle(t, i);
    std::vector<Integer> acc = core;
    for (int fold = 1; fold < k; ++fold) {
        std::vector<Integer> next(static_cast<size_t>(n) + 1, Integer(0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) next[i + j] += acc[i] * core[j];
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(n)];
}

long divisor_delta(long n) {
    if (n < 1) throw QSeriesError("divisor_delta: need n >= 1");
    long delta = 0;
    auto tally = [&](long d) {
        if (d % 3 == 1) ++delta;
        else if (d % 3 == 2) --delta;
    };
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        tally(d);
        if (d != n / d) tally(n / d);
    }
    return delta;
}

} // namespace qseries

#pragma once

// t-core partition k-tuple counting: generating functions through the eta
// engine, plus deliberately naive combinatorial oracles (exhaustive partition
// enumeration, hook inspection) kept out of every production path.

#include <functional>
#include <set>
#include <vector>

#include "qseries/eta_theta.hpp"
#include "qseries/series.hpp"

namespace qseries {

// (t, k): counts partition k-tuples where each component is a t-core.
// (3,1) = a_3, (3,2) = A_3, (3,3) = B_3.
struct PartitionFamilySpec {
    int t = 3;
    int k = 1;
};

// Generating function f_t^{tk} / f_1^k; coefficient n counts the k-tuples
// of t-cores with parts summing to n.
IntSeries family_series(const PartitionFamilySpec& spec, int order);

// Nonincreasing sequence of positive parts.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int sum() const;
    Partition conjugate() const;
};

// Hook length arm + leg + 1 for every cell of the Young diagram, computed
// from part sizes and conjugate part sizes (no diagram materialized).
std::multiset<int> hook_multiset(const Partition& p);

bool is_tcore(const Partition& p, int t);

// Number of t-core partitions of n by exhaustive enumeration. Desk scale
// only (n beyond ~40 is out of scope).
Integer tcore_oracle(int t, int n);

// Number of k-tuples of t-cores summing to n: k-fold convolution of
// cached tcore_oracle values.
Integer tuple_oracle(int t, int k, int n);

// d_{1,3}(n) - d_{2,3}(n): divisors congruent to 1 minus those congruent
// to 2 mod 3, by trial division.
long divisor_delta(long n);

// Visit every partition of n (parts nonincreasing). Test/oracle helper.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

} // namespace qseries

#pragma once

// Truncated formal power series over exact arbitrary-precision integers.
//
// An IntSeries holds the coefficients of q^0 .. q^N for some truncation
// order N; every coefficient is an exact mpz integer and every operation
// here is exact. Binary operations on operands of orders N1, N2 return a
// series of order min(N1, N2) -- truncation is never silent promotion.
// All values are immutable after construction; operations are pure
// functions, so series can be shared freely across threads.

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qseries/errors.hpp"

namespace qseries {

using Integer = mpz_class;

class IntSeries {
public:
    // Zero series of the given order.
    explicit IntSeries(int order = 0);

    // Coefficients q^0.. with explicit order. Shorter input is zero-filled
    // up to the order; longer input is truncated at it.
    static IntSeries from_coeffs(std::vector<Integer> values, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Exact coefficient of q^n. Throws OrderExceeded for n > order().
    const Integer& coefficient(int n) const;

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    // Number of nonzero coefficients (used by the sparse multiply path).
    int nonzero_count() const;

private:
    std::vector<Integer> coeffs_; // size order+1, index n = coefficient of q^n
    friend IntSeries make_series(std::vector<Integer>&& c);
};

// -- constructors -----------------------------------------------------------

IntSeries one(int order);                                   // 1 + 0q + ...
IntSeries monomial(const Integer& c, int exponent, int order);

// -- ring operations (order = min of operand orders) ------------------------

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
IntSeries neg(const IntSeries& a);
IntSeries scale(const IntSeries& a, const Integer& c);

// Cauchy product truncated at min(order(a), order(b)). Dispatches between
// plain schoolbook convolution and a sparse-operand path that skips zero
// coefficients; eta and theta series have pentagonal/triangular support,
// so the sparse path dominates in practice. Both paths agree exactly.
IntSeries mul(const IntSeries& a, const IntSeries& b);

namespace detail {
IntSeries mul_schoolbook(const IntSeries& a, const IntSeries& b);
IntSeries mul_sparse(const IntSeries& a, const IntSeries& b);
} // namespace detail

// e-fold product by binary exponentiation; pow(a, 0) = 1 at order(a).
IntSeries pow(const IntSeries& a, int e);

// Multiplicative inverse in Z[[q]]. Requires constant term +1 or -1
// (throws NonUnitConstantTerm otherwise); standard recurrence
// b_n = -a_0^{-1} sum_{j=1..n} a_j b_{n-j}.
IntSeries inverse(const IntSeries& a);

// q -> q^m. The result is exact through q^{m*(order+1)-1} (coefficients
// between multiples of m are identically zero); `cap`, when >= 0, truncates
// the result order to prevent order explosion in nested identities.
IntSeries substitute_power(const IntSeries& a, int m, int cap = -1);

// Multiply by q^k: coefficient n of the result is a_{n-k}; order grows by k.
IntSeries shift(const IntSeries& a, int k);

// Extract the arithmetic progression m*n + r: result_n = a_{mn+r},
// order floor((order(a) - r) / m). Throws ResidueOutOfRange if r >= m,
// OrderExceeded if even n = 0 is out of reach.
IntSeries dissect(const IntSeries& a, int m, int r);

// -- comparisons -------------------------------------------------------------

// Coefficientwise equality through q^M. Throws OrderExceeded if either
// operand is shorter than M.
bool eq_upto(const IntSeries& a, const IntSeries& b, int M);

// m | (a_n - b_n) for all n <= M; m >= 2.
bool congruent_upto(const IntSeries& a, const IntSeries& b,
                    const Integer& m, int M);

// -- operators (thin wrappers over the named functions) ----------------------

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator-(const IntSeries& a) { return neg(a); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }
inline IntSeries operator*(const Integer& c, const IntSeries& a) { return scale(a, c); }
inline IntSeries operator*(long c, const IntSeries& a) { return scale(a, Integer(c)); }

// -- cache format -------------------------------------------------------------
//
// UTF-8 text, one series per file:
//   # qseries v1 name=<id> order=<N>
//   n<TAB>coefficient        (decimal, ascending n, zero coefficients omitted)
// Round-trips exactly.

void write_series(std::ostream& os, const IntSeries& s, const std::string& name);
IntSeries read_series(std::istream& is, std::string* name_out = nullptr);

void save_series(const std::string& path, const IntSeries& s, const std::string& name);
IntSeries load_series(const std::string& path, std::string* name_out = nullptr);

} // namespace qseries

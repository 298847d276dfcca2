#pragma once

// Closed-form q-expansions: Euler products f_k = (q^k; q^k)_oo, Ramanujan
// theta functions phi/psi/f(a,b), the Jacobi cube (q;q)_oo^3, the bilateral
// series P(q) from its 3-dissection, bracket products [q^a; q^b]_oo, and
// general eta quotients prod_k f_k^{e_k}.
//
// Production expansions use the sparse bilateral sums (pentagonal and
// triangular support, O(sqrt N) terms); the naive products survive only
// as test oracles.

#include <map>
#include <string>

#include "qseries/series.hpp"

namespace qseries {

// Finite map scale -> exponent representing prod_k f_k^{e_k}.
// Scales >= 1; zero exponents are never stored. Every f_k has constant
// term 1, so every spec is invertible over Z[[q]].
struct EtaQuotientSpec {
    std::map<int, int> terms;

    EtaQuotientSpec() = default;
    EtaQuotientSpec(std::initializer_list<std::pair<const int, int>> t);

    // "3:9,1:-3" -> {3: 9, 1: -3}. Throws QSeriesError naming the offending
    // token on malformed input.
    static EtaQuotientSpec parse(const std::string& text);

    // Canonical form: ascending scale, "k:e" joined by commas.
    std::string to_string() const;
};

// f_k = (q^k; q^k)_oo via the pentagonal number sum
// sum_{n in Z} (-1)^n q^{k n(3n-1)/2}.
IntSeries euler_f(int k, int order);

// prod_k euler_f(k)^{e_k}; negative exponents via inverse(). Exponents
// that are >= 3 route through the Jacobi cube (f_k^3 is sparse), which
// cross-validates the pentagonal and triangular expansions.
IntSeries eta_quotient(const EtaQuotientSpec& spec, int order);

// phi(q) = sum_{n in Z} q^{n^2};  psi(q) = sum_{n >= 0} q^{n(n+1)/2}.
IntSeries phi(int order);
IntSeries psi(int order);

// f(s1*q^s, s2*q^t) = sum_{n in Z} (s1 q^s)^{n(n+1)/2} (s2 q^t)^{n(n-1)/2}
// for monomial arguments, with an optional argument scale q -> q^scale.
struct ThetaSpec {
    enum class Kind { phi, psi, euler_f, general };
    Kind kind = Kind::general;
    int sign1 = 1, s = 1;  // first argument  sign1 * q^s
    int sign2 = 1, t = 1;  // second argument sign2 * q^t
    int argument_scale = 1;

    static ThetaSpec general(int sign1, int s, int sign2, int t, int scale = 1);
};

// Bilateral sum; throws DivergentSpec unless s + t >= 1.
IntSeries theta_general(const ThetaSpec& spec, int order);

// (q;q)_oo^3 = sum_{n >= 0} (-1)^n (2n+1) q^{n(n+1)/2}.
IntSeries jacobi_cube(int order);

// P(q) = sum_{m in Z} (-1)^m (6m+1) q^{m(3m+1)/2}; satisfies
// (q;q)_oo^3 = P(q^3) - 3q f_9^3.
IntSeries p_series(int order);

// [q^a; q^b]_oo = (q^a; q^b)_oo (q^{b-a}; q^b)_oo by direct product;
// needs 0 < a < b (throws BadResidue).
IntSeries bracket(int a, int b, int order);

} // namespace qseries

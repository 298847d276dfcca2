#include "qseries/eta_theta.hpp"

#include <cstdlib>
#include <sstream>

namespace qseries {

EtaQuotientSpec::EtaQuotientSpec(std::initializer_list<std::pair<const int, int>> t) {
    for (const auto& [k, e] : t) {
        if (k < 1) throw QSeriesError("eta spec: scale must be >= 1");
        if (e != 0) terms[k] += e;
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

static bool parse_int_strict(const std::string& s, long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    errno = 0;
    out = std::strtol(s.c_str(), &end, 10);
    return errno == 0 && end == s.c_str() + s.size();
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text) {
    EtaQuotientSpec spec;
    std::stringstream ss(text);
    std::string token;
    bool any = false;
    while (std::getline(ss, token, ',')) {
        any = true;
        size_t colon = token.find(':');
        long k = 0, e = 0;
        if (colon == std::string::npos ||
            !parse_int_strict(token.substr(0, colon), k) ||
            !parse_int_strict(token.substr(colon + 1), e) || k < 1)
            throw QSeriesError("eta spec: bad term '" + token + "'");
        if (e != 0) spec.terms[static_cast<int>(k)] += static_cast<int>(e);
    }
    if (!any) throw QSeriesError("eta spec: empty spec '" + text + "'");
    std::erase_if(spec.terms, [](const auto& kv) { return kv.second == 0; });
    return spec;
}

std::string EtaQuotientSpec::to_string() const {
    std::string out;
    for (const auto& [k, e] : terms) {
        if (!out.empty()) out += ',';
        out += std::to_string(k) + ':' + std::to_string(e);
    }
    return out;
}

IntSeries euler_f(int k, int order) {
    if (k < 1) throw QSeriesError("euler_f: scale must be >= 1");
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    // n >= 0: exponent k*n(3n-1)/2; n = -m < 0: exponent k*m(3m+1)/2.
    for (long n = 0;; ++n) {
        long e = k * (n * (3 * n - 1) / 2);
        if (e > order) break;
        c[e] += (n % 2 == 0) ? 1 : -1;
    }
    for (long m = 1;; ++m) {
        long e = k * (m * (3 * m + 1) / 2);
        if (e > order) break;
        c[e] += (m % 2 == 0) ? 1 : -1;
    }
    return IntSeries::from_coeffs(std::move(c), order);
}

IntSeries jacobi_cube(int order) {
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    for (long n = 0;; ++n) {
        long e = n * (n + 1) / 2;
        if (e > order) break;
        c[e] += (n % 2 == 0) ? (2 * n + 1) : -(2 * n + 1);
    }
    return IntSeries::from_coeffs(std::move(c), order);
}

IntSeries p_series(int order) {
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    for (long m = 0;; ++m) {
        long e = m * (3 * m + 1) / 2;
        if (e > order) break;
        c[e] += (m % 2 == 0) ? (6 * m + 1) : -(6 * m + 1);
    }
    for (long j = 1;; ++j) { // m = -j
        long e = j * (3 * j - 1) / 2;
        if (e > order) break;
        c[e] += (j % 2 == 0) ? (1 - 6 * j) : (6 * j - 1);
    }
    return IntSeries::from_coeffs(std::move(c), order);
}

ThetaSpec ThetaSpec::general(int sign1, int s, int sign2, int t, int scale) {
    ThetaSpec spec;
    spec.kind = Kind::general;
    spec.sign1 = sign1;
    spec.s = s;
    spec.sign2 = sign2;
    spec.t = t;
    spec.argument_scale = scale;
    return spec;
}

IntSeries theta_general(const ThetaSpec& spec, int order) {
    ThetaSpec g = spec;
    switch (spec.kind) {
    case ThetaSpec::Kind::phi:     g = ThetaSpec::general(1, 1, 1, 1, spec.argument_scale); break;
    case ThetaSpec::Kind::psi:     g = ThetaSpec::general(1, 1, 1, 3, spec.argument_scale); break;
    case ThetaSpec::Kind::euler_f: g = ThetaSpec::general(-1, 1, -1, 2, spec.argument_scale); break;
    case ThetaSpec::Kind::general: break;
    }
    if (g.s + g.t < 1)
        throw DivergentSpec("theta_general: need s + t >= 1, got s=" +
                            std::to_string(g.s) + " t=" + std::to_string(g.t));
    if (g.argument_scale < 1) throw QSeriesError("theta_general: bad argument scale");

    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    // Exponent of term n: scale * (s*T(n) + t*T(n-1)), T(n) = n(n+1)/2 >= 0.
    // The exponent is a parabola in n with vertex inside |n| <= max(s,t),
    // so scanning each direction until both past the vertex and past the
    // order cannot miss terms.
    auto term = [&](long n) -> long {
        long tn = n * (n + 1) / 2;
        long tn1 = (n - 1) * n / 2;
        return static_cast<long>(g.argument_scale) * (g.s * tn + g.t * tn1);
    };
    auto sign_of = [&](long n) -> int {
        long tn = n * (n + 1) / 2;
        long tn1 = (n - 1) * n / 2;
        int sgn = 1;
        if (g.sign1 < 0 && (tn & 1)) sgn = -sgn;
        if (g.sign2 < 0 && (tn1 & 1)) sgn = -sgn;
        return sgn;
    };
    long guard = std::max(std::abs(g.s), std::abs(g.t)) + 2;
    for (long n = 0;; ++n) {
        long e = term(n);
        if (e > order && n > guard) break;
        if (e >= 0 && e <= order) c[e] += sign_of(n);
    }
    for (long n = -1;; --n) {
        long e = term(n);
        if (e > order && -n > guard) break;
        if (e >= 0 && e <= order) c[e] += sign_of(n);
    }
    return IntSeries::from_coeffs(std::move(c), order);
}

IntSeries phi(int order) {
    ThetaSpec s;
    s.kind = ThetaSpec::Kind::phi;
    return theta_general(s, order);
}

IntSeries psi(int order) {
    ThetaSpec s;
    s.kind = ThetaSpec::Kind::psi;
    return theta_general(s, order);
}

IntSeries bracket(int a, int b, int order) {
    if (a <= 0 || a >= b)
        throw BadResidue("bracket: need 0 < a < b, got a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    c[0] = 1;
    // Multiply in each factor (1 - q^e); in place, high to low.
    auto apply_factor = [&](long e) {
        for (long n = order; n >= e; --n) c[n] -= c[n - e];
    };
    for (long e = a; e <= order; e += b) apply_factor(e);
    for (long e = b - a; e <= order; e += b) apply_factor(e);
    return IntSeries::from_coeffs(std::move(c), order);
}

// f_k^e with the cube part routed through Jacobi's identity.
static IntSeries euler_power(int k, int e, int order) {
    if (e >= 3) {
        IntSeries cube = substitute_power(jacobi_cube(order / k), k, order);
        IntSeries result = pow(cube, e / 3);
        if (e % 3) result = mul(result, pow(euler_f(k, order), e % 3));
        return result;
    }
    return pow(euler_f(k, order), e);
}

IntSeries eta_quotient(const EtaQuotientSpec& spec, int order) {
    IntSeries num = one(order);
    IntSeries den = one(order);
    bool have_den = false;
    for (const auto& [k, e] : spec.terms) {
        if (e > 0) {
            num = mul(num, euler_power(k, e, order));
        } else if (e < 0) {
            den = mul(den, euler_power(k, -e, order));
            have_den = true;
        }
    }
    return have_den ? mul(num, inverse(den)) : num;
}

} // namespace qseries

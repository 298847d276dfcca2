#include "qseries/catalog.hpp"

#include <chrono>
#include <optional>

#include "qseries/eta_theta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/quadforms.hpp"

namespace qseries {

const IntSeries& ExpansionContext::get(const std::string& key,
                                       const std::function<IntSeries(int)>& build) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, build(order_)).first->second;
}

std::string kind_name(EntryKind k) {
    switch (k) {
    case EntryKind::series_equality:      return "series-equality";
    case EntryKind::coefficient_relation: return "coefficient-relation";
    case EntryKind::congruence:           return "congruence";
    }
    return "?";
}

bool glob_match(const std::string& pattern, const std::string& text) {
    size_t pi = 0, ti = 0;
    size_t star = std::string::npos, mark = 0;
    while (ti < text.size()) {
        if (pi < pattern.size() &&
            (pattern[pi] == '?' || pattern[pi] == text[ti])) {
            ++pi;
            ++ti;
        } else if (pi < pattern.size() && pattern[pi] == '*') {
            star = pi++;
            mark = ti;
        } else if (star != std::string::npos) {
            pi = star + 1;
            ti = ++mark;
        } else {
            return false;
        }
    }
    while (pi < pattern.size() && pattern[pi] == '*') ++pi;
    return pi == pattern.size();
}

namespace {

using Ctx = ExpansionContext;
using Checks = std::vector<IdentityCheck>;

// Memoized eta quotient at the context order.
const IntSeries& E(Ctx& c, std::initializer_list<std::pair<const int, int>> t) {
    EtaQuotientSpec spec(t);
    return c.get("eta:" + spec.to_string(),
                 [&spec](int N) { return eta_quotient(spec, N); });
}

const IntSeries& B3(Ctx& c) {
    return c.get("B3", [](int N) { return family_series({3, 3}, N); });
}
const IntSeries& A3(Ctx& c) {
    return c.get("A3", [](int N) { return family_series({3, 2}, N); });
}
const IntSeries& a3(Ctx& c) {
    return c.get("a3", [](int N) { return family_series({3, 1}, N); });
}
const IntSeries& omega_k(Ctx& c, int k) {
    return c.get("omega" + std::to_string(k),
                 [k](int N) { return omega_series(k, N); });
}
const IntSeries& P(Ctx& c) {
    return c.get("P", [](int N) { return p_series(N); });
}
// P(q^3), f_9^3 (from the Jacobi cube), and scaled theta series.
const IntSeries& P3(Ctx& c) {
    return c.get("P3", [](int N) {
        return substitute_power(p_series(N / 3), 3, N);
    });
}
const IntSeries& f9_cube(Ctx& c) {
    return c.get("f9^3", [](int N) {
        return substitute_power(jacobi_cube(N / 9), 9, N);
    });
}
const IntSeries& phi_scaled(Ctx& c, int m) {
    return c.get("phi@" + std::to_string(m), [m](int N) {
        return substitute_power(phi(N / m), m, N);
    });
}
const IntSeries& psi_scaled(Ctx& c, int m) {
    return c.get("psi@" + std::to_string(m), [m](int N) {
        return substitute_power(psi(N / m), m, N);
    });
}

IdentityCheck eq_check(IntSeries l, IntSeries r) {
    return {std::move(l), std::move(r), Integer(0)};
}
IdentityCheck cong_check(IntSeries l, IntSeries r, long m) {
    return {std::move(l), std::move(r), Integer(m)};
}
// l == 0 (mod m)
IdentityCheck cong_zero(IntSeries l, const Integer& m) {
    IntSeries zero(l.order());
    return {std::move(l), std::move(zero), m};
}

// dissect when the first index is reachable at this order, else nothing
// (the caller emits no check; the entry passes vacuously).
std::optional<IntSeries> prog(const IntSeries& base, int a, int b) {
    if (b > base.order()) return std::nullopt;
    return dissect(base, a, b);
}

void add(std::vector<IdentityEntry>& v, std::string id, std::string stmt,
         std::string group, EntryKind kind,
         std::function<Checks(Ctx&)> build) {
    IdentityEntry e;
    e.id = std::move(id);
    e.statement = std::move(stmt);
    e.group = std::move(group);
    e.kind = kind;
    e.build = std::move(build);
    v.push_back(std::move(e));
}

long pow_long(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

std::vector<IdentityEntry> build_catalog() {
    std::vector<IdentityEntry> v;
    const auto EQ = EntryKind::series_equality;
    const auto REL = EntryKind::coefficient_relation;
    const auto CONG = EntryKind::congruence;

    // ---- 2-dissection lemmas --------------------------------------------

    add(v, "lemid1", "f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4",
        "2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{3, 3}, {1, -1}}),
                             E(c, {{4, 3}, {6, 2}, {2, -2}, {12, -1}}) +
                                 shift(E(c, {{12, 3}, {4, -1}}), 1))};
        });
    add(v, "lemid2", "f3/f1^3 = f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7",
        "2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{3, 1}, {1, -3}}),
                             E(c, {{4, 6}, {6, 3}, {2, -9}, {12, -2}}) +
                                 3 * shift(E(c, {{4, 2}, {6, 1}, {12, 2}, {2, -7}}), 1))};
        });
    add(v, "lemid3", "f1^3/f3 = f4^3/f12 - 3q f2^2 f12^3/(f4 f6^2)",
        "2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{1, 3}, {3, -1}}),
                             E(c, {{4, 3}, {12, -1}}) -
                                 3 * shift(E(c, {{2, 2}, {12, 3}, {4, -1}, {6, -2}}), 1))};
        });
    add(v, "lemid4", "f1/f3^3 = f2 f4^2 f12^2/f6^7 - q f2^3 f12^6/(f4^2 f6^9)",
        "2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{1, 1}, {3, -3}}),
                             E(c, {{2, 1}, {4, 2}, {12, 2}, {6, -7}}) -
                                 shift(E(c, {{2, 3}, {12, 6}, {4, -2}, {6, -9}}), 1))};
        });
    add(v, "lemid05", "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10",
        "2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{1, -4}}),
                             E(c, {{4, 14}, {2, -14}, {8, -4}}) +
                                 4 * shift(E(c, {{4, 2}, {8, 4}, {2, -10}}), 1))};
        });
    add(v, "lemid5",
        "1/f1^8 = f4^28/(f2^28 f8^8) + 8q f4^16/f2^24 + 16q^2 f4^4 f8^8/f2^20",
        "2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{1, -8}}),
                             E(c, {{4, 28}, {2, -28}, {8, -8}}) +
                                 8 * shift(E(c, {{4, 16}, {2, -24}}), 1) +
                                 16 * shift(E(c, {{4, 4}, {8, 8}, {2, -20}}), 2))};
        });

    // ---- bracket lemma and its product forms -----------------------------

    add(v, "thm1id1", "f2^8 f3^4/f1^4 = f2^3 f3^9/(f1^3 f6) + q f6^8",
        "6-bracket", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{2, 8}, {3, 4}, {1, -4}}),
                             E(c, {{2, 3}, {3, 9}, {1, -3}, {6, -1}}) +
                                 shift(E(c, {{6, 8}}), 1))};
        });
    add(v, "thm1id2", "f2^5 f3^4 f6/f1^4 = f3^9/f1^3 + q f6^9/f2^3",
        "6-bracket", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{2, 5}, {3, 4}, {6, 1}, {1, -4}}),
                             E(c, {{3, 9}, {1, -3}}) +
                                 shift(E(c, {{6, 9}, {2, -3}}), 1))};
        });
    add(v, "mid", "f2^8 f3^4 f6 = f1 f2^3 f3^9 + q f1^4 f6^9",
        "6-bracket", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{2, 8}, {3, 4}, {6, 1}}),
                             E(c, {{1, 1}, {2, 3}, {3, 9}}) +
                                 shift(E(c, {{1, 4}, {6, 9}}), 1))};
        });
    add(v, "equi",
        "[q^2;q^6]^4 = [q;q^6][q^3;q^6]^3 + q [q;q^6]^4",
        "6-bracket", EQ, [](Ctx& c) -> Checks {
            int N = c.order();
            IntSeries b1 = bracket(1, 6, N);
            IntSeries b2 = bracket(2, 6, N);
            IntSeries b3 = bracket(3, 6, N);
            return {eq_check(pow(b2, 4),
                             b1 * pow(b3, 3) + shift(pow(b1, 4), 1))};
        });

    // ---- proof expansions (iterated 2-dissections) ------------------------

    add(v, "f134",
        "f3^4/f1^4 = f4^9 f6^5/(f2^11 f12^3) + 3q^2 f4 f6 f12^5/f2^7"
        " + 4q f4^5 f6^3 f12/f2^9",
        "proof-expansion", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{3, 4}, {1, -4}}),
                             E(c, {{4, 9}, {6, 5}, {2, -11}, {12, -3}}) +
                                 3 * shift(E(c, {{4, 1}, {6, 1}, {12, 5}, {2, -7}}), 2) +
                                 4 * shift(E(c, {{4, 5}, {6, 3}, {12, 1}, {2, -9}}), 1))};
        });
    add(v, "f153",
        "1/(f1^5 f3) = f4^14/(f2^17 f6 f12^2) + 3q^2 f4^6 f12^6/(f6^5 f2^13)"
        " + 5q f4^10 f12^2/(f2^15 f6^3) - 9q^3 f4^2 f12^10/(f6^7 f2^11)",
        "proof-expansion", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{1, -5}, {3, -1}}),
                             E(c, {{4, 14}, {2, -17}, {6, -1}, {12, -2}}) +
                                 3 * shift(E(c, {{4, 6}, {12, 6}, {6, -5}, {2, -13}}), 2) +
                                 5 * shift(E(c, {{4, 10}, {12, 2}, {2, -15}, {6, -3}}), 1) -
                                 9 * shift(E(c, {{4, 2}, {12, 10}, {6, -7}, {2, -11}}), 3))};
        });
    add(v, "f3216",
        "f3^2/f1^6 = f4^12 f6^6/(f2^18 f12^4) + 6q f4^8 f6^4/f2^16"
        " + 9q^2 f4^4 f6^2 f12^4/f2^14",
        "proof-expansion", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{3, 2}, {1, -6}}),
                             E(c, {{4, 12}, {6, 6}, {2, -18}, {12, -4}}) +
                                 6 * shift(E(c, {{4, 8}, {6, 4}, {2, -16}}), 1) +
                                 9 * shift(E(c, {{4, 4}, {6, 2}, {12, 4}, {2, -14}}), 2))};
        });
    add(v, "f3319",
        "f3^3/f1^9 = f4^18 f6^9/(f2^27 f12^6) + 27q^2 f4^10 f6^5 f12^2/f2^23"
        " + 9q f4^14 f6^7/(f2^25 f12^2) + 27q^3 f4^6 f6^3 f12^6/f2^21",
        "proof-expansion", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{3, 3}, {1, -9}}),
                             E(c, {{4, 18}, {6, 9}, {2, -27}, {12, -6}}) +
                                 27 * shift(E(c, {{4, 10}, {6, 5}, {12, 2}, {2, -23}}), 2) +
                                 9 * shift(E(c, {{4, 14}, {6, 7}, {2, -25}, {12, -2}}), 1) +
                                 27 * shift(E(c, {{4, 6}, {6, 3}, {12, 6}, {2, -21}}), 3))};
        });

    // ---- B3 2-dissection and recurrences ----------------------------------

    add(v, "B32n",
        "sum B3(2n) q^n = f2^9 f3^6/(f1^6 f6^3) + 3q f2 f3^2 f6^5/f1^2",
        "B3-2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 2, 0),
                             E(c, {{2, 9}, {3, 6}, {1, -6}, {6, -3}}) +
                                 3 * shift(E(c, {{2, 1}, {3, 2}, {6, 5}, {1, -2}}), 1))};
        });
    add(v, "B32n1",
        "sum B3(2n+1) q^n = 3 f2^5 f3^4 f6/f1^4 + q f6^9/f2^3",
        "B3-2-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 2, 1),
                             3 * E(c, {{2, 5}, {3, 4}, {6, 1}, {1, -4}}) +
                                 shift(E(c, {{6, 9}, {2, -3}}), 1))};
        });
    add(v, "rec1", "B3(4n+1) = 3 B3(2n)", "B3-recurrence", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(B3(c), 4, 1);
            if (!l) return {};
            return {eq_check(*l, 3 * dissect(B3(c), 2, 0))};
        });
    add(v, "rec2", "B3(4n+3) = 3 B3(2n+1) + 4 B3(n)", "B3-recurrence", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(B3(c), 4, 3);
            if (!l) return {};
            return {eq_check(*l, 3 * dissect(B3(c), 2, 1) + 4 * B3(c))};
        });
    for (int k = 1; k <= 6; ++k) {
        long step = pow_long(2, k + 1);
        long res1 = pow_long(2, k) - 1;
        long res2 = step - 1;
        int sign = (k % 2 == 0) ? 1 : -1;
        long ck = (pow_long(2, 2 * k + 2) + sign) / 5;
        long dk = (pow_long(2, 2 * k + 2) - 4 * sign) / 5;
        add(v, "re1.k" + std::to_string(k),
            "B3(" + std::to_string(step) + "n+" + std::to_string(res1) +
                ") = " + std::to_string(ck) + " B3(2n)",
            "B3-recurrence", REL, [step, res1, ck](Ctx& c) -> Checks {
                auto l = prog(B3(c), static_cast<int>(step), static_cast<int>(res1));
                if (!l) return {};
                return {eq_check(*l, ck * dissect(B3(c), 2, 0))};
            });
        add(v, "re2.k" + std::to_string(k),
            "B3(" + std::to_string(step) + "n+" + std::to_string(res2) +
                ") = " + std::to_string(ck) + " B3(2n+1) + " +
                std::to_string(dk) + " B3(n)",
            "B3-recurrence", REL, [step, res2, ck, dk](Ctx& c) -> Checks {
                auto l = prog(B3(c), static_cast<int>(step), static_cast<int>(res2));
                if (!l) return {};
                return {eq_check(*l, ck * dissect(B3(c), 2, 1) + dk * B3(c))};
            });
    }
    for (int k = 1; k <= 6; ++k) {
        long step = pow_long(2, k + 1);
        long res = pow_long(2, k) - 1;
        int sign = (k % 2 == 0) ? 1 : -1;
        long ck = (pow_long(2, 2 * k + 2) + sign) / 5;
        add(v, "cor1.k" + std::to_string(k),
            "B3(" + std::to_string(step) + "n+" + std::to_string(res) +
                ") == 0 mod " + std::to_string(ck),
            "B3-congruence", CONG, [step, res, ck](Ctx& c) -> Checks {
                auto l = prog(B3(c), static_cast<int>(step), static_cast<int>(res));
                if (!l) return {};
                return {cong_zero(*l, Integer(ck))};
            });
    }

    // ---- Jacobi cube 3-dissection and the P(q) machinery -------------------

    add(v, "jacobi", "f1^3 = P(q^3) - 3q f9^3", "triple-product", EQ,
        [](Ctx& c) -> Checks {
            return {eq_check(pow(euler_f(1, c.order()), 3),
                             P3(c) - 3 * shift(f9_cube(c), 1))};
        });
    add(v, "Pq",
        "P(q) = f(-q) phi(q) phi(q^3) + 4q f(-q) psi(q^2) psi(q^6)",
        "triple-product", EQ, [](Ctx& c) -> Checks {
            int N = c.order();
            IntSeries f1 = euler_f(1, N);
            const IntSeries& ph = c.get("phi", [](int n) { return phi(n); });
            return {eq_check(P(c),
                             f1 * ph * phi_scaled(c, 3) +
                                 4 * shift(f1 * psi_scaled(c, 2) * psi_scaled(c, 6), 1))};
        });
    add(v, "midid", "P(q)^3 - 27q f3^9 = f1^12/f3^3", "triple-product", EQ,
        [](Ctx& c) -> Checks {
            return {eq_check(pow(P(c), 3) - 27 * shift(E(c, {{3, 9}}), 1),
                             E(c, {{1, 12}, {3, -3}}))};
        });
    add(v, "recipro",
        "1/f1^3 = (f9^3/f3^12) (P(q^3)^2 + 3q P(q^3) f9^3 + 9q^2 f9^6)",
        "triple-product", EQ, [](Ctx& c) -> Checks {
            return {eq_check(E(c, {{1, -3}}),
                             E(c, {{9, 3}, {3, -12}}) *
                                 (pow(P3(c), 2) + 3 * shift(P3(c) * f9_cube(c), 1) +
                                  9 * shift(pow(f9_cube(c), 2), 2)))};
        });

    // ---- B3 3-dissection ----------------------------------------------------

    add(v, "B3n0", "sum B3(3n) q^n = P(q)^2 f3^3/f1^3", "B3-3-dissection", EQ,
        [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 3, 0),
                             pow(P(c), 2) * E(c, {{3, 3}, {1, -3}}))};
        });
    add(v, "B3n1", "sum B3(3n+1) q^n = 3 P(q) f3^6/f1^3", "B3-3-dissection", EQ,
        [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 3, 1),
                             3 * (P(c) * E(c, {{3, 6}, {1, -3}})))};
        });
    add(v, "B3n2", "sum B3(3n+2) q^n = 9 f3^9/f1^3", "B3-3-dissection", EQ,
        [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 3, 2), 9 * E(c, {{3, 9}, {1, -3}}))};
        });
    for (int k = 1; k <= 5; ++k) {
        long step = pow_long(3, k);
        long res = step - 1;
        Integer m = Integer(pow_long(3, k)) * pow_long(3, k);
        add(v, "b33.k" + std::to_string(k),
            "B3(" + std::to_string(step) + "n+" + std::to_string(res) + ") = " +
                m.get_str() + " B3(n)",
            "B3-recurrence", REL, [step, res, m](Ctx& c) -> Checks {
                auto l = prog(B3(c), static_cast<int>(step), static_cast<int>(res));
                if (!l) return {};
                return {eq_check(*l, m * B3(c))};
            });
    }
    for (int k = 1; k <= 6; ++k) {
        long step = pow_long(3, k);
        long res_even = step - 1;
        long res_odd = 2 * pow_long(3, k - 1) - 1;
        Integer m_even = Integer(pow_long(3, k)) * pow_long(3, k);
        Integer m_odd = m_even / 3;
        add(v, "b33cor.k" + std::to_string(k),
            "B3(" + std::to_string(step) + "n+" + std::to_string(res_even) +
                ") == 0 mod " + m_even.get_str() + " and B3(" +
                std::to_string(step) + "n+" + std::to_string(res_odd) +
                ") == 0 mod " + m_odd.get_str(),
            "B3-congruence", CONG,
            [step, res_even, res_odd, m_even, m_odd](Ctx& c) -> Checks {
                Checks out;
                if (auto l = prog(B3(c), static_cast<int>(step),
                                  static_cast<int>(res_even)))
                    out.push_back(cong_zero(*l, m_even));
                if (auto l = prog(B3(c), static_cast<int>(step),
                                  static_cast<int>(res_odd)))
                    out.push_back(cong_zero(*l, m_odd));
                return out;
            });
    }

    // ---- B3 6-dissection ----------------------------------------------------

    add(v, "B36n",
        "sum B3(6n) q^n = f2^10 f3^9/(f1^7 f6^6) + 16q f2^7 f6^3/f1^4"
        " + 27q f2^2 f3^5 f6^2/f1^3",
        "B3-6-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 6, 0),
                             E(c, {{2, 10}, {3, 9}, {1, -7}, {6, -6}}) +
                                 16 * shift(E(c, {{2, 7}, {6, 3}, {1, -4}}), 1) +
                                 27 * shift(E(c, {{2, 2}, {3, 5}, {6, 2}, {1, -3}}), 1))};
        });
    add(v, "B36n4", "sum B3(6n+4) q^n = 24 f2^8 f3^3/f1^5",
        "B3-6-dissection", EQ, [](Ctx& c) -> Checks {
            auto l = prog(B3(c), 6, 4);
            if (!l) return {};
            return {eq_check(*l, 24 * E(c, {{2, 8}, {3, 3}, {1, -5}}))};
        });
    add(v, "phipsi", "phi = f2^5/(f1^2 f4^2) and psi = f2^2/f1",
        "B3-6-dissection", EQ, [](Ctx& c) -> Checks {
            const IntSeries& ph = c.get("phi", [](int n) { return phi(n); });
            const IntSeries& ps = c.get("psi", [](int n) { return psi(n); });
            return {eq_check(ph, E(c, {{2, 5}, {1, -2}, {4, -2}})),
                    eq_check(ps, E(c, {{2, 2}, {1, -1}}))};
        });
    add(v, "Pqexp",
        "P(q) = f2^5 f6^5/(f1 f3^2 f4^2 f12^2) + 4q f1 f4^2 f12^2/(f2 f6)",
        "B3-6-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(P(c),
                             E(c, {{2, 5}, {6, 5}, {1, -1}, {3, -2}, {4, -2}, {12, -2}}) +
                                 4 * shift(E(c, {{1, 1}, {4, 2}, {12, 2}, {2, -1}, {6, -1}}), 1))};
        });
    add(v, "B3nexp",
        "sum B3(3n) q^n = f2^10 f6^10/(f1^5 f3 f4^4 f12^4)"
        " + 16q^2 f3^3 f4^4 f12^4/(f1 f2^2 f6^2) + 8q f2^4 f3 f6^4/f1^3",
        "B3-6-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 3, 0),
                             E(c, {{2, 10}, {6, 10}, {1, -5}, {3, -1}, {4, -4}, {12, -4}}) +
                                 16 * shift(E(c, {{3, 3}, {4, 4}, {12, 4}, {1, -1}, {2, -2}, {6, -2}}), 2) +
                                 8 * shift(E(c, {{2, 4}, {3, 1}, {6, 4}, {1, -3}}), 1))};
        });
    add(v, "B3n1exp",
        "sum B3(3n+1) q^n = 3 f2^5 f3^4 f6^5/(f1^4 f4^2 f12^2)"
        " + 12q f3^6 f4^2 f12^2/(f1^2 f2 f6)",
        "B3-6-dissection", EQ, [](Ctx& c) -> Checks {
            return {eq_check(dissect(B3(c), 3, 1),
                             3 * E(c, {{2, 5}, {3, 4}, {6, 5}, {1, -4}, {4, -2}, {12, -2}}) +
                                 12 * shift(E(c, {{3, 6}, {4, 2}, {12, 2}, {1, -2}, {2, -1}, {6, -1}}), 1))};
        });

    // ---- congruences modulo 24 and 120 --------------------------------------

    add(v, "mod24", "B3(6n+4) == 0 mod 24", "B3-congruence", CONG,
        [](Ctx& c) -> Checks {
            auto l = prog(B3(c), 6, 4);
            if (!l) return {};
            return {cong_zero(*l, Integer(24))};
        });
    add(v, "fap", "f1^5 == f5 and f2^5 == f10 (mod 5)", "euler-congruence",
        CONG, [](Ctx& c) -> Checks {
            int N = c.order();
            return {cong_check(pow(euler_f(1, N), 5), euler_f(5, N), 5),
                    cong_check(pow(euler_f(2, N), 5), euler_f(10, N), 5)};
        });
    add(v, "c5",
        "c(5n+1) == c(5n+4) == 0 mod 5 for f2^3 f3^3 = sum c(m) q^m",
        "euler-congruence", CONG, [](Ctx& c) -> Checks {
            const IntSeries& prod = E(c, {{2, 3}, {3, 3}});
            Checks out;
            if (auto l = prog(prod, 5, 1)) out.push_back(cong_zero(*l, Integer(5)));
            if (auto l = prog(prod, 5, 4)) out.push_back(cong_zero(*l, Integer(5)));
            return out;
        });
    add(v, "mod120", "B3(30n+10) == B3(30n+28) == 0 mod 120", "B3-congruence",
        CONG, [](Ctx& c) -> Checks {
            Checks out;
            if (auto l = prog(B3(c), 30, 10)) out.push_back(cong_zero(*l, Integer(120)));
            if (auto l = prog(B3(c), 30, 28)) out.push_back(cong_zero(*l, Integer(120)));
            return out;
        });

    // ---- omega = x^2-block + 3 y^2-block representation counts ---------------

    add(v, "wgen",
        "sum w(n) q^n = phi(q)^3 phi(q^3)^3"
        " = phi(q^3)^3 (phi(q^9) + 2q f6^2 f9 f36/(f3 f12 f18))^3",
        "omega", EQ, [](Ctx& c) -> Checks {
            IntSeries root =
                phi_scaled(c, 9) +
                2 * shift(E(c, {{6, 2}, {9, 1}, {36, 1}, {3, -1}, {12, -1}, {18, -1}}), 1);
            return {eq_check(omega_k(c, 3), pow(phi_scaled(c, 3), 3) * pow(root, 3))};
        });
    add(v, "w3n2",
        "sum w(3n+2) q^n = 12 (f2^19 f6^3/f4^8) (f4^28/(f2^28 f8^8)"
        " + 8q f4^16/f2^24 + 16q^2 f4^4 f8^8/f2^20)",
        "omega", EQ, [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 3, 2);
            if (!l) return {};
            IntSeries rhs = E(c, {{2, 19}, {6, 3}, {4, -8}}) *
                            (E(c, {{4, 28}, {2, -28}, {8, -8}}) +
                             8 * shift(E(c, {{4, 16}, {2, -24}}), 1) +
                             16 * shift(E(c, {{4, 4}, {8, 8}, {2, -20}}), 2));
            return {eq_check(*l, 12 * rhs)};
        });
    add(v, "w6n5", "sum w(6n+5) q^n = 96 f2^8 f3^3/f1^5", "omega", EQ,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 6, 5);
            if (!l) return {};
            return {eq_check(*l, 96 * E(c, {{2, 8}, {3, 3}, {1, -5}}))};
        });
    add(v, "omega65", "w(6n+5) = 4 B3(6n+4)", "omega", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 6, 5);
            if (!l) return {};
            return {eq_check(*l, 4 * dissect(B3(c), 6, 4))};
        });
    add(v, "w6n2",
        "sum w(6n+2) q^n = 12 (f2^20 f3^3/(f1^9 f4^8) + 16q f3^3 f4^8/(f1 f2^4))",
        "omega", EQ, [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 6, 2);
            if (!l) return {};
            IntSeries rhs = E(c, {{2, 20}, {3, 3}, {1, -9}, {4, -8}}) +
                            16 * shift(E(c, {{3, 3}, {4, 8}, {1, -1}, {2, -4}}), 1);
            return {eq_check(*l, 12 * rhs)};
        });
    add(v, "w12n2",
        "sum w(12n+2) q^n = 12 (f2^10 f3^9/(f1^7 f6^6) + 16q f2^7 f6^3/f1^4"
        " + 27q f2^2 f3^5 f6^2/f1^3)",
        "omega", EQ, [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 12, 2);
            if (!l) return {};
            IntSeries rhs = E(c, {{2, 10}, {3, 9}, {1, -7}, {6, -6}}) +
                            16 * shift(E(c, {{2, 7}, {6, 3}, {1, -4}}), 1) +
                            27 * shift(E(c, {{2, 2}, {3, 5}, {6, 2}, {1, -3}}), 1);
            return {eq_check(*l, 12 * rhs)};
        });
    add(v, "omega122", "w(12n+2) = 12 B3(6n)", "omega", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 12, 2);
            if (!l) return {};
            return {eq_check(*l, 12 * dissect(B3(c), 6, 0))};
        });
    add(v, "w3n1",
        "sum w(3n+1) q^n = 6 f2^17 f6^9/(f1^7 f3^3 f4^7 f12^3)", "omega", EQ,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 3, 1);
            if (!l) return {};
            return {eq_check(
                *l, 6 * E(c, {{2, 17}, {6, 9}, {1, -7}, {3, -3}, {4, -7}, {12, -3}}))};
        });
    add(v, "w6n4",
        "sum w(6n+4) q^n = 6 (8 f3^2 f2^11/(f1^6 f6) - f2^19 f6^3/(f1^8 f4^8)"
        " - 16q f4^8 f6^3/f2^5)",
        "omega", EQ, [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 6, 4);
            if (!l) return {};
            IntSeries rhs = 8 * E(c, {{3, 2}, {2, 11}, {1, -6}, {6, -1}}) -
                            E(c, {{2, 19}, {6, 3}, {1, -8}, {4, -8}}) -
                            16 * shift(E(c, {{4, 8}, {6, 3}, {2, -5}}), 1);
            return {eq_check(*l, 6 * rhs)};
        });
    add(v, "omega1210", "w(12n+10) = 6 B3(6n+4)", "omega", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 3), 12, 10);
            if (!l) return {};
            return {eq_check(*l, 6 * dissect(B3(c), 6, 4))};
        });

    // ---- classical a3 / A3 results ------------------------------------------

    add(v, "go", "a3(n) = d_{1,3}(3n+1) - d_{2,3}(3n+1)", "classical", REL,
        [](Ctx& c) -> Checks {
            int N = c.order();
            std::vector<Integer> d(static_cast<size_t>(N) + 1);
            for (int n = 0; n <= N; ++n)
                d[n] = divisor_delta(3L * n + 1);
            return {eq_check(a3(c), IntSeries::from_coeffs(std::move(d), N))};
        });
    add(v, "bb41", "a3(4n+1) = a3(n)", "classical", REL, [](Ctx& c) -> Checks {
        auto l = prog(a3(c), 4, 1);
        if (!l) return {};
        return {eq_check(*l, a3(c))};
    });
    add(v, "hs.p2k2", "a3(4n+1) = a3(n)  (p=2, k=2)", "classical", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(a3(c), 4, 1);
            if (!l) return {};
            return {eq_check(*l, a3(c))};
        });
    add(v, "hs.p5k2", "a3(25n+8) = a3(n)  (p=5, k=2)", "classical", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(a3(c), 25, 8);
            if (!l) return {};
            return {eq_check(*l, a3(c))};
        });
    add(v, "u124", "u(12n+4) = 6 a3(n)", "classical", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 1), 12, 4);
            if (!l) return {};
            return {eq_check(*l, 6 * a3(c))};
        });
    add(v, "lin86", "A3(8n+6) = 7 A3(2n+1)", "classical", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(A3(c), 8, 6);
            if (!l) return {};
            return {eq_check(*l, 7 * dissect(A3(c), 2, 1))};
        });
    add(v, "linA3", "v(6n+5) = 12 A3(2n+1)", "classical", REL,
        [](Ctx& c) -> Checks {
            auto l = prog(omega_k(c, 2), 6, 5);
            if (!l) return {};
            return {eq_check(*l, 12 * dissect(A3(c), 2, 1))};
        });
    for (int k = 1; k <= 2; ++k) {
        long step = pow_long(2, 2 * k + 2);
        long res = 2 * (step - 1) / 3;
        long ck = (step - 1) / 3;
        long dk = (step - 4) / 3;
        add(v, "bn22k.k" + std::to_string(k),
            "A3(" + std::to_string(step) + "n+" + std::to_string(res) + ") = " +
                std::to_string(ck) + " A3(4n+2) - " + std::to_string(dk) +
                " A3(n)",
            "classical", REL, [step, res, ck, dk](Ctx& c) -> Checks {
                auto l = prog(A3(c), static_cast<int>(step), static_cast<int>(res));
                if (!l) return {};
                return {eq_check(*l, ck * dissect(A3(c), 4, 2) - dk * A3(c))};
            });
    }

    return v;
}

std::vector<std::string> build_inventory() {
    std::vector<std::string> ids = {
        "lemid1", "lemid2", "lemid3", "lemid4", "lemid05", "lemid5",
        "thm1id1", "thm1id2", "mid", "equi",
        "f134", "f153", "f3216", "f3319",
        "B32n", "B32n1", "rec1", "rec2",
        "re1.k1", "re2.k1", "re1.k2", "re2.k2", "re1.k3", "re2.k3",
        "re1.k4", "re2.k4", "re1.k5", "re2.k5", "re1.k6", "re2.k6",
        "cor1.k1", "cor1.k2", "cor1.k3", "cor1.k4", "cor1.k5", "cor1.k6",
        "jacobi", "Pq", "midid", "recipro",
        "B3n0", "B3n1", "B3n2",
        "b33.k1", "b33.k2", "b33.k3", "b33.k4", "b33.k5",
        "b33cor.k1", "b33cor.k2", "b33cor.k3", "b33cor.k4", "b33cor.k5",
        "b33cor.k6",
        "B36n", "B36n4", "phipsi", "Pqexp", "B3nexp", "B3n1exp",
        "mod24", "fap", "c5", "mod120",
        "wgen", "w3n2", "w6n5", "omega65",
        "w6n2", "w12n2", "omega122",
        "w3n1", "w6n4", "omega1210",
        "go", "bb41", "hs.p2k2", "hs.p5k2", "u124", "lin86", "linA3",
        "bn22k.k1", "bn22k.k2",
    };
    return ids;
}

} // namespace

const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> entries = build_catalog();
    return entries;
}

const std::vector<std::string>& catalog_inventory() {
    static const std::vector<std::string> ids = build_inventory();
    return ids;
}

VerificationReport verify(const IdentityEntry& entry, ExpansionContext& ctx) {
    VerificationReport report;
    report.id = entry.id;
    report.order_requested = ctx.order();
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::vector<IdentityCheck> checks = entry.build(ctx);
        report.pass = true;
        for (const IdentityCheck& chk : checks) {
            int M = std::min(chk.lhs.order(), chk.rhs.order());
            if (report.order_checked < 0 || M < report.order_checked)
                report.order_checked = M;
            for (int n = 0; n <= M && report.pass; ++n) {
                const Integer& l = chk.lhs.coeffs()[n];
                const Integer& r = chk.rhs.coeffs()[n];
                bool ok = (chk.modulus == 0) ? (l == r)
                                             : ((l - r) % chk.modulus == 0);
                if (!ok) {
                    report.pass = false;
                    report.mismatch_index = n;
                    report.lhs_value = l;
                    report.rhs_value = r;
                }
            }
            if (!report.pass) break;
        }
    } catch (const std::exception& e) {
        report.pass = false;
        report.error = BuildFailure(entry.id, e.what()).what();
    }
    auto t1 = std::chrono::steady_clock::now();
    report.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

VerificationReport verify(const IdentityEntry& entry, int order) {
    ExpansionContext ctx(order);
    return verify(entry, ctx);
}

std::vector<VerificationReport> verify_all(int order, const std::string& filter) {
    ExpansionContext ctx(order); // throws invalid_argument for order < 1
    std::vector<VerificationReport> reports;
    for (const IdentityEntry& entry : catalog()) {
        if (!filter.empty() && !glob_match(filter, entry.id)) continue;
        reports.push_back(verify(entry, ctx));
    }
    return reports;
}

} // namespace qseries

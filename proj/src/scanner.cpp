#include "qseries/scanner.hpp"

namespace qseries {

std::string status_name(CongruenceClaim::Status s) {
    switch (s) {
    case CongruenceClaim::Status::candidate:         return "candidate";
    case CongruenceClaim::Status::verified_to_order: return "verified-to-order";
    }
    return "?";
}

CongruenceClaim check_claim(const IntSeries& series, CongruenceClaim claim) {
    if (claim.step < 1 || claim.residue < 0 || claim.residue >= claim.step ||
        claim.modulus < 2)
        throw QSeriesError("check_claim: malformed claim");
    if (claim.residue > series.order())
        throw InsufficientOrder("check_claim: residue " +
                                std::to_string(claim.residue) +
                                " beyond series order " +
                                std::to_string(series.order()));
    int evidence = 0;
    bool all_divisible = true;
    for (long idx = claim.residue; idx <= series.order(); idx += claim.step) {
        ++evidence;
        if (series.coeffs()[idx] % claim.modulus != 0) all_divisible = false;
    }
    claim.evidence = evidence;
    claim.status = all_divisible ? CongruenceClaim::Status::verified_to_order
                                 : CongruenceClaim::Status::candidate;
    return claim;
}

ScanResult scan(const IntSeries& series, int max_step, int min_evidence) {
    if (max_step < 1 || min_evidence < 2)
        throw QSeriesError("scan: need max_step >= 1, min_evidence >= 2");
    if (series.order() < static_cast<long>(max_step) * min_evidence)
        throw InsufficientOrder(
            "scan: order " + std::to_string(series.order()) +
            " < max_step * min_evidence = " +
            std::to_string(static_cast<long>(max_step) * min_evidence));

    ScanResult result;
    Integer g;
    for (int a = 1; a <= max_step; ++a) {
        for (int b = 0; b < a; ++b) {
            int evidence = 0;
            bool all_zero = true;
            g = 0;
            for (long idx = b; idx <= series.order(); idx += a) {
                ++evidence;
                const Integer& c = series.coeffs()[idx];
                if (c != 0) {
                    all_zero = false;
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
                }
            }
            if (evidence < min_evidence) continue;
            if (all_zero) {
                result.zero_classes.emplace_back(a, b);
                continue;
            }
            if (g < 2) continue;
            // Subsumption: implied by an already reported coarser claim.
            bool subsumed = false;
            for (const CongruenceClaim& prev : result.claims) {
                if (a % prev.step == 0 && (b - prev.residue) % prev.step == 0 &&
                    prev.modulus % g == 0) {
                    subsumed = true;
                    break;
                }
            }
            if (subsumed) continue;
            CongruenceClaim claim;
            claim.step = a;
            claim.residue = b;
            claim.modulus = g;
            claim.evidence = evidence;
            claim.status = CongruenceClaim::Status::verified_to_order;
            result.claims.push_back(std::move(claim));
        }
    }
    return result;
}

} // namespace qseries

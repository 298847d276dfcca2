#pragma once

// Empirical congruence discovery: for a coefficient stream F and each
// residue class (a, b), the strongest supportable claim
// F(an+b) == 0 (mod m) is the gcd of the observed coefficients. The
// scanner gathers evidence only; nothing here is ever marked proved.

#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

struct CongruenceClaim {
    int step = 1;       // a >= 1
    int residue = 0;    // 0 <= b < a
    Integer modulus;    // m >= 2
    int evidence = 0;   // indices checked
    enum class Status { candidate, verified_to_order } status = Status::candidate;
};

std::string status_name(CongruenceClaim::Status s);

// Re-check a claim against a series: evidence = number of n with
// an + b <= order; verified_to_order iff m divides every such coefficient.
// Throws InsufficientOrder when not even n = 0 fits.
CongruenceClaim check_claim(const IntSeries& series, CongruenceClaim claim);

struct ScanResult {
    std::vector<CongruenceClaim> claims;          // (a, b) lexicographic
    std::vector<std::pair<int, int>> zero_classes; // identically-zero progressions
};

// Scan all residue classes with step <= max_step. A class whose
// coefficient gcd is >= 2 becomes a claim unless subsumed by an already
// reported claim (a', b', m') with a' | a, b == b' (mod a'), m | m'.
// Identically-zero progressions are flagged separately, never reported
// as congruences. Requires order >= max_step * min_evidence.
ScanResult scan(const IntSeries& series, int max_step, int min_evidence);

} // namespace qseries

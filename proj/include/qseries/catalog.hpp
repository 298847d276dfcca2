#pragma once

// Data-driven catalog of verifiable q-series identities, recurrences and
// congruences for 3-core partition triples and their companions, with a
// uniform engine that reports the first mismatching coefficient.
//
// Entry ids are stable keys (the unit of filtering and of the inventory
// check); families are instantiated at fixed parameters, e.g. re1.k1..k6.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// Memoizes shared base expansions (the B3 series, the omega theta products,
// common eta quotients) so that entries comparing several arithmetic
// progressions of one series expand it once.
class ExpansionContext {
public:
    explicit ExpansionContext(int order) : order_(order) {
        if (order < 1) throw std::invalid_argument("verification order must be >= 1");
    }
    int order() const { return order_; }
    const IntSeries& get(const std::string& key,
                         const std::function<IntSeries(int)>& build);

private:
    int order_;
    std::map<std::string, IntSeries> memo_;
};

enum class EntryKind { series_equality, coefficient_relation, congruence };
std::string kind_name(EntryKind k);

// One comparison: lhs == rhs coefficientwise (modulus 0), or modulo m.
// Sides may have different orders; the engine compares up to the min.
struct IdentityCheck {
    IntSeries lhs, rhs;
    Integer modulus = 0;
};

struct IdentityEntry {
    std::string id;
    std::string statement; // the claim, in q-series notation
    std::string group;     // topical grouping
    EntryKind kind = EntryKind::series_equality;
    // May return several checks (multi-part claims); may return none when
    // the requested order does not reach the progression's first index
    // (vacuous pass, evidence zero).
    std::function<std::vector<IdentityCheck>(ExpansionContext&)> build;
};

struct VerificationReport {
    std::string id;
    int order_requested = 0;
    int order_checked = -1; // smallest compared order across checks; -1 = vacuous
    bool pass = false;
    int mismatch_index = -1; // -1 when pass
    Integer lhs_value, rhs_value;
    std::string error; // build failure text, empty otherwise
    double millis = 0.0;
};

VerificationReport verify(const IdentityEntry& entry, ExpansionContext& ctx);
VerificationReport verify(const IdentityEntry& entry, int order);

// Run the whole catalog (or the ids matching a glob filter with '*'/'?')
// at the given order, sharing one expansion context. Reports come back in
// catalog order. Throws std::invalid_argument for order < 1.
std::vector<VerificationReport> verify_all(int order, const std::string& filter = "");

const std::vector<IdentityEntry>& catalog();

// Hand-maintained list of every expected entry id; tests fail when the
// built catalog and this inventory diverge.
const std::vector<std::string>& catalog_inventory();

bool glob_match(const std::string& pattern, const std::string& text);

} // namespace qseries

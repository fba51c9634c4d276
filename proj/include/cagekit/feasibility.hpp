#pragma once

#include <string>
#include <vector>

#include "cagekit/irreducible.hpp"
#include "cagekit/numeric.hpp"

namespace cagekit {

enum class Scope { GeneralExcess4, CyclicExcess4, BicyclicExcess4, Excess2 };
enum class Outcome { Nonexistent, Open, NotCovered };

std::string to_string(Scope s);
std::string to_string(Outcome o);

struct LabeledCertificate {
    std::string label;  // e.g. "H3-1" for H_{d-1}(x) - 1 with d-1 = 3
    IrreducibilityCertificate certificate;
    std::string descriptor() const;  // "H3-1=IRREDUCIBLE(eisenstein)"
};

struct FeasibilityVerdict {
    long k = 0, g = 0;
    Scope scope = Scope::GeneralExcess4;
    Outcome outcome = Outcome::Open;
    std::vector<std::string> rule_ids;
    std::vector<LabeledCertificate> certificates;
    Integer n;  // M(k,g) + 4
    long d = 0;
    std::vector<std::string> notes;  // residues used, vacuous branches
};

// Excess <= k-2 forces even excess and a bipartite host of diameter d+1.
struct BiggsNote {
    bool applicable = false;
    bool forced_bipartite = false;
    std::string note;
};
BiggsNote rule_biggs(long k, long g, long e);

// Excess-2 cages of even girth >= 6: girth must be 6 and k mod 8 not in {5,7}.
FeasibilityVerdict rule_excess2(long k, long g);

// The five excess-4 exclusion conditions for k >= 6, g = 2d > 6.
FeasibilityVerdict rule_exclusion_list(long k, long g);

// Divisibility constraints on an excess-4 cycle profile (c cycles, c2 even):
// d odd:  (d-1) | c-2  and  (d-1) | c2;
// d even: (d-1) | c-1  and  (d-1) | c2-1.
// Preconditions k >= 7 odd, g = 2d >= 8; the Eisenstein certificates for
// H_{d-1} +- 2 that drive the theorem are attached.
struct TheoremAVerdict {
    bool applicable = false;
    std::string reason;
    bool consistent = false;
    std::string detail;
    std::vector<LabeledCertificate> certificates;
};
TheoremAVerdict rule_theorem_a(long k, long g, long c, long c2);

// Cyclic excess 4 for k >= 6, g = 2d >= 8: odd d is impossible outright;
// for even d the verdict follows irreducibility certificates for
// H_{d-1}(x) - 1 (when 3 | n) and H_{d-1}(x) + 1 (when 6 | n).
FeasibilityVerdict rule_cyclic(long k, long g);

// Bicyclic excess 4: nonexistent for odd k >= 7 and g = 2d >= 8 with d even.
FeasibilityVerdict rule_bicyclic(long k, long g);

struct ScanRequest {
    long k_lo = 0, k_hi = -1;
    long g_lo = 0, g_hi = -1;  // only even g values are scanned
    std::vector<Scope> scopes;
};

// Deterministic row order: k ascending, then g ascending, then scope in the
// declared enum order.  Throws std::invalid_argument on empty ranges.
std::vector<FeasibilityVerdict> scan(const ScanRequest& req);

struct ScanSummary {
    long nonexistent = 0, open = 0, not_covered = 0;
};
ScanSummary summarize(const std::vector<FeasibilityVerdict>& rows);

// CSV with fixed header k,g,scope,verdict,rule_ids,certificates.
std::string scan_to_csv(const std::vector<FeasibilityVerdict>& rows);

}  // namespace cagekit

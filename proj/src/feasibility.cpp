#include "cagekit/feasibility.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cagekit/analysis.hpp"
#include "cagekit/dickson.hpp"

namespace cagekit {

std::string to_string(Scope s) {
    switch (s) {
        case Scope::GeneralExcess4: return "GENERAL_EXCESS4";
        case Scope::CyclicExcess4: return "CYCLIC_EXCESS4";
        case Scope::BicyclicExcess4: return "BICYCLIC_EXCESS4";
        case Scope::Excess2: return "EXCESS2";
    }
    return "?";
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Nonexistent: return "NONEXISTENT";
        case Outcome::Open: return "OPEN";
        case Outcome::NotCovered: return "NOT_COVERED";
    }
    return "?";
}

std::string LabeledCertificate::descriptor() const {
    std::string v = certificate.verdict == Verdict::Irreducible ? "IRREDUCIBLE" : "REDUCIBLE";
    return label + "=" + v + "(" + certificate.method + ")";
}

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

FeasibilityVerdict base_verdict(long k, long g, Scope scope) {
    FeasibilityVerdict v;
    v.k = k;
    v.g = g;
    v.scope = scope;
    if (k >= 2 && g >= 4 && g % 2 == 0) {
        v.n = moore_bound(k, g) + 4;
        v.d = g / 2;
    }
    return v;
}

std::string shift_label(long d, int shift) {
    std::ostringstream os;
    os << "H" << (d - 1) << (shift >= 0 ? "+" : "") << shift;
    return os.str();
}

LabeledCertificate dickson_certificate(long k, long d, int shift) {
    LabeledCertificate lc;
    lc.label = shift_label(d, shift);
    lc.certificate = shifted_dickson_certificate(k, static_cast<int>(d), shift);
    return lc;
}

}  // namespace

BiggsNote rule_biggs(long k, long g, long e) {
    BiggsNote note;
    if (g % 2 != 0 || g < 6 || k < 3) {
        note.note = "requires even girth >= 6 and valency >= 3";
        return note;
    }
    note.applicable = true;
    if (e <= k - 2) {
        note.forced_bipartite = true;
        note.note = "excess <= k-2: excess is even and the graph is bipartite of diameter d+1";
    } else {
        note.note = "excess exceeds k-2: no structural conclusion";
    }
    return note;
}

FeasibilityVerdict rule_excess2(long k, long g) {
    FeasibilityVerdict v = base_verdict(k, g, Scope::Excess2);
    v.n = (k >= 2 && g >= 4 && g % 2 == 0) ? moore_bound(k, g) + 2 : Integer(0);
    if (k < 3 || g < 6 || g % 2 != 0) {
        v.outcome = Outcome::NotCovered;
        v.notes.push_back("requires k >= 3 and even girth >= 6");
        return v;
    }
    if (g != 6) {
        v.outcome = Outcome::Nonexistent;
        v.rule_ids.push_back("R-EXC2");
        v.notes.push_back("an excess-2 cage of even girth >= 6 must have girth 6");
        return v;
    }
    long r = k % 8;
    if (r == 5 || r == 7) {
        v.outcome = Outcome::Nonexistent;
        v.rule_ids.push_back("R-EXC2");
        v.notes.push_back("k mod 8 = " + std::to_string(r) + " is forbidden");
        return v;
    }
    v.outcome = Outcome::Open;
    v.notes.push_back("k mod 8 = " + std::to_string(r) + " passes the residue test");
    return v;
}

FeasibilityVerdict rule_exclusion_list(long k, long g) {
    FeasibilityVerdict v = base_verdict(k, g, Scope::GeneralExcess4);
    if (k < 6 || g <= 6 || g % 2 != 0) {
        v.outcome = Outcome::NotCovered;
        v.notes.push_back("requires k >= 6 and even girth > 6");
        return v;
    }
    v.outcome = Outcome::Open;

    // 1) g = 2p, p >= 5 prime, k mod p not in {0,1,2}
    if (long p = g / 2; p >= 5 && is_prime_long(p)) {
        long r = k % p;
        if (r != 0 && r != 1 && r != 2) {
            v.outcome = Outcome::Nonexistent;
            v.rule_ids.push_back("R-EXCL1");
            v.notes.push_back("g=2p, p=" + std::to_string(p) + ", k mod p = " + std::to_string(r));
        }
    }
    // 2) g = 4*3^s, s >= 4, 9 | k, 3^(s-1) does not divide k
    if (g % 4 == 0) {
        long rest = g / 4, s = 0;
        while (rest % 3 == 0) {
            rest /= 3;
            ++s;
        }
        if (rest == 1 && s >= 4) {
            long pow = 1;
            for (long i = 0; i < s - 1; ++i) pow *= 3;
            if (k % 9 == 0 && k % pow != 0) {
                v.outcome = Outcome::Nonexistent;
                v.rule_ids.push_back("R-EXCL2");
                v.notes.push_back("g=4*3^" + std::to_string(s) + ", 9 | k, 3^" +
                                  std::to_string(s - 1) + " does not divide k");
            }
        }
    }
    // 3) g = 2p^2, p >= 5 prime, k mod p not in {0,1,2}, k even
    if (long h = g / 2; k % 2 == 0) {
        for (long p = 5; p * p <= h; ++p)
            if (p * p == h && is_prime_long(p)) {
                long r = k % p;
                if (r != 0 && r != 1 && r != 2) {
                    v.outcome = Outcome::Nonexistent;
                    v.rule_ids.push_back("R-EXCL3");
                    v.notes.push_back("g=2p^2, p=" + std::to_string(p) + ", k even, k mod p = " +
                                      std::to_string(r));
                }
            }
    }
    // 4) g = 4p, p >= 5 prime, k mod p not in {0,1,2,3,p-2}
    if (g % 4 == 0) {
        long p = g / 4;
        if (p >= 5 && is_prime_long(p)) {
            long r = k % p;
            if (r != 0 && r != 1 && r != 2 && r != 3 && r != p - 2) {
                v.outcome = Outcome::Nonexistent;
                v.rule_ids.push_back("R-EXCL4");
                v.notes.push_back("g=4p, p=" + std::to_string(p) + ", k mod p = " + std::to_string(r));
            }
        }
    }
    // 5) 16 | g and k = 3 mod g
    if (g % 16 == 0 && k % g == 3) {
        v.outcome = Outcome::Nonexistent;
        v.rule_ids.push_back("R-EXCL5");
        v.notes.push_back("g = 0 mod 16 and k = 3 mod g");
    }
    return v;
}

TheoremAVerdict rule_theorem_a(long k, long g, long c, long c2) {
    TheoremAVerdict v;
    if (k < 7 || k % 2 == 0) {
        v.reason = "requires odd k >= 7";
        return v;
    }
    if (g < 8 || g % 2 != 0) {
        v.reason = "requires even girth >= 8";
        return v;
    }
    if (c < 1 || c2 < 0 || c2 > c) {
        v.reason = "cycle counts must satisfy c >= 1, 0 <= c2 <= c";
        return v;
    }
    v.applicable = true;
    long d = g / 2;
    long m = d - 1;
    std::ostringstream detail;
    if (d % 2 != 0) {
        bool div1 = (c - 2) % m == 0, div2 = c2 % m == 0;
        v.consistent = div1 && div2;
        detail << "d odd: " << m << " | c-2 is " << (div1 ? "true" : "false") << ", " << m
               << " | c2 is " << (div2 ? "true" : "false");
    } else {
        bool div1 = (c - 1) % m == 0, div2 = (c2 - 1) % m == 0;
        v.consistent = div1 && div2;
        detail << "d even: " << m << " | c-1 is " << (div1 ? "true" : "false") << ", " << m
               << " | c2-1 is " << (div2 ? "true" : "false");
    }
    v.detail = detail.str();
    if (d >= 4) {
        v.certificates.push_back(dickson_certificate(k, d, 2));
        v.certificates.push_back(dickson_certificate(k, d, -2));
    }
    return v;
}

FeasibilityVerdict rule_cyclic(long k, long g) {
    FeasibilityVerdict v = base_verdict(k, g, Scope::CyclicExcess4);
    if (k < 6 || g < 8 || g % 2 != 0) {
        v.outcome = Outcome::NotCovered;
        v.notes.push_back("requires k >= 6 and even girth >= 8");
        return v;
    }
    long d = g / 2;
    if (d % 2 != 0) {
        // A spanning excess cycle would have to sit inside one partite set.
        v.outcome = Outcome::Nonexistent;
        v.rule_ids.push_back("R-CYC-ODD");
        v.notes.push_back("d odd: every excess cycle lies in one partite set, "
                          "but a spanning cycle cannot");
        return v;
    }
    v.outcome = Outcome::Open;
    bool div3 = mpz_divisible_ui_p(v.n.get_mpz_t(), 3) != 0;
    bool div6 = mpz_divisible_ui_p(v.n.get_mpz_t(), 6) != 0;
    bool div4 = mpz_divisible_ui_p(v.n.get_mpz_t(), 4) != 0;
    if (div3) {
        LabeledCertificate lc = dickson_certificate(k, d, -1);
        if (lc.certificate.verdict == Verdict::Irreducible) {
            v.outcome = Outcome::Nonexistent;
            v.rule_ids.push_back("R-CYC3");
            v.notes.push_back("3 | n and H_{d-1}(x)-1 is irreducible");
        } else {
            v.notes.push_back("3 | n but H_{d-1}(x)-1 is reducible: no conclusion");
        }
        v.certificates.push_back(std::move(lc));
    }
    if (div6) {
        LabeledCertificate lc = dickson_certificate(k, d, 1);
        if (lc.certificate.verdict == Verdict::Irreducible) {
            v.outcome = Outcome::Nonexistent;
            v.rule_ids.push_back("R-CYC6");
            v.notes.push_back("6 | n and H_{d-1}(x)+1 is irreducible");
        } else {
            v.notes.push_back("6 | n but H_{d-1}(x)+1 is reducible: no conclusion");
        }
        v.certificates.push_back(std::move(lc));
    }
    if (div4) {
        // d even makes H_{d-1} an odd polynomial, so x divides it and the
        // corresponding reducibility condition is automatically met.
        v.rule_ids.push_back("R-CYC4-VACUOUS");
        v.notes.push_back("4 | n: H_{d-1} is divisible by x, no conclusion");
    }

    // The published residue table for g in {8,12,16} must agree with the
    // certificate pipeline.
    if (g == 8 || g == 12 || g == 16) {
        bool table = (g == 8) ? (k % 3 == 1 || k % 3 == 2) : (k % 3 == 1);
        if (table != (v.outcome == Outcome::Nonexistent))
            throw std::logic_error("rule_cyclic: residue table disagrees with certificates at k=" +
                                   std::to_string(k) + ", g=" + std::to_string(g));
        v.notes.push_back("residue table for g=" + std::to_string(g) + " concurs (k mod 3 = " +
                          std::to_string(k % 3) + ")");
    }
    return v;
}

FeasibilityVerdict rule_bicyclic(long k, long g) {
    FeasibilityVerdict v = base_verdict(k, g, Scope::BicyclicExcess4);
    if (k < 7 || k % 2 == 0 || g < 8 || g % 2 != 0 || (g / 2) % 2 != 0) {
        v.outcome = Outcome::NotCovered;
        v.notes.push_back("requires odd k >= 7 and g = 2d >= 8 with d even");
        return v;
    }
    // Two cycles with d even force (d-1) | c-1 = 1, impossible for d >= 4.
    TheoremAVerdict ta = rule_theorem_a(k, g, 2, 2);
    if (!ta.applicable || ta.consistent)
        throw std::logic_error("rule_bicyclic: divisibility argument unexpectedly passed");
    v.outcome = Outcome::Nonexistent;
    v.rule_ids.push_back("R-BICYCLIC");
    v.rule_ids.push_back("R-THMA");
    v.notes.push_back("two excess cycles: " + ta.detail);
    v.certificates = std::move(ta.certificates);
    return v;
}

std::vector<FeasibilityVerdict> scan(const ScanRequest& req) {
    if (req.k_lo > req.k_hi || req.g_lo > req.g_hi)
        throw std::invalid_argument("scan: empty parameter range");
    if (req.scopes.empty()) throw std::invalid_argument("scan: no scopes requested");
    std::vector<Scope> scopes;
    for (Scope s : {Scope::GeneralExcess4, Scope::CyclicExcess4, Scope::BicyclicExcess4,
                    Scope::Excess2})
        if (std::find(req.scopes.begin(), req.scopes.end(), s) != req.scopes.end())
            scopes.push_back(s);
    std::vector<FeasibilityVerdict> rows;
    bool any_g = false;
    for (long k = req.k_lo; k <= req.k_hi; ++k)
        for (long g = req.g_lo; g <= req.g_hi; ++g) {
            if (g % 2 != 0) continue;
            any_g = true;
            for (Scope s : scopes) {
                switch (s) {
                    case Scope::GeneralExcess4: rows.push_back(rule_exclusion_list(k, g)); break;
                    case Scope::CyclicExcess4: rows.push_back(rule_cyclic(k, g)); break;
                    case Scope::BicyclicExcess4: rows.push_back(rule_bicyclic(k, g)); break;
                    case Scope::Excess2: rows.push_back(rule_excess2(k, g)); break;
                }
            }
        }
    if (!any_g) throw std::invalid_argument("scan: no even girth in range");
    return rows;
}

ScanSummary summarize(const std::vector<FeasibilityVerdict>& rows) {
    ScanSummary s;
    for (const auto& r : rows) {
        if (r.outcome == Outcome::Nonexistent) ++s.nonexistent;
        if (r.outcome == Outcome::Open) ++s.open;
        if (r.outcome == Outcome::NotCovered) ++s.not_covered;
    }
    return s;
}

std::string scan_to_csv(const std::vector<FeasibilityVerdict>& rows) {
    std::ostringstream os;
    os << "k,g,scope,verdict,rule_ids,certificates\n";
    for (const auto& r : rows) {
        os << r.k << ',' << r.g << ',' << to_string(r.scope) << ',' << to_string(r.outcome) << ',';
        for (std::size_t i = 0; i < r.rule_ids.size(); ++i)
            os << (i ? ";" : "") << r.rule_ids[i];
        os << ',';
        for (std::size_t i = 0; i < r.certificates.size(); ++i)
            os << (i ? ";" : "") << r.certificates[i].descriptor();
        os << '\n';
    }
    return os.str();
}

}  // namespace cagekit

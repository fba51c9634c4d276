#include "cagekit/jsonio.hpp"

namespace cagekit {

using nlohmann::json;

json to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const Integer& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

json to_json(const IrreducibilityCertificate& cert) {
    json j;
    j["poly"] = to_json(cert.poly);
    j["pretty"] = cert.poly.pretty();
    j["verdict"] = cert.verdict == Verdict::Irreducible ? "IRREDUCIBLE" : "REDUCIBLE";
    json witness;
    if (cert.verdict == Verdict::Reducible) {
        witness["type"] = "factors";
        witness["f"] = to_json(cert.factors.at(0));
        witness["g"] = to_json(cert.factors.at(1));
    } else if (cert.eisenstein_prime) {
        witness["type"] = "eisenstein";
        witness["p"] = cert.eisenstein_prime->get_str();
    } else {
        witness["type"] = "exhausted";
        witness["method"] = cert.method;
    }
    j["witness"] = witness;
    j["method"] = cert.method;
    return j;
}

json to_json(const GraphProfile& p) {
    json j;
    j["n"] = p.n;
    if (p.k) j["k"] = *p.k;
    if (p.girth) j["girth"] = *p.girth;
    j["diameter"] = p.diameter;
    j["bipartite"] = p.bipartite;
    if (p.moore) j["moore_bound"] = p.moore->get_str();
    if (p.excess) j["excess"] = p.excess->get_str();
    if (p.d) {
        j["d"] = *p.d;
        j["diameter_is_d_plus_1"] = p.diameter_is_d_plus_1;
    }
    return j;
}

json to_json(const ExcessOutcome& e) {
    json j;
    j["applicable"] = e.applicable;
    if (!e.applicable) {
        j["reason"] = e.reason;
        return j;
    }
    const ExcessProfile& prof = *e.profile;
    j["classification"] = to_string(prof.classification);
    if (prof.classification == ExcessShape::NotTwoRegular) {
        json hist = json::object();
        for (auto [deg, count] : prof.degree_histogram) hist[std::to_string(deg)] = count;
        j["degree_histogram"] = hist;
        return j;
    }
    j["cycle_lengths"] = prof.cycle_lengths;
    j["c"] = prof.c;
    j["c2"] = prof.c2;
    if (prof.host_bipartite) j["within_one_part"] = prof.within_one_part;
    return j;
}

json to_json(const IdentityReport& r) {
    json j;
    j["id"] = r.id;
    j["applicable"] = r.applicable;
    if (!r.applicable) {
        j["reason"] = r.reason;
        return j;
    }
    j["holds"] = r.holds;
    if (r.first_discrepancy) {
        json d;
        d["row"] = r.first_discrepancy->row;
        d["col"] = r.first_discrepancy->col;
        d["lhs"] = r.first_discrepancy->lhs.get_str();
        d["rhs"] = r.first_discrepancy->rhs.get_str();
        j["first_discrepancy"] = d;
    }
    return j;
}

json to_json(const SpectralReport& r) {
    json j;
    j["applicable"] = r.applicable;
    if (!r.applicable) {
        j["reason"] = r.reason;
        return j;
    }
    j["tolerance"] = r.tolerance;
    j["adjacency_eigenvalues"] = r.adjacency_eigenvalues;
    j["excess_eigenvalues"] = r.excess_eigenvalues;
    json pairs = json::array();
    for (const auto& p : r.pairings) {
        json e;
        e["mu"] = p.mu;
        e["h_of_mu"] = p.h_of_mu;
        e["lambda"] = p.lambda;
        e["residual"] = p.residual;
        pairs.push_back(e);
    }
    j["pairings"] = pairs;
    j["max_residual"] = r.max_residual;
    j["ok"] = r.ok;
    json tallies;
    tallies["h_near_minus_two"] = r.count_h_near_minus_two;
    tallies["h_near_two"] = r.count_h_near_two;
    if (r.c >= 0) {
        tallies["c"] = r.c;
        tallies["c2"] = r.c2;
    }
    j["multiplicity_tallies"] = tallies;
    return j;
}

json to_json(const FeasibilityVerdict& v) {
    json j;
    j["k"] = v.k;
    j["g"] = v.g;
    j["scope"] = to_string(v.scope);
    j["verdict"] = to_string(v.outcome);
    j["rule_ids"] = v.rule_ids;
    json certs = json::array();
    for (const auto& lc : v.certificates) {
        json c = to_json(lc.certificate);
        c["label"] = lc.label;
        certs.push_back(c);
    }
    j["certificates"] = certs;
    j["n"] = v.n.get_str();
    j["d"] = v.d;
    j["notes"] = v.notes;
    return j;
}

json scan_to_json(const std::vector<FeasibilityVerdict>& rows) {
    json j;
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    j["rows"] = arr;
    ScanSummary s = summarize(rows);
    j["summary"] = {{"nonexistent", s.nonexistent}, {"open", s.open}, {"not_covered", s.not_covered}};
    return j;
}

}  // namespace cagekit

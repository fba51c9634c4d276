#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cagekit/analysis.hpp"
#include "cagekit/catalog.hpp"
#include "cagekit/cyclotomic.hpp"
#include "cagekit/dickson.hpp"
#include "cagekit/feasibility.hpp"
#include "cagekit/graph.hpp"
#include "cagekit/identities.hpp"
#include "cagekit/irreducible.hpp"
#include "cagekit/jsonio.hpp"
#include "cagekit/spectrum.hpp"

namespace {

using namespace cagekit;
using nlohmann::json;

struct OutputOptions {
    std::string format = "pretty";  // pretty | json | csv
    std::string out_path;
};

void emit(const OutputOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(opt.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

void add_format_options(CLI::App* sub, OutputOptions& opt) {
    sub->add_option("--format", opt.format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
}

struct GraphInput {
    std::string name;
    std::string graph6;
    std::string graph6_file;
};

void add_graph_options(CLI::App* sub, GraphInput& in) {
    auto* a = sub->add_option("--graph", in.name, "catalog graph name");
    auto* b = sub->add_option("--graph6", in.graph6, "inline graph6 string");
    auto* c = sub->add_option("--graph6-file", in.graph6_file, "path to a graph6 file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

Graph load_graph(const GraphInput& in, std::string& label) {
    if (!in.name.empty()) {
        label = in.name;
        return builtin_graph(in.name);
    }
    if (!in.graph6.empty()) {
        label = "graph6";
        return parse_graph6(in.graph6);
    }
    if (!in.graph6_file.empty()) {
        std::ifstream f(in.graph6_file);
        if (!f) throw std::invalid_argument("cannot read graph6 file: " + in.graph6_file);
        std::string line;
        std::getline(f, line);
        label = in.graph6_file;
        return parse_graph6(line);
    }
    throw std::invalid_argument("one of --graph, --graph6, --graph6-file is required");
}

std::pair<long, long> parse_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range (expected A..B or N): " + text);
    }
}

std::string cycle_multiset(const std::vector<long>& lengths) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
    os << ']';
    return os.str();
}

int cmd_poly(const std::string& family, long k, int i, const OutputOptions& opt) {
    PolyFamily fam;
    if (family == "F" || family == "f") fam = PolyFamily::F;
    else if (family == "G" || family == "g") fam = PolyFamily::G;
    else if (family == "H" || family == "h") fam = PolyFamily::H;
    else throw std::invalid_argument("family must be one of F, G, H");
    IntPolynomial p = family_poly(fam, k, i);
    if (opt.format == "json") {
        json j;
        j["family"] = std::string(1, static_cast<char>(std::toupper(family[0])));
        j["k"] = k;
        j["i"] = i;
        j["coeffs"] = to_json(p);
        j["pretty"] = p.pretty();
        emit(opt, j.dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "family,k,i,coeffs\n"
           << static_cast<char>(std::toupper(family[0])) << ',' << k << ',' << i << ','
           << p.coeff_list();
        emit(opt, os.str());
    } else {
        emit(opt, p.pretty());
    }
    return 0;
}

int cmd_cyclotomic(unsigned long l, const OutputOptions& opt) {
    IntPolynomial phi = cyclotomic(l);
    bool has_half = l >= 3;
    IntPolynomial f = has_half ? half_trace(l) : IntPolynomial::zero();
    if (opt.format == "json") {
        json j;
        j["l"] = l;
        j["phi"] = to_json(phi);
        j["phi_pretty"] = phi.pretty();
        if (has_half) {
            j["half_trace"] = to_json(f);
            j["half_trace_pretty"] = f.pretty();
        }
        emit(opt, j.dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "l,phi,half_trace\n" << l << ',' << phi.coeff_list() << ','
           << (has_half ? f.coeff_list() : "");
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        os << "Phi_" << l << " = " << phi.pretty();
        if (has_half) os << "\nf_" << l << " = " << f.pretty();
        emit(opt, os.str());
    }
    return 0;
}

int cmd_factor(const std::string& coeffs, const OutputOptions& opt) {
    IntPolynomial p = IntPolynomial::parse_coeff_list(coeffs);
    IrreducibilityCertificate cert = is_irreducible_over_Q(p);
    if (!cert.reverify()) throw std::logic_error("certificate failed re-verification");
    if (opt.format == "json") {
        emit(opt, to_json(cert).dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "poly,verdict,method\n" << p.coeff_list() << ','
           << (cert.verdict == Verdict::Irreducible ? "IRREDUCIBLE" : "REDUCIBLE") << ','
           << cert.method;
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        os << p.pretty() << " : "
           << (cert.verdict == Verdict::Irreducible ? "IRREDUCIBLE" : "REDUCIBLE");
        if (cert.eisenstein_prime)
            os << " (eisenstein, p = " << cert.eisenstein_prime->get_str() << ")";
        else if (cert.verdict == Verdict::Reducible)
            os << " = (" << cert.factors.at(0).pretty() << ") * (" << cert.factors.at(1).pretty()
               << ")";
        else
            os << " (" << cert.method << ")";
        emit(opt, os.str());
    }
    return 0;
}

int cmd_moore(long k, long g, const OutputOptions& opt) {
    Integer m = moore_bound(k, g);
    Integer n4 = m + 4;
    if (opt.format == "json") {
        json j;
        j["k"] = k;
        j["g"] = g;
        j["moore_bound"] = m.get_str();
        j["excess4_order"] = n4.get_str();
        emit(opt, j.dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "k,g,moore_bound,excess4_order\n" << k << ',' << g << ',' << m.get_str() << ','
           << n4.get_str();
        emit(opt, os.str());
    } else {
        emit(opt, m.get_str() + "\nexcess-4 order: " + n4.get_str());
    }
    return 0;
}

int cmd_excess_graph(const GraphInput& in, const OutputOptions& opt) {
    std::string label;
    Graph g = load_graph(in, label);
    ExcessOutcome out = excess_graph(g);
    if (opt.format == "json") {
        json j = to_json(out);
        j["graph"] = label;
        emit(opt, j.dump(2));
        return 0;
    }
    if (!out.applicable) {
        emit(opt, "NOT_APPLICABLE: " + out.reason);
        return 0;
    }
    const ExcessProfile& prof = *out.profile;
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "graph,classification,cycle_lengths\n"
           << label << ',' << to_string(prof.classification) << ','
           << (prof.classification == ExcessShape::NotTwoRegular
                   ? ""
                   : cycle_multiset(prof.cycle_lengths));
        emit(opt, os.str());
        return 0;
    }
    if (prof.classification == ExcessShape::NotTwoRegular) {
        std::ostringstream os;
        os << "NOT_2_REGULAR, degree histogram:";
        for (auto [deg, count] : prof.degree_histogram) os << ' ' << deg << "x" << count;
        emit(opt, os.str());
        return 0;
    }
    emit(opt, cycle_multiset(prof.cycle_lengths));
    return 0;
}

int cmd_verify(const GraphInput& in, double tol, const OutputOptions& opt) {
    std::string label;
    Graph g = load_graph(in, label);

    GraphProfile prof = profile(g);
    ExcessOutcome exc = excess_graph(g);
    std::vector<IdentityReport> identities = {
        verify_partition_identity(g),
        verify_path_identity(g),
        verify_quotient_identity(g),
        annihilator_check(g),
    };
    SpectralReport spec = spectrum_crosscheck(g, tol);

    bool ok = true;
    std::vector<std::string> failures;
    for (const auto& rep : identities)
        if (rep.applicable && !rep.holds) {
            ok = false;
            failures.push_back(rep.id);
        }
    if (spec.applicable && !spec.ok) {
        ok = false;
        failures.push_back("spectrum");
    }

    if (opt.format == "json") {
        json j;
        j["graph"] = {{"label", label}, {"n", g.vertex_count()}, {"edges", g.edge_count()}};
        j["profile"] = to_json(prof);
        j["excess_graph"] = to_json(exc);
        json ids = json::array();
        for (const auto& rep : identities) ids.push_back(to_json(rep));
        j["identities"] = ids;
        j["spectrum"] = to_json(spec);
        j["overall"] = ok;
        emit(opt, j.dump(2));
    } else {
        std::ostringstream os;
        os << "graph: " << label << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
           << ")\n";
        os << "profile:";
        if (prof.k) os << " k=" << *prof.k;
        if (prof.girth) os << " girth=" << *prof.girth;
        os << " diameter=" << prof.diameter << (prof.bipartite ? " bipartite" : "");
        if (prof.excess) os << " excess=" << prof.excess->get_str();
        os << '\n';
        os << "excess graph: ";
        if (!exc.applicable) {
            os << "NOT_APPLICABLE (" << exc.reason << ")\n";
        } else if (exc.profile->classification == ExcessShape::NotTwoRegular) {
            os << "NOT_2_REGULAR\n";
        } else {
            os << to_string(exc.profile->classification) << ' '
               << cycle_multiset(exc.profile->cycle_lengths) << " c=" << exc.profile->c
               << " c2=" << exc.profile->c2 << '\n';
        }
        for (const auto& rep : identities) {
            os << rep.id << ": ";
            if (!rep.applicable) os << "not applicable (" << rep.reason << ")";
            else os << (rep.holds ? "holds" : "FAILS");
            os << '\n';
        }
        os << "spectrum: ";
        if (!spec.applicable) os << "not applicable (" << spec.reason << ")";
        else
            os << "max residual " << spec.max_residual << " (tol " << spec.tolerance << ") "
               << (spec.ok ? "ok" : "FAIL");
        os << '\n';
        os << "overall: " << (ok ? "PASS" : "FAIL");
        emit(opt, os.str());
    }
    if (!ok) {
        std::cerr << "verification failed:";
        for (const auto& f : failures) std::cerr << ' ' << f;
        std::cerr << '\n';
        return 1;
    }
    return 0;
}

int cmd_scan(const std::string& k_range, const std::string& g_range,
             const std::string& scope_list, const OutputOptions& opt) {
    ScanRequest req;
    std::tie(req.k_lo, req.k_hi) = parse_range(k_range);
    std::tie(req.g_lo, req.g_hi) = parse_range(g_range);
    std::stringstream ss(scope_list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "general") req.scopes.push_back(Scope::GeneralExcess4);
        else if (token == "cyclic") req.scopes.push_back(Scope::CyclicExcess4);
        else if (token == "bicyclic") req.scopes.push_back(Scope::BicyclicExcess4);
        else if (token == "excess2") req.scopes.push_back(Scope::Excess2);
        else throw std::invalid_argument("unknown scope: " + token);
    }
    std::vector<FeasibilityVerdict> rows = scan(req);
    if (opt.format == "json") {
        emit(opt, scan_to_json(rows).dump(2));
    } else if (opt.format == "csv") {
        emit(opt, scan_to_csv(rows));
    } else {
        std::ostringstream os;
        for (const auto& r : rows) {
            os << "k=" << r.k << " g=" << r.g << " scope=" << to_string(r.scope)
               << " verdict=" << to_string(r.outcome);
            if (!r.rule_ids.empty()) {
                os << " rules=";
                for (std::size_t i = 0; i < r.rule_ids.size(); ++i)
                    os << (i ? ";" : "") << r.rule_ids[i];
            }
            os << '\n';
        }
        ScanSummary s = summarize(rows);
        os << "summary: nonexistent=" << s.nonexistent << " open=" << s.open
           << " not_covered=" << s.not_covered;
        emit(opt, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral toolkit for small-excess regular graphs"};
    app.require_subcommand(1);

    // poly
    std::string poly_family;
    long poly_k = 0;
    int poly_i = 0;
    OutputOptions poly_opt;
    auto* poly = app.add_subcommand("poly", "print a polynomial from the F/G/H families");
    poly->add_option("family", poly_family, "F, G, or H")->required();
    poly->add_option("--k", poly_k, "valency parameter")->required();
    poly->add_option("--i", poly_i, "index")->required();
    add_format_options(poly, poly_opt);

    // cyclotomic
    unsigned long cyc_l = 0;
    OutputOptions cyc_opt;
    auto* cyc = app.add_subcommand("cyclotomic", "print the l-th cyclotomic polynomial and its half-trace form");
    cyc->add_option("--l", cyc_l, "index l >= 1")->required();
    add_format_options(cyc, cyc_opt);

    // factor
    std::string factor_coeffs;
    OutputOptions factor_opt;
    auto* factor = app.add_subcommand("factor", "decide irreducibility over Q with a certificate");
    factor->add_option("--coeffs", factor_coeffs, "coefficient list, lowest degree first, e.g. [-1,-12,0,1]")
        ->required();
    add_format_options(factor, factor_opt);

    // moore
    long moore_k = 0, moore_g = 0;
    OutputOptions moore_opt;
    auto* moore = app.add_subcommand("moore", "order bound and the excess-4 order");
    moore->add_option("--k", moore_k, "valency")->required();
    moore->add_option("--g", moore_g, "girth")->required();
    add_format_options(moore, moore_opt);

    // verify
    GraphInput verify_in;
    double verify_tol = 1e-8;
    OutputOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run all structural and spectral checks on a graph");
    add_graph_options(verify, verify_in);
    verify->add_option("--tol", verify_tol, "spectrum residual tolerance")->capture_default_str();
    add_format_options(verify, verify_opt);

    // excess-graph
    GraphInput excess_in;
    OutputOptions excess_opt;
    auto* excess = app.add_subcommand("excess-graph", "cycle structure of the excess graph");
    add_graph_options(excess, excess_in);
    add_format_options(excess, excess_opt);

    // scan
    std::string scan_k, scan_g, scan_scopes = "general,cyclic,bicyclic";
    OutputOptions scan_opt;
    auto* scan_cmd = app.add_subcommand("scan", "evaluate feasibility rules over parameter ranges");
    scan_cmd->add_option("--k", scan_k, "valency range A..B or single value")->required();
    scan_cmd->add_option("--g", scan_g, "girth range A..B (even values scanned)")->required();
    scan_cmd->add_option("--scope", scan_scopes, "comma list of general,cyclic,bicyclic,excess2")
        ->capture_default_str();
    add_format_options(scan_cmd, scan_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed()) return cmd_poly(poly_family, poly_k, poly_i, poly_opt);
        if (cyc->parsed()) return cmd_cyclotomic(cyc_l, cyc_opt);
        if (factor->parsed()) return cmd_factor(factor_coeffs, factor_opt);
        if (moore->parsed()) return cmd_moore(moore_k, moore_g, moore_opt);
        if (verify->parsed()) return cmd_verify(verify_in, verify_tol, verify_opt);
        if (excess->parsed()) return cmd_excess_graph(excess_in, excess_opt);
        if (scan_cmd->parsed()) return cmd_scan(scan_k, scan_g, scan_scopes, scan_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

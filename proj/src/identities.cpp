#include "cagekit/identities.hpp"

#include <stdexcept>

#include "cagekit/cyclotomic.hpp"
#include "cagekit/dickson.hpp"

namespace cagekit {

namespace {

struct ShapeGate {
    bool ok = false;
    std::string reason;
    long k = 0, d = 0;
    GraphProfile prof;
};

ShapeGate shape_gate(const Graph& g) {
    ShapeGate gate;
    gate.prof = profile(g);
    const GraphProfile& p = gate.prof;
    if (!p.k) {
        gate.reason = "host is not regular";
        return gate;
    }
    if (*p.k < 3) {
        gate.reason = "valency below 3";
        return gate;
    }
    if (!p.girth) {
        gate.reason = "host has no cycle";
        return gate;
    }
    if (*p.girth % 2 != 0) {
        gate.reason = "odd girth";
        return gate;
    }
    long d = *p.girth / 2;
    if (p.diameter != d && p.diameter != d + 1) {
        gate.reason = "diameter is not d or d+1";
        return gate;
    }
    gate.ok = true;
    gate.k = *p.k;
    gate.d = d;
    return gate;
}

IdentityReport compare(std::string id, const IntMatrix& lhs, const IntMatrix& rhs) {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.applicable = true;
    rep.holds = true;
    for (int i = 0; i < lhs.size(); ++i)
        for (int j = 0; j < lhs.size(); ++j)
            if (lhs.at(i, j) != rhs.at(i, j)) {
                rep.holds = false;
                rep.first_discrepancy = MatrixDiscrepancy{
                    static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                    lhs.at(i, j), rhs.at(i, j)};
                return rep;
            }
    return rep;
}

IdentityReport not_applicable(std::string id, std::string reason) {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.reason = std::move(reason);
    return rep;
}

// (A * X) row i = sum of X rows over the neighbors of i.
IntMatrix graph_apply(const Graph& g, const IntMatrix& x) {
    int n = x.size();
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (std::size_t u : g.neighbors(static_cast<std::size_t>(i)))
            for (int j = 0; j < n; ++j) out.at(i, j) += x.at(static_cast<int>(u), j);
    return out;
}

}  // namespace

IdentityReport verify_partition_identity(const Graph& g) {
    const char* id = "distance-partition";
    ShapeGate gate = shape_gate(g);
    if (!gate.ok) return not_applicable(id, gate.reason);
    DistanceDecomposition dec = distance_decomposition(g, gate.d);
    int n = static_cast<int>(g.vertex_count());
    IntMatrix sum(n);
    for (const auto& layer : dec.layers) sum = sum + layer;
    sum = sum + dec.excess;
    return compare(id, sum, IntMatrix::ones(n));
}

IdentityReport verify_path_identity(const Graph& g) {
    const char* id = "path-count";
    ShapeGate gate = shape_gate(g);
    if (!gate.ok) return not_applicable(id, gate.reason);
    DistanceDecomposition dec = distance_decomposition(g, gate.d);
    IntMatrix a = adjacency_matrix(g);
    IntPolynomial fd = family_poly(PolyFamily::F, gate.k, gate.d);
    IntMatrix lhs = poly_at_matrix(fd, a);
    IntMatrix rhs = Integer(gate.k) * dec.layers[static_cast<std::size_t>(gate.d)] - a * dec.excess;
    return compare(id, lhs, rhs);
}

IdentityReport verify_quotient_identity(const Graph& g) {
    const char* id = "quotient";
    ShapeGate gate = shape_gate(g);
    if (!gate.ok) return not_applicable(id, gate.reason);
    DistanceDecomposition dec = distance_decomposition(g, gate.d);
    int n = static_cast<int>(g.vertex_count());
    IntMatrix a = adjacency_matrix(g);
    IntMatrix lhs = Integer(gate.k) * IntMatrix::ones(n);
    IntMatrix hd = poly_at_matrix(family_poly(PolyFamily::H, gate.k, gate.d - 1), a);
    IntMatrix rhs = (a + Integer(gate.k) * IntMatrix::identity(n)) * (hd + dec.excess);
    return compare(id, lhs, rhs);
}

AnnihilatorResult build_annihilator(long k, long d, const ExcessProfile& profile) {
    if (k < 3 || d < 2) throw std::invalid_argument("build_annihilator: need k >= 3, d >= 2");
    if (profile.classification == ExcessShape::NotTwoRegular)
        throw std::invalid_argument("build_annihilator: excess graph is not 2-regular");
    IntPolynomial h = family_poly(PolyFamily::H, k, d - 1);
    IntPolynomial minus_h = h * Integer(-1);
    AnnihilatorResult res;
    res.annihilator = IntPolynomial{-k * k, 0, 1};
    for (long l : profile.cycle_lengths) {
        IntPolynomial ql = cycle_charpoly(l).compose(minus_h);
        if (l % 2 != 0) ql = ql * Integer(-1);
        res.annihilator = res.annihilator * ql;
    }
    if (profile.classification == ExcessShape::Cyclic) {
        long n = profile.cycle_lengths[0];
        IntPolynomial f = (minus_h + IntPolynomial::constant(2));
        for (long l : divisors(n))
            if (l >= 3) {
                IntPolynomial fl = half_trace(l).compose(minus_h);
                f = f * fl * fl;
            }
        res.cyclic_form = std::move(f);
    }
    return res;
}

IdentityReport annihilator_check(const Graph& g) {
    const char* id = "annihilator";
    ShapeGate gate = shape_gate(g);
    if (!gate.ok) return not_applicable(id, gate.reason);

    ExcessOutcome exc = excess_graph(g);
    if (!exc.applicable) return not_applicable(id, exc.reason);
    if (exc.profile->classification == ExcessShape::NotTwoRegular)
        return not_applicable(id, "excess graph is not 2-regular");

    IntPolynomial m;
    if (exc.profile->classification == ExcessShape::Empty) {
        // No excess eigenvalues: the tree spectrum alone, i.e. roots of H_{d-1}.
        m = IntPolynomial{-gate.k * gate.k, 0, 1} *
            family_poly(PolyFamily::H, gate.k, gate.d - 1);
    } else {
        m = build_annihilator(gate.k, gate.d, *exc.profile).annihilator;
    }

    // M(A) * (nI - J) == 0, evaluated as a progressive Horner application so
    // only sparse adjacency products appear:  X <- A*X + c_i * R.
    int n = static_cast<int>(g.vertex_count());
    IntMatrix r = Integer(n) * IntMatrix::identity(n) - IntMatrix::ones(n);
    long deg = m.degree();
    IntMatrix x = m.leading() * r;
    for (long i = deg - 1; i >= 0; --i) {
        x = graph_apply(g, x);
        if (m.coeff(i) != 0) x = x + m.coeff(i) * r;
    }
    IdentityReport rep = compare(id, x, IntMatrix(n));
    return rep;
}

}  // namespace cagekit

#include "cagekit/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cagekit/analysis.hpp"
#include "cagekit/dickson.hpp"
#include "cagekit/intpoly.hpp"

namespace cagekit {

namespace {

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum_crosscheck: eigensolver failed to converge");
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end());
    return ev;
}

double eval_double(const IntPolynomial& p, double t) {
    double acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + p.coeff(i).get_d();
    return acc;
}

}  // namespace

SpectralReport spectrum_crosscheck(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectrum_crosscheck: tolerance must be positive");
    SpectralReport rep;
    rep.tolerance = tol;

    GraphProfile p = profile(g);
    if (!p.k || *p.k < 3) {
        rep.reason = "host is not regular of valency >= 3";
        return rep;
    }
    if (!p.girth || *p.girth % 2 != 0) {
        rep.reason = "girth is absent or odd";
        return rep;
    }
    long d = *p.girth / 2;
    if (p.diameter != d && p.diameter != d + 1) {
        rep.reason = "diameter is not d or d+1";
        return rep;
    }
    rep.applicable = true;

    long n = static_cast<long>(g.vertex_count());
    DistanceDecomposition dec = distance_decomposition(g, d);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (g.has_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) a(i, j) = 1;
            e(i, j) = dec.excess.at(static_cast<int>(i), static_cast<int>(j)).get_d();
        }
    rep.adjacency_eigenvalues = sym_eigenvalues(a);
    rep.excess_eigenvalues = sym_eigenvalues(e);

    IntPolynomial h = family_poly(PolyFamily::H, *p.k, static_cast<int>(d - 1));
    const double kd = static_cast<double>(*p.k);
    const double near = 1e-6;
    for (double mu : rep.adjacency_eigenvalues) {
        if (std::abs(mu - kd) < near || std::abs(mu + kd) < near) continue;
        SpectralPairing pair;
        pair.mu = mu;
        pair.h_of_mu = eval_double(h, mu);
        pair.residual = std::numeric_limits<double>::infinity();
        for (double lambda : rep.excess_eigenvalues) {
            double res = std::abs(pair.h_of_mu + lambda);
            if (res < pair.residual) {
                pair.residual = res;
                pair.lambda = lambda;
            }
        }
        rep.max_residual = std::max(rep.max_residual, pair.residual);
        if (std::abs(pair.h_of_mu + 2) < near) ++rep.count_h_near_minus_two;
        if (std::abs(pair.h_of_mu - 2) < near) ++rep.count_h_near_two;
        rep.pairings.push_back(pair);
    }
    rep.ok = rep.max_residual <= tol;

    ExcessOutcome exc = excess_graph(g);
    if (exc.applicable && exc.profile &&
        exc.profile->classification != ExcessShape::NotTwoRegular) {
        rep.c = exc.profile->c;
        rep.c2 = exc.profile->c2;
    }
    return rep;
}

}  // namespace cagekit

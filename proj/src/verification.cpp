#include "blowspec/verification.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "blowspec/blowup_spectra.hpp"
#include "blowspec/matrices.hpp"

namespace blowspec {

namespace {

FamilyRecord make_record(std::string family, const FormulaSpectrum& formula,
                         const SymMatrix& matrix, double tol) {
    FamilyRecord rec{std::move(family), formula.flatten(), eig_symmetric(matrix).spectrum(), 0.0,
                     false};
    const ComparisonResult cmp = compare_spectra(rec.formula, rec.oracle, tol);
    rec.max_deviation = cmp.max_deviation;
    rec.pass = cmp.equal;
    return rec;
}

/// Worst residual of the t copies of each base eigenvector against the
/// blown-up matrix, where the base eigenvalue transforms as value_map says.
template <typename ValueMap>
double stacked_residuals(const SymMatrix& blown, const EigenBasis& base, int t,
                         ValueMap&& value_map) {
    double worst = 0.0;
    for (const EigenPair& pair : base.pairs) {
        const std::vector<double> y = stacked_eigenvector(pair.vector, t);
        worst = std::max(worst, eigenpair_residual(blown, y, value_map(pair.value)));
    }
    return worst;
}

}  // namespace

VerificationReport run_verification(const Graph& g, int t, double tol) {
    const int n = g.vertex_count();
    const Graph gbar = complement(g);
    const Graph blown = blow_up(g, t);
    const Graph blown_bar = complement(blown);

    const SymMatrix a_blown = adjacency(blown);
    const SymMatrix a_blown_bar = adjacency(blown_bar);
    const SymMatrix l_blown = laplacian(blown);
    const SymMatrix q_blown = signless_laplacian(blown);
    const SymMatrix q_blown_bar = signless_laplacian(blown_bar);

    const Spectrum base_a = eig_symmetric(adjacency(g)).spectrum();
    const Spectrum base_abar = eig_symmetric(adjacency(gbar)).spectrum();
    const EigenBasis base_l = eig_symmetric(laplacian(g));
    const EigenBasis base_q = eig_symmetric(signless_laplacian(g));
    const EigenBasis base_qbar = eig_symmetric(signless_laplacian(gbar));

    VerificationReport report;
    report.graph_id = n <= 62 ? write_graph6(g) : "n=" + std::to_string(n);
    report.n = n;
    report.t = t;
    report.tol = tol;

    report.families.push_back(
        make_record("adjacency", blowup_adjacency_spectrum(base_a, n, t), a_blown, tol));
    report.families.push_back(
        make_record("adjacency_complement",
                    blowup_adjacency_complement_spectrum(base_abar, n, t), a_blown_bar, tol));
    report.families.push_back(make_record(
        "laplacian", blowup_laplacian_spectrum(base_l.spectrum(), g.degrees(), t), l_blown, tol));
    report.families.push_back(make_record(
        "signless", blowup_signless_spectrum(base_q.spectrum(), g.degrees(), t), q_blown, tol));
    report.families.push_back(
        make_record("signless_complement",
                    blowup_complement_signless_spectrum(base_qbar.spectrum(), g.degrees(), n, t),
                    q_blown_bar, tol));

    double worst = 0.0;
    worst = std::max(worst, stacked_residuals(l_blown, base_l, t,
                                              [t](double mu) { return t * mu; }));
    worst = std::max(worst, stacked_residuals(q_blown, base_q, t,
                                              [t](double q) { return t * q; }));
    worst = std::max(worst, stacked_residuals(q_blown_bar, base_qbar, t, [t](double qbar) {
                         return t * qbar + 2.0 * (t - 1);
                     }));
    for (int k = 1; k < t; ++k) {
        for (int i = 0; i < n; ++i) {
            const std::vector<double> e = difference_eigenvector(i, k, n, t);
            const double td = static_cast<double>(t) * g.degree(i);
            worst = std::max(worst, eigenpair_residual(l_blown, e, td));
            worst = std::max(worst, eigenpair_residual(q_blown, e, td));
            worst = std::max(worst,
                             eigenpair_residual(q_blown_bar, e, static_cast<double>(t) * n - 2.0 - td));
        }
    }
    report.eigenvector_residuals = worst;

    report.overall_pass = worst <= tol;
    for (const FamilyRecord& rec : report.families) {
        report.overall_pass = report.overall_pass && rec.pass;
    }
    return report;
}

}  // namespace blowspec

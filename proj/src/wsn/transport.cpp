#include "csnet/wsn/transport.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/wsn/gathering.hpp"
#include "csnet/wsn/srp.hpp"

#include <cmath>

namespace csnet {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, "loglog_slope: need at least two points");
    const auto count = static_cast<Index>(x.size());
    Eigen::MatrixX2d design(count, 2);
    Vector target(count);
    for (Index i = 0; i < count; ++i) {
        require(x[static_cast<std::size_t>(i)] > 0 && y[static_cast<std::size_t>(i)] > 0, "loglog_slope: values must be positive");
        design(i, 0) = 1.0;
        design(i, 1) = std::log(x[static_cast<std::size_t>(i)]);
        target(i) = std::log(y[static_cast<std::size_t>(i)]);
    }
    return design.colPivHouseholderQr().solve(target)(1);
}

TransportReport transport_cost_report(const std::vector<Index>& ns, Index k, int s,
                                      const std::vector<std::uint64_t>& seeds) {
    require(ns.size() >= 3, "transport_cost_report: need at least three network sizes");
    require(k >= 1 && s >= 1, "transport_cost_report: k and s must be positive");
    require(!seeds.empty(), "transport_cost_report: need at least one seed");
    TransportReport report;
    std::vector<double> xs, conv, cdg, srp;
    for (Index n : ns) {
        require(n > k, "transport_cost_report: n must exceed k");
        TransportRow row;
        row.n = n;
        row.s = s;
        row.m = static_cast<Index>(std::ceil(static_cast<double>(k) * std::log(static_cast<double>(n) / static_cast<double>(k))));
        for (auto seed : seeds) {
            SensorNetwork net = build_network(n, Topology::Grid, seed);
            Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(n)}));
            Vector x = Vector::Zero(n);
            for (auto i : rng.choose(n, k)) x(i) = rng.normal();
            row.conventional += static_cast<double>(conventional_collect(net, x).total_tx());
            const Matrix phi = gen_sensing_matrix(Recipe::Gaussian, row.m, n, derive_seed(seed, {3})).entries;
            row.cdg += static_cast<double>(cdg_collect(net, x, phi).total_tx());
            row.cdg_srp += static_cast<double>(srp_run(net, x, s, row.m, seed).cost.dissemination_messages);
        }
        const auto count = static_cast<double>(seeds.size());
        row.conventional /= count;
        row.cdg /= count;
        row.cdg_srp /= count;
        xs.push_back(static_cast<double>(n));
        conv.push_back(row.conventional);
        cdg.push_back(row.cdg);
        srp.push_back(row.cdg_srp);
        report.rows.push_back(row);
    }
    report.conventional_exponent = loglog_slope(xs, conv);
    report.cdg_exponent = loglog_slope(xs, cdg);
    report.cdg_srp_exponent = loglog_slope(xs, srp);
    return report;
}

}  // namespace csnet

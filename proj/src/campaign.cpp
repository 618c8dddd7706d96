#include "harmony/campaign.hpp"

#include <algorithm>
#include <cmath>

#include "harmony/error.hpp"
#include "harmony/measures.hpp"
#include "harmony/monogamy.hpp"
#include "harmony/parallel.hpp"
#include "harmony/rng.hpp"
#include "harmony/states.hpp"
#include "harmony/verify.hpp"

namespace harmony {

namespace {

void require_samples(const CampaignOptions& opt) {
    if (opt.n < 1) throw ConfigError("a campaign needs at least one sample");
}

std::size_t draw_rank(const CampaignOptions& opt, std::size_t dim, Rng& rng) {
    if (opt.rank == 0) return 1 + rng.index(dim);
    if (opt.rank > dim) throw InvalidRank("rank must lie in [1, " + std::to_string(dim) + "]");
    return opt.rank;
}

double trace_rho_flip(const DensityMatrix& rho) { return trace_of_product(rho.matrix(), spin_flip(rho)).real(); }

}  // namespace

PropertyCampaign run_property_campaign(const CampaignOptions& opt) {
    require_samples(opt);
    PropertyCampaign out;
    out.rows.resize(opt.n);
    parallel_for(opt.n, opt.jobs, [&](std::size_t i) {
        Rng rng(opt.seed, i);
        const std::size_t rank = draw_rank(opt, 4, rng);
        const DensityMatrix rho = random_mixed(2, rank, rng);
        const RouteValues routes = disharmony_routes(rho, opt.tol);
        const LambdaSpectrum lam = lambda_spectrum(rho, opt.tol);
        const double h = std::max(0.0, -routes.poly);
        const double c = concurrence(lam);
        const HarmonyBounds env = harmony_bounds(std::min(c, 1.0));
        out.rows[i] = {i,
                       rank,
                       h,
                       c,
                       lam.sum(),
                       routes.max_discrepancy(),
                       env.lo - h,
                       h - env.hi,
                       h - c,
                       (h <= opt.tolerance) == (c <= opt.tolerance)};
    });

    PropertySummary& s = out.summary;
    s.samples = opt.n;
    for (const PropertyRow& r : out.rows) {
        s.max_route_discrepancy = std::max(s.max_route_discrepancy, r.route_discrepancy);
        s.max_lower_excess = std::max(s.max_lower_excess, r.lower_excess);
        s.max_upper_excess = std::max(s.max_upper_excess, r.upper_excess);
        s.max_dominance_excess = std::max(s.max_dominance_excess, r.dominance_excess);
        s.min_lambda_sum = std::min(s.min_lambda_sum, r.lambda_sum);
        s.max_lambda_sum = std::max(s.max_lambda_sum, r.lambda_sum);
        if (!r.zero_sets_agree) ++s.zero_set_mismatches;
        const bool bad = r.route_discrepancy > opt.tolerance || r.lower_excess > opt.tolerance ||
                         r.upper_excess > opt.tolerance || r.dominance_excess > opt.tolerance ||
                         r.lambda_sum > 1.0 + opt.tolerance || r.lambda_sum < 0.0 || !r.zero_sets_agree;
        if (bad) ++s.violations;
    }
    return out;
}

MonogamyCampaign run_monogamy_campaign(const CampaignOptions& opt, double small_lambda_bound) {
    require_samples(opt);
    MonogamyCampaign out;
    out.rows.resize(3 * opt.n);
    parallel_for(opt.n, opt.jobs, [&](std::size_t i) {
        Rng rng(opt.seed, i);
        const DensityMatrix rho = from_pure(random_pure(3, rng));
        for (std::size_t pivot = 0; pivot < 3; ++pivot) {
            const auto [y, z] = pivot_partners(pivot);
            const std::array<std::size_t, 2> xy_keep{pivot, y};
            const std::array<std::size_t, 2> xz_keep{pivot, z};
            const std::array<std::size_t, 1> x_keep{pivot};
            const DensityMatrix xy = partial_trace(rho, xy_keep);
            const DensityMatrix xz = partial_trace(rho, xz_keep);
            const double h_xy = harmony(xy, opt.tol);
            const double h_xz = harmony(xz, opt.tol);
            const double h_x_yz = harmony_x_yz(rho, pivot, opt.tol);
            const double t_xy = trace_rho_flip(xy);
            const double t_xz = trace_rho_flip(xz);
            const double four_det_x = 4.0 * det(partial_trace(rho, x_keep).matrix()).real();
            const auto lam_xy = untruncated_lambdas(xy, opt.tol);
            const auto lam_xz = untruncated_lambdas(xz, opt.tol);
            out.rows[3 * i + pivot] = {
                i,
                pivot,
                h_xy,
                h_xz,
                h_x_yz,
                h_x_yz - h_xy - h_xz,
                std::min(t_xy * t_xy - h_xy, t_xz * t_xz - h_xz),
                std::abs(t_xy + t_xz - four_det_x),
                std::max({lam_xy[2], lam_xy[3], lam_xz[2], lam_xz[3]}),
            };
        }
    });

    MonogamySummary& s = out.summary;
    s.samples = opt.n;
    for (const MonogamyRow& r : out.rows) {
        s.min_residual = std::min(s.min_residual, r.residual);
        s.min_proof_slack = std::min(s.min_proof_slack, r.proof_slack);
        s.max_ckw_defect = std::max(s.max_ckw_defect, r.ckw_defect);
        s.max_small_lambda = std::max(s.max_small_lambda, r.max_small_lambda);
        if (r.residual < -opt.tolerance || r.proof_slack < -opt.tolerance || r.max_small_lambda > small_lambda_bound)
            ++s.violations;
    }
    return out;
}

CorollaryCampaign run_corollary_campaign(const CampaignOptions& opt) {
    require_samples(opt);
    CorollaryCampaign out;
    out.rows.resize(3 * opt.n);
    parallel_for(opt.n, opt.jobs, [&](std::size_t i) {
        Rng rng(opt.seed, i);
        const std::size_t rank = draw_rank(opt, 8, rng);
        const DensityMatrix rho = random_mixed(3, rank, rng);
        for (std::size_t pivot = 0; pivot < 3; ++pivot) {
            const auto [h_xy, h_xz] = marginal_harmonies(rho, pivot, opt.tol);
            CorollaryRow row{i, rank, pivot, h_xy, h_xz, h_xy * h_xy + h_xz * h_xz, std::nan(""), true};
            if (opt.decompositions > 0) {
                const RandomSpec spec{opt.seed, i, {}};
                const std::vector<double> trace =
                    decomposition_bound_trace(rho, pivot, opt.decompositions, spec, 0, opt.tol);
                row.decomposition_bound = trace.back();
                row.bound_nonincreasing = std::is_sorted(trace.rbegin(), trace.rend());
            }
            out.rows[3 * i + pivot] = row;
        }
    });

    CorollarySummary& s = out.summary;
    s.samples = opt.n;
    for (const CorollaryRow& r : out.rows) {
        s.max_lhs = std::max(s.max_lhs, r.lhs);
        if (!std::isnan(r.decomposition_bound)) s.max_bound = std::max(s.max_bound, r.decomposition_bound);
        s.bounds_nonincreasing = s.bounds_nonincreasing && r.bound_nonincreasing;
        const bool bad = r.lhs > 1.0 + opt.tolerance ||
                         (!std::isnan(r.decomposition_bound) && r.decomposition_bound > 1.0 + opt.tolerance) ||
                         !r.bound_nonincreasing;
        if (bad) ++s.violations;
    }
    return out;
}

}  // namespace harmony

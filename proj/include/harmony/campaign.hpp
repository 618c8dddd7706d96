#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "harmony/tolerances.hpp"

namespace harmony {

/// Monte Carlo campaigns over random states. Sample i is generated from
/// Rng(seed, i), so every row is reproducible on its own and the output does
/// not depend on the number of jobs.
struct CampaignOptions {
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::size_t rank = 0;  ///< 0 draws the rank uniformly from 1..2^qubits
    std::size_t jobs = 1;
    double tolerance = 1e-9;  ///< slack allowed on every asserted inequality
    std::size_t decompositions = 0;  ///< corollary campaign: decomposition samples per state (0 = skip)
    Tolerances tol{};
};

// --- 2-qubit measure properties -------------------------------------------

struct PropertyRow {
    std::size_t index;
    std::size_t rank;
    double harmony;
    double concurrence;
    double lambda_sum;
    double route_discrepancy;  ///< max pairwise among poly / spectrum / Hermitian-R
    double lower_excess;       ///< C^4 - H (should be <= 0)
    double upper_excess;       ///< H - C(2+C)^3/27 (should be <= 0)
    double dominance_excess;   ///< H - C (should be <= 0)
    bool zero_sets_agree;      ///< (H <= tol) == (C <= tol)
};

struct PropertySummary {
    std::size_t samples = 0;
    double max_route_discrepancy = 0.0;
    double max_lower_excess = -std::numeric_limits<double>::infinity();
    double max_upper_excess = -std::numeric_limits<double>::infinity();
    double max_dominance_excess = -std::numeric_limits<double>::infinity();
    double min_lambda_sum = std::numeric_limits<double>::infinity();
    double max_lambda_sum = 0.0;
    std::size_t zero_set_mismatches = 0;
    std::size_t violations = 0;
};

struct PropertyCampaign {
    std::vector<PropertyRow> rows;
    PropertySummary summary;
};

PropertyCampaign run_property_campaign(const CampaignOptions& opt);

// --- pure 3-qubit monogamy ------------------------------------------------

struct MonogamyRow {
    std::size_t index;
    std::size_t pivot;
    double h_xy;
    double h_xz;
    double h_x_yz;
    double residual;       ///< h_x_yz - h_xy - h_xz
    double proof_slack;    ///< min over both marginals of [tr(rho rho~)]^2 - H
    double ckw_defect;     ///< |tr(rho_XY rho~_XY) + tr(rho_XZ rho~_XZ) - 4 det rho_X|
    double max_small_lambda;  ///< largest lambda_3 / lambda_4 of either marginal, untruncated
};

struct MonogamySummary {
    std::size_t samples = 0;
    double min_residual = std::numeric_limits<double>::infinity();
    double min_proof_slack = std::numeric_limits<double>::infinity();
    double max_ckw_defect = 0.0;
    double max_small_lambda = 0.0;
    std::size_t violations = 0;
};

struct MonogamyCampaign {
    std::vector<MonogamyRow> rows;  ///< three rows (pivots 0, 1, 2) per sample
    MonogamySummary summary;
};

/// Haar-random pure 3-qubit states, all three pivots. small_lambda_bound is
/// the threshold for the two-nonzero-lambda check.
MonogamyCampaign run_monogamy_campaign(const CampaignOptions& opt, double small_lambda_bound = 1e-8);

// --- mixed 3-qubit corollary ----------------------------------------------

struct CorollaryRow {
    std::size_t index;
    std::size_t rank;
    std::size_t pivot;
    double h_xy;
    double h_xz;
    double lhs;  ///< h_xy^2 + h_xz^2
    double decomposition_bound;  ///< NaN when not sampled
    bool bound_nonincreasing;    ///< running minimum never increased
};

struct CorollarySummary {
    std::size_t samples = 0;
    double max_lhs = 0.0;
    double max_bound = 0.0;
    bool bounds_nonincreasing = true;
    std::size_t violations = 0;
};

struct CorollaryCampaign {
    std::vector<CorollaryRow> rows;
    CorollarySummary summary;
};

/// Induced-measure mixed 3-qubit states, all three pivots.
CorollaryCampaign run_corollary_campaign(const CampaignOptions& opt);

}  // namespace harmony

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmony/bench.hpp"
#include "harmony/campaign.hpp"
#include "harmony/error.hpp"
#include "harmony/measures.hpp"
#include "harmony/parallel.hpp"
#include "harmony/report.hpp"
#include "harmony/rng.hpp"
#include "harmony/state_file.hpp"
#include "harmony/states.hpp"
#include "harmony/verify.hpp"

namespace harmony::cli {

namespace {

class UsageError : public Error {
    using Error::Error;
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
        dynamic_cast<const InvalidRank*>(&e) || dynamic_cast<const InvalidDistribution*>(&e) ||
        dynamic_cast<const OutOfRange*>(&e) || dynamic_cast<const InvalidSubset*>(&e)) {
        return exit_usage;
    }
    if (dynamic_cast<const ParseError*>(&e)) return exit_parse;
    return exit_validation;
}

class IoError : public ParseError {
    using ParseError::ParseError;
};

// Reports go to --output when given, else to the caller's stream.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file " + path);
    f << text;
    if (!f) throw IoError("failed writing output file " + path);
}

Cell u(std::size_t x) { return static_cast<std::uint64_t>(x); }

// --- compute --------------------------------------------------------------

struct ComputeArgs {
    std::string input;
    std::string output;
    std::vector<std::string> measures;
    bool base2 = false;
    double tolerance = default_tolerances.hermitian;
};

const std::vector<std::string> all_measures{"harmony", "disharmony", "lambda", "concurrence", "eof", "purity"};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
    std::vector<std::string> wanted = a.measures.empty() ? all_measures : a.measures;
    auto want = [&](const std::string& m) { return std::find(wanted.begin(), wanted.end(), m) != wanted.end(); };

    Tolerances tol = default_tolerances;
    tol.hermitian = a.tolerance;
    tol.trace = a.tolerance;
    tol.psd_floor = a.tolerance;

    const StateFile file = read_state_file(a.input);
    const DensityMatrix rho = to_density_matrix(file, tol);
    if (rho.n_qubits() != 2) {
        throw DimensionError("2-qubit measure requires n_qubits=2, got n_qubits=" + std::to_string(rho.n_qubits()));
    }
    const MeasureReport m = measure_all(rho, tol);
    const double scale = a.base2 ? 1.0 / std::log(2.0) : 1.0;

    std::vector<Column> cols{{"label", "state label from the input file"}};
    std::vector<Cell> row{file.label.value_or("")};
    if (want("harmony")) {
        cols.push_back({"harmony", "max(0, -disharmony), polynomial route"});
        cols.push_back({"harmony_above_one", "true when harmony exceeds 1 within tolerance (not clipped)"});
        row.push_back(m.harmony);
        row.push_back(m.harmony_above_one);
    }
    if (want("disharmony")) {
        cols.push_back({"disharmony", "-2 tr[(rho rho~)^2] + [tr(rho rho~)]^2 + 8 det(rho)"});
        cols.push_back({"route_discrepancy", "|polynomial - four-factor spectrum| disharmony"});
        row.push_back(m.disharmony);
        row.push_back(m.route_discrepancy);
    }
    if (want("lambda")) {
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string n = std::to_string(i + 1);
            cols.push_back({"lambda_" + n, "square root of eigenvalue " + n + " of rho rho~, decreasing"});
            row.push_back(m.lambda[i]);
        }
    }
    if (want("concurrence")) {
        cols.push_back({"concurrence", "max(0, lambda_1 - lambda_2 - lambda_3 - lambda_4)"});
        row.push_back(m.concurrence);
    }
    if (want("eof")) {
        cols.push_back({"eof", std::string("entanglement of formation in ") + (a.base2 ? "bits" : "nats")});
        row.push_back(m.eof * scale);
    }
    if (want("purity")) {
        cols.push_back({"purity", "tr(rho^2)"});
        cols.push_back({"purity_a", "tr(rho_A^2) of the first qubit's marginal"});
        row.push_back(purity(rho));
        row.push_back(m.purity_a);
    }

    std::ostringstream buf;
    CsvReport rep(buf);
    rep.standard_meta("compute", 0, tol, a.tolerance, a.base2);
    rep.meta("input", a.input);
    rep.columns(std::move(cols));
    rep.row(row);
    emit(buf.str(), a.output, out);
    return exit_ok;
}

// --- sample ---------------------------------------------------------------

struct SampleArgs {
    std::size_t n = 1000;
    std::optional<std::size_t> qubits;
    std::size_t rank = 0;
    std::uint64_t seed = 0;
    std::string check;
    std::size_t jobs = 1;
    double tolerance = 1e-9;
    std::size_t decompositions = 0;
    bool summary_only = false;
    std::string output;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    const std::size_t needed = a.check == "properties" ? 2 : 3;
    if (a.qubits && *a.qubits != needed) {
        throw UsageError("--check " + a.check + " requires --qubits " + std::to_string(needed));
    }
    if (a.decompositions > 0 && a.check != "corollary") {
        throw UsageError("--decompositions applies to --check corollary only");
    }
    CampaignOptions opt;
    opt.n = a.n;
    opt.seed = a.seed;
    opt.rank = a.rank;
    opt.jobs = std::max<std::size_t>(1, a.jobs);
    opt.tolerance = a.tolerance;
    opt.decompositions = a.decompositions;

    std::ostringstream buf;
    CsvReport rep(buf);
    rep.standard_meta("sample --check " + a.check, a.seed, opt.tol, a.tolerance, false);
    rep.meta("qubits", u(needed));
    rep.meta("n", u(a.n));
    rep.meta("rank", std::string(a.rank == 0 ? "uniform" : std::to_string(a.rank)));
    rep.meta("sample_stream", std::string("sample i uses Rng(seed, i)"));

    std::size_t violations = 0;
    if (a.check == "properties") {
        const PropertyCampaign c = run_property_campaign(opt);
        rep.columns({{"index", "sample index"},
                     {"rank", "rank of the induced-measure state"},
                     {"harmony", "H from the polynomial route"},
                     {"concurrence", "C from the lambda spectrum"},
                     {"lambda_sum", "sum of the lambda spectrum"},
                     {"route_discrepancy", "max pairwise disagreement of the three disharmony routes"},
                     {"lower_excess", "C^4 - H (<= tolerance required)"},
                     {"upper_excess", "H - C(2+C)^3/27 (<= tolerance required)"},
                     {"dominance_excess", "H - C (<= tolerance required)"},
                     {"zero_sets_agree", "(H <= tolerance) == (C <= tolerance)"}});
        if (!a.summary_only) {
            for (const PropertyRow& r : c.rows) {
                rep.row({u(r.index), u(r.rank), r.harmony, r.concurrence, r.lambda_sum, r.route_discrepancy,
                         r.lower_excess, r.upper_excess, r.dominance_excess, r.zero_sets_agree});
            }
        }
        const PropertySummary& s = c.summary;
        rep.summary("samples", u(s.samples));
        rep.summary("max_route_discrepancy", s.max_route_discrepancy);
        rep.summary("max_lower_excess", s.max_lower_excess);
        rep.summary("max_upper_excess", s.max_upper_excess);
        rep.summary("max_dominance_excess", s.max_dominance_excess);
        rep.summary("min_lambda_sum", s.min_lambda_sum);
        rep.summary("max_lambda_sum", s.max_lambda_sum);
        rep.summary("zero_set_mismatches", u(s.zero_set_mismatches));
        rep.summary("violations", u(s.violations));
        violations = s.violations;
    } else if (a.check == "monogamy") {
        if (a.rank > 1) throw UsageError("--check monogamy samples pure states; --rank must be 1 or omitted");
        const MonogamyCampaign c = run_monogamy_campaign(opt);
        rep.columns({{"index", "sample index"},
                     {"pivot", "qubit X"},
                     {"h_xy", "harmony of the X,Y marginal"},
                     {"h_xz", "harmony of the X,Z marginal"},
                     {"h_x_yz", "(4 det rho_X)^2"},
                     {"residual", "h_x_yz - h_xy - h_xz (>= -tolerance required)"},
                     {"proof_slack", "min over marginals of [tr(rho rho~)]^2 - H"},
                     {"ckw_defect", "|tr(rho_XY rho~_XY) + tr(rho_XZ rho~_XZ) - 4 det rho_X|"},
                     {"max_small_lambda", "largest lambda_3 or lambda_4 of either marginal"}});
        if (!a.summary_only) {
            for (const MonogamyRow& r : c.rows) {
                rep.row({u(r.index), u(r.pivot), r.h_xy, r.h_xz, r.h_x_yz, r.residual, r.proof_slack, r.ckw_defect,
                         r.max_small_lambda});
            }
        }
        const MonogamySummary& s = c.summary;
        rep.summary("samples", u(s.samples));
        rep.summary("min_residual", s.min_residual);
        rep.summary("min_proof_slack", s.min_proof_slack);
        rep.summary("max_ckw_defect", s.max_ckw_defect);
        rep.summary("max_small_lambda", s.max_small_lambda);
        rep.summary("violations", u(s.violations));
        violations = s.violations;
    } else {
        const CorollaryCampaign c = run_corollary_campaign(opt);
        rep.meta("decompositions", u(a.decompositions));
        rep.columns({{"index", "sample index"},
                     {"rank", "rank of the induced-measure state"},
                     {"pivot", "qubit X"},
                     {"h_xy", "harmony of the X,Y marginal"},
                     {"h_xz", "harmony of the X,Z marginal"},
                     {"lhs", "h_xy^2 + h_xz^2 (<= 1 + tolerance required)"},
                     {"decomposition_bound", "sampled upper bound on min sum_k p_k sqrt(H_X(YZ)); nan if not sampled"},
                     {"bound_nonincreasing", "running minimum never increased"}});
        if (!a.summary_only) {
            for (const CorollaryRow& r : c.rows) {
                rep.row({u(r.index), u(r.rank), u(r.pivot), r.h_xy, r.h_xz, r.lhs, r.decomposition_bound,
                         r.bound_nonincreasing});
            }
        }
        const CorollarySummary& s = c.summary;
        rep.summary("samples", u(s.samples));
        rep.summary("max_lhs", s.max_lhs);
        rep.summary("max_bound", s.max_bound);
        rep.summary("bounds_nonincreasing", s.bounds_nonincreasing);
        rep.summary("violations", u(s.violations));
        violations = s.violations;
    }
    emit(buf.str(), a.output, out);
    return violations == 0 ? exit_ok : exit_violation;
}

// --- verify-eof -----------------------------------------------------------

struct VerifyArgs {
    std::size_t trials = 50;
    std::size_t k = 8;
    std::size_t restarts = 20;
    std::size_t max_iters = 2000;
    std::uint64_t seed = 0;
    std::string input;
    std::size_t jobs = 1;
    bool base2 = false;
    std::string output;
};

constexpr double max_gap_allowed = 1e-3;
constexpr double max_undercut_allowed = 1e-6;

int cmd_verify_eof(const VerifyArgs& a, std::ostream& out) {
    if (a.trials < 1) throw UsageError("--trials must be at least 1");
    std::optional<DensityMatrix> fixed;
    if (!a.input.empty()) fixed = to_density_matrix(read_state_file(a.input));
    if (fixed && fixed->n_qubits() != 2) {
        throw DimensionError("2-qubit measure requires n_qubits=2, got n_qubits=" +
                             std::to_string(fixed->n_qubits()));
    }
    DecompositionSearchConfig base;
    base.k_states = a.k;
    base.restarts = a.restarts;
    base.max_iters = a.max_iters;
    base.seed = a.seed;

    std::vector<VerificationReport> reports(a.trials);
    parallel_for(a.trials, std::max<std::size_t>(1, a.jobs), [&](std::size_t i) {
        DecompositionSearchConfig cfg = base;
        cfg.stream = i;
        if (fixed) {
            reports[i] = eof_decomposition_search(*fixed, cfg);
        } else {
            Rng rng(a.seed, i);
            const std::size_t rank = 1 + rng.index(4);
            reports[i] = eof_decomposition_search(random_mixed(2, rank, rng), cfg);
        }
    });

    const double scale = a.base2 ? 1.0 / std::log(2.0) : 1.0;
    std::ostringstream buf;
    CsvReport rep(buf);
    rep.standard_meta("verify-eof", a.seed, default_tolerances, max_gap_allowed, a.base2);
    rep.meta("input", a.input.empty() ? std::string("random: trial i uses Rng(seed, i), rank uniform 1..4")
                                      : a.input);
    rep.meta("k_states", u(base.k_states));
    rep.meta("restarts", u(base.restarts));
    rep.meta("max_iters", u(base.max_iters));
    rep.meta("initial_step", base.initial_step);
    rep.meta("step_decay", base.step_decay);
    rep.meta("min_step", base.min_step);
    rep.meta("search_stream", std::string("trial i, restart r uses Rng(seed, i, r + 1)"));
    rep.meta("max_undercut_allowed", max_undercut_allowed);
    rep.columns({{"trial", "trial index"},
                 {"rank", "numerical rank of the state"},
                 {"closed_form_eof", "h((1 + sqrt(1 - C^2)) / 2)"},
                 {"searched_eof", "best decomposition average entropy found by the search"},
                 {"gap", "searched_eof - closed_form_eof"},
                 {"max_reconstruction_error", "max entry error of sum_k p_k |phi_k><phi_k| - rho over iterates"},
                 {"route_discrepancy", "max pairwise disagreement of the three disharmony routes"}});
    double max_gap = -std::numeric_limits<double>::infinity();
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.trials; ++i) {
        const VerificationReport& r = reports[i];
        rep.row({u(i), u(r.rank), r.closed_form_eof * scale, r.searched_eof * scale, r.gap * scale,
                 r.max_reconstruction_error, r.routes.max_discrepancy()});
        max_gap = std::max(max_gap, r.gap);
        min_gap = std::min(min_gap, r.gap);
    }
    const bool ok = max_gap <= max_gap_allowed && min_gap >= -max_undercut_allowed;
    rep.summary("trials", u(a.trials));
    rep.summary("max_gap", max_gap * scale);
    rep.summary("min_gap", min_gap * scale);
    rep.summary("passed", ok);
    emit(buf.str(), a.output, out);
    return ok ? exit_ok : exit_violation;
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
    std::size_t n = 1000;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
    std::string output;
};

constexpr double bench_route_tolerance = 1e-9;

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    if (a.repetitions < 3) throw UsageError("--repetitions must be at least 3");
    const BenchReport b = run_bench(a.n, RandomSpec{a.seed, 0, {EnsembleKind::InducedMixed, 0}}, a.repetitions);

    std::ostringstream buf;
    CsvReport rep(buf);
    rep.standard_meta("bench", a.seed, default_tolerances, bench_route_tolerance, false);
    rep.timestamp(b.timestamp);
    rep.meta("batch_size", u(b.batch_size));
    rep.meta("repetitions", u(b.repetitions));
    rep.meta("batch", std::string("state i uses Rng(seed, 0, i), rank uniform 1..4"));
    rep.columns({{"statistic", "mean, median or p95 over repetitions"},
                 {"polynomial_ns", "per-state wall time of the polynomial harmony route"},
                 {"eigenvalue_ns", "per-state wall time of concurrence from eigenvalues of rho rho~"},
                 {"hermitian_ns", "per-state wall time of concurrence from the Hermitian R matrix"}});
    rep.row({std::string("mean"), b.routes[0].mean_ns, b.routes[1].mean_ns, b.routes[2].mean_ns});
    rep.row({std::string("median"), b.routes[0].median_ns, b.routes[1].median_ns, b.routes[2].median_ns});
    rep.row({std::string("p95"), b.routes[0].p95_ns, b.routes[1].p95_ns, b.routes[2].p95_ns});
    rep.summary("checked_states", u(b.checked_states));
    rep.summary("correctness_max_discrepancy", b.correctness_max_discrepancy);
    rep.summary("polynomial_faster", b.polynomial_faster);
    emit(buf.str(), a.output, out);
    return b.correctness_max_discrepancy <= bench_route_tolerance ? exit_ok : exit_violation;
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
    std::string output;
    std::string bell_kind;
    std::string bits;
    std::vector<double> weights;
    double x = 0.0;
    std::size_t qubits = 2;
    std::size_t rank = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

BellKind parse_bell(const std::string& s) {
    for (BellKind k : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
        if (to_string(k) == s) return k;
    }
    throw UsageError("unknown Bell state " + s);
}

void write_state(const DensityMatrix& rho, std::string label, const std::string& path, std::ostream& out) {
    const StateFile f = make_state_file(rho, std::move(label));
    if (path.empty()) {
        out << serialize_state(f);
    } else {
        emit(serialize_state(f), path, out);
    }
}

std::string format_label(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

int cmd_gen(const std::string& which, const GenArgs& a, std::ostream& out) {
    if (which == "bell") {
        write_state(from_pure(bell_state(parse_bell(a.bell_kind))), "bell " + a.bell_kind, a.output, out);
    } else if (which == "ghz") {
        write_state(from_pure(ghz_state()), "ghz", a.output, out);
    } else if (which == "w") {
        write_state(from_pure(w_state()), "w", a.output, out);
    } else if (which == "basis") {
        if (a.bits.empty() || a.bits.size() > 3 ||
            a.bits.find_first_not_of("01") != std::string::npos) {
            throw UsageError("basis expects 1 to 3 binary digits, got \"" + a.bits + "\"");
        }
        write_state(from_pure(PureState::basis(a.bits)), "basis " + a.bits, a.output, out);
    } else if (which == "bell-diagonal") {
        std::array<double, 4> p{};
        std::copy(a.weights.begin(), a.weights.end(), p.begin());
        std::string label = "bell-diagonal";
        for (double w : p) label += " " + format_label(w);
        write_state(bell_diagonal(p), label, a.output, out);
    } else if (which == "nonconvexity") {
        if (a.output.empty()) throw UsageError("gen nonconvexity writes three files and needs --output <stem>");
        const NonconvexityFamily f = nonconvexity_family(a.x);
        const std::string x = format_label(a.x);
        write_state(f.rho_plus, "nonconvexity plus x=" + x, a.output + "_plus.json", out);
        write_state(f.rho_minus, "nonconvexity minus x=" + x, a.output + "_minus.json", out);
        write_state(f.mixture, "nonconvexity mixture x=" + x, a.output + "_mixture.json", out);
    } else {
        if (a.qubits < 1 || a.qubits > 3) throw UsageError("--qubits must be 1, 2 or 3");
        const std::size_t dim = std::size_t{1} << a.qubits;
        const std::size_t rank = a.rank == 0 ? dim : a.rank;
        const RandomSpec spec{a.seed, a.stream, {rank == 1 ? EnsembleKind::HaarPure : EnsembleKind::InducedMixed, rank}};
        const DensityMatrix rho =
            rank == 1 ? from_pure(random_pure(a.qubits, spec)) : random_mixed(a.qubits, rank, spec);
        write_state(rho,
                    "random qubits=" + std::to_string(a.qubits) + " rank=" + std::to_string(rank) +
                        " seed=" + std::to_string(a.seed) + " stream=" + std::to_string(a.stream),
                    a.output, out);
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-qubit harmony, concurrence and entanglement of formation toolkit", "harmony"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Measures of a 2-qubit state file");
    compute->add_option("--input,-i", compute_args.input, "State file (JSON)")->required();
    compute->add_option("--output,-o", compute_args.output, "Report path (default stdout)");
    compute->add_option("--measures", compute_args.measures, "Subset of measures")
        ->delimiter(',')
        ->check(CLI::IsMember(all_measures));
    compute->add_flag("--base2", compute_args.base2, "Report entropies in bits");
    compute->add_option("--tolerance", compute_args.tolerance, "Hermiticity, trace and PSD tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Monte Carlo property campaigns");
    sample->add_option("--n", sample_args.n, "Number of random states")->capture_default_str();
    sample->add_option("--qubits", sample_args.qubits, "2 for properties, 3 for monogamy and corollary");
    sample->add_option("--rank", sample_args.rank, "Fixed rank (0 draws it uniformly)")->capture_default_str();
    sample->add_option("--seed", sample_args.seed, "Master seed")->capture_default_str();
    sample->add_option("--check", sample_args.check, "Campaign")
        ->required()
        ->check(CLI::IsMember({"properties", "monogamy", "corollary"}));
    sample->add_option("--jobs,-j", sample_args.jobs, "Worker threads")->capture_default_str();
    sample->add_option("--tolerance", sample_args.tolerance, "Slack allowed on each inequality")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sample->add_option("--decompositions", sample_args.decompositions,
                       "Corollary only: random decompositions per state for the sampled bound")
        ->capture_default_str();
    sample->add_flag("--summary-only", sample_args.summary_only, "Omit per-sample rows");
    sample->add_option("--output,-o", sample_args.output, "Report path (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify-eof", "Closed-form EoF against a decomposition search");
    verify->add_option("--trials", verify_args.trials, "Number of states")->capture_default_str();
    verify->add_option("--k", verify_args.k, "Decomposition size K")->capture_default_str();
    verify->add_option("--restarts", verify_args.restarts, "Random restarts per state")->capture_default_str();
    verify->add_option("--max-iters", verify_args.max_iters, "Sweeps per restart")->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "Master seed")->capture_default_str();
    verify->add_option("--input,-i", verify_args.input, "Use this state for every trial");
    verify->add_option("--jobs,-j", verify_args.jobs, "Worker threads")->capture_default_str();
    verify->add_flag("--base2", verify_args.base2, "Report entropies in bits");
    verify->add_option("--output,-o", verify_args.output, "Report path (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the polynomial and eigenvalue routes");
    bench->add_option("--n", bench_args.n, "Batch size")->capture_default_str();
    bench->add_option("--repetitions", bench_args.repetitions, "Timed passes per route")->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "Seed of the batch")->capture_default_str();
    bench->add_option("--output,-o", bench_args.output, "Report path (default stdout)");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write named states as state files");
    gen->require_subcommand(1);
    gen->add_option("--output,-o", gen_args.output, "State path (default stdout)");
    auto* gen_bell = gen->add_subcommand("bell", "Bell state");
    gen_bell->add_option("kind", gen_args.bell_kind, "phi+, phi-, psi+ or psi-")
        ->required()
        ->check(CLI::IsMember({"phi+", "phi-", "psi+", "psi-"}));
    gen->add_subcommand("ghz", "3-qubit GHZ state");
    gen->add_subcommand("w", "3-qubit W state");
    auto* gen_basis = gen->add_subcommand("basis", "Computational basis state");
    gen_basis->add_option("bits", gen_args.bits, "e.g. 01")->required();
    auto* gen_diag = gen->add_subcommand("bell-diagonal", "Mixture of Bell states");
    gen_diag->add_option("weights", gen_args.weights, "p(phi+) p(phi-) p(psi+) p(psi-)")->required()->expected(4);
    auto* gen_nonconvex = gen->add_subcommand("nonconvexity", "Three-state nonconvexity family at x");
    gen_nonconvex->add_option("x", gen_args.x, "Parameter in [0, 1]")->required();
    auto* gen_random = gen->add_subcommand("random", "Random state");
    gen_random->add_option("--qubits", gen_args.qubits, "1 to 3")->capture_default_str();
    gen_random->add_option("--rank", gen_args.rank, "1 for Haar pure, 0 for full rank")->capture_default_str();
    gen_random->add_option("--seed", gen_args.seed)->capture_default_str();
    gen_random->add_option("--stream", gen_args.stream)->capture_default_str();
    for (auto* sub : gen->get_subcommands({})) {
        sub->add_option("--output,-o", gen_args.output, "State path (default stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_args, out);
        if (sample->parsed()) return cmd_sample(sample_args, out);
        if (verify->parsed()) return cmd_verify_eof(verify_args, out);
        if (bench->parsed()) return cmd_bench(bench_args, out);
        for (auto* sub : gen->get_subcommands({})) {
            if (sub->parsed()) return cmd_gen(sub->get_name(), gen_args, out);
        }
        err << "error: no command\n";
        return exit_usage;
    } catch (const std::exception& e) {
        const int code = exit_code_for(e);
        err << "error: " << e.what() << '\n';
        return code;
    }
}

}  // namespace harmony::cli

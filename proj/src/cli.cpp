#include "nwl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nwl/chsh.hpp"
#include "nwl/circuit.hpp"
#include "nwl/entanglement.hpp"
#include "nwl/nonlocal.hpp"
#include "nwl/states.hpp"
#include "nwl/vew.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nwl::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_double(const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw OutOfRange("grid entry is not a number: '" + token + "'");
    }
    if (used != token.size() || !std::isfinite(value))
        throw OutOfRange("grid entry is not a finite number: '" + token + "'");
    return value;
}

int sweep_threads() {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
    if (const char* env = std::getenv("NWL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            threads = static_cast<int>(v);
    }
    return threads;
#else
    return 1;
#endif
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    file << text;
    file.close();
    if (!file)
        throw Error("cannot write output file: " + out_path);
}

// Signed parity expectation of a four-entry outcome distribution, using the
// (+,-,-,+) sign convention shared with the Kraus sets.
double signed_expectation(const std::array<double, 4>& probs) {
    return probs[0] - probs[1] - probs[2] + probs[3];
}

MeterMarginals marginals_from_distribution(const std::vector<double>& dist) {
    MeterMarginals m{{0, 0, 0, 0}, {0, 0, 0, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            m.m1[i] += dist[4 * i + j];
            m.m2[j] += dist[4 * i + j];
        }
    }
    return m;
}

// ---- chsh-sweep ------------------------------------------------------------

struct ChshSweepOptions {
    std::string theta_spec;
    std::string phi_spec;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    bool exact = false;
    std::string format = "csv";
    std::string out;
};

struct ChshRow {
    double theta, phi, chsh_analytic, chsh_sampled, zz, xx, ppt, conc, square_error;
};

ChshRow chsh_point(double theta, double phi, const ChshSweepOptions& opt, std::uint64_t sub_seed) {
    const DensityMatrix rho = density_matrix(pure_system_state(theta, phi));
    ChshRow row{};
    row.theta = theta;
    row.phi = phi;
    row.chsh_analytic = chsh_expectation(rho);
    row.ppt = ppt_min_eigenvalue(rho);
    row.conc = concurrence(rho);

    const Circuit circuit = build_protocol_circuit(theta, phi);
    const MeterMarginals m =
        opt.exact ? marginals_from_distribution(exact_distribution(circuit))
                  : marginalize(sample_counts(circuit, opt.shots, sub_seed));
    row.zz = signed_expectation(m.m1);
    row.xx = signed_expectation(m.m2);
    row.chsh_sampled = -std::sqrt(2.0) * (row.zz + row.xx);
    row.square_error = (row.chsh_sampled - row.chsh_analytic) * (row.chsh_sampled - row.chsh_analytic);
    return row;
}

int cmd_chsh_sweep(const ChshSweepOptions& opt) {
    const std::vector<double> thetas =
        opt.theta_spec.empty() ? parse_grid("0:3.141592653589793:9") : parse_grid(opt.theta_spec);
    const std::vector<double> phis =
        opt.phi_spec.empty() ? parse_grid("0:2.356194490192345:4") : parse_grid(opt.phi_spec);

    const std::size_t n = thetas.size() * phis.size();
    std::vector<ChshRow> rows(n);
    const int threads = sweep_threads();
    (void)threads;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long k = 0; k < static_cast<long long>(n); ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        rows[i] = chsh_point(thetas[i / phis.size()], phis[i % phis.size()], opt,
                             opt.seed ^ static_cast<std::uint64_t>(i));
    }

    std::string text;
    if (opt.format == "csv") {
        text = "theta,phi,chsh_analytic,chsh_sampled,zz_sampled,xx_sampled,ppt,concurrence,"
               "square_error\n";
        for (const ChshRow& r : rows) {
            text += fmt_g(r.theta) + "," + fmt_g(r.phi) + "," + fmt_g(r.chsh_analytic) + "," +
                    fmt_g(r.chsh_sampled) + "," + fmt_g(r.zz) + "," + fmt_g(r.xx) + "," +
                    fmt_g(r.ppt) + "," + fmt_g(r.conc) + "," + fmt_g(r.square_error) + "\n";
        }
    } else {
        ordered_json doc;
        doc["command"] = "chsh-sweep";
        doc["shots"] = opt.shots;
        doc["seed"] = opt.seed;
        doc["exact"] = opt.exact;
        doc["rows"] = ordered_json::array();
        for (const ChshRow& r : rows) {
            ordered_json jr;
            jr["theta"] = r.theta;
            jr["phi"] = r.phi;
            jr["chsh_analytic"] = r.chsh_analytic;
            jr["chsh_sampled"] = r.chsh_sampled;
            jr["zz_sampled"] = r.zz;
            jr["xx_sampled"] = r.xx;
            jr["ppt"] = r.ppt;
            jr["concurrence"] = r.conc;
            jr["square_error"] = r.square_error;
            doc["rows"].push_back(std::move(jr));
        }
        text = doc.dump(2) + "\n";
    }
    write_output(text, opt.out);
    return 0;
}

// ---- werner-sweep ----------------------------------------------------------

struct WernerSweepOptions {
    std::string p_spec;
    std::string format = "csv";
    std::string out;
};

int cmd_werner_sweep(const WernerSweepOptions& opt) {
    const std::vector<double> ps =
        opt.p_spec.empty() ? parse_grid("0:1:21") : parse_grid(opt.p_spec);

    std::string csv = "p,chsh,ppt,concurrence,region,zz,xx,rho2_corner\n";
    ordered_json rows = ordered_json::array();
    for (double p : ps) {
        const DensityMatrix rho = werner_state(p); // validates the range
        const ProtocolResult res = run_protocol_analytic(rho);
        const double chsh = chsh_expectation(rho);
        const double ppt = ppt_min_eigenvalue(rho);
        const double conc = concurrence(rho);
        const char* region = werner_region_name(classify_werner(p).kind);
        const double corner = res.rho2.matrix()(0, 3).real();
        if (opt.format == "csv") {
            csv += fmt_g(p) + "," + fmt_g(chsh) + "," + fmt_g(ppt) + "," + fmt_g(conc) + "," +
                   region + "," + fmt_g(res.zz) + "," + fmt_g(res.xx) + "," + fmt_g(corner) +
                   "\n";
        } else {
            ordered_json jr;
            jr["p"] = p;
            jr["chsh"] = chsh;
            jr["ppt"] = ppt;
            jr["concurrence"] = conc;
            jr["region"] = region;
            jr["zz"] = res.zz;
            jr["xx"] = res.xx;
            jr["rho2_corner"] = corner;
            rows.push_back(std::move(jr));
        }
    }

    std::string text;
    if (opt.format == "csv") {
        text = std::move(csv);
    } else {
        ordered_json doc;
        doc["command"] = "werner-sweep";
        doc["rows"] = std::move(rows);
        text = doc.dump(2) + "\n";
    }
    write_output(text, opt.out);
    return 0;
}

// ---- circuit-run -----------------------------------------------------------

struct CircuitRunOptions {
    double theta = M_PI / 4;
    double phi = 0.0;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    bool exact = false;
    std::string out;
};

int cmd_circuit_run(const CircuitRunOptions& opt) {
    const Circuit circuit = build_protocol_circuit(opt.theta, opt.phi);
    const ProtocolResult analytic =
        run_protocol_analytic(density_matrix(pure_system_state(opt.theta, opt.phi)));

    ordered_json doc;
    doc["command"] = "circuit-run";
    doc["theta"] = opt.theta;
    doc["phi"] = opt.phi;
    doc["shots"] = opt.shots;
    doc["seed"] = opt.seed;
    doc["exact"] = opt.exact;

    MeterMarginals m{};
    if (opt.exact) {
        const std::vector<double> dist = exact_distribution(circuit);
        m = marginals_from_distribution(dist);
        doc["distribution"] = dist;
    } else {
        const OutcomeCounts counts = sample_counts(circuit, opt.shots, opt.seed);
        m = marginalize(counts);
        ordered_json jc;
        for (const auto& [key, value] : counts.counts)
            jc[key] = value;
        doc["counts"] = std::move(jc);
    }
    doc["m1"] = m.m1;
    doc["m2"] = m.m2;
    doc["zz"] = signed_expectation(m.m1);
    doc["xx"] = signed_expectation(m.m2);
    doc["zz_analytic"] = analytic.zz;
    doc["xx_analytic"] = analytic.xx;

    write_output(doc.dump(2) + "\n", opt.out);
    return 0;
}

// ---- vew-train -------------------------------------------------------------

struct VewTrainOptions {
    std::string family = "chsh";
    double theta = M_PI / 4;
    double phi = 0.0;
    double werner_p = -1.0; // < 0 means "pure-family state"
    std::string refs = "basis";
    std::string start_spec;
    std::uint64_t max_evals = 2000;
    double tol = 1e-6;
    double penalty_weight = 10.0;
    double norm_cap = std::sqrt(2.0);
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_vew_train(const VewTrainOptions& opt) {
    const bool pure = opt.werner_p < 0.0;
    const DensityMatrix rho = pure ? density_matrix(pure_system_state(opt.theta, opt.phi))
                                   : werner_state(opt.werner_p);
    const WitnessFamily family =
        opt.family == "chsh" ? WitnessFamily::ChshForm : WitnessFamily::PauliForm;
    const std::vector<DensityMatrix> refs =
        opt.refs == "basis" ? computational_basis_refs() : werner_refs();

    TrainConfig cfg;
    if (!opt.start_spec.empty())
        cfg.initial_alpha = parse_grid(opt.start_spec);
    cfg.max_evals = opt.max_evals;
    cfg.tol = opt.tol;
    cfg.penalty_weight = opt.penalty_weight;
    cfg.norm_cap = opt.norm_cap;
    cfg.seed = opt.seed;

    const TrainResult result = train(rho, family, refs, cfg);

    ordered_json doc;
    doc["command"] = "vew-train";
    doc["family"] = opt.family;
    if (pure)
        doc["state"] = {{"kind", "pure"}, {"theta", opt.theta}, {"phi", opt.phi}};
    else
        doc["state"] = {{"kind", "werner"}, {"p", opt.werner_p}};
    doc["refs"] = opt.refs;
    doc["alpha"] = result.params.alpha;
    doc["witness_value"] = result.witness_value;
    doc["constraint_residuals"] = result.constraint_residuals;
    doc["evals_used"] = result.evals_used;
    doc["detected"] = result.witness_value < -1e-3;

    write_output(doc.dump(2) + "\n", opt.out);
    return 0;
}

// ---- tomography ------------------------------------------------------------

struct TomographyOptions {
    double theta = M_PI / 4;
    double phi = 0.0;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    bool exact = false;
    bool project = false;
    std::string out;
};

void append_basis_rotation(Circuit& c, char basis, std::size_t q) {
    if (basis == 'X') {
        c.h(q);
    } else if (basis == 'Y') {
        c.sdg(q);
        c.h(q);
    } // Z: computational basis already
}

// Signed expectations of the system bits (positions 4 and 5 of the readout
// string: the meters occupy positions 0-3).
struct SettingStats {
    double pair = 0.0;   // <a x b>
    double first = 0.0;  // <a x I>
    double second = 0.0; // <I x b>
};

SettingStats accumulate_setting(const std::map<std::string, double>& freqs) {
    SettingStats s;
    for (const auto& [key, f] : freqs) {
        const double sa = key[4] == '1' ? -1.0 : 1.0;
        const double sb = key[5] == '1' ? -1.0 : 1.0;
        s.pair += sa * sb * f;
        s.first += sa * f;
        s.second += sb * f;
    }
    return s;
}

ordered_json matrix_part(const ComplexMatrix& m, bool imaginary) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_tomography(const TomographyOptions& opt) {
    static const char bases[3] = {'X', 'Y', 'Z'};
    double pair_exp[3][3];
    double first_exp[3] = {0, 0, 0};
    double second_exp[3] = {0, 0, 0};
    ordered_json settings = ordered_json::array();

    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            const std::size_t setting = 3 * a + b;
            settings.push_back(std::string{bases[a], bases[b]});

            Circuit circuit = build_protocol_circuit(opt.theta, opt.phi);
            append_basis_rotation(circuit, bases[a], 0);
            append_basis_rotation(circuit, bases[b], 1);
            circuit.measure({2, 3, 4, 5, 0, 1});

            std::map<std::string, double> freqs;
            if (opt.exact) {
                const std::vector<double> dist = exact_distribution(circuit);
                for (std::size_t i = 0; i < dist.size(); ++i)
                    freqs[outcome_string(i, 6)] = dist[i];
            } else {
                const OutcomeCounts counts = sample_counts(
                    circuit, opt.shots, opt.seed ^ static_cast<std::uint64_t>(setting));
                for (const auto& [key, value] : counts.counts)
                    freqs[key] = static_cast<double>(value) / static_cast<double>(opt.shots);
            }

            const SettingStats stats = accumulate_setting(freqs);
            pair_exp[a][b] = stats.pair;
            // Every setting sharing this one-qubit basis measures the same
            // single-qubit observable; average the three estimates.
            first_exp[a] += stats.first / 3.0;
            second_exp[b] += stats.second / 3.0;
        }
    }

    const ComplexMatrix* sigma[3] = {&ops::pauli_x(), &ops::pauli_y(), &ops::pauli_z()};
    ComplexMatrix estimate = 0.25 * ComplexMatrix::identity(4);
    for (std::size_t a = 0; a < 3; ++a) {
        estimate += (0.25 * first_exp[a]) * tensor_product(*sigma[a], ops::pauli_i());
        estimate += (0.25 * second_exp[a]) * tensor_product(ops::pauli_i(), *sigma[a]);
        for (std::size_t b = 0; b < 3; ++b)
            estimate += (0.25 * pair_exp[a][b]) * tensor_product(*sigma[a], *sigma[b]);
    }

    if (opt.project) {
        // Clip negative eigenvalues and renormalise: shot noise routinely
        // pushes the linear-inversion estimate slightly outside the physical
        // set.
        const EigenSystem sys = hermitian_eigensystem(estimate);
        ComplexMatrix projected(4, 4);
        double total = 0.0;
        for (double v : sys.values)
            total += std::max(v, 0.0);
        for (std::size_t k = 0; k < 4; ++k) {
            const double w = std::max(sys.values[k], 0.0) / total;
            if (w == 0.0)
                continue;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    projected(i, j) += w * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
        }
        estimate = std::move(projected);
    }

    const DensityMatrix reference =
        run_protocol_analytic(density_matrix(pure_system_state(opt.theta, opt.phi))).rho2;
    const double max_abs_error = estimate.max_abs_diff(reference.matrix());

    ordered_json doc;
    doc["command"] = "tomography";
    doc["theta"] = opt.theta;
    doc["phi"] = opt.phi;
    doc["shots"] = opt.shots;
    doc["seed"] = opt.seed;
    doc["exact"] = opt.exact;
    doc["project"] = opt.project;
    doc["settings"] = std::move(settings);
    ordered_json pairs;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            pairs[std::string{bases[a], bases[b]}] = pair_exp[a][b];
    doc["pair_expectations"] = std::move(pairs);
    ordered_json singles;
    for (std::size_t a = 0; a < 3; ++a)
        singles[std::string{bases[a], 'I'}] = first_exp[a];
    for (std::size_t b = 0; b < 3; ++b)
        singles[std::string{'I', bases[b]}] = second_exp[b];
    doc["single_expectations"] = std::move(singles);
    doc["rho2_re"] = matrix_part(estimate, false);
    doc["rho2_im"] = matrix_part(estimate, true);
    doc["reference_re"] = matrix_part(reference.matrix(), false);
    doc["reference_im"] = matrix_part(reference.matrix(), true);
    doc["max_abs_error"] = max_abs_error;

    write_output(doc.dump(2) + "\n", opt.out);
    return 0;
}

} // namespace

std::vector<double> parse_grid(const std::string& spec) {
    if (spec.empty())
        throw OutOfRange("empty grid specification");

    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            const std::size_t next = spec.find(':', pos);
            parts.push_back(spec.substr(pos, next - pos));
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        if (parts.size() != 3)
            throw OutOfRange("linspace grid needs exactly start:stop:count");
        const double start = parse_double(parts[0]);
        const double stop = parse_double(parts[1]);
        const double count_raw = parse_double(parts[2]);
        if (count_raw < 1 || count_raw != std::floor(count_raw) || count_raw > 1e6)
            throw OutOfRange("grid count must be a positive integer");
        const std::size_t count = static_cast<std::size_t>(count_raw);
        std::vector<double> grid(count);
        if (count == 1) {
            grid[0] = start;
        } else {
            for (std::size_t i = 0; i < count; ++i)
                grid[i] = start + (stop - start) * static_cast<double>(i) /
                                      static_cast<double>(count - 1);
        }
        return grid;
    }

    std::vector<double> grid;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = spec.find(',', pos);
        grid.push_back(parse_double(spec.substr(pos, next - pos)));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return grid;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"entanglement detection and protection toolkit"};
    app.require_subcommand(1);

    int code = 0;

    ChshSweepOptions chsh_opt;
    CLI::App* chsh = app.add_subcommand(
        "chsh-sweep", "Bell-correlation sweep over the pure two-parameter family");
    chsh->add_option("--theta", chsh_opt.theta_spec,
                     "theta grid, start:stop:count or comma list (default 0:pi:9)");
    chsh->add_option("--phi", chsh_opt.phi_spec,
                     "phi grid, start:stop:count or comma list (default 0:3pi/4:4)");
    chsh->add_option("--shots", chsh_opt.shots, "shots per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    chsh->add_option("--seed", chsh_opt.seed, "base RNG seed; point i uses seed^i")
        ->capture_default_str();
    chsh->add_flag("--exact", chsh_opt.exact, "use exact probabilities instead of sampling");
    chsh->add_option("--format", chsh_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    chsh->add_option("--out", chsh_opt.out, "write to a file instead of stdout");
    chsh->callback([&] { code = cmd_chsh_sweep(chsh_opt); });

    WernerSweepOptions werner_opt;
    CLI::App* werner =
        app.add_subcommand("werner-sweep", "closed-form diagnostics for Werner mixtures");
    werner->add_option("--p", werner_opt.p_spec,
                       "mixing-parameter grid, start:stop:count or comma list (default 0:1:21)");
    werner->add_option("--format", werner_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    werner->add_option("--out", werner_opt.out, "write to a file instead of stdout");
    werner->callback([&] { code = cmd_werner_sweep(werner_opt); });

    CircuitRunOptions run_opt;
    CLI::App* crun = app.add_subcommand("circuit-run", "simulate the six-qubit meter circuit");
    crun->add_option("--theta", run_opt.theta, "state angle")->capture_default_str();
    crun->add_option("--phi", run_opt.phi, "state phase")->capture_default_str();
    crun->add_option("--shots", run_opt.shots, "number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    crun->add_option("--seed", run_opt.seed, "RNG seed")->capture_default_str();
    crun->add_flag("--exact", run_opt.exact, "emit the exact distribution, no sampling");
    std::string crun_format = "json";
    crun->add_option("--format", crun_format, "output format (json only)")
        ->check(CLI::IsMember({"json"}));
    crun->add_option("--out", run_opt.out, "write to a file instead of stdout");
    crun->callback([&] { code = cmd_circuit_run(run_opt); });

    VewTrainOptions vew_opt;
    CLI::App* vew =
        app.add_subcommand("vew-train", "train a variational witness against a target state");
    vew->add_option("--family", vew_opt.family, "witness family")
        ->check(CLI::IsMember({"chsh", "pauli"}))
        ->capture_default_str();
    CLI::Option* vtheta =
        vew->add_option("--theta", vew_opt.theta, "pure-state angle")->capture_default_str();
    CLI::Option* vphi =
        vew->add_option("--phi", vew_opt.phi, "pure-state phase")->capture_default_str();
    vew->add_option("--werner", vew_opt.werner_p, "target a Werner state instead")
        ->check(CLI::Range(0.0, 1.0))
        ->excludes(vtheta)
        ->excludes(vphi);
    vew->add_option("--refs", vew_opt.refs, "separable reference set")
        ->check(CLI::IsMember({"basis", "werner"}))
        ->capture_default_str();
    vew->add_option("--start", vew_opt.start_spec, "initial coefficients, comma list");
    vew->add_option("--max-evals", vew_opt.max_evals, "objective evaluation budget")
        ->capture_default_str();
    vew->add_option("--tol", vew_opt.tol, "trust-region stopping radius")
        ->capture_default_str();
    vew->add_option("--penalty-weight", vew_opt.penalty_weight, "constraint penalty weight")
        ->capture_default_str();
    vew->add_option("--norm-cap", vew_opt.norm_cap, "coefficient norm cap")
        ->capture_default_str();
    vew->add_option("--seed", vew_opt.seed, "seed for the random start")->capture_default_str();
    std::string vew_format = "json";
    vew->add_option("--format", vew_format, "output format (json only)")
        ->check(CLI::IsMember({"json"}));
    vew->add_option("--out", vew_opt.out, "write to a file instead of stdout");
    vew->callback([&] { code = cmd_vew_train(vew_opt); });

    TomographyOptions tomo_opt;
    CLI::App* tomo = app.add_subcommand(
        "tomography", "reconstruct the post-circuit system state from nine Pauli settings");
    tomo->add_option("--theta", tomo_opt.theta, "state angle")->capture_default_str();
    tomo->add_option("--phi", tomo_opt.phi, "state phase")->capture_default_str();
    tomo->add_option("--shots", tomo_opt.shots, "shots per setting")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    tomo->add_option("--seed", tomo_opt.seed, "base RNG seed; setting i uses seed^i")
        ->capture_default_str();
    tomo->add_flag("--exact", tomo_opt.exact, "use exact probabilities instead of sampling");
    tomo->add_flag("--project", tomo_opt.project,
                   "project the estimate onto the physical set");
    std::string tomo_format = "json";
    tomo->add_option("--format", tomo_format, "output format (json only)")
        ->check(CLI::IsMember({"json"}));
    tomo->add_option("--out", tomo_opt.out, "write to a file instead of stdout");
    tomo->callback([&] { code = cmd_tomography(tomo_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends: prints and returns 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

} // namespace nwl::cli

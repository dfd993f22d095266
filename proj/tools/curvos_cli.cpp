// curvos: command-line front end for the curved-space oscillator library.
//
// Subcommands: spectrum, potential, residual, transform-check, oracle,
// sectors. Table commands emit CSV (or JSON with --format json); report
// commands (residual, sectors) always emit JSON. All output is a pure
// function of the flags, so repeated runs are byte-identical.
//
// Exit codes: 0 success, 2 usage or validation error, 3 verdict failure
// under --strict, 4 eigensolver convergence failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvos/crs.hpp"
#include "curvos/higgs.hpp"
#include "curvos/model.hpp"
#include "curvos/oracle.hpp"
#include "curvos/quasi_exact.hpp"
#include "curvos/transform.hpp"

using nlohmann::ordered_json;
using namespace curvos;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1)
            out += ' ';
        out += argv[i];
    }
    return out;
}

struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;
    void open(const std::string& path) {
        if (path.empty())
            return;
        file.open(path);
        if (!file)
            throw DomainError("cannot open output file: " + path);
        out = &file;
    }
    std::ostream& stream() { return *out; }
};

std::vector<int> parse_range(const std::string& text) {
    int lo = 0, hi = 0;
    if (std::sscanf(text.c_str(), "%d:%d", &lo, &hi) != 2 || lo > hi)
        throw CLI::ValidationError("--m-g-range", "expected lo:hi with lo <= hi");
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m)
        out.push_back(m);
    return out;
}

LeftBoundary parse_boundary(const std::string& name) {
    if (name == "auto")
        return LeftBoundary::Auto;
    if (name == "dirichlet")
        return LeftBoundary::Dirichlet;
    if (name == "zero-flux")
        return LeftBoundary::ZeroFlux;
    throw CLI::ValidationError("--left", "expected auto, dirichlet or zero-flux");
}

ordered_json grid_json(int points, double lo, double hi) {
    ordered_json g;
    g["points"] = points;
    g["lo"] = lo;
    g["hi"] = hi;
    return g;
}

std::string verdict_of(double residual) {
    if (residual < 1e-5)
        return "solvable";
    if (residual > 1e-2)
        return "not-solvable";
    return "ambiguous";
}

// Radial potential for a model name, or the line machinery for crs-harmonic.
RadialPotential model_potential(const std::string& model,
                                const PhysicalParameters& p, double m_q,
                                double beta) {
    if (model == "higgs-harmonic" || model == "eg1")
        return harmonic_radial_potential(p);
    if (model == "eg2")
        return build_example_two(p, beta, m_q).potential;
    if (model == "crs-harmonic") {
        // Radial image; with matched deformation this is the flat spring.
        const CoordinateMap map{p.lambda};
        return map_potential_to_radial(crs_harmonic_potential_view(p, m_q), p,
                                       m_q, map);
    }
    throw DomainError("unknown model: " + model);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curved-space oscillator toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("curvos ") + kVersion);

    double mass = 1.0, hbar = 1.0, omega = 1.0, lambda = 1.0;
    std::string output, format = "csv";
    app.add_option("--mass", mass, "particle mass")->capture_default_str();
    app.add_option("--hbar", hbar, "Planck constant")->capture_default_str();
    app.add_option("--omega", omega, "oscillator frequency")->capture_default_str();
    app.add_option("--lambda", lambda, "curvature parameter")->capture_default_str();
    app.add_option("-o,--output", output, "write to file instead of stdout");
    app.add_option("--format", format, "csv or json for table commands")
        ->check(CLI::IsMember({"csv", "json"}));

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "energy levels table");
    int sp_nmax = 3, sp_mmax = 2;
    cmd_spectrum->add_option("--n-max", sp_nmax, "highest radial label")
        ->capture_default_str();
    cmd_spectrum->add_option("--m-max", sp_mmax, "highest |m|")
        ->capture_default_str();

    // potential
    auto* cmd_potential = app.add_subcommand("potential", "potential profile");
    std::string pot_model = "higgs-harmonic";
    double pot_mq = 0.0, pot_beta = 3.0, pot_rmin = 0.0, pot_rmax = 0.0;
    int pot_points = 200;
    cmd_potential->add_option("--model", pot_model)
        ->check(CLI::IsMember({"higgs-harmonic", "crs-harmonic", "eg1", "eg2"}))
        ->capture_default_str();
    cmd_potential->add_option("--m-q", pot_mq, "deformation parameter")
        ->capture_default_str();
    cmd_potential->add_option("--beta", pot_beta, "eg2 coupling")
        ->capture_default_str();
    auto* opt_rmin = cmd_potential->add_option("--r-min", pot_rmin);
    auto* opt_rmax = cmd_potential->add_option("--r-max", pot_rmax);
    cmd_potential->add_option("--points", pot_points)->capture_default_str();

    // residual
    auto* cmd_residual = app.add_subcommand("residual", "state residual report");
    std::string res_model = "higgs-harmonic";
    int res_n = 0, res_mg = 0, res_points = 200;
    double res_mq = 0.0, res_beta = 3.0;
    bool res_strict = false;
    cmd_residual->add_option("--model", res_model)
        ->check(CLI::IsMember({"higgs-harmonic", "crs-harmonic", "eg1", "eg2"}))
        ->capture_default_str();
    cmd_residual->add_option("--n", res_n, "radial label")->capture_default_str();
    cmd_residual->add_option("--m-q", res_mq, "deformation / state label")
        ->capture_default_str();
    auto* opt_res_mg =
        cmd_residual->add_option("--m-g", res_mg, "sector to evaluate in");
    cmd_residual->add_option("--beta", res_beta, "eg2 coupling")
        ->capture_default_str();
    cmd_residual->add_option("--grid-points", res_points)->capture_default_str();
    cmd_residual->add_flag("--strict", res_strict,
                           "exit 3 unless the verdict is solvable");

    // transform-check
    auto* cmd_transform =
        app.add_subcommand("transform-check", "coordinate map identities");
    double tr_rmin = 1e-3, tr_rmax = 1e3;
    int tr_points = 601;
    cmd_transform->add_option("--r-min", tr_rmin)->capture_default_str();
    cmd_transform->add_option("--r-max", tr_rmax)->capture_default_str();
    cmd_transform->add_option("--points", tr_points)->capture_default_str();

    // oracle
    auto* cmd_oracle =
        app.add_subcommand("oracle", "grid eigenvalues vs the level formula");
    std::string or_model = "higgs-harmonic", or_range = "0:2", or_left = "auto";
    int or_num = 3, or_points = 2000;
    double or_umin = 2e-4, or_umax = 1.5697, or_mq = 0.0, or_beta = 3.0;
    cmd_oracle->add_option("--model", or_model)
        ->check(CLI::IsMember({"higgs-harmonic", "crs-harmonic", "eg1", "eg2"}))
        ->capture_default_str();
    cmd_oracle->add_option("--m-g-range", or_range, "sectors lo:hi")
        ->capture_default_str();
    cmd_oracle->add_option("--num", or_num, "eigenvalues per sector")
        ->capture_default_str();
    cmd_oracle->add_option("--points", or_points)->capture_default_str();
    cmd_oracle->add_option("--u-min", or_umin)->capture_default_str();
    cmd_oracle->add_option("--u-max", or_umax)->capture_default_str();
    cmd_oracle->add_option("--left", or_left, "auto, dirichlet or zero-flux")
        ->capture_default_str();
    cmd_oracle->add_option("--m-q", or_mq)->capture_default_str();
    cmd_oracle->add_option("--beta", or_beta)->capture_default_str();

    // sectors
    auto* cmd_sectors =
        app.add_subcommand("sectors", "sector sweep for a quasi-exact model");
    std::string sec_model = "eg1", sec_range = "-1:1";
    int sec_nmax = 2, sec_points = 200, sec_oracle_points = 2000;
    double sec_mq = 0.0, sec_beta = 3.0;
    cmd_sectors->add_option("--model", sec_model)
        ->check(CLI::IsMember({"eg1", "eg2"}))
        ->capture_default_str();
    cmd_sectors->add_option("--m-g-range", sec_range)->capture_default_str();
    cmd_sectors->add_option("--n-max", sec_nmax, "eg1 ladder height")
        ->capture_default_str();
    cmd_sectors->add_option("--m-q", sec_mq)->capture_default_str();
    cmd_sectors->add_option("--beta", sec_beta)->capture_default_str();
    cmd_sectors->add_option("--grid-points", sec_points)->capture_default_str();
    cmd_sectors->add_option("--oracle-points", sec_oracle_points)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string meta =
        std::string("# curvos ") + kVersion + " " + join_args(argc, argv);

    try {
        const PhysicalParameters p =
            PhysicalParameters::create(mass, hbar, omega, lambda);
        Sink sink;
        sink.open(output);
        std::ostream& os = sink.stream();

        if (*cmd_spectrum) {
            if (sp_nmax < 0 || sp_mmax < 0)
                throw DomainError("spectrum: labels must be nonnegative");
            if (format == "csv") {
                os << meta << "\n" << "N,m,n,energy\n";
                for (int N = 0; N <= sp_nmax; ++N)
                    for (int m = -sp_mmax; m <= sp_mmax; ++m)
                        os << N << ',' << m << ',' << principal_number(N, m)
                           << ',' << fmt12(energy_level(p, N, m)) << "\n";
            } else {
                ordered_json rows = ordered_json::array();
                for (int N = 0; N <= sp_nmax; ++N)
                    for (int m = -sp_mmax; m <= sp_mmax; ++m) {
                        ordered_json row;
                        row["N"] = N;
                        row["m"] = m;
                        row["n"] = principal_number(N, m);
                        row["energy"] = energy_level(p, N, m);
                        rows.push_back(row);
                    }
                ordered_json doc;
                doc["meta"] = meta.substr(2);
                doc["levels"] = rows;
                os << doc.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_potential) {
            const bool line_model = pot_model == "crs-harmonic";
            double lo = pot_rmin, hi = pot_rmax;
            if (!*opt_rmin)
                lo = line_model ? 0.1 / std::sqrt(lambda) : 0.1;
            if (!*opt_rmax)
                hi = line_model ? 2.2 / std::sqrt(lambda) : 10.0;
            if (!(lo > 0.0) || !(hi > lo) || pot_points < 2)
                throw DomainError("potential: bad range request");

            std::vector<std::pair<double, double>> rows;
            for (int i = 0; i < pot_points; ++i) {
                const double r = lo + (hi - lo) * i / (pot_points - 1.0);
                double v;
                if (line_model)
                    v = crs_harmonic_potential(p, pot_mq, r);
                else
                    v = model_potential(pot_model, p, pot_mq, pot_beta).evaluate(r);
                rows.push_back({r, v});
            }
            if (format == "csv") {
                os << meta << "\n" << "r,V\n";
                for (auto [r, v] : rows)
                    os << fmt12(r) << ',' << fmt12(v) << "\n";
            } else {
                ordered_json arr = ordered_json::array();
                for (auto [r, v] : rows) {
                    ordered_json row;
                    row["r"] = r;
                    row["V"] = v;
                    arr.push_back(row);
                }
                ordered_json doc;
                doc["meta"] = meta.substr(2);
                doc["model"] = pot_model;
                doc["samples"] = arr;
                os << doc.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_residual) {
            if (res_points < 2)
                throw DomainError("residual: grid needs >= 2 points");
            double energy = 0.0, residual = 0.0, lo = 0.0, hi = 0.0;
            int report_n = res_n, sector = 0;

            if (res_model == "crs-harmonic") {
                const int mq = static_cast<int>(std::lround(res_mq));
                sector = mq;
                const CrsState st = crs_eigenfunction(p, res_n, mq);
                energy = st.energy;
                std::vector<double> grid(res_points);
                for (int i = 0; i < res_points; ++i)
                    grid[i] = std::sinh(0.1 + 1.3 * i / (res_points - 1.0)) /
                              std::sqrt(lambda);
                lo = grid.front();
                hi = grid.back();
                auto V = [&p, mq](double x) {
                    return crs_harmonic_potential(p, mq, x);
                };
                const double step = 1e-4 * (hi - lo);
                double worst = 0.0, denom = 0.0;
                for (double x : grid) {
                    const double target = st.energy * st.wavefunction(x);
                    worst = std::max(worst,
                                     std::abs(apply_crs_operator(
                                                  V, p, st.wavefunction, x, step) -
                                              target));
                    denom = std::max(denom, std::abs(target));
                }
                residual = worst / denom;
            } else {
                RadialPotential V;
                std::function<double(double)> psi;
                if (res_model == "eg2") {
                    const QuasiExactModel model =
                        build_example_two(p, res_beta, res_mq);
                    V = model.potential;
                    const KnownState& ks = model.known_states.front();
                    psi = ks.state.wavefunction;
                    energy = ks.state.energy;
                    report_n = 0;
                    sector = *opt_res_mg ? res_mg : ks.sector;
                } else {
                    V = harmonic_radial_potential(p);
                    const int home = res_model == "eg1"
                                         ? static_cast<int>(std::lround(res_mq))
                                         : res_mg;
                    const RadialState st = higgs_wavefunction(p, res_n, home);
                    psi = st.wavefunction;
                    energy = st.energy;
                    sector = *opt_res_mg ? res_mg : home;
                }
                const auto grid =
                    radial_grid_from_upsilon(lambda, 0.1, 1.4, res_points);
                lo = grid.front();
                hi = grid.back();
                residual = residual_norm(V, p, sector, psi, energy, grid);
            }

            ordered_json doc;
            doc["meta"] = meta.substr(2);
            doc["model"] = res_model;
            doc["sector"] = sector;
            doc["N"] = report_n;
            doc["energy"] = energy;
            doc["residual"] = residual;
            doc["grid"] = grid_json(res_points, lo, hi);
            doc["verdict"] = verdict_of(residual);
            os << doc.dump(2) << "\n";
            if (res_strict && doc["verdict"] != "solvable")
                return 3;
            return 0;
        }

        if (*cmd_transform) {
            if (!(tr_rmin > 0.0) || !(tr_rmax > tr_rmin) || tr_points < 2)
                throw DomainError("transform-check: bad range request");
            const CoordinateMap map{lambda};
            double d_angle = 0.0, d_round = 0.0, d_line = 0.0;
            const double llo = std::log10(tr_rmin), lhi = std::log10(tr_rmax);
            for (int i = 0; i < tr_points; ++i) {
                const double r =
                    std::pow(10.0, llo + (lhi - llo) * i / (tr_points - 1.0));
                d_angle = std::max(d_angle,
                                   std::abs(map.theta_of_x(map.x_of_r(r)) -
                                            map.upsilon_of_r(r)));
                d_round = std::max(
                    d_round, std::abs(map.r_of_x(map.x_of_r(r)) / r - 1.0));
            }
            const double x_end =
                std::sinh(std::numbers::pi / 2.0) / std::sqrt(lambda);
            for (int i = 0; i < tr_points; ++i) {
                const double x =
                    std::pow(10.0, std::log10(1e-3 / std::sqrt(lambda)) +
                                       (std::log10(0.99 * x_end) -
                                        std::log10(1e-3 / std::sqrt(lambda))) *
                                           i / (tr_points - 1.0));
                d_line = std::max(d_line,
                                  std::abs(map.x_of_r(map.r_of_x(x)) / x - 1.0));
            }
            const double gap = std::abs(map.x_of_r(1e6 / std::sqrt(lambda)) - x_end);

            if (format == "csv") {
                os << meta << "\n" << "check,max_deviation\n";
                os << "angle_identity," << fmt12(d_angle) << "\n";
                os << "radius_roundtrip," << fmt12(d_round) << "\n";
                os << "line_roundtrip," << fmt12(d_line) << "\n";
                os << "edge_gap_r1e6," << fmt12(gap) << "\n";
            } else {
                ordered_json doc;
                doc["meta"] = meta.substr(2);
                doc["angle_identity"] = d_angle;
                doc["radius_roundtrip"] = d_round;
                doc["line_roundtrip"] = d_line;
                doc["edge_gap_r1e6"] = gap;
                os << doc.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_oracle) {
            const std::vector<int> sectors = parse_range(or_range);
            OracleConfig config;
            config.grid_points = or_points;
            config.upsilon_min = or_umin;
            config.upsilon_max = or_umax;
            config.num_eigenvalues = or_num;
            config.left_boundary = parse_boundary(or_left);

            const RadialPotential V = model_potential(or_model, p, or_mq, or_beta);
            const bool harmonic_like = or_model != "eg2";
            const int eg2_home = static_cast<int>(std::lround(or_mq));
            const double eg2_energy = hbar * hbar * or_beta / (2.0 * mass);

            struct Row {
                int sector, index;
                double eigenvalue;
                std::optional<double> formula, rel;
            };
            std::vector<Row> rows;
            for (int mg : sectors) {
                const OracleResult res =
                    lowest_eigenvalues(discretize(V, p, mg, config), or_num);
                for (int i = 0; i < or_num; ++i) {
                    Row row{mg, i, res.eigenvalues[i], std::nullopt, std::nullopt};
                    if (harmonic_like)
                        row.formula = energy_level(p, i, mg);
                    else if (mg == eg2_home && i == 0)
                        row.formula = eg2_energy;
                    if (row.formula)
                        row.rel = std::abs(row.eigenvalue - *row.formula) /
                                  std::abs(*row.formula);
                    rows.push_back(row);
                }
            }

            if (format == "csv") {
                os << meta << "\n"
                   << "sector,index,eigenvalue,formula_value,rel_diff\n";
                for (const Row& row : rows) {
                    os << row.sector << ',' << row.index << ','
                       << fmt12(row.eigenvalue) << ',';
                    if (row.formula)
                        os << fmt12(*row.formula);
                    os << ',';
                    if (row.rel)
                        os << fmt12(*row.rel);
                    os << "\n";
                }
            } else {
                ordered_json arr = ordered_json::array();
                for (const Row& row : rows) {
                    ordered_json j;
                    j["sector"] = row.sector;
                    j["index"] = row.index;
                    j["eigenvalue"] = row.eigenvalue;
                    j["formula_value"] =
                        row.formula ? ordered_json(*row.formula) : ordered_json();
                    j["rel_diff"] =
                        row.rel ? ordered_json(*row.rel) : ordered_json();
                    arr.push_back(j);
                }
                ordered_json doc;
                doc["meta"] = meta.substr(2);
                doc["model"] = or_model;
                doc["rows"] = arr;
                os << doc.dump(2) << "\n";
            }
            return 0;
        }

        if (*cmd_sectors) {
            const std::vector<int> range = parse_range(sec_range);
            QuasiExactModel model =
                sec_model == "eg1"
                    ? build_example_one(p, static_cast<int>(std::lround(sec_mq)),
                                        sec_nmax)
                    : build_example_two(p, sec_beta, sec_mq);
            OracleConfig config;
            config.grid_points = sec_oracle_points;
            const auto grid =
                radial_grid_from_upsilon(lambda, 0.1, 1.4, sec_points);
            const SectorReport report = sector_report(model, range, grid, config);

            ordered_json sectors_json = ordered_json::array();
            for (const SectorEntry& entry : report.sectors) {
                ordered_json ej;
                ej["m_g"] = entry.m_g;
                ej["oracle_eigenvalues"] = entry.oracle_eigenvalues;
                ej["oracle_convergence"] = entry.oracle_convergence;
                ordered_json states = ordered_json::array();
                for (const StateCheck& check : entry.states) {
                    ordered_json sj;
                    sj["home_sector"] = check.home_sector;
                    sj["N"] = check.n_radial;
                    sj["energy"] = check.energy;
                    sj["residual"] = check.residual;
                    sj["verdict"] = verdict_name(check.verdict);
                    states.push_back(sj);
                }
                ej["states"] = states;
                sectors_json.push_back(ej);
            }
            ordered_json doc;
            doc["meta"] = meta.substr(2);
            doc["model"] = report.model_tag;
            doc["grid"] = grid_json(sec_points, grid.front(), grid.back());
            doc["sectors"] = sectors_json;
            os << doc.dump(2) << "\n";
            return 0;
        }

        throw DomainError("no subcommand handled");
    } catch (const ConvergenceFailure& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}

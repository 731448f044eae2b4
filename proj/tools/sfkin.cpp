// sfkin: strong-field kinematics toolkit CLI.
//
// Subcommands:
//   updata     ponderomotive potential, z_f (both routes), a0 for a laser
//   shell      dressed mass-shell report, optionally boosted, multipole residual
//   trajectory integrate a scenario file, emit CSV + summary
//   relmass    invariant mass vs m*gamma across random frames
//   verify     run the full invariant suite (exit 1 on any failure)
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfkin/constants.hpp"
#include "sfkin/minkowski.hpp"
#include "sfkin/planewave.hpp"
#include "sfkin/pondshell.hpp"
#include "sfkin/relmass.hpp"
#include "sfkin/trajectory.hpp"
#include "sfkin/verify.hpp"

using json = nlohmann::ordered_json;
using namespace sfkin;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_wavelength(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    std::string suffix = s.substr(pos);
    while (!suffix.empty() && suffix.front() == ' ') suffix.erase(suffix.begin());
    if (suffix.empty() || suffix == "m") return v;
    if (suffix == "nm") return v * 1e-9;
    if (suffix == "um") return v * 1e-6;
    if (suffix == "mm") return v * 1e-3;
    throw std::invalid_argument("unknown wavelength unit '" + suffix + "' (use nm, um, mm, m)");
}

Vec3 parse_vec3(const std::string& s, const char* what) {
    Vec3 v;
    char extra;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf%c", &v.x, &v.y, &v.z, &extra) != 3)
        throw std::invalid_argument(std::string(what) + ": expected 'x,y,z', got '" + s + "'");
    return v;
}

Polarization parse_pol(const std::string& s) {
    if (s == "linear") return Polarization::linear;
    if (s == "circular") return Polarization::circular;
    throw std::invalid_argument("polarization must be 'linear' or 'circular'");
}

int cmd_updata(double intensity, const std::string& wavelength, const std::string& pol_s, bool as_json) {
    const LaserParams p(intensity, parse_wavelength(wavelength), parse_pol(pol_s));
    const PhysicalConstants& k = codata();
    const PlaneWaveField f = from_laser_params(p, k);
    const double up_ev = ponderomotive_potential_ev(p, k);
    const double z1 = zf(f);
    const double z2 = zf_photon_density(p, k);
    const double rho = photon_density(p, k);

    if (as_json) {
        json j;
        j["intensity_w_cm2"] = p.intensity_w_cm2;
        j["wavelength_m"] = p.wavelength_m;
        j["polarization"] = pol_s;
        j["a0"] = f.a0();
        j["up_ev"] = up_ev;
        j["zf_from_up"] = z1;
        j["zf_photon_density"] = z2;
        j["photon_density_per_m3"] = rho;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "intensity      " << fmt(p.intensity_w_cm2) << " W/cm^2\n"
                  << "wavelength     " << fmt(p.wavelength_m) << " m\n"
                  << "polarization   " << pol_s << "\n"
                  << "a0             " << fmt(f.a0()) << " (dimensionless)\n"
                  << "U_p            " << fmt(up_ev) << " eV\n"
                  << "z_f (from U_p) " << fmt(z1) << " (dimensionless)\n"
                  << "z_f (photons)  " << fmt(z2) << " (dimensionless)\n"
                  << "photon density " << fmt(rho) << " 1/m^3\n";
    }
    return 0;
}

int cmd_shell(double a0, double omega, const std::string& pol_s, const std::string& p_s,
              const std::string& boost_s, std::optional<int> n, bool as_json) {
    const PlaneWaveField f(omega, {0, 0, 1}, parse_pol(pol_s), a0);
    FourVector p{1, 0, 0, 0};
    if (!p_s.empty() && p_s != "rest") {
        const Vec3 p3 = parse_vec3(p_s, "--p");
        p = FourVector{std::sqrt(1.0 + p3.dot(p3)), p3};
    }
    FourVector u = ponderomotive_four_potential(f);
    if (!boost_s.empty()) {
        const LorentzBoost b{parse_vec3(boost_s, "--boost")};
        p = b.apply(p);
        u = b.apply(u);
    }
    const double invariant = inner(p + u, p + u);
    const double z = zf(f);
    const double expected = 1.0 + z;
    const double emin = minimum_energy(f);
    std::optional<double> multipole;
    if (n) multipole = multipole_residual(p, *n, f);

    if (as_json) {
        json j;
        j["a0"] = a0;
        j["omega_natural"] = omega;
        j["polarization"] = pol_s;
        j["p"] = {p.t, p.x, p.y, p.z};
        j["pond_U"] = {u.t, u.x, u.y, u.z};
        j["dressed_invariant"] = invariant;
        j["expected"] = expected;
        j["residual"] = invariant - expected;
        j["z_f"] = z;
        j["e_min_mc2"] = emin;
        if (multipole) {
            j["n"] = *n;
            j["multipole_residual"] = *multipole;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "units: natural, m = c = hbar = 1\n"
                  << "p                 (" << fmt(p.t) << ", " << fmt(p.x) << ", " << fmt(p.y)
                  << ", " << fmt(p.z) << ") mc\n"
                  << "U                 (" << fmt(u.t) << ", " << fmt(u.x) << ", " << fmt(u.y)
                  << ", " << fmt(u.z) << ") mc^2\n"
                  << "dressed invariant " << fmt(invariant) << " (mc)^2\n"
                  << "expected (1+z_f)  " << fmt(expected) << " (mc)^2\n"
                  << "residual          " << fmt(invariant - expected) << " (mc)^2\n"
                  << "z_f               " << fmt(z) << " (dimensionless)\n"
                  << "E_min             " << fmt(emin) << " mc^2\n";
        if (multipole)
            std::cout << "multipole n=" << *n << "   " << fmt(*multipole) << " (mc)^2\n";
    }
    return 0;
}

struct Scenario {
    PlaneWaveField field{1.0, {0, 0, 1}, Polarization::linear, 0.0};
    FourVector p0{1, 0, 0, 0};
    int steps_per_cycle = 1000;
    int average_cycles = 0;  // 0: plateau cycles when available
    double phi_end = 0.0;
};

[[noreturn]] void scenario_error(int line, const std::string& msg) {
    throw std::invalid_argument("scenario line " + std::to_string(line) + ": " + msg);
}

Scenario parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");

    std::map<std::string, std::pair<std::string, int>> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string{};
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) scenario_error(lineno, "expected 'key = value'");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty()) scenario_error(lineno, "expected 'key = value'");
        if (kv.count(key)) scenario_error(lineno, "duplicate key '" + key + "'");
        kv[key] = {value, lineno};
    }

    const auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        auto v = it->second;
        kv.erase(it);
        return v;
    };
    const auto num = [&](const std::pair<std::string, int>& v) {
        try {
            return std::stod(v.first);
        } catch (const std::exception&) {
            scenario_error(v.second, "not a number: '" + v.first + "'");
        }
    };

    const auto pol_kv = take("polarization");
    const Polarization pol = pol_kv ? parse_pol(pol_kv->first) : Polarization::linear;

    const auto env_kv = take("envelope");
    Envelope env = Envelope::monochromatic();
    const std::string env_name = env_kv ? env_kv->first : "monochromatic";
    if (env_name == "monochromatic") {
    } else if (env_name == "flat_top") {
        const auto ramp = take("ramp_cycles"), plateau = take("plateau_cycles");
        if (!ramp || !plateau)
            throw std::invalid_argument("scenario: flat_top needs ramp_cycles and plateau_cycles");
        env = Envelope::flat_top(static_cast<int>(num(*ramp)), static_cast<int>(num(*plateau)));
    } else if (env_name == "sin2") {
        const auto total = take("total_cycles");
        if (!total) throw std::invalid_argument("scenario: sin2 needs total_cycles");
        env = Envelope::sin2(static_cast<int>(num(*total)));
    } else if (env_name == "gaussian") {
        const auto sig = take("sigma_cycles"), cut = take("cutoff_sigmas");
        if (!sig || !cut) throw std::invalid_argument("scenario: gaussian needs sigma_cycles and cutoff_sigmas");
        env = Envelope::gaussian(num(*sig), num(*cut));
    } else {
        scenario_error(env_kv->second, "unknown envelope '" + env_name + "'");
    }

    const auto a0_kv = take("a0");
    const auto intensity_kv = take("intensity");
    if (static_cast<bool>(a0_kv) == static_cast<bool>(intensity_kv))
        throw std::invalid_argument("scenario: specify exactly one of a0 (natural units) or intensity (W/cm^2)");

    Scenario sc;
    const auto dir_kv = take("direction");
    const Vec3 dir = dir_kv ? parse_vec3(dir_kv->first, "direction") : Vec3{0, 0, 1};
    if (a0_kv) {
        const auto omega_kv = take("omega");
        const double omega = omega_kv ? num(*omega_kv) : 1.0;
        sc.field = PlaneWaveField(omega, dir, pol, num(*a0_kv), env);
    } else {
        const auto wl_kv = take("wavelength");
        if (!wl_kv) throw std::invalid_argument("scenario: intensity needs wavelength");
        const LaserParams lp(num(*intensity_kv), parse_wavelength(wl_kv->first), pol);
        sc.field = from_laser_params(lp, codata(), dir, env);
    }

    if (const auto p0_kv = take("p0"); p0_kv && p0_kv->first != "rest") {
        const Vec3 p3 = parse_vec3(p0_kv->first, "p0");
        sc.p0 = FourVector{std::sqrt(1.0 + p3.dot(p3)), p3};
    }
    if (const auto s = take("steps_per_cycle")) sc.steps_per_cycle = static_cast<int>(num(*s));
    if (const auto s = take("average_cycles")) sc.average_cycles = static_cast<int>(num(*s));
    if (const auto s = take("phi_end")) sc.phi_end = num(*s);
    if (sc.phi_end <= 0.0) {
        if (env.kind() == Envelope::Kind::monochromatic)
            throw std::invalid_argument("scenario: monochromatic envelope needs phi_end");
        sc.phi_end = env.support_end();
    }
    if (sc.steps_per_cycle < 8) throw std::invalid_argument("scenario: steps_per_cycle must be >= 8");

    if (!kv.empty())
        scenario_error(kv.begin()->second.second, "unknown key '" + kv.begin()->first + "'");
    return sc;
}

int cmd_trajectory(const std::string& scenario_path, const std::string& out_path, bool as_json) {
    const Scenario sc = parse_scenario(scenario_path);
    const double step = two_pi / sc.steps_per_cycle;
    const Trajectory traj = integrate(sc.field, sc.p0, 0.0, sc.phi_end, step);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << "phase,t,x,y,z,p0,px,py,pz\n";
        for (const auto& s : traj.states) {
            out << fmt(s.phase) << ',' << fmt(s.position.t) << ',' << fmt(s.position.x) << ','
                << fmt(s.position.y) << ',' << fmt(s.position.z) << ',' << fmt(s.momentum.t) << ','
                << fmt(s.momentum.x) << ',' << fmt(s.momentum.y) << ',' << fmt(s.momentum.z) << '\n';
        }
    }

    // Richardson-style convergence estimate: redo at half the step.
    const Trajectory traj2 = integrate(sc.field, sc.p0, 0.0, sc.phi_end, step / 2.0);
    const FourVector dterm = traj.states.back().momentum - traj2.states.back().momentum;
    const double conv = std::max(std::max(std::abs(dterm.t), std::abs(dterm.x)),
                                 std::max(std::abs(dterm.y), std::abs(dterm.z)));

    std::optional<FourVector> avg;
    int avg_cycles = sc.average_cycles;
    if (sc.field.envelope().has_periodic_region()) {
        if (avg_cycles <= 0)
            avg_cycles = sc.field.envelope().kind() == Envelope::Kind::flat_top
                             ? sc.field.envelope().plateau_whole_cycles()
                             : static_cast<int>(sc.phi_end / two_pi);
        if (avg_cycles >= 1) avg = cycle_averaged_four_momentum(traj, sc.field, avg_cycles);
    }
    const FourVector exit_p = traj.states.back().momentum;
    const double onshell = max_on_shell_violation(traj);

    if (as_json) {
        json j;
        j["scenario"] = scenario_path;
        j["a0"] = sc.field.a0();
        j["omega_natural"] = sc.field.omega();
        j["steps_per_cycle"] = sc.steps_per_cycle;
        j["exit_momentum"] = {exit_p.t, exit_p.x, exit_p.y, exit_p.z};
        j["initial_momentum"] = {sc.p0.t, sc.p0.x, sc.p0.y, sc.p0.z};
        if (avg) {
            j["cycle_averaged_momentum"] = {avg->t, avg->x, avg->y, avg->z};
            j["average_cycles"] = avg_cycles;
        }
        j["terminal_convergence_estimate"] = conv;
        j["max_on_shell_violation"] = onshell;
        if (!out_path.empty()) j["csv"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "units: natural, m = c = 1; momenta in mc\n"
                  << "a0                   " << fmt(sc.field.a0()) << "\n"
                  << "initial momentum     (" << fmt(sc.p0.t) << ", " << fmt(sc.p0.x) << ", "
                  << fmt(sc.p0.y) << ", " << fmt(sc.p0.z) << ")\n"
                  << "exit momentum        (" << fmt(exit_p.t) << ", " << fmt(exit_p.x) << ", "
                  << fmt(exit_p.y) << ", " << fmt(exit_p.z) << ")\n";
        if (avg)
            std::cout << "cycle-averaged p     (" << fmt(avg->t) << ", " << fmt(avg->x) << ", "
                      << fmt(avg->y) << ", " << fmt(avg->z) << ")  over " << avg_cycles
                      << " cycles\n";
        std::cout << "convergence estimate " << fmt(conv) << " (terminal, step halving)\n"
                  << "on-shell violation   " << fmt(onshell) << " (mc)^2\n";
        if (!out_path.empty()) std::cout << "csv                  " << out_path << "\n";
    }
    return 0;
}

int cmd_relmass(double m, const std::string& v_s, int frames, std::uint64_t seed, bool as_json) {
    const Vec3 v = parse_vec3(v_s, "--v");
    std::mt19937_64 rng(seed);
    std::vector<LorentzBoost> boosts;
    boosts.reserve(frames);
    std::uniform_real_distribution<double> u(0.0, 0.99);
    for (int i = 0; i < frames; ++i)
        boosts.push_back(LorentzBoost(verify::detail::random_direction(rng) * u(rng)));
    const CovarianceReport rep = covariance_report(m, v, boosts);

    if (as_json) {
        json j;
        j["m"] = m;
        j["v"] = {v.x, v.y, v.z};
        j["frames"] = frames + 1;
        j["invariant_mass"] = rep.invariant_mass_per_frame;
        j["m_gamma"] = rep.m_gamma_per_frame;
        j["covariance_residual"] = rep.covariance_residual;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "frame        p^0          |p|          sqrt(p.p)    m*gamma\n";
        for (std::size_t i = 0; i < rep.momentum_per_frame.size(); ++i) {
            const FourVector& p = rep.momentum_per_frame[i];
            std::printf("%-12zu %-12.6g %-12.6g %-12.6g %-12.6g\n", i, p.t, p.spatial().norm(),
                        rep.invariant_mass_per_frame[i], rep.m_gamma_per_frame[i]);
        }
        std::cout << "covariance residual " << fmt(rep.covariance_residual) << "\n"
                  << "sqrt(p.p) is the frame-invariant mass; m*gamma is not an invariant\n";
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, bool as_json) {
    const std::vector<verify::CheckResult> results = verify::run_all(seed);
    bool all_pass = true;
    if (as_json) {
        json j;
        j["seed"] = seed;
        j["checks"] = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            j["checks"].push_back({{"id", r.id},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"worst", r.worst},
                                   {"tolerance", r.tolerance},
                                   {"detail", r.detail}});
        }
        j["all_pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            std::printf("%-4s %-4s %-60s worst %.3e tol %.3e\n", r.pass ? "PASS" : "FAIL",
                        r.id.c_str(), r.name.c_str(), r.worst, r.tolerance);
        }
        std::cout << (all_pass ? "all checks passed\n" : "VERIFICATION FAILED\n");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong-field kinematics toolkit"};
    app.require_subcommand(1);

    // updata
    auto* updata = app.add_subcommand("updata", "ponderomotive potential and z_f for a laser");
    double intensity = 0.0;
    std::string wavelength, pol = "linear";
    bool updata_json = false;
    updata->add_option("--intensity", intensity, "intensity in W/cm^2")->required();
    updata->add_option("--wavelength", wavelength, "wavelength with unit, e.g. 800nm, 0.8um")->required();
    updata->add_option("--pol", pol, "polarization: linear|circular");
    updata->add_flag("--json", updata_json, "machine-readable output");

    // shell
    auto* shell = app.add_subcommand("shell", "dressed mass-shell report (natural units)");
    double a0 = 1.0, omega = 1.0;
    std::string shell_pol = "linear", p_s, boost_s;
    int n_pole = 0;
    bool shell_json = false;
    shell->add_option("--a0", a0, "dimensionless amplitude a0");
    shell->add_option("--omega", omega, "carrier frequency, natural units (default 1)");
    shell->add_option("--pol", shell_pol, "polarization: linear|circular");
    shell->add_option("--p", p_s, "free 3-momentum px,py,pz in mc (default rest)");
    shell->add_option("--boost", boost_s, "re-evaluate in a boosted frame: vx,vy,vz");
    CLI::Option* n_opt = shell->add_option("--n", n_pole, "multipole index for the shell residual");
    shell->add_flag("--json", shell_json, "machine-readable output");

    // trajectory
    auto* traj = app.add_subcommand("trajectory", "integrate a scenario file, emit CSV + summary");
    std::string scenario_path, out_path;
    bool traj_json = false;
    traj->add_option("--scenario", scenario_path, "scenario file (key = value lines)")->required();
    traj->add_option("--out", out_path, "CSV output path");
    traj->add_flag("--json", traj_json, "machine-readable summary");

    // relmass
    auto* rel = app.add_subcommand("relmass", "invariant mass vs m*gamma across frames");
    double rel_m = 1.0;
    std::string rel_v = "0.6,0,0";
    int frames = 10;
    std::uint64_t rel_seed = 42;
    bool rel_json = false;
    rel->add_option("--m", rel_m, "rest mass, natural units");
    rel->add_option("--v", rel_v, "particle velocity vx,vy,vz in c");
    rel->add_option("--frames", frames, "number of random frames");
    rel->add_option("--seed", rel_seed, "RNG seed");
    rel->add_flag("--json", rel_json, "machine-readable output");

    // verify
    auto* ver = app.add_subcommand("verify", "run the full invariant suite");
    std::uint64_t seed = 42;
    bool ver_json = false;
    ver->add_option("--seed", seed, "RNG seed");
    ver->add_flag("--json", ver_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*updata) return cmd_updata(intensity, wavelength, pol, updata_json);
        if (*shell)
            return cmd_shell(a0, omega, shell_pol, p_s, boost_s,
                             n_opt->count() > 0 ? std::optional<int>(n_pole) : std::nullopt,
                             shell_json);
        if (*traj) return cmd_trajectory(scenario_path, out_path, traj_json);
        if (*rel) return cmd_relmass(rel_m, rel_v, frames, rel_seed, rel_json);
        if (*ver) return cmd_verify(seed, ver_json);
    } catch (const std::exception& e) {
        std::cerr << "sfkin: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

// compton-lab: command-line front end for the Compton interferometer library.
//
// Exit codes: 0 success, 2 usage error, 3 no-solution, 4 numerical-tolerance
// failure, 5 I/O failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comptonlab/angle_solver.hpp"
#include "comptonlab/constants.hpp"
#include "comptonlab/errors.hpp"
#include "comptonlab/format.hpp"
#include "comptonlab/interferometer.hpp"
#include "comptonlab/kinematics.hpp"
#include "comptonlab/klein_nishina.hpp"
#include "comptonlab/serialize.hpp"
#include "comptonlab/spectral.hpp"
#include "comptonlab/sweep.hpp"

namespace {

using namespace comptonlab;

constexpr const char* kVersion = "0.1.0";

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, std::string& suffix) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin)
        throw domain_error("could not parse number from '" + text + "'");
    suffix.assign(end);
    return v;
}

// Lengths require an explicit unit suffix (m, A, pm) to avoid magnitude slips.
double parse_length(const std::string& text) {
    std::string suffix;
    const double v = parse_number(text, suffix);
    if (suffix == "m") return v;
    if (suffix == "A") return v * 1e-10;
    if (suffix == "pm") return v * 1e-12;
    throw domain_error("length '" + text + "' needs a unit suffix: m, A or pm");
}

// Angles default to radians; degrees need an explicit suffix.
double parse_angle(const std::string& text) {
    std::string suffix;
    const double v = parse_number(text, suffix);
    if (suffix.empty() || suffix == "rad") return v;
    if (suffix == "deg") return v * M_PI / 180.0;
    throw domain_error("angle '" + text + "' has unknown unit suffix '" + suffix +
                       "' (use rad or deg)");
}

struct CommonOptions {
    std::string lambda0_text;
    double epsilon = 0.0;
    bool has_epsilon = false;
    std::string format = "json";
    std::string output;

    void attach_source(CLI::App* cmd, bool required) {
        auto* l = cmd->add_option("--lambda0", lambda0_text,
                                  "incident wavelength with unit suffix (m, A, pm)");
        auto* e = cmd->add_option("--epsilon", epsilon,
                                  "photon energy over electron rest energy");
        l->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        e->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        e->excludes(l);
        l->excludes(e);
        cmd->callback([this, l, e, required] {
            has_epsilon = e->count() > 0;
            if (required && l->count() == 0 && e->count() == 0)
                throw CLI::RequiredError("--lambda0 or --epsilon");
        });
    }

    void attach_output(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        cmd->add_option("--output", output, "output path (default: stdout)")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    ScatteringConfig config() const {
        if (has_epsilon) return config_from_epsilon(epsilon);
        return make_config(parse_length(lambda0_text));
    }
};

void emit(const CommonOptions& opts, const std::function<void(std::ostream&)>& csv,
          const std::function<void(std::ostream&)>& json) {
    std::ostringstream buffer;
    if (opts.format == "csv")
        csv(buffer);
    else
        json(buffer);
    if (opts.output.empty()) {
        std::cout << buffer.str();
        if (!std::cout) throw io_error("failed to write to stdout");
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw io_error("cannot open '" + opts.output + "' for writing");
    out << buffer.str();
    out.flush();
    if (!out) throw io_error("failed writing '" + opts.output + "'");
}

void emit_record(const CommonOptions& opts, const ScalarRecord& record) {
    emit(
        opts, [&](std::ostream& os) { write_record_csv(os, record); },
        [&](std::ostream& os) { write_record_json(os, record); });
}

std::map<std::string, std::string> base_metadata(const std::string& command) {
    return {{"artifact", "compton-lab"}, {"version", kVersion}, {"command", command}};
}

// ---------------------------------------------------------------------------
// reproduce: regenerate every dataset with the default parameters.

struct ManifestFile {
    std::string name;
    std::size_t bytes = 0;
    std::string hash;
};

ManifestFile write_dataset(const std::filesystem::path& dir, const std::string& name,
                           const std::string& content) {
    const std::filesystem::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw io_error("failed writing '" + path.string() + "'");
    return {name, content.size(), fnv1a64_hex(content)};
}

int run_reproduce(const std::string& outdir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw io_error("cannot create output directory '" + outdir + "'");

    const double eps_a = PhysicalConstants{}.compton_wavelength() / 1e-10;
    const std::vector<double> panel_epsilons = {0.1 * eps_a, eps_a, 10.0 * eps_a};
    const std::vector<double> family_epsilons = {0.1 * eps_a, 0.5 * eps_a, eps_a,
                                                 2.0 * eps_a, 4.0 * eps_a,
                                                 7.0 * eps_a, 10.0 * eps_a};
    const std::vector<double> contour_targets = {0.0240, 0.054, 0.27};
    const double sigma_rel = 0.1;

    const std::vector<double> phi = linspace(0.0, 2.0 * M_PI, defaults::phi_points);
    const std::vector<double> zeta = linspace(0.0, defaults::zeta_max, defaults::zeta_points);
    const std::vector<double> theta = linspace(0.0, M_PI, defaults::theta_points);

    std::vector<ManifestFile> files;
    std::map<std::string, std::size_t> omitted;

    {
        std::ostringstream os;
        write_grid_csv(os, fig2_surface(phi, zeta));
        files.push_back(write_dataset(outdir, "fig2.csv", os.str()));
    }
    {
        std::ostringstream os;
        write_grid_csv(os, xsection_family(family_epsilons, theta));
        files.push_back(write_dataset(outdir, "fig3a.csv", os.str()));
    }
    const char* panel_names[] = {"fig3b.csv", "fig3c.csv", "fig3d.csv"};
    for (std::size_t i = 0; i < panel_epsilons.size(); ++i) {
        const Fig3Panel panel = fig3_panel(panel_epsilons[i], theta, contour_targets);
        omitted[std::string(panel_names[i]) + ".equiprobable_skipped"] =
            panel.equiprobable.skipped;
        std::ostringstream os;
        write_fig3_csv(os, panel);
        files.push_back(write_dataset(outdir, panel_names[i], os.str()));
    }
    {
        const Fig4Surface surface = fig4_surface(
            10.0 * eps_a, sigma_rel, phi, default_theta1_grid(10.0 * eps_a));
        omitted["fig4b.csv.omitted_rows"] = surface.omitted;
        std::ostringstream os;
        write_grid_csv(os, surface.grid);
        files.push_back(write_dataset(outdir, "fig4b.csv", os.str()));
    }

    std::ostringstream manifest;
    manifest << "{\"artifact\":\"compton-lab\",\"version\":\"" << kVersion
             << "\",\"hash\":\"fnv1a64\"";
    manifest << ",\"parameters\":{\"epsilon_A\":" << format_sig9(eps_a);
    manifest << ",\"fig2\":{\"phi_points\":" << defaults::phi_points
             << ",\"phi_max\":" << format_sig9(2.0 * M_PI)
             << ",\"zeta_points\":" << defaults::zeta_points
             << ",\"zeta_max\":" << format_sig9(defaults::zeta_max) << "}";
    manifest << ",\"fig3a\":{\"epsilons\":[";
    for (std::size_t i = 0; i < family_epsilons.size(); ++i)
        manifest << (i ? "," : "") << format_sig9(family_epsilons[i]);
    manifest << "],\"theta_points\":" << defaults::theta_points << "}";
    manifest << ",\"fig3\":{\"epsilons\":[";
    for (std::size_t i = 0; i < panel_epsilons.size(); ++i)
        manifest << (i ? "," : "") << format_sig9(panel_epsilons[i]);
    manifest << "],\"contour_targets\":[";
    for (std::size_t i = 0; i < contour_targets.size(); ++i)
        manifest << (i ? "," : "") << format_sig9(contour_targets[i]);
    manifest << "],\"theta_points\":" << defaults::theta_points << "}";
    manifest << ",\"fig4\":{\"epsilon\":" << format_sig9(10.0 * eps_a)
             << ",\"sigma_over_lambda0\":" << format_sig9(sigma_rel)
             << ",\"phi_points\":" << defaults::phi_points
             << ",\"theta1_rows\":" << defaults::theta1_rows << "}";
    manifest << "},\"omitted\":{";
    bool first = true;
    for (const auto& [key, count] : omitted) {
        manifest << (first ? "" : ",") << "\"" << key << "\":" << count;
        first = false;
    }
    manifest << "},\"files\":[";
    for (std::size_t i = 0; i < files.size(); ++i) {
        manifest << (i ? "," : "") << "{\"name\":\"" << files[i].name
                 << "\",\"bytes\":" << files[i].bytes << ",\"fnv1a64\":\""
                 << files[i].hash << "\"}";
    }
    manifest << "]}\n";
    write_dataset(outdir, "manifest.json", manifest.str());
    return 0;
}

// ---------------------------------------------------------------------------
// Flat key = value config files; command-line flags take precedence.

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read config file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw domain_error("config line is not 'key = value': '" + line + "'");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw domain_error("config line is not 'key = value': '" + line + "'");
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

// Extracts --config from raw arguments and splices the file's tokens in right
// after the subcommand, so explicit flags parse later and win.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    std::optional<std::string> config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw domain_error("--config needs a file path");
            config_path = args[++i];
            continue;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            continue;
        }
        out.push_back(args[i]);
    }
    if (config_path) {
        if (out.size() < 2)
            throw domain_error("--config requires a subcommand");
        const std::vector<std::string> extra = config_tokens(*config_path);
        out.insert(out.begin() + 2, extra.begin(), extra.end());
    }
    return out;
}

int run(std::vector<std::string> args) {
    CLI::App app{"Compton-scattering Mach-Zehnder interferometer calculator"};
    app.require_subcommand(1);
    app.set_version_flag("--cli-version", kVersion);

    // Every option may also come from a --config file; the splice in
    // merge_config puts file tokens first, so TakeLast favors the flag.
    const auto take_last = [](CLI::Option* o) {
        o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        return o;
    };

    // shift
    auto shift_opts = std::make_shared<CommonOptions>();
    auto shift_theta = std::make_shared<std::string>();
    CLI::App* shift = app.add_subcommand("shift", "Compton wavelength shift");
    shift_opts->attach_source(shift, true);
    shift_opts->attach_output(shift);
    take_last(shift->add_option("--theta", *shift_theta, "scattering angle")->required());

    // xsection
    auto xs_opts = std::make_shared<CommonOptions>();
    auto xs_theta = std::make_shared<std::string>();
    CLI::App* xsection =
        app.add_subcommand("xsection", "Klein-Nishina differential cross section");
    xs_opts->attach_source(xsection, true);
    xs_opts->attach_output(xsection);
    take_last(xsection->add_option("--theta", *xs_theta, "scattering angle")->required());

    // equiprobable
    auto eq_opts = std::make_shared<CommonOptions>();
    auto eq_theta0 = std::make_shared<std::string>();
    CLI::App* equiprobable =
        app.add_subcommand("equiprobable", "far-branch partner of a near-branch angle");
    eq_opts->attach_source(equiprobable, true);
    eq_opts->attach_output(equiprobable);
    take_last(
        equiprobable->add_option("--theta0", *eq_theta0, "near-branch angle")->required());

    // pair
    auto pair_opts = std::make_shared<CommonOptions>();
    auto pair_target = std::make_shared<double>(0.0);
    CLI::App* pair = app.add_subcommand(
        "pair", "equiprobable pair with a given relative wavelength difference");
    pair_opts->attach_source(pair, true);
    pair_opts->attach_output(pair);
    take_last(pair->add_option("--target-dlrel", *pair_target,
                               "target relative wavelength difference")
                  ->required());

    // overlap
    auto ov_opts = std::make_shared<CommonOptions>();
    auto ov_theta0 = std::make_shared<std::string>();
    auto ov_theta1 = std::make_shared<std::string>();
    auto ov_sigma = std::make_shared<double>(0.1);
    auto ov_quadrature = std::make_shared<bool>(false);
    CLI::App* overlap = app.add_subcommand("overlap", "marker overlap of two arms");
    ov_opts->attach_source(overlap, true);
    ov_opts->attach_output(overlap);
    take_last(overlap->add_option("--theta0", *ov_theta0)->required());
    take_last(overlap->add_option("--theta1", *ov_theta1)->required());
    take_last(overlap->add_option("--sigma-rel", *ov_sigma, "marker width / lambda0"));
    overlap->add_flag("--quadrature", *ov_quadrature,
                      "integrate numerically instead of the closed form");

    // pd
    auto pd_opts = std::make_shared<CommonOptions>();
    auto pd_phi = std::make_shared<std::string>();
    auto pd_magnitude = std::make_shared<double>(-1.0);
    auto pd_delta = std::make_shared<std::string>("0");
    auto pd_theta0 = std::make_shared<std::string>();
    auto pd_theta1 = std::make_shared<std::string>();
    auto pd_sigma = std::make_shared<double>(0.1);
    CLI::App* pd = app.add_subcommand("pd", "detection probability at a phase");
    pd_opts->attach_source(pd, false);
    pd_opts->attach_output(pd);
    take_last(pd->add_option("--phi", *pd_phi, "relative phase")->required());
    auto* pd_mag_opt = take_last(
        pd->add_option("--magnitude", *pd_magnitude, "overlap magnitude |A|"));
    take_last(pd->add_option("--delta", *pd_delta, "overlap phase"));
    auto* pd_t0_opt = take_last(pd->add_option("--theta0", *pd_theta0));
    take_last(pd->add_option("--theta1", *pd_theta1));
    take_last(pd->add_option("--sigma-rel", *pd_sigma));
    pd_mag_opt->excludes(pd_t0_opt);

    // fig2
    auto fig2_opts = std::make_shared<CommonOptions>();
    auto fig2_phi_points = std::make_shared<std::size_t>(defaults::phi_points);
    auto fig2_zeta_points = std::make_shared<std::size_t>(defaults::zeta_points);
    auto fig2_zeta_max = std::make_shared<double>(defaults::zeta_max);
    CLI::App* fig2 =
        app.add_subcommand("fig2", "detection probability over (phi, zeta)");
    fig2_opts->attach_output(fig2);
    take_last(fig2->add_option("--phi-points", *fig2_phi_points));
    take_last(fig2->add_option("--zeta-points", *fig2_zeta_points));
    take_last(fig2->add_option("--zeta-max", *fig2_zeta_max));

    // fig3
    auto fig3_opts = std::make_shared<CommonOptions>();
    auto fig3_theta_points = std::make_shared<std::size_t>(defaults::theta_points);
    auto fig3_contours = std::make_shared<std::vector<double>>();
    CLI::App* fig3 = app.add_subcommand(
        "fig3", "cross section, equiprobable curve and contours for one epsilon");
    fig3_opts->attach_source(fig3, true);
    fig3_opts->attach_output(fig3);
    take_last(fig3->add_option("--theta-points", *fig3_theta_points));
    fig3->add_option("--contour", *fig3_contours,
                     "delta_lambda_rel contour target (repeatable)");

    // fig4
    auto fig4_opts = std::make_shared<CommonOptions>();
    auto fig4_sigma = std::make_shared<double>(0.1);
    auto fig4_phi_points = std::make_shared<std::size_t>(defaults::phi_points);
    auto fig4_rows = std::make_shared<std::size_t>(defaults::theta1_rows);
    CLI::App* fig4 = app.add_subcommand(
        "fig4", "detection probability along the equiprobable curve");
    fig4_opts->attach_source(fig4, true);
    fig4_opts->attach_output(fig4);
    take_last(fig4->add_option("--sigma-rel", *fig4_sigma, "marker width / lambda0"));
    take_last(fig4->add_option("--phi-points", *fig4_phi_points));
    take_last(fig4->add_option("--theta1-points", *fig4_rows));

    // reproduce
    auto reproduce_outdir = std::make_shared<std::string>();
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "regenerate all datasets and a manifest");
    take_last(reproduce->add_option("--outdir", *reproduce_outdir)->required());

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (shift->parsed()) {
        const ScatteringConfig cfg = shift_opts->config();
        const double theta = parse_angle(*shift_theta);
        const double lambda_theta = compton_shift(cfg, theta);
        ScalarRecord rec;
        rec.metadata = base_metadata("shift");
        rec.add("lambda0_m", cfg.lambda0);
        rec.add("epsilon", cfg.epsilon);
        rec.add("theta_rad", theta);
        rec.add("lambda_theta_m", lambda_theta);
        rec.add("shift_m", lambda_theta - cfg.lambda0);
        rec.add("ratio", wavelength_ratio(cfg.epsilon, theta));
        emit_record(*shift_opts, rec);
    } else if (xsection->parsed()) {
        const ScatteringConfig cfg = xs_opts->config();
        const double theta = parse_angle(*xs_theta);
        const CrossSectionValue v = diff_cross_section(cfg.epsilon, theta);
        ScalarRecord rec;
        rec.metadata = base_metadata("xsection");
        rec.add("epsilon", v.epsilon);
        rec.add("theta_rad", v.theta);
        rec.add("xsection", v.value_dimensionless);
        rec.add("xsection_m2_sr", v.value_absolute);
        emit_record(*xs_opts, rec);
    } else if (equiprobable->parsed()) {
        const ScatteringConfig cfg = eq_opts->config();
        const double theta0 = parse_angle(*eq_theta0);
        const double theta1 = equiprobable_partner(cfg.epsilon, theta0);
        const AnglePair p = angle_pair(cfg.epsilon, theta0, theta1);
        ScalarRecord rec;
        rec.metadata = base_metadata("equiprobable");
        rec.add("epsilon", p.epsilon);
        rec.add("theta0_rad", p.theta0);
        rec.add("theta1_rad", p.theta1);
        rec.add("xsection", p.xsection);
        rec.add("delta_lambda_rel", p.delta_lambda_rel);
        emit_record(*eq_opts, rec);
    } else if (pair->parsed()) {
        const ScatteringConfig cfg = pair_opts->config();
        const AnglePair p = select_pair(cfg.epsilon, *pair_target);
        ScalarRecord rec;
        rec.metadata = base_metadata("pair");
        rec.metadata["target_dlrel"] = format_sig9(*pair_target);
        rec.add("epsilon", p.epsilon);
        rec.add("theta0_rad", p.theta0);
        rec.add("theta1_rad", p.theta1);
        rec.add("xsection", p.xsection);
        rec.add("delta_lambda_rel", p.delta_lambda_rel);
        rec.add("lambda_theta0_m", p.lambda_theta0);
        rec.add("lambda_theta1_m", p.lambda_theta1);
        emit_record(*pair_opts, rec);
    } else if (overlap->parsed()) {
        const ScatteringConfig cfg = ov_opts->config();
        const AnglePair p = angle_pair(cfg.epsilon, parse_angle(*ov_theta0),
                                       parse_angle(*ov_theta1));
        const double sigma = *ov_sigma * cfg.lambda0;
        const SpectralLine a = make_line(p.lambda_theta0, sigma);
        const SpectralLine b = make_line(p.lambda_theta1, sigma);
        const MarkerOverlap o =
            *ov_quadrature ? overlap_quadrature(a, b) : overlap_closed(a, b);
        ScalarRecord rec;
        rec.metadata = base_metadata("overlap");
        rec.add("epsilon", p.epsilon);
        rec.add("theta0_rad", p.theta0);
        rec.add("theta1_rad", p.theta1);
        rec.add("sigma_over_lambda0", *ov_sigma);
        rec.add("zeta", o.zeta);
        rec.add("magnitude", o.magnitude);
        rec.add("phase_rad", o.phase);
        rec.add("distinguishability", distinguishability(o));
        rec.add_text("method", *ov_quadrature ? "quadrature" : "closed");
        emit_record(*ov_opts, rec);
    } else if (pd->parsed()) {
        const double phi = parse_angle(*pd_phi);
        MarkerOverlap o;
        if (*pd_magnitude >= 0.0) {
            if (*pd_magnitude > 1.0)
                throw domain_error("pd: magnitude must lie in [0, 1]");
            o = MarkerOverlap{*pd_magnitude, parse_angle(*pd_delta), 0.0};
        } else {
            if (pd_theta0->empty() || pd_theta1->empty())
                throw domain_error(
                    "pd: give either --magnitude or --theta0/--theta1 with a source");
            const ScatteringConfig cfg = pd_opts->config();
            const AnglePair p = angle_pair(cfg.epsilon, parse_angle(*pd_theta0),
                                           parse_angle(*pd_theta1));
            o = build_model(cfg.epsilon, p, *pd_sigma).overlap;
        }
        ScalarRecord rec;
        rec.metadata = base_metadata("pd");
        rec.add("magnitude", o.magnitude);
        rec.add("delta_rad", o.phase);
        rec.add("phi_rad", phi);
        rec.add("p_d", detection_probability(o, phi));
        emit_record(*pd_opts, rec);
    } else if (fig2->parsed()) {
        const auto grid = fig2_surface(
            linspace(0.0, 2.0 * M_PI, *fig2_phi_points),
            linspace(0.0, *fig2_zeta_max, *fig2_zeta_points));
        emit(
            *fig2_opts, [&](std::ostream& os) { write_grid_csv(os, grid); },
            [&](std::ostream& os) { write_grid_json(os, grid); });
    } else if (fig3->parsed()) {
        const ScatteringConfig cfg = fig3_opts->config();
        std::vector<double> targets = *fig3_contours;
        if (targets.empty()) targets = {0.0240, 0.054, 0.27};
        const Fig3Panel panel = fig3_panel(
            cfg.epsilon, linspace(0.0, M_PI, *fig3_theta_points), targets);
        emit(
            *fig3_opts, [&](std::ostream& os) { write_fig3_csv(os, panel); },
            [&](std::ostream& os) { write_fig3_json(os, panel); });
    } else if (fig4->parsed()) {
        const ScatteringConfig cfg = fig4_opts->config();
        const Fig4Surface surface =
            fig4_surface(cfg.epsilon, *fig4_sigma,
                         linspace(0.0, 2.0 * M_PI, *fig4_phi_points),
                         default_theta1_grid(cfg.epsilon, *fig4_rows));
        emit(
            *fig4_opts, [&](std::ostream& os) { write_grid_csv(os, surface.grid); },
            [&](std::ostream& os) { write_grid_json(os, surface.grid); });
    } else if (reproduce->parsed()) {
        return run_reproduce(*reproduce_outdir);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    try {
        args = merge_config(args);
        return run(std::move(args));
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const no_solution_error& e) {
        std::cerr << "no solution: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const tolerance_error& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 5;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

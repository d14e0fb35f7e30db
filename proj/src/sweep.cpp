#include "comptonlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "comptonlab/constants.hpp"
#include "comptonlab/errors.hpp"
#include "comptonlab/format.hpp"
#include "comptonlab/interferometer.hpp"
#include "comptonlab/klein_nishina.hpp"

namespace comptonlab {

namespace {

constexpr const char* kArtifactVersion = "0.1.0";

void require_finite(std::span<const double> grid, const char* where) {
    if (grid.empty())
        throw domain_error(std::string(where) + ": grid must be nonempty");
    for (double v : grid)
        if (!std::isfinite(v))
            throw domain_error(std::string(where) + ": grid values must be finite");
}

std::map<std::string, std::string> base_metadata(const char* generator) {
    return {{"artifact", "compton-lab"},
            {"version", kArtifactVersion},
            {"generator", generator}};
}

// Rows are independent; any partition yields the same values, so output is
// deterministic for every thread count.
void parallel_rows(std::size_t rows, const std::function<void(std::size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned cap = sweep_thread_cap();
    std::size_t n = cap != 0 ? cap : hw;
    n = std::min<std::size_t>(n, rows);
    if (n <= 1) {
        for (std::size_t i = 0; i < rows; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < n; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < rows; i += n) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {a};
    std::vector<double> v(n);
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) v[i] = a + step * static_cast<double>(i);
    v[n - 1] = b;
    return v;
}

unsigned sweep_thread_cap() {
    const char* env = std::getenv("COMPTON_LAB_THREADS");
    if (env == nullptr) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 0;
    return static_cast<unsigned>(v);
}

SweepGrid fig2_surface(std::span<const double> phi_grid,
                       std::span<const double> zeta_grid) {
    require_finite(phi_grid, "fig2_surface");
    require_finite(zeta_grid, "fig2_surface");

    SweepGrid g;
    g.x = {"phi_rad", "rad", {phi_grid.begin(), phi_grid.end()}};
    g.y = {"zeta", "", {zeta_grid.begin(), zeta_grid.end()}};
    g.value_name = "p_d";
    g.values.resize(phi_grid.size() * zeta_grid.size());
    g.metadata = base_metadata("fig2");
    g.metadata["delta_rad"] = "0";

    parallel_rows(zeta_grid.size(), [&](std::size_t i) {
        const double zeta = zeta_grid[i];
        const MarkerOverlap overlap{std::exp(-0.25 * zeta * zeta), 0.0,
                                    std::abs(zeta)};
        for (std::size_t j = 0; j < phi_grid.size(); ++j)
            g.values[i * phi_grid.size() + j] =
                detection_probability(overlap, phi_grid[j]);
    });
    return g;
}

SweepGrid xsection_family(std::span<const double> epsilons,
                          std::span<const double> theta_grid) {
    require_finite(epsilons, "xsection_family");
    require_finite(theta_grid, "xsection_family");

    SweepGrid g;
    g.x = {"theta_rad", "rad", {theta_grid.begin(), theta_grid.end()}};
    g.y = {"epsilon", "", {epsilons.begin(), epsilons.end()}};
    g.value_name = "xsection";
    g.values.resize(epsilons.size() * theta_grid.size());
    g.metadata = base_metadata("xsection_family");
    g.metadata["r0_m"] =
        format_sig9(PhysicalConstants{}.classical_electron_radius());

    parallel_rows(epsilons.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < theta_grid.size(); ++j)
            g.values[i * theta_grid.size() + j] =
                diff_cross_section(epsilons[i], theta_grid[j]).value_dimensionless;
    });
    return g;
}

Fig3Panel fig3_panel(double epsilon, std::span<const double> theta_grid,
                     std::span<const double> contour_targets) {
    require_finite(theta_grid, "fig3_panel");
    for (double t : contour_targets)
        if (!std::isfinite(t) || t <= 0.0 || t >= 2.0)
            throw domain_error("fig3_panel: contour targets must lie in (0, 2)");

    Fig3Panel panel;
    panel.epsilon = epsilon;
    panel.theta.assign(theta_grid.begin(), theta_grid.end());
    panel.xsection.resize(theta_grid.size());
    for (std::size_t j = 0; j < theta_grid.size(); ++j)
        panel.xsection[j] =
            diff_cross_section(epsilon, theta_grid[j]).value_dimensionless;

    panel.equiprobable = equiprobable_curve(epsilon, theta_grid.size());

    panel.contours.reserve(contour_targets.size());
    for (double target : contour_targets) {
        ContourPolyline line;
        line.target = target;
        for (double theta0 : theta_grid) {
            try {
                const double theta1 = contour_theta1(epsilon, theta0, target);
                if (theta1 <= theta0) {
                    ++line.skipped;
                    continue;
                }
                line.theta0.push_back(theta0);
                line.theta1.push_back(theta1);
            } catch (const no_solution_error&) {
                ++line.skipped;
            }
        }
        panel.contours.push_back(std::move(line));
    }
    return panel;
}

Fig4Surface fig4_surface(double epsilon, double sigma_over_lambda0,
                         std::span<const double> phi_grid,
                         std::span<const double> theta1_grid) {
    require_finite(phi_grid, "fig4_surface");
    require_finite(theta1_grid, "fig4_surface");

    const double theta_min = xsection_minimum(epsilon).theta_min;
    std::vector<double> kept;
    kept.reserve(theta1_grid.size());
    std::size_t omitted = 0;
    for (double theta1 : theta1_grid) {
        if (theta1 >= theta_min && theta1 <= M_PI)
            kept.push_back(theta1);
        else
            ++omitted;
    }

    Fig4Surface surface;
    surface.omitted = omitted;
    surface.theta0.resize(kept.size());
    surface.overlap_magnitude.resize(kept.size());

    SweepGrid& g = surface.grid;
    g.x = {"phi_rad", "rad", {phi_grid.begin(), phi_grid.end()}};
    g.y = {"theta1_rad", "rad", std::move(kept)};
    g.value_name = "p_d";
    g.values.resize(g.y.values.size() * phi_grid.size());
    g.metadata = base_metadata("fig4");
    g.metadata["epsilon"] = format_sig9(epsilon);
    g.metadata["sigma_over_lambda0"] = format_sig9(sigma_over_lambda0);
    g.metadata["theta_min_rad"] = format_sig9(theta_min);
    g.metadata["angle_root_tol_rad"] = format_sig9(kAngleRootTolerance);
    g.metadata["lambda_c_m"] =
        format_sig9(PhysicalConstants{}.compton_wavelength());
    g.metadata["omitted_rows"] = std::to_string(omitted);

    parallel_rows(g.y.values.size(), [&](std::size_t i) {
        const AnglePair pair =
            equiprobable_pair_from_theta1(epsilon, g.y.values[i]);
        const InterferometerModel model =
            build_model(epsilon, pair, sigma_over_lambda0);
        surface.theta0[i] = pair.theta0;
        surface.overlap_magnitude[i] = model.overlap.magnitude;
        for (std::size_t j = 0; j < phi_grid.size(); ++j)
            g.values[i * phi_grid.size() + j] =
                detection_probability(model.overlap, phi_grid[j]);
    });
    return surface;
}

std::vector<double> default_theta1_grid(double epsilon, std::size_t rows) {
    if (rows == 0) throw domain_error("default_theta1_grid: need at least one row");
    const double theta_min = xsection_minimum(epsilon).theta_min;
    std::vector<double> grid(rows);
    const double span = M_PI - theta_min;
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = theta_min + span * static_cast<double>(i + 1) /
                                  static_cast<double>(grid.size());
    grid.back() = M_PI;
    return grid;
}

} // namespace comptonlab

#include "comptonlab/angle_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "comptonlab/constants.hpp"
#include "comptonlab/errors.hpp"
#include "comptonlab/klein_nishina.hpp"
#include "comptonlab/numerics.hpp"

namespace comptonlab {

namespace {

constexpr double kAngleTol = kAngleRootTolerance;

using detail::kn_dimensionless;

void validate_epsilon(double epsilon, const char* where) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw domain_error(std::string(where) + ": epsilon must be finite and positive");
}

// Everything the solvers need about one epsilon, computed once per call.
struct CurveContext {
    double epsilon;
    double theta_min;
    double kn_min;
    double kn_pi;
    double theta0_cut; // near-branch angle whose value equals kn_pi
};

CurveContext make_context(double epsilon) {
    CurveContext ctx;
    ctx.epsilon = epsilon;
    const XsectionMinimum m = xsection_minimum(epsilon);
    ctx.theta_min = m.theta_min;
    ctx.kn_min = m.value;
    ctx.kn_pi = kn_dimensionless(epsilon, M_PI);
    ctx.theta0_cut = numerics::bisect_root(
        [&](double th) { return kn_dimensionless(epsilon, th) - ctx.kn_pi; }, 0.0,
        ctx.theta_min, kAngleTol);
    return ctx;
}

double partner_in_context(const CurveContext& ctx, double theta0) {
    const double target = kn_dimensionless(ctx.epsilon, theta0);
    if (target > ctx.kn_pi) {
        // The curve terminus itself lands here through rounding; a value
        // this close to kn(pi) has its root at pi within the angle tolerance.
        if (target - ctx.kn_pi <= 1e-11) return M_PI;
        throw no_solution_error(
            "equiprobable_partner: no far-branch angle matches theta0 = " +
            std::to_string(theta0) + " (equiprobable curve has terminated)");
    }
    if (target <= ctx.kn_min) return ctx.theta_min;
    return numerics::bisect_root(
        [&](double th) { return kn_dimensionless(ctx.epsilon, th) - target; },
        ctx.theta_min, M_PI, kAngleTol);
}

double dlrel_from_ratios(double r0, double r1) {
    return std::abs(r1 - r0) / (0.5 * (r1 + r0));
}

AnglePair assemble_pair(double epsilon, double theta0, double theta1) {
    AnglePair p;
    p.theta0 = theta0;
    p.theta1 = theta1;
    p.epsilon = epsilon;
    p.xsection = kn_dimensionless(epsilon, theta0);
    const double r0 = 1.0 + epsilon * (1.0 - std::cos(theta0));
    const double r1 = 1.0 + epsilon * (1.0 - std::cos(theta1));
    p.delta_lambda_rel = dlrel_from_ratios(r0, r1);
    const double lambda0 = PhysicalConstants{}.compton_wavelength() / epsilon;
    p.lambda_theta0 = r0 * lambda0;
    p.lambda_theta1 = r1 * lambda0;
    return p;
}

} // namespace

AnglePair angle_pair(double epsilon, double theta0, double theta1) {
    validate_epsilon(epsilon, "angle_pair");
    if (!(theta0 >= 0.0 && theta0 <= M_PI) || !(theta1 >= 0.0 && theta1 <= M_PI))
        throw domain_error("angle_pair: angles must lie in [0, pi]");
    return assemble_pair(epsilon, theta0, theta1);
}

double equiprobable_partner(double epsilon, double theta0) {
    validate_epsilon(epsilon, "equiprobable_partner");
    if (!(theta0 >= 0.0 && theta0 <= M_PI))
        throw domain_error("equiprobable_partner: theta0 must lie in [0, pi]");
    const CurveContext ctx = make_context(epsilon);
    if (theta0 >= ctx.theta_min)
        throw domain_error("equiprobable_partner: theta0 must lie below the "
                           "cross-section minimum at " +
                           std::to_string(ctx.theta_min));
    return partner_in_context(ctx, theta0);
}

AnglePair equiprobable_pair_from_theta1(double epsilon, double theta1) {
    validate_epsilon(epsilon, "equiprobable_pair_from_theta1");
    const CurveContext ctx = make_context(epsilon);
    if (!(theta1 >= ctx.theta_min && theta1 <= M_PI))
        throw domain_error("equiprobable_pair_from_theta1: theta1 must lie in "
                           "[theta_min, pi]");
    const double target = kn_dimensionless(epsilon, theta1);
    double theta0 = ctx.theta_min;
    if (target > ctx.kn_min)
        theta0 = numerics::bisect_root(
            [&](double th) { return kn_dimensionless(epsilon, th) - target; }, 0.0,
            ctx.theta_min, kAngleTol);
    return assemble_pair(epsilon, theta0, theta1);
}

EquiprobableCurve equiprobable_curve(double epsilon, std::size_t n_points) {
    validate_epsilon(epsilon, "equiprobable_curve");
    if (n_points < 2)
        throw domain_error("equiprobable_curve: need at least two sample points");
    const CurveContext ctx = make_context(epsilon);

    EquiprobableCurve curve;
    curve.pairs.reserve(n_points + 1);
    for (std::size_t k = 0; k < n_points; ++k) {
        const double theta0 =
            ctx.theta_min * static_cast<double>(k) / static_cast<double>(n_points);
        const double value = kn_dimensionless(epsilon, theta0);
        if (value > ctx.kn_pi) {
            ++curve.skipped;
            continue;
        }
        curve.pairs.push_back(
            assemble_pair(epsilon, theta0, partner_in_context(ctx, theta0)));
    }
    curve.pairs.push_back(assemble_pair(epsilon, ctx.theta_min, ctx.theta_min));
    return curve;
}

double delta_lambda_rel(double epsilon, double theta0, double theta1) {
    validate_epsilon(epsilon, "delta_lambda_rel");
    if (!(theta0 >= 0.0 && theta0 <= M_PI) || !(theta1 >= 0.0 && theta1 <= M_PI))
        throw domain_error("delta_lambda_rel: angles must lie in [0, pi]");
    const double r0 = 1.0 + epsilon * (1.0 - std::cos(theta0));
    const double r1 = 1.0 + epsilon * (1.0 - std::cos(theta1));
    return dlrel_from_ratios(r0, r1);
}

double contour_theta1(double epsilon, double theta0, double target) {
    validate_epsilon(epsilon, "contour_theta1");
    if (!(theta0 >= 0.0 && theta0 <= M_PI))
        throw domain_error("contour_theta1: theta0 must lie in [0, pi]");
    if (!std::isfinite(target) || target < 0.0 || target >= 2.0)
        throw domain_error("contour_theta1: target must lie in [0, 2)");
    if (target == 0.0) return theta0;

    const double c0 = std::cos(theta0);
    double c1 = (c0 * epsilon * (1.0 + 0.5 * target) - target * (1.0 + epsilon)) /
                (epsilon * (1.0 - 0.5 * target));
    if (c1 < -1.0 || c1 > 1.0) {
        if (std::abs(c1) <= 1.0 + 1e-12) {
            c1 = std::clamp(c1, -1.0, 1.0);
        } else {
            throw no_solution_error(
                "contour_theta1: the contour at target " + std::to_string(target) +
                " does not reach theta0 = " + std::to_string(theta0));
        }
    }
    return std::acos(c1);
}

AnglePair select_pair(double epsilon, double target_dlrel) {
    validate_epsilon(epsilon, "select_pair");
    if (!std::isfinite(target_dlrel) || target_dlrel < 0.0)
        throw domain_error("select_pair: target must be finite and nonnegative");
    const CurveContext ctx = make_context(epsilon);
    if (target_dlrel == 0.0)
        return assemble_pair(epsilon, ctx.theta_min, ctx.theta_min);

    const AnglePair terminus = assemble_pair(epsilon, ctx.theta0_cut, M_PI);
    if (target_dlrel > terminus.delta_lambda_rel)
        throw no_solution_error(
            "select_pair: target " + std::to_string(target_dlrel) +
            " exceeds the maximum delta_lambda_rel " +
            std::to_string(terminus.delta_lambda_rel) + " on the equiprobable curve");
    if (target_dlrel == terminus.delta_lambda_rel) return terminus;

    const auto curve_dlrel = [&](double theta0) {
        const double theta1 = partner_in_context(ctx, theta0);
        const double r0 = 1.0 + epsilon * (1.0 - std::cos(theta0));
        const double r1 = 1.0 + epsilon * (1.0 - std::cos(theta1));
        return dlrel_from_ratios(r0, r1) - target_dlrel;
    };
    const double theta0 = numerics::bisect_root(curve_dlrel, ctx.theta0_cut,
                                                ctx.theta_min, kAngleTol);
    return assemble_pair(epsilon, theta0, partner_in_context(ctx, theta0));
}

CurveMaximum max_delta_lambda_rel(double epsilon) {
    validate_epsilon(epsilon, "max_delta_lambda_rel");
    const CurveContext ctx = make_context(epsilon);
    CurveMaximum m;
    m.at_pair = assemble_pair(epsilon, ctx.theta0_cut, M_PI);
    m.value = m.at_pair.delta_lambda_rel;
    return m;
}

} // namespace comptonlab

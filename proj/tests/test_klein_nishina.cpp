#include <doctest.h>

#include <cmath>

#include "comptonlab/constants.hpp"
#include "comptonlab/errors.hpp"
#include "comptonlab/klein_nishina.hpp"

using namespace comptonlab;

TEST_CASE("diff_cross_section") {
    SUBCASE("forward value is exactly one for any epsilon") {
        for (double eps : {1e-8, 1e-3, 0.0242631, 0.242631}) {
            const CrossSectionValue v = diff_cross_section(eps, 0.0);
            CHECK(v.value_dimensionless == 1.0);
        }
    }

    SUBCASE("Thomson limit at a right angle") {
        CHECK(std::abs(diff_cross_section(1e-9, M_PI / 2).value_dimensionless - 0.5) <
              1e-8);
    }

    SUBCASE("backscatter at epsilon = 0.24263") {
        // 0.5 r^-2 (r^-1 + r) with r = 1.48526
        CHECK(std::abs(diff_cross_section(0.24263, M_PI).value_dimensionless -
                       0.489244213) < 1e-9);
    }

    SUBCASE("absolute value attaches r0 squared") {
        const double r0 = PhysicalConstants{}.classical_electron_radius();
        const CrossSectionValue v = diff_cross_section(0.1, 1.0);
        CHECK(v.value_absolute == v.value_dimensionless * r0 * r0);
        CHECK(v.value_absolute < 8e-30); // r0^2 is about 7.94e-30 m^2
    }

    SUBCASE("bounded in (0, 1]") {
        for (double eps : {1e-6, 0.0242631, 0.242631}) {
            for (int i = 0; i <= 256; ++i) {
                const double v =
                    diff_cross_section(eps, M_PI * i / 256).value_dimensionless;
                CHECK(v > 0.0);
                CHECK(v <= 1.0);
            }
        }
    }

    SUBCASE("decreasing in epsilon at fixed angle") {
        for (int i = 1; i <= 16; ++i) {
            const double theta = M_PI * i / 16;
            double prev = diff_cross_section(1e-6, theta).value_dimensionless;
            for (double eps : {0.01, 0.05, 0.1, 0.2, 0.25}) {
                const double cur = diff_cross_section(eps, theta).value_dimensionless;
                CHECK(cur < prev);
                prev = cur;
            }
        }
    }

    CHECK_THROWS_AS(diff_cross_section(-0.1, 1.0), domain_error);
    CHECK_THROWS_AS(diff_cross_section(0.1, -1.0), domain_error);
    CHECK_THROWS_AS(diff_cross_section(0.1, 3.2), domain_error);
}

TEST_CASE("thomson_reference") {
    CHECK(thomson_reference(0.0) == 1.0);
    CHECK(thomson_reference(M_PI / 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(thomson_reference(M_PI) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Thomson limit across all angles") {
    for (int i = 0; i <= 1024; ++i) {
        const double theta = M_PI * i / 1024;
        CHECK(std::abs(diff_cross_section(1e-6, theta).value_dimensionless -
                       thomson_reference(theta)) < 1e-5);
    }
}

TEST_CASE("xsection_minimum") {
    SUBCASE("tiny epsilon sits at a right angle") {
        const XsectionMinimum m = xsection_minimum(1e-6);
        CHECK(std::abs(m.theta_min - M_PI / 2) < 1e-4);
        CHECK(m.value == doctest::Approx(0.5).epsilon(1e-5));
    }

    SUBCASE("moderate epsilon sits just above a right angle") {
        const XsectionMinimum m = xsection_minimum(0.0243);
        CHECK(m.theta_min > M_PI / 2);
        CHECK(m.theta_min - M_PI / 2 < 0.1);
        CHECK(std::abs(m.theta_min - 1.593953553) < 1e-6);
    }

    SUBCASE("golden section agrees with a brute-force scan") {
        for (double eps : {0.0242631, 0.242631}) {
            const XsectionMinimum m = xsection_minimum(eps);
            double best_theta = 0.0;
            double best = 2.0;
            const int n = 31416; // about 1e-4 rad steps
            for (int i = 0; i <= n; ++i) {
                const double theta = M_PI * i / n;
                const double v = diff_cross_section(eps, theta).value_dimensionless;
                if (v < best) {
                    best = v;
                    best_theta = theta;
                }
            }
            CHECK(std::abs(m.theta_min - best_theta) < 1.5e-4);
            CHECK(m.value <= best + 1e-12);
        }
    }

    SUBCASE("cross section is V-shaped around the minimum") {
        const double eps = 0.242631;
        const double theta_min = xsection_minimum(eps).theta_min;
        const int n = 2000;
        double prev = diff_cross_section(eps, 0.0).value_dimensionless;
        for (int i = 1; i <= n; ++i) {
            const double theta = M_PI * i / n;
            const double cur = diff_cross_section(eps, theta).value_dimensionless;
            if (theta < theta_min - 1e-3)
                CHECK(cur < prev);
            else if (theta > theta_min + 1e-3 && M_PI * (i - 1) / n > theta_min)
                CHECK(cur > prev);
            prev = cur;
        }
    }
}

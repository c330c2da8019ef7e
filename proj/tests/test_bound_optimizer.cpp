#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <sievebound/bound_optimizer.hpp>
#include <sievebound/quadrature.hpp>

using namespace sievebound;

namespace {

// Paper-published table: k, beta0, r(k,beta0), integer r.
struct TableRow {
    int k;
    double beta0;
    double r_real;
    int r_int;
};
constexpr TableRow kSmallDegreeTable[] = {
    {2, 0.54, 4.2, 5},  {3, 0.60, 5.9, 6},   {4, 0.64, 7.6, 8},
    {5, 0.68, 9.1, 10}, {6, 0.71, 10.5, 11}, {7, 0.73, 11.9, 12},
    {8, 0.76, 13.2, 14}, {9, 0.77, 14.5, 15}, {10, 0.79, 15.8, 16},
};

}  // namespace

TEST_CASE("solve_delta0 finds the published crossover") {
    const SieveConstants c;
    const double d0 = solve_delta0(c);
    CHECK(d0 == Catch::Approx(0.456).margin(1e-3));
    // residual of the defining equation 2 A1 (1-d)^2 = e^{-gamma} A2 (1-2d)
    const double lhs = 2.0 * c.a1 * (1.0 - d0) * (1.0 - d0);
    const double rhs = std::exp(-c.gamma) * c.a2 * (1.0 - 2.0 * d0);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
}

TEST_CASE("solve_delta0 degenerate and infeasible constants") {
    SieveConstants c;
    // e^{-gamma} A2 = 2 A1 collapses the quadratic to delta^2 = 0
    c.a2 = 2.0 * c.a1 * std::exp(c.gamma);
    CHECK(solve_delta0(c) == Catch::Approx(0.0).margin(1e-12));
    c.a2 = 10.0;  // T < 1: no real root
    CHECK_THROWS_AS(solve_delta0(c), NoRootInRange);
}

TEST_CASE("integral_one: closed form against quadrature") {
    const auto integrand = [](double beta0) {
        return [beta0](double s) { return (1.0 / s - 1.0 / beta0) / (1.0 - 2.0 * s); };
    };
    CHECK(integral_one(0.3, 0.3, 0.7) == 0.0);  // empty interval
    const double v = integral_one(0.125, 0.456, 0.60);
    const double q = integrate(integrand(0.60), 0.125, 0.456, 1e-13);
    CHECK(v == Catch::Approx(q).margin(1e-9));
    CHECK_THROWS_AS(integral_one(0.2, 0.55, 0.7), DomainError);
    CHECK_THROWS_AS(integral_one(0.0, 0.3, 0.7), DomainError);
}

TEST_CASE("integral_one: antiderivative matches integrand by finite differences") {
    const double beta0 = 0.7;
    const double s = 0.3;
    const double h = 1e-6;
    const double deriv =
        (integral_one(0.125, s + h, beta0) - integral_one(0.125, s - h, beta0)) / (2.0 * h);
    const double integrand = (1.0 / s - 1.0 / beta0) / (1.0 - 2.0 * s);
    CHECK(deriv == Catch::Approx(integrand).margin(1e-8));
}

TEST_CASE("integral_two: closed form against quadrature") {
    const auto integrand = [](double beta0) {
        return [beta0](double s) {
            return (1.0 / s - 1.0 / beta0) / ((1.0 - s) * (1.0 - s));
        };
    };
    CHECK(integral_two(0.5, 0.5) == 0.0);
    const double v = integral_two(0.456, 0.79);
    const double q = integrate(integrand(0.79), 0.456, 0.79, 1e-13);
    CHECK(v == Catch::Approx(q).margin(1e-9));
    CHECK_THROWS_AS(integral_two(0.4, 1.0), DomainError);
}

TEST_CASE("integral_two grows like log k when beta0 = 1 - 1/k") {
    const double d0 = 0.456991;
    for (const int k : {10, 100, 1000}) {
        const double v = integral_two(d0, 1.0 - 1.0 / k);
        CHECK(std::abs(v - std::log(static_cast<double>(k))) < 3.0);
    }
}

TEST_CASE("closed forms agree with quadrature on random parameters") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double a0 = 0.02 + 0.3 * unif(rng);
        const double d0 = a0 + (0.49 - a0) * unif(rng);
        const double b0 = 0.05 + 0.9 * unif(rng);
        const double got1 = integral_one(a0, d0, b0);
        const double want1 = integrate(
            [b0](double s) { return (1.0 / s - 1.0 / b0) / (1.0 - 2.0 * s); }, a0, d0, 1e-13);
        CHECK(got1 == Catch::Approx(want1).margin(1e-9));

        const double lo = 0.05 + 0.5 * unif(rng);
        const double hi = lo + (0.98 - lo) * unif(rng);
        const double got2 = integral_two(lo, hi);
        const double want2 = integrate(
            [hi](double s) { return (1.0 / s - 1.0 / hi) / ((1.0 - s) * (1.0 - s)); }, lo, hi,
            1e-13);
        CHECK(got2 == Catch::Approx(want2).margin(1e-9));
    }
}

TEST_CASE("r_bound reproduces the published r(k, beta0) row") {
    for (const auto& row : kSmallDegreeTable) {
        CHECK(r_bound(row.k, row.beta0) == Catch::Approx(row.r_real).margin(0.05));
    }
}

TEST_CASE("r_bound is strictly increasing in k at fixed beta0") {
    for (const double beta0 : {0.6, 0.7, 0.85}) {
        double prev = r_bound(2, beta0);
        for (int k = 3; k <= 12; ++k) {
            const double cur = r_bound(k, beta0);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("r_bound rejects beta0 outside (delta0, 1)") {
    CHECK_THROWS_AS(r_bound(3, 0.3), DomainError);
    CHECK_THROWS_AS(r_bound(3, 1.0), DomainError);
    CHECK_THROWS_AS(r_bound(1, 0.6), DomainError);
}

TEST_CASE("r_bound_general matches the closed form at the specialisation") {
    const SieveConstants c;
    const double d0 = solve_delta0(c);
    for (const auto& row : kSmallDegreeTable) {
        const BoundParams p{row.k, 0.125, d0, row.beta0};
        CHECK(r_bound_general(p) == Catch::Approx(r_bound(row.k, row.beta0)).margin(1e-6));
    }
    CHECK(r_bound_general({5, 0.125, d0, 0.68}) == Catch::Approx(9.1).margin(0.05));
}

TEST_CASE("r_bound_general rejects parameters outside the explicit forms") {
    // 1/(2*alpha0) < 2 leaves the lower_f1 range
    CHECK_THROWS_AS(r_bound_general({3, 0.3, 0.39, 0.6}), RangeUnavailable);
    CHECK_THROWS_AS(r_bound_general({3, 0.125, 0.6, 0.7}), DomainError);  // delta0 >= 1/2
}

TEST_CASE("minimize_r reproduces the published integer bounds") {
    const int expected[] = {5, 6, 8, 10, 11, 12, 14, 15, 16};  // k = 2..10
    for (int k = 2; k <= 10; ++k) {
        const BoundResult res = minimize_r(k);
        CHECK(res.r_int == expected[k - 2]);
        CHECK(res.constraint_ok);
        CHECK(res.r_int == static_cast<int>(std::floor(res.r_real)) + 1);
    }
    CHECK(minimize_r(4).beta0_opt == Catch::Approx(0.64).margin(0.02));
}

TEST_CASE("minimize_r finds a local minimum") {
    for (const int k : {3, 7, 10}) {
        const BoundResult res = minimize_r(k);
        CHECK(r_bound(k, res.beta0_opt + 1e-3) >= res.r_real - 1e-9);
        CHECK(r_bound(k, res.beta0_opt - 1e-3) >= res.r_real - 1e-9);
        // never worse than the published choice
        CHECK(res.r_real <= r_bound(k, kSmallDegreeTable[k - 2].beta0) + 1e-9);
    }
}

TEST_CASE("asymptotic_constant") {
    const SieveConstants c;
    const double value = asymptotic_constant(c);
    CHECK(value == Catch::Approx(3.120).margin(1e-3));
    // the two printed forms coincide because A1 = 2 e^gamma
    const double other = std::exp(-c.gamma) * c.a2 / (2.0 * c.a1 * std::log(3.0));
    CHECK(value == Catch::Approx(other).epsilon(1e-12));
    SieveConstants doubled = c;
    doubled.a2 *= 2.0;
    CHECK(asymptotic_constant(doubled) == Catch::Approx(2.0 * value).epsilon(1e-12));
    CHECK(asymptotic_constant(doubled) == Catch::Approx(6.241).margin(2e-3));
}

TEST_CASE("large_k_profile residuals stay in a narrow band") {
    double lo = 1e300, hi = -1e300;
    for (const int k : {10, 100, 1000, 10000}) {
        const double res = large_k_profile(k);
        lo = std::min(lo, res);
        hi = std::max(hi, res);
    }
    CHECK(hi - lo <= 2.0);
    CHECK_THROWS_AS(large_k_profile(2), DomainError);
}

TEST_CASE("betacond holds for beta0 = 1 - 1/k at k = 1000") {
    const int k = 1000;
    const double r = r_bound(k, 1.0 - 1.0 / k);
    const int r_int = static_cast<int>(std::floor(r)) + 1;
    CHECK(1.0 / k - 1.0 / (static_cast<double>(k) * k) > 1.0 / (r_int + 1.0));
}

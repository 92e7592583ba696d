#include <cmath>

#include <doctest.h>

#include "recomb/bgp.hpp"
#include "recomb/params.hpp"
#include "recomb/statics.hpp"

using namespace recomb;

namespace {

ModelParams unit_power_params() {
    ModelParams p = default_params();
    p.m = 4.0;
    p.phi = 0.5;
    p.alpha = 0.5;
    p.kappa = 0.5;
    return p;
}

// Closed-form long-run limit of the distance locus, assembled independently.
double distance_locus_limit(const ModelParams& p) {
    const double lambda = std::exp(p.phi * std::log(p.m) + p.kappa * std::log(p.alpha) +
                                   (1.0 - p.kappa) * std::log1p(-p.alpha));
    const double q = p.eta / (1.0 - p.epsilon);
    return std::pow(q / (p.beta / lambda + p.theta), 1.0 / (1.0 - p.eta));
}

}  // namespace

TEST_CASE("distance locus: pinned zero-competition value and monotone decay") {
    ModelParams p = unit_power_params();
    p.eta = 0.5;
    p.epsilon = 0.5;
    p.beta = 1.0;
    CHECK(distance_locus(0.0, p) == doctest::Approx(1.0).epsilon(1e-13));

    double prev = distance_locus(0.0, p);
    for (double n : {0.1, 0.5, 1.0, 3.0, 10.0, 100.0}) {
        const double d = distance_locus(n, p);
        CHECK(d < prev);
        prev = d;
    }
    // Far tail approaches the closed-form limit from above.
    const double limit = distance_locus_limit(p);
    CHECK(distance_locus(1e12, p) == doctest::Approx(limit).epsilon(1e-9));
    CHECK(prev > limit);

    CHECK_THROWS_AS(distance_locus(-1.0, p), std::domain_error);
}

TEST_CASE("entry locus: pinned value at a unit coefficient ratio") {
    // Price level chosen so the payoff and cost coefficients coincide, making
    // the locus equal (1 + d^eta)^(1/(1-eps)) - r on the nose.
    ModelParams p = default_params();
    p.alpha = 0.5;
    p.m = 2.0;
    p.epsilon = 0.5;
    p.eta = 0.5;
    p.r = 0.1;
    p.l_bar = 1.0;
    p.mu_bar = 0.125;
    CHECK(entry_locus(1.0, p) == doctest::Approx(3.9).epsilon(1e-12));
    CHECK(entry_locus(0.0, p) == doctest::Approx(0.9).epsilon(1e-12));

    double prev = entry_locus(0.0, p);
    for (double d : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const double e = entry_locus(d, p);
        CHECK(e > prev);
        prev = e;
    }
    CHECK_THROWS_AS(entry_locus(-0.5, p), std::domain_error);
}

TEST_CASE("equilibrium gap: positive at zero, negative past the envelope, zero at the root") {
    const ModelParams p = default_params();
    const double phi0 = phi_gap(0.0, p);
    CHECK(phi0 == doctest::Approx(3.5012382163726748857).epsilon(1e-10));
    CHECK(phi_gap(phi0 + 1.0, p) < 0.0);

    const BgpSolution sol = solve_bgp(p);
    CHECK(std::abs(phi_gap(sol.n_star, p)) < 1e-10);
}

TEST_CASE("balanced-path solution at the default parameterization") {
    const ModelParams p = default_params();
    const BgpSolution sol = solve_bgp(p);

    CHECK(sol.n_star == doctest::Approx(1.3338707472476656946).epsilon(1e-9));
    CHECK(sol.d_star == doctest::Approx(0.39043316903222136081).epsilon(1e-9));
    CHECK(sol.growth_per_innovation ==
          doctest::Approx(0.56875866149251950216).epsilon(1e-9));
    CHECK(sol.arrival_flow == doctest::Approx(1.3947765330303249053).epsilon(1e-9));
    CHECK(sol.jacobian_det == doctest::Approx(1.0179843621764961603).epsilon(1e-9));

    CHECK(sol.phi_residual < 1e-10);
    CHECK(sol.distance_residual < 1e-12);
    CHECK(sol.growth_per_innovation ==
          std::pow(sol.d_star, p.eta));  // identical evaluation path

    // Interior distance bracketed by the locus limits.
    CHECK(sol.d_star <= distance_locus(0.0, p));
    CHECK(sol.d_star >= distance_locus_limit(p));

    // Assumption diagnostics evaluated at the solution.
    CHECK(sol.assumptions.a1);
    CHECK(sol.assumptions.a1_excess ==
          doctest::Approx(11.202553770197198096).epsilon(1e-8));
    CHECK(sol.assumptions.a2_evaluated);
    CHECK_FALSE(sol.assumptions.a2);  // research labor is not negligible here
    CHECK(sol.assumptions.a2_ratio ==
          doctest::Approx(2.1435539209883359276).epsilon(1e-8));
    CHECK(sol.assumptions.a2_threshold == 0.05);
    CHECK(sol.assumptions.a3);
    CHECK(sol.assumptions.a3_margin ==
          doctest::Approx(0.11435800778757908252).epsilon(1e-8));
}

TEST_CASE("determinant accessor matches the stored diagnostic and exceeds one") {
    const ModelParams p = default_params();
    const BgpSolution sol = solve_bgp(p);
    CHECK(jacobian_determinant(sol, p) == sol.jacobian_det);
    CHECK(sol.jacobian_det > 1.0);

    const LocusPartials lp = locus_partials(sol, p);
    CHECK(lp.e_d == doctest::Approx(1.2850520245016836853).epsilon(1e-9));
    CHECK(lp.r_n == doctest::Approx(-0.013995045985371775145).epsilon(1e-9));
    CHECK(sol.jacobian_det == doctest::Approx(1.0 - lp.e_d * lp.r_n).epsilon(1e-14));
}

TEST_CASE("costlier waiting thins entry: the root falls as the discount rate rises") {
    ModelParams p = default_params();
    double prev = 1e300;
    for (double r : {0.03, 0.05, 0.08, 0.12, 0.2}) {
        p.r = r;
        const double n = solve_bgp(p).n_star;
        CHECK(n < prev);
        prev = n;
    }
}

TEST_CASE("unprofitable entry is reported as the dedicated error") {
    ModelParams p = default_params();
    p.mu_bar = 1e8;  // 1e6 still leaves a sliver of profitable entry here
    CHECK_THROWS_AS(solve_bgp(p), NoEntryError);
    CHECK_THROWS_WITH_AS(solve_bgp(p), doctest::Contains("free entry"), NoEntryError);
}

TEST_CASE("false-position refinement lands on the same root") {
    const ModelParams p = default_params();
    const BgpSolution plain = solve_bgp(p);
    BgpSolveOptions opt;
    opt.secant_refine = true;
    const BgpSolution refined = solve_bgp(p, opt);
    CHECK(refined.n_star == doctest::Approx(plain.n_star).epsilon(1e-9));
    CHECK(refined.phi_residual < 1e-10);
}

TEST_CASE("spillover condition gets easier to satisfy as AI productivity rises") {
    ModelParams p = default_params();
    p.theta = 0.45;  // close to the default beta/lambda so the flag can flip
    double prev_margin = -1e300;
    bool seen_true = false;
    for (double m : {1.2, 1.6, 2.0, 3.0, 5.0, 8.0}) {
        p.m = m;
        const ValidationReport rep = validate_params(p);
        CHECK(rep.a3_margin > prev_margin);
        prev_margin = rep.a3_margin;
        if (seen_true) CHECK(rep.a3);  // once satisfied, stays satisfied
        seen_true = seen_true || rep.a3;
    }
    CHECK(seen_true);
}

TEST_CASE("assumption report without a firm count leaves the labor ratio unevaluated") {
    const ValidationReport rep = validate_params(default_params());
    CHECK(rep.a1);
    CHECK_FALSE(rep.a2_evaluated);
    CHECK(rep.a2);  // true by convention until a solution supplies n
    CHECK(std::isnan(rep.a2_ratio));

    const ValidationReport at_n = validate_params(default_params(), 1.3338707472476657);
    CHECK(at_n.a2_evaluated);
    CHECK_FALSE(at_n.a2);
    CHECK(at_n.a2_ratio == doctest::Approx(2.1435539209883359276).epsilon(1e-8));

    // A looser threshold flips the flag, ratio unchanged.
    const ValidationReport loose = validate_params(default_params(), 1.3338707472476657, 3.0);
    CHECK(loose.a2);
    CHECK(loose.a2_threshold == 3.0);
}

TEST_CASE("a3 boundary is strict") {
    // Unit power index: theta exactly equal to beta fails, slightly above passes.
    ModelParams p = unit_power_params();
    p.beta = 0.5;
    p.theta = 0.5;
    CHECK_FALSE(validate_params(p).a3);
    p.theta = 0.50001;
    CHECK(validate_params(p).a3);
}

TEST_CASE("ballooning AI prices break zero-competition entry") {
    ModelParams p = default_params();
    p.mu_bar = 1e6;
    const ValidationReport rep = validate_params(p);
    CHECK_FALSE(rep.a1);
    CHECK(rep.a1_excess < 0.0);
}

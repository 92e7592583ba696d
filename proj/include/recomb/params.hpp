#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace recomb {

/// Structural parameters of the recombinant-growth model.
///
/// All quantities are per-period (one period = one innovation epoch).
/// Validity is the open-box below; validate() enforces it and r_bar == 1
/// (the network-radius normalization the distance units are quoted in).
struct ModelParams {
    double alpha;    // AI task share in research, strictly inside (0,1)
    double m;        // AI productivity multiple, > 1
    double phi;      // exponent of m in AI power, in (0,1)
    double kappa;    // AI-share exponent in AI power, in (0,1)
    double beta;     // distance cost of recombination, > 0
    double eta;      // curvature of the payoff to distance, in (0,1)
    double theta;    // spillover of distance into next-period arrival scale, in (0,1)
    double epsilon;  // demand curvature (inverse elasticity), in (0,1)
    double r;        // per-period discount rate, > 0
    double mu_bar;   // AI price per unit of knowledge, > 0
    double l_bar;    // labor endowment, > 0
    double r_bar;    // network radius normalization; must equal 1

    // Every violated rule, one message each; empty when valid.
    std::vector<std::string> violations() const;
    bool is_valid() const { return violations().empty(); }
    // Throws std::invalid_argument listing all violations.
    void validate() const;
};

/// Coefficients that scale linearly-with-knowledge quantities.
/// All four are evaluated in log space (products of powers).
struct DerivedConstants {
    double wage_coef;    // wage per unit knowledge: l_bar^(eps-1) * eps^2
    double profit_coef;  // monopoly profit per unit knowledge at that wage
    double unit_cost;    // recombination cost per unit knowledge at (wage_coef, mu_bar)
    double ai_power;     // m^phi * alpha^kappa * (1-alpha)^(1-kappa)
};

DerivedConstants derived_constants(const ModelParams& p);

/// Diagnostic flags for the three modeling assumptions.
/// a2 is an ex-post check that needs the equilibrium firm count; until one is
/// supplied it stays unevaluated (flag true by convention, ratio NaN).
struct ValidationReport {
    bool a1;            // entry profitable with no competitors
    bool a2;            // research labor negligible next to production labor
    bool a3;            // spillover strong enough for an interior optimum
    double a1_excess;   // (discounted entry value / cost) - 1 at the zero-entry distance
    double a2_ratio;    // n * l / x*, NaN until evaluated at a solution
    double a2_threshold;
    bool a2_evaluated;
    double a3_margin;   // theta - beta/ai_power
};

constexpr double kDefaultA2Threshold = 0.05;

ValidationReport validate_params(const ModelParams& p,
                                 std::optional<double> n_star = std::nullopt,
                                 double a2_threshold = kDefaultA2Threshold);

/// One period of the exact dynamic system.
struct EconomyState {
    std::int64_t t;  // period index
    double a;        // knowledge stock
    double w;        // wage
    double mu;       // AI price
    double n;        // mass of research firms
    double d;        // chosen recombination distance
};

/// The parameterization the shipped configs and figure-style runs use.
ModelParams default_params();

}  // namespace recomb

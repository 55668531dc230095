#pragma once

#include <optional>
#include <string>

namespace sim {

/// Coefficient family for the diffusivity D(v) or the sensitivity S(v).
/// D must stay strictly positive on [0,inf); S must be nondecreasing with
/// bounded value and slope. Which constraints apply is decided at validation
/// time by CoeffKind.
struct CoefficientSpec {
    enum class Family { constant, exp_decay, saturating, bounded_smooth };
    Family family = Family::constant;
    double p0 = 1.0;    // constant: c; exp_decay: lambda; saturating: a
    double p1 = 0.0;    // saturating: b
    std::string preset; // bounded_smooth: "tanh" | "arctan" | "sigmoid"

    static CoefficientSpec constant(double c);
    static CoefficientSpec exp_decay(double lambda);
    static CoefficientSpec saturating(double a, double b);
    static CoefficientSpec bounded_smooth(const std::string& preset);

    /// Human-readable form, identical to the config-file syntax,
    /// e.g. "exp_decay(1.5)".
    std::string to_string() const;

    /// Parse the config-file syntax; returns nullopt with a message on error.
    static std::optional<CoefficientSpec> parse(const std::string& text, std::string* error);
};

enum class CoeffKind { D, S };

double eval_D(const CoefficientSpec& spec, double v);
double eval_S(const CoefficientSpec& spec, double v);
double eval_S_prime(const CoefficientSpec& spec, double v);

struct ValidationReport {
    bool pass = true;
    double first_violation_v = 0.0;
    std::string message; // names the failed inequality when pass == false
};

/// Samples v on a dense grid of [0, probe_max] and checks the class
/// constraints: D > 0 (certified analytically for families that can
/// underflow), S' >= 0, and finiteness of sup|S| + sup|S'|.
ValidationReport validate_spec(const CoefficientSpec& spec, CoeffKind kind,
                               double probe_max, int samples = 4096);

/// Full parameterization of the model: eta selects elliptic (0) or parabolic
/// (1) signal dynamics, r/mu the logistic source, alpha the log exponent of
/// the cross-diffusion rate.
struct ModelParams {
    int eta = 0;
    double r = 0.0;
    double mu = 0.0;
    double alpha = 0.0;
    CoefficientSpec dspec = CoefficientSpec::constant(1.0);
    CoefficientSpec sspec = CoefficientSpec::constant(1.0);

    /// True iff (eta=0, alpha in (0,1)) or (eta=1, alpha in (0,1/2));
    /// runs outside this regime are permitted but labeled exploratory.
    bool theorem_regime() const;
};

} // namespace sim

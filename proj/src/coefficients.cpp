#include "sim/coefficients.hpp"

#include "sim/field_io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sim {

CoefficientSpec CoefficientSpec::constant(double c) {
    CoefficientSpec s;
    s.family = Family::constant;
    s.p0 = c;
    return s;
}

CoefficientSpec CoefficientSpec::exp_decay(double lambda) {
    CoefficientSpec s;
    s.family = Family::exp_decay;
    s.p0 = lambda;
    return s;
}

CoefficientSpec CoefficientSpec::saturating(double a, double b) {
    CoefficientSpec s;
    s.family = Family::saturating;
    s.p0 = a;
    s.p1 = b;
    return s;
}

CoefficientSpec CoefficientSpec::bounded_smooth(const std::string& preset) {
    CoefficientSpec s;
    s.family = Family::bounded_smooth;
    s.preset = preset;
    return s;
}

std::string CoefficientSpec::to_string() const {
    switch (family) {
        case Family::constant: return "constant(" + format_double(p0) + ")";
        case Family::exp_decay: return "exp_decay(" + format_double(p0) + ")";
        case Family::saturating:
            return "saturating(" + format_double(p0) + ", " + format_double(p1) + ")";
        case Family::bounded_smooth: return "bounded_smooth(" + preset + ")";
    }
    return "?";
}

namespace {

void check_domain(double v) {
    if (v < 0.0)
        throw std::domain_error("coefficient evaluated at v < 0 "
                                "(signals a positivity violation upstream)");
}

double eval_value(const CoefficientSpec& s, double v) {
    switch (s.family) {
        case CoefficientSpec::Family::constant: return s.p0;
        case CoefficientSpec::Family::exp_decay: return std::exp(-s.p0 * v);
        case CoefficientSpec::Family::saturating: return s.p0 * v / (s.p1 + v);
        case CoefficientSpec::Family::bounded_smooth:
            if (s.preset == "tanh") return std::tanh(v);
            if (s.preset == "arctan") return 2.0 / M_PI * std::atan(v);
            if (s.preset == "sigmoid") return 1.0 / (1.0 + std::exp(-v));
            throw std::invalid_argument("unknown bounded_smooth preset: " + s.preset);
    }
    throw std::logic_error("unreachable coefficient family");
}

double eval_derivative(const CoefficientSpec& s, double v) {
    switch (s.family) {
        case CoefficientSpec::Family::constant: return 0.0;
        case CoefficientSpec::Family::exp_decay: return -s.p0 * std::exp(-s.p0 * v);
        case CoefficientSpec::Family::saturating: {
            double d = s.p1 + v;
            return s.p0 * s.p1 / (d * d);
        }
        case CoefficientSpec::Family::bounded_smooth: {
            if (s.preset == "tanh") {
                double c = std::cosh(v);
                return 1.0 / (c * c);
            }
            if (s.preset == "arctan") return 2.0 / M_PI / (1.0 + v * v);
            if (s.preset == "sigmoid") {
                double g = 1.0 / (1.0 + std::exp(-v));
                return g * (1.0 - g);
            }
            throw std::invalid_argument("unknown bounded_smooth preset: " + s.preset);
        }
    }
    throw std::logic_error("unreachable coefficient family");
}

} // namespace

double eval_D(const CoefficientSpec& spec, double v) {
    check_domain(v);
    return eval_value(spec, v);
}

double eval_S(const CoefficientSpec& spec, double v) {
    check_domain(v);
    return eval_value(spec, v);
}

double eval_S_prime(const CoefficientSpec& spec, double v) {
    check_domain(v);
    return eval_derivative(spec, v);
}

ValidationReport validate_spec(const CoefficientSpec& spec, CoeffKind kind,
                               double probe_max, int samples) {
    if (!(probe_max > 0.0)) throw std::invalid_argument("validate_spec: probe_max must be > 0");
    ValidationReport rep;
    auto fail = [&](double v, const std::string& msg) {
        if (rep.pass) {
            rep.pass = false;
            rep.first_violation_v = v;
            rep.message = msg;
        }
    };
    // exp(-lambda*v) is positive for any finite exponent even where the
    // double value underflows to 0; certify that family analytically so the
    // positivity report stays correct.
    bool positivity_analytic =
        spec.family == CoefficientSpec::Family::exp_decay && spec.p0 >= 0.0;
    for (int s = 0; s <= samples && rep.pass; ++s) {
        double v = probe_max * s / samples;
        double val = eval_value(spec, v);
        double der = eval_derivative(spec, v);
        if (!std::isfinite(val)) {
            fail(v, "value not finite at v=" + format_double(v));
            break;
        }
        if (kind == CoeffKind::D) {
            if (!(val > 0.0) && !positivity_analytic)
                fail(v, "D>0 violated: D(" + format_double(v) + ")=" + format_double(val));
        } else {
            if (!std::isfinite(der)) {
                fail(v, "S' not finite at v=" + format_double(v));
            } else if (der < 0.0) {
                fail(v, "S'>=0 violated: S'(" + format_double(v) + ")=" + format_double(der));
            }
        }
    }
    return rep;
}

bool ModelParams::theorem_regime() const {
    if (eta == 0) return alpha > 0.0 && alpha < 1.0;
    if (eta == 1) return alpha > 0.0 && alpha < 0.5;
    return false;
}

namespace {

bool parse_args(const std::string& inner, std::vector<double>& out, std::string* error) {
    out.clear();
    std::string cur;
    std::istringstream ss(inner);
    while (std::getline(ss, cur, ',')) {
        try {
            size_t pos = 0;
            double v = std::stod(cur, &pos);
            while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos]))) ++pos;
            if (pos != cur.size()) throw std::invalid_argument(cur);
            out.push_back(v);
        } catch (const std::exception&) {
            if (error) *error = "bad numeric argument '" + cur + "'";
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<CoefficientSpec> CoefficientSpec::parse(const std::string& text,
                                                      std::string* error) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '"') t += c;
    auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')') {
        if (error) *error = "expected form family(args): got '" + text + "'";
        return std::nullopt;
    }
    std::string name = t.substr(0, open);
    std::string inner = t.substr(open + 1, t.size() - open - 2);
    std::vector<double> args;
    if (name == "constant") {
        if (!parse_args(inner, args, error)) return std::nullopt;
        if (args.size() != 1) {
            if (error) *error = "constant(c) takes 1 argument";
            return std::nullopt;
        }
        return constant(args[0]);
    }
    if (name == "exp_decay") {
        if (!parse_args(inner, args, error)) return std::nullopt;
        if (args.size() != 1) {
            if (error) *error = "exp_decay(lambda) takes 1 argument";
            return std::nullopt;
        }
        return exp_decay(args[0]);
    }
    if (name == "saturating") {
        if (!parse_args(inner, args, error)) return std::nullopt;
        if (args.size() != 2) {
            if (error) *error = "saturating(a, b) takes 2 arguments";
            return std::nullopt;
        }
        if (!(args[1] > 0.0)) {
            if (error) *error = "saturating(a, b) requires b > 0";
            return std::nullopt;
        }
        return saturating(args[0], args[1]);
    }
    if (name == "bounded_smooth") {
        if (inner != "tanh" && inner != "arctan" && inner != "sigmoid") {
            if (error) *error = "bounded_smooth preset must be tanh, arctan or sigmoid";
            return std::nullopt;
        }
        return bounded_smooth(inner);
    }
    if (error) *error = "unknown coefficient family '" + name + "'";
    return std::nullopt;
}

} // namespace sim

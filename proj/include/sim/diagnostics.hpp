#pragma once

#include "sim/grid.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace sim {

/// Which functionals a run monitors: entropy/L^p exponent lists plus the
/// designated pair (k_star, p_star) entering the composite functionals y and
/// phi, and the window width tau.
struct DiagnosticsSpec {
    std::vector<double> ks{1.0};
    std::vector<double> ps{2.0};
    double k_star = 1.0;
    double p_star = 2.0;
    double tau = 1.0;
};

/// One time-sample of every monitored functional. entropy/u2_entropy are
/// aligned with DiagnosticsSpec::ks, lp/grad_v_2p with ::ps.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    std::vector<double> entropy;    // \int u ln^k(u+e)
    std::vector<double> u2_entropy; // \int u^2 ln^k(u+e)
    std::vector<double> lp;         // \int u^p
    std::vector<double> grad_v_2p;  // \int |grad v|^{2p}
    double grad_v_sq = 0.0;
    double sup_u = 0.0;
    double sup_v = 0.0;
    double sup_grad_v = 0.0;
    double min_u = 0.0;
    double y_k = 0.0;   // entropy(k_star) + 1/2 \int |grad v|^2
    double phi_p = 0.0; // (1/p) \int u^p + (1/2p) \int |grad v|^{2p} at p_star
    double dt = 0.0;    // step size in effect when the record was taken
};

double entropy_functional(const Field& u, double k);
double u2_entropy_functional(const Field& u, double k);
double lp_integral(const Field& u, double p);

/// \int |grad v|^{2p} with |grad v|^2 reconstructed per cell as the average
/// of squared face differences, then raised to p.
double grad_energy(const Field& v, double p);

double lyapunov_y(const Field& u, const Field& v, double k);
double phi_functional(const Field& u, const Field& v, double p);

bool detect_blowup(const Field& u, double threshold);

DiagnosticsRecord make_record(const Field& u, const Field& v, double t, double dt,
                              const DiagnosticsSpec& spec);

struct WindowedSeries {
    struct Entry {
        double t = 0.0;
        double value = 0.0;
        bool truncated = false;
    };
    std::vector<Entry> entries;
    double sup_full = 0.0; // over non-truncated windows
    bool any_truncated = false;
};

/// Sliding-window time integral of \int u^2 ln^k(u+e) (k = ks[k_index]) over
/// [t, t+tau], trapezoidal in time over the records. Windows reaching past
/// the last record are flagged truncated, not an error.
WindowedSeries windowed_integral(const std::vector<DiagnosticsRecord>& records,
                                 std::size_t k_index, double tau);

struct MonitorReport {
    double c_star = 0.0;     // sup_t (F' + F), centered differences on records
    double max_F = 0.0;
    double F0 = 0.0;
    double tolerance = 0.0;
    bool gronwall_pass = false; // F <= max(F0, c_star) + tolerance throughout
};

/// Empirical check of a dissipative inequality F' + F <= c along a recorded
/// trajectory. Needs at least 3 records.
MonitorReport monitor_ode_inequality(const std::vector<double>& times,
                                     const std::vector<double>& values);

/// The k the proofs ask for, given (eta, alpha, p): for the parabolic signal
/// (eta=1), k must lie in (max{2 alpha (p+1)/p, 1}, 2-2 alpha) and the
/// midpoint is returned, or nullopt when the interval is empty. For the
/// elliptic signal (eta=0) any k >= 1 works; the midpoint of (1, 2-2 alpha)
/// is returned when that interval is nonempty, else 1.
std::optional<double> theorem_k(int eta, double alpha, double p);

/// Time-series CSV: header t,mass,entropy_<k>...,lp_<p>...,grad_v_sq,sup_u,
/// sup_v,sup_grad_v,y_k,phi_p,dt; one row per record, shortest round-trip
/// precision.
void write_records_csv(const std::vector<DiagnosticsRecord>& records,
                       const DiagnosticsSpec& spec, const std::filesystem::path& path);

} // namespace sim

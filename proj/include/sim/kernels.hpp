#pragma once

#include <cstddef>
#include <string_view>

namespace sim::kernels {

/// Function-pointer table for the arithmetic inner loops (BLAS-1 style vector
/// ops, compensated reductions, and one row of the face-weighted 5-point
/// operator). Two implementations exist: a portable scalar reference and an
/// AVX2 variant. The active table is picked once per process from CPU
/// capabilities; the environment variable SIM_KERNELS=scalar|avx2|auto
/// overrides the choice (avx2 silently falls back to scalar when the CPU
/// lacks it).
///
/// Elementwise kernels (axpy, xpay, stencil_row) are bit-identical between
/// implementations; reductions (dot, sum) may differ by rounding because the
/// vector variants accumulate in lanes. Equivalence is enforced by
/// tests/test_kernels.cpp.
struct Ops {
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// Compensated (Kahan/Neumaier) sum; error stays O(eps) independent of n.
    double (*sum)(const double* a, std::size_t n);
    double (*max_abs)(const double* a, std::size_t n);
    double (*min_val)(const double* a, std::size_t n);
    /// y += a*x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    /// y = x + a*y
    void (*xpay)(const double* x, double a, double* y, std::size_t n);
    /// One row of the flux-form 5-point operator:
    ///   out[i] = diag*x[i] - cx*(wx[i+1]*(x[i+1]-x[i]) - wx[i]*(x[i]-x[i-1]))
    ///                      - cy*(wyn[i]*(xn[i]-x[i])   - wys[i]*(x[i]-xs[i]))
    /// Contract: nx >= 2. wx holds nx+1 face weights; wx[0] and wx[nx] are
    /// ignored (boundary faces carry no flux). xs/xn may alias x itself to
    /// realize the mirror (zero normal derivative) condition at the bottom
    /// and top rows.
    void (*stencil_row)(double* out, const double* x,
                        const double* xs, const double* xn,
                        const double* wx, const double* wys, const double* wyn,
                        double diag, double cx, double cy, std::size_t nx);
};

/// Active table, selected on first use.
const Ops& ops();

/// Reference implementation, always available (used by equivalence tests).
const Ops& scalar_ops();

/// AVX2 table, or nullptr when not compiled in / not supported at runtime.
const Ops* avx2_ops_or_null();

/// Name of the active implementation: "scalar" or "avx2".
std::string_view active_name();

} // namespace sim::kernels

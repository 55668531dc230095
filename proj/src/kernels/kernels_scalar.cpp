#include "sim/kernels.hpp"

#include <cmath>
#include <limits>

namespace sim::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

// Neumaier variant of Kahan summation.
double sum_scalar(const double* a, std::size_t n) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = s + a[i];
        if (std::abs(s) >= std::abs(a[i]))
            c += (s - t) + a[i];
        else
            c += (a[i] - t) + s;
        s = t;
    }
    return s + c;
}

double max_abs_scalar(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::abs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

double min_val_scalar(const double* a, std::size_t n) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] < m) m = a[i];
    return m;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpay_scalar(const double* x, double a, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + a * y[i];
}

void stencil_row_scalar(double* out, const double* x,
                        const double* xs, const double* xn,
                        const double* wx, const double* wys, const double* wyn,
                        double diag, double cx, double cy, std::size_t nx) {
    // west face of cell 0 and east face of cell nx-1 carry no flux
    out[0] = diag * x[0] - cx * (wx[1] * (x[1] - x[0]))
                         - cy * (wyn[0] * (xn[0] - x[0]) - wys[0] * (x[0] - xs[0]));
    for (std::size_t i = 1; i + 1 < nx; ++i) {
        out[i] = diag * x[i]
               - cx * (wx[i + 1] * (x[i + 1] - x[i]) - wx[i] * (x[i] - x[i - 1]))
               - cy * (wyn[i] * (xn[i] - x[i]) - wys[i] * (x[i] - xs[i]));
    }
    std::size_t e = nx - 1;
    out[e] = diag * x[e] - cx * (-wx[e] * (x[e] - x[e - 1]))
                         - cy * (wyn[e] * (xn[e] - x[e]) - wys[e] * (x[e] - xs[e]));
}

} // namespace

const Ops& scalar_ops() {
    static const Ops table{dot_scalar, sum_scalar, max_abs_scalar, min_val_scalar,
                           axpy_scalar, xpay_scalar, stencil_row_scalar};
    return table;
}

} // namespace sim::kernels

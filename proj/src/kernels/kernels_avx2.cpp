// AVX2 variants of the inner-loop kernels. This translation unit is compiled
// with -mavx2 -mfma -ffp-contract=off (see src/CMakeLists.txt); everything
// here must stay behind the runtime dispatch in dispatch.cpp.
//
// Elementwise kernels use mul+add rather than fmadd so that they round
// exactly like the scalar reference; reductions keep per-lane accumulators
// and are compared against the reference with a tolerance.

#include "sim/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <cmath>
#include <immintrin.h>
#include <limits>

namespace sim::kernels {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_fmadd_pd(va, vb, acc);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

// Kahan summation per lane, lanes merged with a final Neumaier pass.
double sum_avx2(const double* a, std::size_t n) {
    __m256d s = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d y = _mm256_sub_pd(_mm256_loadu_pd(a + i), c);
        __m256d t = _mm256_add_pd(s, y);
        c = _mm256_sub_pd(_mm256_sub_pd(t, s), y);
        s = t;
    }
    alignas(32) double ls[4], lc[4];
    _mm256_store_pd(ls, s);
    _mm256_store_pd(lc, c);
    double acc = 0.0, comp = 0.0;
    auto fold = [&](double v) {
        double t = acc + v;
        if (std::abs(acc) >= std::abs(v))
            comp += (acc - t) + v;
        else
            comp += (v - t) + acc;
        acc = t;
    };
    for (int k = 0; k < 4; ++k) fold(ls[k]);
    for (; i < n; ++i) fold(a[i]);
    return acc + comp - (lc[0] + lc[1] + lc[2] + lc[3]);
}

double max_abs_avx2(const double* a, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        m = _mm256_max_pd(m, _mm256_and_pd(mask, _mm256_loadu_pd(a + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, m);
    double r = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
    for (; i < n; ++i) r = std::max(r, std::abs(a[i]));
    return r;
}

double min_val_avx2(const double* a, std::size_t n) {
    __m256d m = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) m = _mm256_min_pd(m, _mm256_loadu_pd(a + i));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, m);
    double r = std::min(std::min(lane[0], lane[1]), std::min(lane[2], lane[3]));
    for (; i < n; ++i) r = std::min(r, a[i]);
    return r;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void xpay_avx2(const double* x, double a, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        vy = _mm256_add_pd(vx, _mm256_mul_pd(va, vy));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] = x[i] + a * y[i];
}

void stencil_row_avx2(double* out, const double* x,
                      const double* xs, const double* xn,
                      const double* wx, const double* wys, const double* wyn,
                      double diag, double cx, double cy, std::size_t nx) {
    out[0] = diag * x[0] - cx * (wx[1] * (x[1] - x[0]))
                         - cy * (wyn[0] * (xn[0] - x[0]) - wys[0] * (x[0] - xs[0]));
    const __m256d vd = _mm256_set1_pd(diag);
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    std::size_t i = 1;
    for (; i + 4 <= nx - 1; i += 4) {
        __m256d xc = _mm256_loadu_pd(x + i);
        __m256d xe = _mm256_loadu_pd(x + i + 1);
        __m256d xw = _mm256_loadu_pd(x + i - 1);
        __m256d vs = _mm256_loadu_pd(xs + i);
        __m256d vn = _mm256_loadu_pd(xn + i);
        __m256d we = _mm256_loadu_pd(wx + i + 1);
        __m256d ww = _mm256_loadu_pd(wx + i);
        __m256d ws = _mm256_loadu_pd(wys + i);
        __m256d wn = _mm256_loadu_pd(wyn + i);
        __m256d fx = _mm256_sub_pd(_mm256_mul_pd(we, _mm256_sub_pd(xe, xc)),
                                   _mm256_mul_pd(ww, _mm256_sub_pd(xc, xw)));
        __m256d fy = _mm256_sub_pd(_mm256_mul_pd(wn, _mm256_sub_pd(vn, xc)),
                                   _mm256_mul_pd(ws, _mm256_sub_pd(xc, vs)));
        __m256d r = _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(vd, xc), _mm256_mul_pd(vcx, fx)),
                                  _mm256_mul_pd(vcy, fy));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i + 1 < nx; ++i) {
        out[i] = diag * x[i]
               - cx * (wx[i + 1] * (x[i + 1] - x[i]) - wx[i] * (x[i] - x[i - 1]))
               - cy * (wyn[i] * (xn[i] - x[i]) - wys[i] * (x[i] - xs[i]));
    }
    std::size_t e = nx - 1;
    out[e] = diag * x[e] - cx * (-wx[e] * (x[e] - x[e - 1]))
                         - cy * (wyn[e] * (xn[e] - x[e]) - wys[e] * (x[e] - xs[e]));
}

} // namespace

const Ops* avx2_ops_or_null() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops table{dot_avx2, sum_avx2, max_abs_avx2, min_val_avx2,
                           axpy_avx2, xpay_avx2, stencil_row_avx2};
    return &table;
}

} // namespace sim::kernels

#else // non-x86 builds: no AVX2 table

namespace sim::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
} // namespace sim::kernels

#endif

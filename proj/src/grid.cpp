#include "sim/grid.hpp"

#include "sim/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace sim {

Grid::Grid(int nx_, int ny_, double lx_, double ly_)
    : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("Grid: nx and ny must be >= 2");
    if (!(lx > 0.0) || !(ly > 0.0)) throw std::invalid_argument("Grid: lx and ly must be > 0");
    hx = lx / nx;
    hy = ly / ny;
}

namespace {

// Unit face weights for the constant-coefficient operators. thread_local so
// concurrent sweep workers never share the buffer.
const double* unit_weights(std::size_t n) {
    thread_local std::vector<double> ones;
    if (ones.size() < n) ones.assign(n, 1.0);
    return ones.data();
}

} // namespace

void apply_five_point(Field& out, const Field& f, double diag, double cx, double cy,
                      const FaceVector* w) {
    const Grid& g = f.grid;
    out.grid = g;
    out.data.resize(g.cells());
    const auto& k = kernels::ops();
    const int nx = g.nx, ny = g.ny;
    const double* ones = unit_weights(static_cast<std::size_t>(nx) + 1);
    for (int j = 0; j < ny; ++j) {
        const double* row = f.data.data() + g.idx(0, j);
        const double* rs = (j > 0) ? f.data.data() + g.idx(0, j - 1) : row; // mirror
        const double* rn = (j + 1 < ny) ? f.data.data() + g.idx(0, j + 1) : row;
        const double* wx = w ? w->fx.data() + static_cast<std::size_t>(j) * (nx + 1) : ones;
        const double* wys = w ? w->fy.data() + static_cast<std::size_t>(j) * nx : ones;
        const double* wyn = w ? w->fy.data() + static_cast<std::size_t>(j + 1) * nx : ones;
        k.stencil_row(out.data.data() + g.idx(0, j), row, rs, rn, wx, wys, wyn,
                      diag, cx, cy, static_cast<std::size_t>(nx));
    }
}

Field five_point_diagonal(const Grid& g, double diag, double cx, double cy,
                          const FaceVector* w) {
    Field d(g, diag);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double we = (i + 1 < g.nx) ? (w ? w->x(i + 1, j) : 1.0) : 0.0;
            double ww = (i > 0) ? (w ? w->x(i, j) : 1.0) : 0.0;
            double wn = (j + 1 < g.ny) ? (w ? w->y(i, j + 1) : 1.0) : 0.0;
            double ws = (j > 0) ? (w ? w->y(i, j) : 1.0) : 0.0;
            d(i, j) = diag + cx * (we + ww) + cy * (wn + ws);
        }
    }
    return d;
}

Field laplacian_neumann(const Field& f) {
    Field out(f.grid);
    apply_five_point(out, f, 0.0, 1.0 / (f.grid.hx * f.grid.hx), 1.0 / (f.grid.hy * f.grid.hy));
    for (double& v : out.data) v = -v;
    return out;
}

FaceVector gradient_faces(const Field& f) {
    const Grid& g = f.grid;
    FaceVector fv(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            fv.x(i, j) = (f(i, j) - f(i - 1, j)) / g.hx;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            fv.y(i, j) = (f(i, j) - f(i, j - 1)) / g.hy;
    return fv;
}

double integrate(const Field& f) {
    return kernels::ops().sum(f.data.data(), f.data.size()) * f.grid.cell_area();
}

double sup_norm(const Field& f) {
    return kernels::ops().max_abs(f.data.data(), f.data.size());
}

double min_value(const Field& f) {
    return kernels::ops().min_val(f.data.data(), f.data.size());
}

double grad_sq_integral(const Field& f) {
    const Grid& g = f.grid;
    double s = 0.0, c = 0.0;
    auto fold = [&](double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            double gx = (f(i, j) - f(i - 1, j)) / g.hx;
            fold(gx * gx);
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double gy = (f(i, j) - f(i, j - 1)) / g.hy;
            fold(gy * gy);
        }
    return (s + c) * g.cell_area();
}

double sup_face_gradient(const Field& f) {
    const Grid& g = f.grid;
    double m = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            m = std::max(m, std::abs((f(i, j) - f(i - 1, j)) / g.hx));
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            m = std::max(m, std::abs((f(i, j) - f(i, j - 1)) / g.hy));
    return m;
}

bool all_finite(const Field& f) {
    for (double v : f.data)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace sim

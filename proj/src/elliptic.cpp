#include "sim/elliptic.hpp"

#include "sim/kernels.hpp"

#include <cmath>
#include <string>

namespace sim {

namespace {

double norm2(const Field& f) {
    return std::sqrt(kernels::ops().dot(f.data.data(), f.data.data(), f.size()));
}

} // namespace

Field cg_solve(const std::function<void(Field&, const Field&)>& apply_op, const Field& b,
               const EllipticConfig& cfg, SolveStats* stats, const Field* x0,
               const Field* jacobi_diag) {
    const auto& k = kernels::ops();
    const std::size_t n = b.size();
    const int max_iter = cfg.max_iter > 0 ? cfg.max_iter : 10 * (b.grid.nx + b.grid.ny);

    Field x = x0 ? *x0 : b;
    Field r(b.grid), q(b.grid), p(b.grid), z(b.grid);

    const double bnorm = norm2(b);
    const double target = cfg.tol * bnorm;

    auto true_residual = [&](Field& out) {
        apply_op(out, x);
        for (std::size_t i = 0; i < n; ++i) out.data[i] = b.data[i] - out.data[i];
    };
    auto precond = [&](Field& dst, const Field& src) {
        if (jacobi_diag) {
            for (std::size_t i = 0; i < n; ++i) dst.data[i] = src.data[i] / jacobi_diag->data[i];
        } else {
            dst.data = src.data;
        }
    };

    true_residual(r);
    double rnorm = norm2(r);
    int iters = 0;
    if (bnorm == 0.0 || rnorm <= target) {
        if (stats) *stats = {0, bnorm > 0.0 ? rnorm / bnorm : 0.0};
        return x;
    }

    precond(z, r);
    p.data = z.data;
    double rho = k.dot(r.data.data(), z.data.data(), n);

    while (iters < max_iter) {
        apply_op(q, p);
        double pq = k.dot(p.data.data(), q.data.data(), n);
        if (!(pq > 0.0)) {
            throw SolverDivergence("cg: operator lost positive definiteness (p.Ap = " +
                                       std::to_string(pq) + ")",
                                   rnorm / bnorm, iters);
        }
        double alpha = rho / pq;
        k.axpy(alpha, p.data.data(), x.data.data(), n);
        k.axpy(-alpha, q.data.data(), r.data.data(), n);
        ++iters;

        rnorm = norm2(r);
        if (rnorm <= target) {
            // accept only on the true residual; refresh and continue otherwise
            true_residual(r);
            rnorm = norm2(r);
            if (rnorm <= target) break;
            precond(z, r);
            p.data = z.data;
            rho = k.dot(r.data.data(), z.data.data(), n);
            continue;
        }
        precond(z, r);
        double rho_next = k.dot(r.data.data(), z.data.data(), n);
        k.xpay(z.data.data(), rho_next / rho, p.data.data(), n);
        rho = rho_next;
    }

    if (rnorm > target) {
        throw SolverDivergence("cg: no convergence in " + std::to_string(iters) +
                                   " iterations (relative residual " +
                                   std::to_string(rnorm / bnorm) + ")",
                               rnorm / bnorm, iters);
    }
    if (stats) *stats = {iters, rnorm / bnorm};
    return x;
}

Field solve_helmholtz(const Field& f, const EllipticConfig& cfg, SolveStats* stats,
                      const Field* initial_guess) {
    const Grid& g = f.grid;
    const double cx = 1.0 / (g.hx * g.hx);
    const double cy = 1.0 / (g.hy * g.hy);
    auto apply = [cx, cy](Field& out, const Field& in) {
        apply_five_point(out, in, 1.0, cx, cy);
    };
    Field diag;
    const Field* pd = nullptr;
    if (cfg.jacobi_precond) {
        diag = five_point_diagonal(g, 1.0, cx, cy);
        pd = &diag;
    }
    return cg_solve(apply, f, cfg, stats, initial_guess, pd);
}

Field discrete_green_column(const Grid& grid, std::size_t source_cell,
                            const EllipticConfig& cfg, SolveStats* stats) {
    if (source_cell >= grid.cells())
        throw std::invalid_argument("discrete_green_column: source_cell out of range");
    Field delta(grid, 0.0);
    delta.data[source_cell] = 1.0 / grid.cell_area();
    return solve_helmholtz(delta, cfg, stats);
}

} // namespace sim

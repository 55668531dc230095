#pragma once

#include "sim/grid.hpp"

#include <functional>
#include <stdexcept>

namespace sim {

struct EllipticConfig {
    double tol = 1e-10;   // relative residual target ||b - Ax|| <= tol*||b||
    int max_iter = 0;     // 0 -> 10*(nx+ny)
    bool jacobi_precond = false;
};

struct SolveStats {
    int iterations = 0;
    double rel_residual = 0.0;
};

class SolverDivergence : public std::runtime_error {
public:
    SolverDivergence(const std::string& msg, double rel_residual, int iterations)
        : std::runtime_error(msg), rel_residual(rel_residual), iterations(iterations) {}
    double rel_residual;
    int iterations;
};

/// Matrix-free conjugate gradient for an SPD operator. The initial guess
/// defaults to b itself; because the operators used here map constants to
/// multiples of constants and have zero-telescoping flux parts, starting from
/// b keeps the discrete mass of the iterates exactly equal to the mass of the
/// true solution for the diffusion-type systems (every Krylov direction then
/// carries zero mass). Convergence is declared only after the *true* residual
/// b - Ax passes the test; the recurrence residual alone can drift.
Field cg_solve(const std::function<void(Field&, const Field&)>& apply_op, const Field& b,
               const EllipticConfig& cfg, SolveStats* stats = nullptr,
               const Field* x0 = nullptr, const Field* jacobi_diag = nullptr);

/// Solve (-lap + I) w = f with homogeneous Neumann walls. The discrete
/// operator is an M-matrix with unit row sums, so min f <= w <= max f up to
/// the solver tolerance.
Field solve_helmholtz(const Field& f, const EllipticConfig& cfg,
                      SolveStats* stats = nullptr, const Field* initial_guess = nullptr);

/// Column of the discrete Green's function of (-lap + I): the solution for a
/// discrete delta of unit mass (value 1/(hx*hy) in source_cell). The column
/// integrates to exactly 1 up to rounding.
Field discrete_green_column(const Grid& grid, std::size_t source_cell,
                            const EllipticConfig& cfg, SolveStats* stats = nullptr);

} // namespace sim

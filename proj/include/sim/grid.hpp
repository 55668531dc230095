#pragma once

#include <cstddef>
#include <vector>

namespace sim {

/// Rectangular cell-centered mesh on [0,lx] x [0,ly] with nx*ny cells.
/// Cell (i,j) has its center at ((i+1/2)hx, (j+1/2)hy). Homogeneous Neumann
/// boundaries are realized by mirror ghosts in the operators below, never by
/// storing ghost cells.
struct Grid {
    int nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    double hx = 0.0, hy = 0.0;

    Grid() = default;
    Grid(int nx_, int ny_, double lx_, double ly_);

    std::size_t cells() const { return static_cast<std::size_t>(nx) * ny; }
    double cell_area() const { return hx * hy; }
    double area() const { return lx * ly; }
    double xc(int i) const { return (i + 0.5) * hx; }
    double yc(int j) const { return (j + 0.5) * hy; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    bool operator==(const Grid&) const = default;
};

/// Scalar quantity sampled at cell centers, row-major.
struct Field {
    Grid grid;
    std::vector<double> data;

    Field() = default;
    explicit Field(const Grid& g, double fill = 0.0)
        : grid(g), data(g.cells(), fill) {}

    double& operator()(int i, int j) { return data[grid.idx(i, j)]; }
    double operator()(int i, int j) const { return data[grid.idx(i, j)]; }
    std::size_t size() const { return data.size(); }
};

/// Values attached to cell faces: fx has (nx+1)*ny entries (x-normal faces,
/// row-major with nx+1 per row), fy has nx*(ny+1) entries. When the vector
/// represents a flux, boundary-face entries are exactly zero (no-flux walls).
struct FaceVector {
    Grid grid;
    std::vector<double> fx;
    std::vector<double> fy;

    FaceVector() = default;
    explicit FaceVector(const Grid& g)
        : grid(g),
          fx(static_cast<std::size_t>(g.nx + 1) * g.ny, 0.0),
          fy(static_cast<std::size_t>(g.nx) * (g.ny + 1), 0.0) {}

    double& x(int i, int j) { return fx[static_cast<std::size_t>(j) * (grid.nx + 1) + i]; }
    double x(int i, int j) const { return fx[static_cast<std::size_t>(j) * (grid.nx + 1) + i]; }
    double& y(int i, int j) { return fy[static_cast<std::size_t>(j) * grid.nx + i]; }
    double y(int i, int j) const { return fy[static_cast<std::size_t>(j) * grid.nx + i]; }
};

/// 5-point Laplacian with mirror ghosts (zero normal derivative on all four
/// walls). Sums to zero over the domain up to rounding.
Field laplacian_neumann(const Field& f);

/// Face-centered gradient: interior face value (f_right - f_left)/h,
/// boundary faces zero.
FaceVector gradient_faces(const Field& f);

/// Midpoint quadrature, sum f_ij * hx*hy (compensated summation).
double integrate(const Field& f);

/// max |f_ij|
double sup_norm(const Field& f);

/// min f_ij
double min_value(const Field& f);

/// Sum over interior faces of (face gradient)^2 * hx*hy; the discrete
/// \int |grad f|^2.
double grad_sq_integral(const Field& f);

/// max over interior faces of |face gradient|
double sup_face_gradient(const Field& f);

bool all_finite(const Field& f);

/// out = diag*f - cx*Dx(w_x Dx f) - cy*Dy(w_y Dy f) in flux form, where Dx/Dy
/// are face differences and boundary faces carry no flux. With w == nullptr
/// all interior face weights are 1. Passing diag=1, cx=1/hx^2, cy=1/hy^2 and
/// unit weights yields the Helmholtz operator (-lap + I) f.
void apply_five_point(Field& out, const Field& f, double diag, double cx, double cy,
                      const FaceVector* w = nullptr);

/// Diagonal of the operator realized by apply_five_point (for Jacobi
/// preconditioning).
Field five_point_diagonal(const Grid& g, double diag, double cx, double cy,
                          const FaceVector* w = nullptr);

} // namespace sim

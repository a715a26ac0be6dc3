#ifndef EMIS2D_FORWARD_HPP
#define EMIS2D_FORWARD_HPP

#include "emis2d/config.hpp"
#include "emis2d/contrast.hpp"
#include "emis2d/fields.hpp"

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

namespace emis {

/// Discretized integral operators of the state and data equations on the
/// pulse-basis / point-matching grid (equal-area circular cells). The k0^2
/// prefactor of the continuous equations is folded into the entries, so
///   e_tot = e_inc + G_D diag(chi) e_tot
///   e_sca = G_S diag(chi) e_tot
/// hold verbatim. Time convention e^{-j w t}, g = (j/4) H0^(1)(k0 r).
struct GreenOperators {
    ImagingConfig config;
    Eigen::MatrixXcd domain; // G_D, n_cells x n_cells, symmetric
    Eigen::MatrixXcd data;   // G_S, n_rx x n_cells
};

GreenOperators assemble_operators(const ImagingConfig& config);

/// Unit-amplitude line-source incident field (j/4) H0^(1)(k0 |r - r_t|)
/// sampled on the grid (n_tx x n_cells) or at arbitrary points.
FieldMatrix incident_grid(const ImagingConfig& config);
Eigen::MatrixXcd incident_at(const ImagingConfig& config,
                             const std::vector<Point>& points);

enum class SolveMethod { DenseLU, BiCGStab };

struct SolveOptions {
    SolveMethod method = SolveMethod::DenseLU;
    double tol = 1e-10;
    int max_iterations = 2000; // iterative mode only
    bool check_residual = true;
};

struct ForwardSolution {
    FieldMatrix e_tot; // n_tx x n_cells
    FieldMatrix e_sca; // n_tx x n_rx
    Eigen::VectorXd residual_norm; // per transmitter
};

/// Solves (I - G_D diag(chi)) e_tot = e_inc for every transmitter (one shared
/// factorization) and evaluates e_sca = G_S diag(chi) e_tot.
ForwardSolution solve_forward(const GreenOperators& ops, const ContrastMap& chi,
                              const FieldMatrix& e_inc,
                              const SolveOptions& options = {});

/// LU factorization handle reused by the adjoint solves of the loss module.
class StateFactor {
public:
    /// Factorizes I - G_D diag(chi) restricted to `active` (empty = all cells).
    StateFactor(const Eigen::MatrixXcd& domain_op, const Eigen::VectorXcd& chi,
                const std::vector<int>& active = {});
    ~StateFactor();
    StateFactor(StateFactor&&) noexcept;
    StateFactor& operator=(StateFactor&&) noexcept;

    int size() const;
    /// Solves (I - G_D diag(chi)) X = B in place.
    void solve(Eigen::MatrixXcd& b) const;
    /// Solves the conjugate-transposed system in place.
    void solve_adjoint(Eigen::MatrixXcd& b) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Analytic cylindrical-harmonic solution for a homogeneous circular cylinder
/// under line-source incidence; the independent oracle for the MoM solver.
/// Real eps_r only (lossless background, real-argument Bessel functions).
FieldMatrix mie_cylinder(const ImagingConfig& config, double radius,
                         std::complex<double> eps_r, Point center = {0, 0});

/// Single source/observation pair variant (series truncated at
/// k0*radius + 10 + extra_orders); exposed for convergence and reciprocity
/// checks.
std::complex<double> mie_scattered_point(double k0, double radius, double eps_r,
                                         Point center, Point source, Point obs,
                                         int extra_orders = 0);

} // namespace emis

#endif

#include "emis2d/forward.hpp"
#include "emis2d/errors.hpp"
#include "emis2d/specialfn.hpp"

#include "lapack_support.hpp"

#include <cmath>
#include <new>
#include <sstream>
#include <string>
#include <vector>

namespace emis {

namespace {

using cplx = std::complex<double>;
constexpr cplx kJ{0.0, 1.0};

double hypot2(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

cplx hankel0(double x) { return specialfn::hankel1(0, x); }

} // namespace

GreenOperators assemble_operators(const ImagingConfig& config) {
    const int n = config.n_cells();
    const int m = config.grid_m;
    const double k0 = config.wavenumber();
    const double h = config.cell_size();
    const double a = h / std::sqrt(M_PI); // equal-area circle radius
    const double k0a = k0 * a;
    const cplx coeff = kJ * M_PI * k0a * 0.5 * specialfn::bessel_j(1, k0a);
    const cplx self = 0.5 * kJ * (M_PI * k0a * specialfn::hankel1(1, k0a) - 2.0 * kJ);

    GreenOperators ops;
    ops.config = config;
    try {
        ops.domain.resize(n, n);
        ops.data.resize(config.n_rx, n);
    } catch (const std::bad_alloc&) {
        std::ostringstream msg;
        msg << "operator allocation failed: needs about "
            << (static_cast<double>(n) * n + static_cast<double>(config.n_rx) * n) *
                   sizeof(cplx) / (1 << 20)
            << " MiB";
        throw NumericalError(msg.str());
    }

    // H0 depends only on |di|,|dj| on the uniform grid; tabulate once.
    Eigen::MatrixXcd table(m, m);
    for (int di = 0; di < m; ++di)
        for (int dj = 0; dj < m; ++dj) {
            if (di == 0 && dj == 0) continue;
            table(di, dj) = coeff * hankel0(k0 * h * std::hypot(di, dj));
        }

    for (int row = 0; row < n; ++row) {
        const int ri = row / m, rj = row % m;
        for (int col = 0; col < n; ++col) {
            const int ci = col / m, cj = col % m;
            ops.domain(row, col) = (row == col)
                                       ? self
                                       : table(std::abs(ri - ci), std::abs(rj - cj));
        }
    }

    const auto cells = config.cell_centers();
    for (int s = 0; s < config.n_rx; ++s) {
        const Point rs = config.rx_position(s);
        for (int col = 0; col < n; ++col)
            ops.data(s, col) = coeff * hankel0(k0 * hypot2(rs, cells[col]));
    }
    return ops;
}

FieldMatrix incident_grid(const ImagingConfig& config) {
    const Eigen::MatrixXcd v = incident_at(config, config.cell_centers());
    return FieldMatrix(FieldKind::Incident, v);
}

Eigen::MatrixXcd incident_at(const ImagingConfig& config,
                             const std::vector<Point>& points) {
    const double k0 = config.wavenumber();
    Eigen::MatrixXcd v(config.n_tx, points.size());
    for (int p = 0; p < config.n_tx; ++p) {
        const Point tx = config.tx_position(p);
        for (size_t q = 0; q < points.size(); ++q)
            v(p, q) = 0.25 * kJ * hankel0(k0 * hypot2(tx, points[q]));
    }
    return v;
}

// ---------------------------------------------------------------------------
// LU machinery

struct StateFactor::Impl {
    Eigen::MatrixXcd lu;
    std::vector<lapack_int> ipiv;
    std::vector<int> active;
};

StateFactor::StateFactor(const Eigen::MatrixXcd& domain_op,
                         const Eigen::VectorXcd& chi,
                         const std::vector<int>& active)
    : impl_(std::make_unique<Impl>()) {
    impl_->active = active;
    const bool reduced = !active.empty();
    const int n = reduced ? static_cast<int>(active.size())
                          : static_cast<int>(domain_op.rows());
    Eigen::MatrixXcd& a = impl_->lu;
    a.resize(n, n);
    if (reduced) {
        for (int c = 0; c < n; ++c) {
            const cplx chi_c = chi[active[c]];
            for (int r = 0; r < n; ++r)
                a(r, c) = -domain_op(active[r], active[c]) * chi_c;
        }
    } else {
        for (int c = 0; c < n; ++c) a.col(c) = -domain_op.col(c) * chi[c];
    }
    a.diagonal().array() += 1.0;

    impl_->ipiv.resize(n);
    const lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, a.data(), n,
                                           impl_->ipiv.data());
    if (info > 0)
        throw NumericalError("state equation singular: zero pivot at index " +
                             std::to_string(info) + " (condition estimate 0)");
    if (info < 0)
        throw NumericalError("zgetrf failed with info " + std::to_string(info));
}

StateFactor::~StateFactor() = default;
StateFactor::StateFactor(StateFactor&&) noexcept = default;
StateFactor& StateFactor::operator=(StateFactor&&) noexcept = default;

int StateFactor::size() const { return static_cast<int>(impl_->lu.rows()); }

void StateFactor::solve(Eigen::MatrixXcd& b) const {
    const int n = size();
    const lapack_int info = LAPACKE_zgetrs(
        LAPACK_COL_MAJOR, 'N', n, static_cast<lapack_int>(b.cols()),
        impl_->lu.data(), n, impl_->ipiv.data(), b.data(), n);
    if (info != 0) throw NumericalError("zgetrs failed with info " + std::to_string(info));
}

void StateFactor::solve_adjoint(Eigen::MatrixXcd& b) const {
    const int n = size();
    const lapack_int info = LAPACKE_zgetrs(
        LAPACK_COL_MAJOR, 'C', n, static_cast<lapack_int>(b.cols()),
        impl_->lu.data(), n, impl_->ipiv.data(), b.data(), n);
    if (info != 0) throw NumericalError("zgetrs failed with info " + std::to_string(info));
}

// ---------------------------------------------------------------------------

namespace {

// Unpreconditioned BiCGSTAB on x -> x - G_D (chi .* x).
Eigen::VectorXcd bicgstab_solve(const Eigen::MatrixXcd& domain_op,
                                const Eigen::VectorXcd& chi,
                                const Eigen::VectorXcd& rhs, double tol,
                                int max_iterations) {
    auto apply = [&](const Eigen::VectorXcd& x) -> Eigen::VectorXcd {
        return x - domain_op * chi.cwiseProduct(x);
    };
    const double bnorm = rhs.norm();
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(rhs.size());
    Eigen::VectorXcd r = rhs;
    Eigen::VectorXcd r0 = r, p = r;
    cplx rho = r0.dot(r);
    std::vector<double> history;
    for (int it = 0; it < max_iterations; ++it) {
        const Eigen::VectorXcd v = apply(p);
        const cplx alpha = rho / r0.dot(v);
        const Eigen::VectorXcd s = r - alpha * v;
        if (s.norm() / bnorm < tol) {
            x += alpha * p;
            return x;
        }
        const Eigen::VectorXcd t = apply(s);
        const cplx omega = t.dot(s) / t.dot(t);
        x += alpha * p + omega * s;
        r = s - omega * t;
        history.push_back(r.norm() / bnorm);
        if (history.back() < tol) return x;
        const cplx rho_next = r0.dot(r);
        const cplx beta = (rho_next / rho) * (alpha / omega);
        rho = rho_next;
        p = r + beta * (p - omega * v);
    }
    std::ostringstream msg;
    msg << "BiCGSTAB did not converge in " << max_iterations
        << " iterations; last relative residuals:";
    for (size_t i = history.size() > 5 ? history.size() - 5 : 0; i < history.size(); ++i)
        msg << " " << history[i];
    throw NumericalError(msg.str());
}

} // namespace

ForwardSolution solve_forward(const GreenOperators& ops, const ContrastMap& chi,
                              const FieldMatrix& e_inc, const SolveOptions& options) {
    const int n = ops.config.n_cells();
    const int n_tx = static_cast<int>(e_inc.rows());
    if (chi.n_cells() != n)
        throw ConfigError("contrast grid does not match operator grid");
    if (e_inc.cols() != n)
        throw ConfigError("incident field has wrong cell count");

    Eigen::MatrixXcd e_tot_cols(n, n_tx); // cells x tx
    if (options.method == SolveMethod::DenseLU) {
        e_tot_cols = e_inc.values.transpose();
        StateFactor factor(ops.domain, chi.values);
        factor.solve(e_tot_cols);
    } else {
        for (int p = 0; p < n_tx; ++p)
            e_tot_cols.col(p) =
                bicgstab_solve(ops.domain, chi.values, e_inc.values.row(p).transpose(),
                               options.tol, options.max_iterations);
    }

    ForwardSolution sol;
    sol.residual_norm.resize(n_tx);
    if (options.check_residual) {
        const Eigen::MatrixXcd induced = chi.values.asDiagonal() * e_tot_cols;
        const Eigen::MatrixXcd resid =
            e_tot_cols - ops.domain * induced - e_inc.values.transpose();
        for (int p = 0; p < n_tx; ++p) {
            sol.residual_norm[p] =
                resid.col(p).norm() / e_inc.values.row(p).norm();
            if (!(sol.residual_norm[p] <= std::max(options.tol, 1e-9)))
                throw NumericalError(
                    "forward solve residual " + std::to_string(sol.residual_norm[p]) +
                    " above tolerance for transmitter " + std::to_string(p));
        }
        sol.e_sca = FieldMatrix(FieldKind::Scattered,
                                (ops.data * induced).transpose());
    } else {
        sol.residual_norm.setZero();
        sol.e_sca = FieldMatrix(
            FieldKind::Scattered,
            (ops.data * (chi.values.asDiagonal() * e_tot_cols)).transpose());
    }
    sol.e_tot = FieldMatrix(FieldKind::Total, e_tot_cols.transpose());
    return sol;
}

// ---------------------------------------------------------------------------
// Mie-series oracle

namespace {

struct CylinderCoeffs {
    std::vector<cplx> a; // scattering coefficient per order 0..N
};

double dj(int m, double x) {
    return (m == 0) ? -specialfn::bessel_j(1, x)
                    : specialfn::bessel_j(m - 1, x) - m / x * specialfn::bessel_j(m, x);
}

cplx hm(int m, double x) {
    return {specialfn::bessel_j(m, x), specialfn::bessel_y(m, x)};
}

cplx dh(int m, double x) {
    return (m == 0) ? -hm(1, x) : hm(m - 1, x) - static_cast<double>(m) / x * hm(m, x);
}

CylinderCoeffs cylinder_coeffs(double k0, double radius, double eps_r, int orders) {
    const double k1 = k0 * std::sqrt(eps_r);
    const double x0 = k0 * radius, x1 = k1 * radius;
    CylinderCoeffs c;
    c.a.resize(orders + 1);
    for (int m = 0; m <= orders; ++m) {
        const double jm0 = specialfn::bessel_j(m, x0);
        const double jm1 = specialfn::bessel_j(m, x1);
        const double djm0 = dj(m, x0);
        const double djm1 = dj(m, x1);
        const cplx h = hm(m, x0);
        const cplx dhm = dh(m, x0);
        c.a[m] = (k1 * jm0 * djm1 - k0 * jm1 * djm0) /
                 (k0 * jm1 * dhm - k1 * h * djm1);
    }
    return c;
}

cplx mie_eval(double k0, const CylinderCoeffs& c, Point center, Point src, Point obs) {
    const double rho_t = std::hypot(src.x - center.x, src.y - center.y);
    const double rho_s = std::hypot(obs.x - center.x, obs.y - center.y);
    const double phi_t = std::atan2(src.y - center.y, src.x - center.x);
    const double phi_s = std::atan2(obs.y - center.y, obs.x - center.x);
    const int orders = static_cast<int>(c.a.size()) - 1;

    cplx sum = c.a[0] * hm(0, k0 * rho_t) * hm(0, k0 * rho_s);
    for (int m = 1; m <= orders; ++m)
        sum += 2.0 * c.a[m] * hm(m, k0 * rho_t) * hm(m, k0 * rho_s) *
               std::cos(m * (phi_s - phi_t));
    return 0.25 * kJ * sum;
}

void check_real_eps(std::complex<double> eps_r) {
    if (eps_r.imag() != 0.0)
        throw ConfigError("mie_cylinder oracle supports real eps_r only");
    if (eps_r.real() <= 0.0)
        throw ConfigError("mie_cylinder: eps_r must be positive");
}

} // namespace

std::complex<double> mie_scattered_point(double k0, double radius, double eps_r,
                                         Point center, Point source, Point obs,
                                         int extra_orders) {
    const int orders = static_cast<int>(std::ceil(k0 * radius)) + 10 + extra_orders;
    const CylinderCoeffs c = cylinder_coeffs(k0, radius, eps_r, orders);
    return mie_eval(k0, c, center, source, obs);
}

FieldMatrix mie_cylinder(const ImagingConfig& config, double radius,
                         std::complex<double> eps_r, Point center) {
    check_real_eps(eps_r);
    const double half = 0.5 * config.doi_side;
    const double off = std::max(std::abs(center.x - config.center.x),
                                std::abs(center.y - config.center.y));
    if (off + radius > half)
        throw ConfigError("mie_cylinder: disk not fully inside the DOI");

    Eigen::MatrixXcd v =
        Eigen::MatrixXcd::Zero(config.n_tx, config.n_rx);
    if (eps_r.real() != 1.0) {
        const double k0 = config.wavenumber();
        const int orders = static_cast<int>(std::ceil(k0 * radius)) + 10;
        const CylinderCoeffs c = cylinder_coeffs(k0, radius, eps_r.real(), orders);
        for (int p = 0; p < config.n_tx; ++p) {
            const Point tx = config.tx_position(p);
            for (int s = 0; s < config.n_rx; ++s)
                v(p, s) = mie_eval(k0, c, center, tx, config.rx_position(s));
        }
    }
    return FieldMatrix(FieldKind::Scattered, std::move(v));
}

} // namespace emis

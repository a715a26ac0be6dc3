#include "emis2d/specialfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace emis::specialfn {

namespace {

constexpr int kMaxOrder = 60;
constexpr double kSeriesCut = 12.0;
constexpr double kEulerGamma = 0.57721566490153286060651209;

void check_order(int order) {
    if (order < 0 || order > kMaxOrder)
        throw std::domain_error("bessel: order " + std::to_string(order) +
                                " outside supported range [0, 60]");
}

// Ascending power series, reliable for x < 12 at any supported order.
double j_series(int n, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= half / i; // (x/2)^n / n!
    double sum = term;
    const double q = half * half;
    for (int k = 1; k <= 220; ++k) {
        term *= -q / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::abs(term) < std::numeric_limits<double>::epsilon() * std::abs(sum) &&
            k > 4)
            break;
    }
    return sum;
}

// Hankel asymptotic expansion for large x (n = 0 or 1):
//   J_n = sqrt(2/(pi x)) (P cos chi - Q sin chi)
//   Y_n = sqrt(2/(pi x)) (P sin chi + Q cos chi)
// summed to its smallest term.
void jy_asymptotic(int n, double x, double& jn, double& yn) {
    const double mu = 4.0 * n * n;
    const double inv8x = 1.0 / (8.0 * x);
    double p = 1.0, q = 0.0;
    double a = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int m = 1; m <= 40; ++m) {
        const double d = 2.0 * m - 1.0;
        a *= (mu - d * d) * inv8x / m;
        const double mag = std::abs(a);
        if (mag >= prev) break; // past the optimal truncation point
        prev = mag;
        if (m % 2 == 1)
            q += (((m - 1) / 2) % 2 == 0 ? a : -a);
        else
            p += ((m / 2) % 2 == 0 ? a : -a);
        if (mag < 1e-18) break;
    }
    const double chi = x - (0.5 * n + 0.25) * M_PI;
    const double amp = std::sqrt(2.0 / (M_PI * x));
    const double c = std::cos(chi), s = std::sin(chi);
    jn = amp * (p * c - q * s);
    yn = amp * (p * s + q * c);
}

double j_large(int n, double x) {
    double j0, y0, j1, y1;
    jy_asymptotic(0, x, j0, y0);
    if (n == 0) return j0;
    jy_asymptotic(1, x, j1, y1);
    if (n == 1) return j1;
    if (n < static_cast<int>(x) - 1) {
        // forward recurrence, stable while the order stays below the argument
        double jm1 = j0, jm = j1;
        for (int m = 1; m < n; ++m) {
            const double jp = (2.0 * m / x) * jm - jm1;
            jm1 = jm;
            jm = jp;
        }
        return jm;
    }
    // Miller's downward recurrence, normalized against the asymptotic J0/J1.
    const int start = n + 16 + static_cast<int>(std::sqrt(42.0 * n));
    double jp = 0.0, jc = 1e-30, jn_val = 0.0;
    double ref0 = 0.0, ref1 = 0.0;
    for (int m = start; m >= 1; --m) {
        double jm = (2.0 * m / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            jn_val *= 1e-250;
            ref1 *= 1e-250;
        }
        if (m - 1 == n) jn_val = jc;
        if (m - 1 == 1) ref1 = jc;
    }
    ref0 = jc;
    const double scale =
        std::abs(j0) >= std::abs(j1) ? j0 / ref0 : j1 / ref1;
    return jn_val * scale;
}

double y0_series(double x) {
    const double j0 = j_series(0, x);
    double sum = 0.0;
    const double q = 0.25 * x * x;
    double term = 1.0;
    double hk = 0.0;
    for (int k = 1; k <= 220; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        const double add = (k % 2 == 1 ? term : -term) * hk;
        sum += add;
        if (std::abs(add) < std::numeric_limits<double>::epsilon() * (std::abs(sum) + 1e-300) &&
            k > 4)
            break;
    }
    return (2.0 / M_PI) * ((std::log(0.5 * x) + kEulerGamma) * j0 + sum);
}

double y1_series(double x) {
    const double j1 = j_series(1, x);
    const double half = 0.5 * x;
    // sum_k (-1)^k [psi(k+1) + psi(k+2)] (x/2)^(2k+1) / (k! (k+1)!)
    double term = half; // k = 0 magnitude
    double psi_a = -kEulerGamma;        // psi(1)
    double psi_b = -kEulerGamma + 1.0;  // psi(2)
    double sum = term * (psi_a + psi_b);
    const double q = half * half;
    for (int k = 1; k <= 220; ++k) {
        term *= -q / (static_cast<double>(k) * (k + 1));
        psi_a += 1.0 / k;
        psi_b += 1.0 / (k + 1);
        const double add = term * (psi_a + psi_b);
        sum += add;
        if (std::abs(add) < std::numeric_limits<double>::epsilon() * (std::abs(sum) + 1e-300) &&
            k > 4)
            break;
    }
    return (2.0 / M_PI) * std::log(0.5 * x) * j1 - 2.0 / (M_PI * x) - sum / M_PI;
}

} // namespace

double bessel_j(int order, double x) {
    check_order(order);
    if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite argument");
    if (x < 0.0) throw std::domain_error("bessel_j: negative argument");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x < kSeriesCut) return j_series(order, x);
    return j_large(order, x);
}

double bessel_y(int order, double x) {
    check_order(order);
    if (!std::isfinite(x)) throw std::domain_error("bessel_y: non-finite argument");
    if (x <= 0.0) throw std::domain_error("bessel_y: argument must be positive");
    double y0, y1;
    if (x < kSeriesCut) {
        y0 = y0_series(x);
        y1 = y1_series(x);
    } else {
        double j0, j1;
        jy_asymptotic(0, x, j0, y0);
        jy_asymptotic(1, x, j1, y1);
    }
    if (order == 0) return y0;
    if (order == 1) return y1;
    // upward recurrence is stable for Y (grows with order)
    double ym1 = y0, ym = y1;
    for (int m = 1; m < order; ++m) {
        const double yp = (2.0 * m / x) * ym - ym1;
        ym1 = ym;
        ym = yp;
    }
    return ym;
}

std::complex<double> hankel1(int order, double x) {
    if (order != 0 && order != 1)
        throw std::domain_error("hankel1: order must be 0 or 1");
    return {bessel_j(order, x), bessel_y(order, x)};
}

} // namespace emis::specialfn

#ifndef EMIS2D_SPECIALFN_HPP
#define EMIS2D_SPECIALFN_HPP

#include <complex>

namespace emis::specialfn {

/// Bessel function of the first kind J_n(x) for integer order n in [0, 60]
/// and real x >= 0. Ascending series below x = 12, Hankel asymptotic
/// expansion plus forward/backward recurrence above.
double bessel_j(int order, double x);

/// Bessel function of the second kind Y_n(x) for integer order n in [0, 60]
/// and real x > 0 (logarithmic singularity at the origin).
double bessel_y(int order, double x);

/// Hankel function of the first kind H_n^(1)(x) = J_n(x) + i Y_n(x),
/// order restricted to {0, 1}: all Green's-function entries use these two.
std::complex<double> hankel1(int order, double x);

} // namespace emis::specialfn

#endif

#ifndef EMIS2D_TEST_ORACLES_HPP
#define EMIS2D_TEST_ORACLES_HPP

#include <complex>
#include <cstdint>
#include <vector>

// Independent reference implementations used only by tests. These deliberately
// avoid the code paths of the library: series are summed term by term in long
// double with lgamma-based factorials, morphology works on explicit point sets.
namespace oracle {

// Ascending power series for J_n(x), long-double accumulation.
double bessel_j_series(int order, double x);

// Series for Y_0/Y_1 including the Euler-Mascheroni / digamma terms.
double bessel_y0_series(double x);
double bessel_y1_series(double x);

// Binary morphology by explicit set arithmetic over offset lists.
using BoolGrid = std::vector<std::uint8_t>; // row-major, size m*m
BoolGrid dilate_set(const BoolGrid& in, int m, int radius);
BoolGrid erode_set(const BoolGrid& in, int m, int radius);

} // namespace oracle

#endif

#ifndef EMIS2D_LAPACK_SUPPORT_HPP
#define EMIS2D_LAPACK_SUPPORT_HPP

#include <complex>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <cblas.h>
#include <lapacke.h>

#endif

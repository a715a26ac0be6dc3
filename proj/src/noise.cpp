#include "emis2d/noise.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace emis {

FieldMatrix add_awgn(const FieldMatrix& fields, double snr_db, std::uint64_t seed) {
    if (std::isinf(snr_db) && snr_db > 0) return fields;
    const double mean_power = fields.values.squaredNorm() / fields.values.size();
    const double sigma2 = mean_power * std::pow(10.0, -snr_db / 10.0);
    const double s = std::sqrt(0.5 * sigma2);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    FieldMatrix out = fields;
    for (Eigen::Index i = 0; i < out.values.rows(); ++i)
        for (Eigen::Index j = 0; j < out.values.cols(); ++j)
            out.values(i, j) += std::complex<double>(s * gauss(rng), s * gauss(rng));
    return out;
}

} // namespace emis

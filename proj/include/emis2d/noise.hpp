#ifndef EMIS2D_NOISE_HPP
#define EMIS2D_NOISE_HPP

#include "emis2d/fields.hpp"

#include <cstdint>

namespace emis {

/// Adds i.i.d. circularly-symmetric complex Gaussian noise with per-entry
/// variance sigma^2 = mean(|E|^2) * 10^(-snr_db/10), deterministic in the
/// seed. snr_db = +infinity returns the input unchanged.
FieldMatrix add_awgn(const FieldMatrix& fields, double snr_db, std::uint64_t seed);

} // namespace emis

#endif

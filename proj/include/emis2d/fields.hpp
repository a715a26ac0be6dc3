#ifndef EMIS2D_FIELDS_HPP
#define EMIS2D_FIELDS_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace emis {

enum class FieldKind { Incident, Total, Scattered };

/// Complex field samples indexed (transmitter x receiver) for measurement-side
/// data or (transmitter x cell) for fields on the grid.
struct FieldMatrix {
    FieldKind kind = FieldKind::Scattered;
    Eigen::MatrixXcd values; // n_tx rows

    FieldMatrix() = default;
    FieldMatrix(FieldKind k, Eigen::MatrixXcd v) : kind(k), values(std::move(v)) {}

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
};

/// CSV layout: one row per transmitter, entries "re,im" alternating, i.e.
/// 2*cols numbers per line. Deterministic full-precision round trip.
void save_field_csv(const FieldMatrix& fields, const std::string& path);
FieldMatrix load_field_csv(const std::string& path, FieldKind kind);

} // namespace emis

#endif

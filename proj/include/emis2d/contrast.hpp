#ifndef EMIS2D_CONTRAST_HPP
#define EMIS2D_CONTRAST_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace emis {

/// Complex contrast chi = eps_r - 1 on the grid, flat row-major storage
/// (index i*grid_m + j). Background cells are exactly zero.
struct ContrastMap {
    int grid_m = 0;
    Eigen::VectorXcd values;

    ContrastMap() = default;
    explicit ContrastMap(int m) : grid_m(m), values(Eigen::VectorXcd::Zero(m * m)) {}
    ContrastMap(int m, Eigen::VectorXcd v) : grid_m(m), values(std::move(v)) {}

    int n_cells() const { return grid_m * grid_m; }
    std::complex<double>& at(int i, int j) { return values[i * grid_m + j]; }
    std::complex<double> at(int i, int j) const { return values[i * grid_m + j]; }
};

/// Two-file CSV export: <stem>_re.csv and <stem>_im.csv, grid_m rows of
/// grid_m comma-separated values each.
void save_contrast_csv(const ContrastMap& map, const std::string& stem);
ContrastMap load_contrast_csv(const std::string& stem);

} // namespace emis

#endif

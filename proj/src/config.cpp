#include "emis2d/config.hpp"
#include "emis2d/errors.hpp"

#include <cmath>
#include <string>

namespace emis {

double ImagingConfig::wavenumber() const {
    return 2.0 * M_PI / wavelength();
}

Point ImagingConfig::cell_center(int n) const {
    const double h = cell_size();
    const int i = n / grid_m;
    const int j = n % grid_m;
    return {center.x - 0.5 * doi_side + (j + 0.5) * h,
            center.y - 0.5 * doi_side + (i + 0.5) * h};
}

Point ImagingConfig::tx_position(int p) const {
    const double a = 2.0 * M_PI * p / n_tx;
    return {center.x + tx_radius * std::cos(a), center.y + tx_radius * std::sin(a)};
}

Point ImagingConfig::rx_position(int q) const {
    const double a = 2.0 * M_PI * q / n_rx;
    return {center.x + rx_radius * std::cos(a), center.y + rx_radius * std::sin(a)};
}

std::vector<Point> ImagingConfig::cell_centers() const {
    std::vector<Point> out(n_cells());
    for (int n = 0; n < n_cells(); ++n) out[n] = cell_center(n);
    return out;
}

std::vector<Point> ImagingConfig::tx_positions() const {
    std::vector<Point> out(n_tx);
    for (int p = 0; p < n_tx; ++p) out[p] = tx_position(p);
    return out;
}

std::vector<Point> ImagingConfig::rx_positions() const {
    std::vector<Point> out(n_rx);
    for (int q = 0; q < n_rx; ++q) out[q] = rx_position(q);
    return out;
}

ImagingConfig make_config(double frequency, double doi_side, int grid_m,
                          int n_tx, int n_rx, double tx_radius, double rx_radius,
                          Point center) {
    if (!(frequency > 0.0)) throw ConfigError("frequency must be positive");
    if (!(doi_side > 0.0)) throw ConfigError("doi_side must be positive");
    if (grid_m < 2) throw ConfigError("grid_m must be at least 2 (got " +
                                      std::to_string(grid_m) + ")");
    if (n_tx < 1) throw ConfigError("n_tx must be at least 1");
    if (n_rx < 1) throw ConfigError("n_rx must be at least 1");
    const double half_diag = doi_side * std::sqrt(2.0) / 2.0;
    if (!(tx_radius > half_diag))
        throw ConfigError("tx_radius: antenna inside DOI (needs > doi_side*sqrt(2)/2)");
    if (!(rx_radius > half_diag))
        throw ConfigError("rx_radius: antenna inside DOI (needs > doi_side*sqrt(2)/2)");

    ImagingConfig c;
    c.frequency = frequency;
    c.doi_side = doi_side;
    c.grid_m = grid_m;
    c.n_tx = n_tx;
    c.n_rx = n_rx;
    c.tx_radius = tx_radius;
    c.rx_radius = rx_radius;
    c.center = center;
    return c;
}

} // namespace emis

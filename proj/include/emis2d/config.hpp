#ifndef EMIS2D_CONFIG_HPP
#define EMIS2D_CONFIG_HPP

#include <array>
#include <vector>

namespace emis {

inline constexpr double kSpeedOfLight = 299792458.0;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Imaging geometry: square DOI discretized into grid_m x grid_m cells with
/// transmitter/receiver rings concentric with the DOI. Frequencies in Hz,
/// lengths in meters. Immutable after construction via make_config().
class ImagingConfig {
public:
    ImagingConfig() = default;

    double frequency = 0.0;
    double doi_side = 0.0;
    int grid_m = 0;
    int n_tx = 0;
    int n_rx = 0;
    double tx_radius = 0.0;
    double rx_radius = 0.0;
    Point center{0.0, 0.0};

    double wavelength() const { return kSpeedOfLight / frequency; }
    double wavenumber() const;
    double cell_size() const { return doi_side / grid_m; }
    int n_cells() const { return grid_m * grid_m; }

    /// Center of cell with flat index n = i*grid_m + j. Row i runs along +y,
    /// column j along +x, both starting at the lower-left DOI corner.
    Point cell_center(int flat_index) const;

    /// Transmitter p sits at angle 2*pi*p/n_tx on the tx ring; receivers
    /// likewise on the rx ring.
    Point tx_position(int p) const;
    Point rx_position(int q) const;

    std::vector<Point> cell_centers() const;
    std::vector<Point> tx_positions() const;
    std::vector<Point> rx_positions() const;
};

/// Validates all invariants and throws ConfigError naming the offending field.
ImagingConfig make_config(double frequency, double doi_side, int grid_m,
                          int n_tx, int n_rx, double tx_radius, double rx_radius,
                          Point center = {0.0, 0.0});

} // namespace emis

#endif

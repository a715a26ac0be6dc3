#ifndef EMIS2D_SHAPES_HPP
#define EMIS2D_SHAPES_HPP

#include "emis2d/config.hpp"
#include "emis2d/contrast.hpp"

#include <complex>
#include <string>
#include <vector>

namespace emis {

enum class ShapeType { Disk, Annulus, Rectangle, Polygon };

/// One scatterer primitive. Coordinates and sizes are in meters, or in
/// wavelength multiples when units_lambda is set (resolved when rasterized).
struct Shape {
    ShapeType type = ShapeType::Disk;
    Point center{0.0, 0.0};
    bool units_lambda = true;
    double a = 0.0; // disk: radius; annulus: outer radius; rectangle: width
    double b = 0.0; // annulus: inner radius; rectangle: height
    std::vector<Point> vertices; // polygon outline (same unit convention)
    std::complex<double> eps_r{2.0, 0.0};
};

Shape make_disk(Point center, double radius, std::complex<double> eps_r,
                bool units_lambda = true);
Shape make_annulus(Point center, double outer, double inner,
                   std::complex<double> eps_r, bool units_lambda = true);
Shape make_rect(Point center, double width, double height,
                std::complex<double> eps_r, bool units_lambda = true);
Shape make_polygon(std::vector<Point> vertices, std::complex<double> eps_r,
                   bool units_lambda = true);

/// Rasterizes primitives by cell-center membership; the last-listed primitive
/// containing a center wins, background cells stay at chi = 0. Primitives
/// reaching outside the DOI are clipped and reported through `warnings`.
ContrastMap profile_shapes(const ImagingConfig& config,
                           const std::vector<Shape>& shapes,
                           std::vector<std::string>* warnings = nullptr);

/// Bundled scatterer presets:
///   square, two_circles, ring, austria       (eps_r = 2)
///   lossy_austria                            (eps_r = 1.5 + 0.5j)
///   turtle                                   (1.5 + 0.5j body ring, 2 + 1j core)
///   composite_austria                        (1.5+1j, 2+1.5j, 2.5+0.5j)
///   digit5, polygons, three_circles, letterE (region-study analogues, eps_r = 2)
/// Unknown names raise ConfigError.
std::vector<Shape> preset_shapes(const std::string& name);
ContrastMap preset_profile(const ImagingConfig& config, const std::string& name);
const std::vector<std::string>& preset_names();

/// Randomized polygon scene (1-3 convex polygons, eps_r in [1.5, 2.5]),
/// deterministic in the seed. Used by the stability study.
std::vector<Shape> random_polygon_scene(std::uint64_t seed);

} // namespace emis

#endif

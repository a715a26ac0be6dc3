#include "emis2d/shapes.hpp"
#include "emis2d/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace emis {

namespace {

bool point_in_polygon(const std::vector<Point>& poly, double x, double y) {
    bool inside = false;
    const size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > y) != (b.y > y)) {
            const double xc = (b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x;
            if (x < xc) inside = !inside;
        }
    }
    return inside;
}

struct ResolvedShape {
    const Shape* src;
    Point center;
    double a, b;
    std::vector<Point> vertices;
};

ResolvedShape resolve(const Shape& s, double lambda) {
    const double u = s.units_lambda ? lambda : 1.0;
    ResolvedShape r;
    r.src = &s;
    r.center = {s.center.x * u, s.center.y * u};
    r.a = s.a * u;
    r.b = s.b * u;
    r.vertices.reserve(s.vertices.size());
    for (const Point& v : s.vertices) r.vertices.push_back({v.x * u, v.y * u});
    return r;
}

bool contains(const ResolvedShape& r, double x, double y) {
    const double dx = x - r.center.x;
    const double dy = y - r.center.y;
    switch (r.src->type) {
        case ShapeType::Disk:
            return dx * dx + dy * dy <= r.a * r.a;
        case ShapeType::Annulus: {
            const double d2 = dx * dx + dy * dy;
            return d2 <= r.a * r.a && d2 >= r.b * r.b;
        }
        case ShapeType::Rectangle:
            return std::abs(dx) <= 0.5 * r.a && std::abs(dy) <= 0.5 * r.b;
        case ShapeType::Polygon:
            return point_in_polygon(r.vertices, x, y);
    }
    return false;
}

// loose bounding box, for the clipping warning only
void bounding_box(const ResolvedShape& r, double& x0, double& y0, double& x1, double& y1) {
    switch (r.src->type) {
        case ShapeType::Disk:
        case ShapeType::Annulus:
            x0 = r.center.x - r.a; x1 = r.center.x + r.a;
            y0 = r.center.y - r.a; y1 = r.center.y + r.a;
            return;
        case ShapeType::Rectangle:
            x0 = r.center.x - 0.5 * r.a; x1 = r.center.x + 0.5 * r.a;
            y0 = r.center.y - 0.5 * r.b; y1 = r.center.y + 0.5 * r.b;
            return;
        case ShapeType::Polygon: {
            x0 = y0 = 1e300; x1 = y1 = -1e300;
            for (const Point& v : r.vertices) {
                x0 = std::min(x0, v.x); x1 = std::max(x1, v.x);
                y0 = std::min(y0, v.y); y1 = std::max(y1, v.y);
            }
            return;
        }
    }
}

std::vector<Point> regular_polygon(Point c, double radius, int sides, double rot) {
    std::vector<Point> v(sides);
    for (int k = 0; k < sides; ++k) {
        const double a = rot + 2.0 * M_PI * k / sides;
        v[k] = {c.x + radius * std::cos(a), c.y + radius * std::sin(a)};
    }
    return v;
}

// seven-segment layout centered at `c`, digit height `h` (lambda units)
std::vector<Shape> seven_segment(int digit, Point c, double h,
                                 std::complex<double> eps) {
    static const int seg_table[10] = {
        0b1111110, 0b0110000, 0b1101101, 0b1111001, 0b0110011,
        0b1011011, 0b1011111, 0b1110000, 0b1111111, 0b1111011};
    const double w = 0.55 * h, t = 0.16 * h;
    const int segs = seg_table[digit];
    std::vector<Shape> out;
    auto bar = [&](double cx, double cy, double bw, double bh) {
        out.push_back(make_rect({c.x + cx, c.y + cy}, bw, bh, eps));
    };
    if (segs & 0b1000000) bar(0, h / 2 - t / 2, w, t);            // a: top
    if (segs & 0b0100000) bar(w / 2 - t / 2, h / 4, t, h / 2);    // b: upper right
    if (segs & 0b0010000) bar(w / 2 - t / 2, -h / 4, t, h / 2);   // c: lower right
    if (segs & 0b0001000) bar(0, -h / 2 + t / 2, w, t);           // d: bottom
    if (segs & 0b0000100) bar(-w / 2 + t / 2, -h / 4, t, h / 2);  // e: lower left
    if (segs & 0b0000010) bar(-w / 2 + t / 2, h / 4, t, h / 2);   // f: upper left
    if (segs & 0b0000001) bar(0, 0, w, t);                        // g: middle
    return out;
}

std::vector<Shape> letter_shapes(char letter, Point c, double h,
                                 std::complex<double> eps) {
    const double w = 0.6 * h, t = 0.18 * h;
    std::vector<Shape> out;
    auto bar = [&](double cx, double cy, double bw, double bh) {
        out.push_back(make_rect({c.x + cx, c.y + cy}, bw, bh, eps));
    };
    switch (letter) {
        case 'E':
            bar(-w / 2 + t / 2, 0, t, h);
            bar(0, h / 2 - t / 2, w, t);
            bar(0, 0, w, t);
            bar(0, -h / 2 + t / 2, w, t);
            break;
        case 'T':
            bar(0, h / 2 - t / 2, w, t);
            bar(0, -t / 2, t, h - t);
            break;
        case 'L':
            bar(-w / 2 + t / 2, 0, t, h);
            bar(0, -h / 2 + t / 2, w, t);
            break;
        case 'H':
            bar(-w / 2 + t / 2, 0, t, h);
            bar(w / 2 - t / 2, 0, t, h);
            bar(0, 0, w, t);
            break;
        default:
            throw ConfigError(std::string("letter profile not bundled: ") + letter);
    }
    return out;
}

} // namespace

Shape make_disk(Point center, double radius, std::complex<double> eps_r, bool ul) {
    Shape s;
    s.type = ShapeType::Disk;
    s.center = center;
    s.a = radius;
    s.eps_r = eps_r;
    s.units_lambda = ul;
    return s;
}

Shape make_annulus(Point center, double outer, double inner,
                   std::complex<double> eps_r, bool ul) {
    Shape s;
    s.type = ShapeType::Annulus;
    s.center = center;
    s.a = outer;
    s.b = inner;
    s.eps_r = eps_r;
    s.units_lambda = ul;
    return s;
}

Shape make_rect(Point center, double width, double height,
                std::complex<double> eps_r, bool ul) {
    Shape s;
    s.type = ShapeType::Rectangle;
    s.center = center;
    s.a = width;
    s.b = height;
    s.eps_r = eps_r;
    s.units_lambda = ul;
    return s;
}

Shape make_polygon(std::vector<Point> vertices, std::complex<double> eps_r, bool ul) {
    if (vertices.size() < 3) throw ConfigError("polygon needs at least 3 vertices");
    Shape s;
    s.type = ShapeType::Polygon;
    s.vertices = std::move(vertices);
    s.eps_r = eps_r;
    s.units_lambda = ul;
    return s;
}

ContrastMap profile_shapes(const ImagingConfig& config,
                           const std::vector<Shape>& shapes,
                           std::vector<std::string>* warnings) {
    const double lambda = config.wavelength();
    std::vector<ResolvedShape> resolved;
    resolved.reserve(shapes.size());
    for (const Shape& s : shapes) resolved.push_back(resolve(s, lambda));

    if (warnings) {
        const double hx0 = config.center.x - 0.5 * config.doi_side;
        const double hx1 = config.center.x + 0.5 * config.doi_side;
        const double hy0 = config.center.y - 0.5 * config.doi_side;
        const double hy1 = config.center.y + 0.5 * config.doi_side;
        for (size_t k = 0; k < resolved.size(); ++k) {
            double x0, y0, x1, y1;
            bounding_box(resolved[k], x0, y0, x1, y1);
            if (x0 < hx0 || y0 < hy0 || x1 > hx1 || y1 > hy1)
                warnings->push_back("shape " + std::to_string(k) +
                                    " extends outside the DOI; clipped");
        }
    }

    ContrastMap map(config.grid_m);
    for (int n = 0; n < config.n_cells(); ++n) {
        const Point p = config.cell_center(n);
        for (auto it = resolved.rbegin(); it != resolved.rend(); ++it) {
            if (contains(*it, p.x, p.y)) {
                map.values[n] = it->src->eps_r - 1.0;
                break;
            }
        }
    }
    return map;
}

std::vector<Shape> preset_shapes(const std::string& name) {
    const std::complex<double> eps2{2.0, 0.0};
    if (name == "square") return {make_rect({0, 0}, 0.5, 0.5, eps2)};
    if (name == "two_circles")
        return {make_disk({-0.4, 0}, 0.25, eps2), make_disk({0.4, 0}, 0.25, eps2)};
    if (name == "ring") return {make_annulus({0, 0}, 0.5, 0.25, eps2)};
    if (name == "austria" || name == "lossy_austria" || name == "composite_austria") {
        std::complex<double> ed1 = eps2, ed2 = eps2, ea = eps2;
        if (name == "lossy_austria") ed1 = ed2 = ea = {1.5, 0.5};
        if (name == "composite_austria") {
            ed1 = {1.5, 1.0};
            ed2 = {2.0, 1.5};
            ea = {2.5, 0.5};
        }
        return {make_disk({-0.4, 0.65}, 0.2, ed1), make_disk({0.4, 0.65}, 0.2, ed2),
                make_annulus({0, -0.25}, 0.6, 0.3, ea)};
    }
    if (name == "turtle") {
        // high-contrast core surrounded by six small weak scatterers
        std::vector<Shape> shapes{make_disk({0, 0}, 0.35, {2.0, 1.0})};
        for (int k = 0; k < 6; ++k) {
            const double a = 2.0 * M_PI * k / 6.0;
            shapes.push_back(make_disk({0.58 * std::cos(a), 0.58 * std::sin(a)},
                                       0.13, {1.5, 0.5}));
        }
        return shapes;
    }
    if (name == "digit5") return seven_segment(5, {0, 0}, 1.2, eps2);
    if (name == "polygons")
        return {make_polygon(regular_polygon({-0.35, 0.35}, 0.35, 5, 0.3), eps2),
                make_polygon(regular_polygon({0.4, -0.4}, 0.28, 3, -0.2), eps2)};
    if (name == "three_circles")
        return {make_disk({-0.4, 0.4}, 0.2, eps2), make_disk({0.45, 0.25}, 0.2, eps2),
                make_disk({0, -0.4}, 0.22, eps2)};
    if (name == "letterE") return letter_shapes('E', {0, 0}, 1.2, eps2);
    throw ConfigError("unknown preset: " + name);
}

ContrastMap preset_profile(const ImagingConfig& config, const std::string& name) {
    return profile_shapes(config, preset_shapes(name));
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{
        "square", "two_circles", "ring", "austria", "lossy_austria", "turtle",
        "composite_austria", "digit5", "polygons", "three_circles", "letterE"};
    return names;
}

std::vector<Shape> random_polygon_scene(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_shapes(1, 3);
    std::uniform_int_distribution<int> n_sides(3, 8);
    std::uniform_real_distribution<double> pos(-0.5, 0.5);
    std::uniform_real_distribution<double> radius(0.18, 0.35);
    std::uniform_real_distribution<double> eps(1.5, 2.5);
    std::uniform_real_distribution<double> rot(0.0, 2.0 * M_PI);

    const int count = n_shapes(rng);
    std::vector<Shape> shapes;
    shapes.reserve(count);
    for (int k = 0; k < count; ++k) {
        const Point c{pos(rng), pos(rng)};
        shapes.push_back(make_polygon(
            regular_polygon(c, radius(rng), n_sides(rng), rot(rng)), {eps(rng), 0.0}));
    }
    return shapes;
}

} // namespace emis

#include "rissim/fields.hpp"

#include <algorithm>
#include <cmath>

namespace rissim {

namespace {

struct GridShape {
    int n_theta;
    int n_phi;
};

GridShape validate_grid(const GridSpec& grid) {
    if (!(grid.dtheta_deg > 0.0) || !(grid.dphi_deg > 0.0))
        throw ValidationError("grid: steps must be positive");
    double nt = 90.0 / grid.dtheta_deg;
    double np = 360.0 / grid.dphi_deg;
    if (std::fabs(nt - std::round(nt)) > 1e-9)
        throw ValidationError("grid: dtheta_deg must divide 90");
    if (std::fabs(np - std::round(np)) > 1e-9)
        throw ValidationError("grid: dphi_deg must divide 360");
    return {static_cast<int>(std::round(nt)) + 1, static_cast<int>(std::round(np))};
}

// Per-axis scaled coordinates; the element grid is separable, so each
// direction needs only n_rows + n_cols complex exponentials.
struct ScaledAxes {
    std::vector<double> kx; // per column
    std::vector<double> ky; // per row
};

ScaledAxes scaled_axes(const ArrayGeometry& g) {
    ScaledAxes axes;
    axes.kx.resize(static_cast<std::size_t>(g.n_cols));
    axes.ky.resize(static_cast<std::size_t>(g.n_rows));
    double k = g.wavenumber();
    double cx = (g.n_cols - 1) / 2.0;
    double cy = (g.n_rows - 1) / 2.0;
    for (int j = 0; j < g.n_cols; ++j)
        axes.kx[static_cast<std::size_t>(j)] = k * (j - cx) * g.pitch;
    for (int i = 0; i < g.n_rows; ++i)
        axes.ky[static_cast<std::size_t>(i)] = k * (cy - i) * g.pitch;
    return axes;
}

void check_sizes(const ArrayGeometry& g, std::size_t excitation, std::size_t reflection) {
    std::size_t n = static_cast<std::size_t>(g.n_elements());
    if (excitation != n)
        throw ValidationError("radiate: excitation has " + std::to_string(excitation) +
                              " entries, geometry has " + std::to_string(n) + " elements");
    if (reflection != n)
        throw ValidationError("radiate: reflection has " + std::to_string(reflection) +
                              " entries, geometry has " + std::to_string(n) + " elements");
}

std::complex<double> sum_direction(const ArrayGeometry& g, const ScaledAxes& axes,
                                   const std::vector<std::complex<double>>& weights, double ux,
                                   double uy, std::vector<std::complex<double>>& ex,
                                   std::vector<std::complex<double>>& ey) {
    for (int j = 0; j < g.n_cols; ++j)
        ex[static_cast<std::size_t>(j)] = std::polar(1.0, ux * axes.kx[static_cast<std::size_t>(j)]);
    for (int i = 0; i < g.n_rows; ++i)
        ey[static_cast<std::size_t>(i)] = std::polar(1.0, uy * axes.ky[static_cast<std::size_t>(i)]);
    std::complex<double> acc{0.0, 0.0};
    std::size_t e = 0;
    for (int i = 0; i < g.n_rows; ++i) {
        std::complex<double> row{0.0, 0.0};
        for (int j = 0; j < g.n_cols; ++j, ++e)
            row += weights[e] * ex[static_cast<std::size_t>(j)];
        acc += ey[static_cast<std::size_t>(i)] * row;
    }
    return acc;
}

double element_factor(double cos_theta, double exponent) {
    if (exponent == 0.0)
        return 1.0;
    return std::pow(cos_theta, exponent);
}

} // namespace

double Pattern::peak_magnitude() const {
    double peak = 0.0;
    for (const auto& s : samples)
        peak = std::max(peak, std::abs(s));
    return peak;
}

std::vector<std::complex<double>> illuminate(const ArrayGeometry& geometry,
                                             const SourceModel& source) {
    std::vector<Vec3> positions = element_positions(geometry);
    double k = geometry.wavenumber();
    std::vector<std::complex<double>> amps;
    amps.reserve(positions.size());

    if (source.kind() == SourceModel::Kind::plane) {
        Vec3 u_src = source.incidence().unit_vector();
        for (const Vec3& r : positions)
            amps.push_back(std::polar(source.amplitude(), k * dot(u_src, r)));
    } else {
        Vec3 feed = source.position();
        Vec3 boresight = normalized(-1.0 * feed); // aimed at the array center
        double q = source.taper_exponent();
        for (const Vec3& r : positions) {
            Vec3 v = r - feed;
            double dist = norm(v);
            if (dist < 1e-9)
                throw ValidationError("illuminate: feed position coincides with an element");
            double cos_off = std::clamp(dot(v, boresight) / dist, -1.0, 1.0);
            double amp = std::pow(std::max(cos_off, 0.0), q) / dist;
            amps.push_back(std::polar(amp, -k * dist));
        }
    }

    double peak = 0.0;
    for (const auto& a : amps)
        peak = std::max(peak, std::abs(a));
    if (peak <= 0.0)
        throw ComputationError("illuminate: source does not illuminate the aperture");
    for (auto& a : amps)
        a /= peak;
    return amps;
}

Pattern radiate(const ArrayGeometry& geometry, const std::vector<std::complex<double>>& excitation,
                const std::vector<std::complex<double>>& reflection, const GridSpec& grid,
                double element_exponent) {
    check_sizes(geometry, excitation.size(), reflection.size());
    if (element_exponent < 0.0)
        throw ValidationError("radiate: element exponent must be >= 0");
    GridShape shape = validate_grid(grid);

    std::vector<std::complex<double>> weights(excitation.size());
    for (std::size_t e = 0; e < weights.size(); ++e)
        weights[e] = excitation[e] * reflection[e];

    ScaledAxes axes = scaled_axes(geometry);
    std::vector<std::complex<double>> ex(axes.kx.size()), ey(axes.ky.size());

    Pattern pattern;
    pattern.grid = grid;
    pattern.n_theta = shape.n_theta;
    pattern.n_phi = shape.n_phi;
    pattern.frequency = geometry.frequency;
    pattern.samples.resize(static_cast<std::size_t>(shape.n_theta) *
                           static_cast<std::size_t>(shape.n_phi));

    std::size_t idx = 0;
    for (int it = 0; it < shape.n_theta; ++it) {
        double theta = deg2rad(it * grid.dtheta_deg);
        double st = std::sin(theta);
        double ct = std::cos(theta);
        double ef = element_factor(std::max(ct, 0.0), element_exponent);
        for (int jp = 0; jp < shape.n_phi; ++jp, ++idx) {
            double phi = deg2rad(jp * grid.dphi_deg);
            double ux = st * std::cos(phi);
            double uy = st * std::sin(phi);
            pattern.samples[idx] = ef * sum_direction(geometry, axes, weights, ux, uy, ex, ey);
        }
    }
    return pattern;
}

Pattern radiate(const ArrayGeometry& geometry, const std::vector<std::complex<double>>& excitation,
                const QuantizedMap& map, const GridSpec& grid, double element_exponent) {
    return radiate(geometry, excitation, map.realized, grid, element_exponent);
}

Pattern radiate(const ArrayGeometry& geometry, const std::vector<std::complex<double>>& excitation,
                const PhaseMap& map, const GridSpec& grid, double element_exponent) {
    return radiate(geometry, excitation, continuous_reflection(map), grid, element_exponent);
}

std::complex<double> field_at(const ArrayGeometry& geometry,
                              const std::vector<std::complex<double>>& excitation,
                              const std::vector<std::complex<double>>& reflection,
                              const Direction& direction, double element_exponent) {
    check_sizes(geometry, excitation.size(), reflection.size());
    std::vector<std::complex<double>> weights(excitation.size());
    for (std::size_t e = 0; e < weights.size(); ++e)
        weights[e] = excitation[e] * reflection[e];
    ScaledAxes axes = scaled_axes(geometry);
    std::vector<std::complex<double>> ex(axes.kx.size()), ey(axes.ky.size());
    Vec3 u = direction.unit_vector();
    double ef = element_factor(std::max(u.z, 0.0), element_exponent);
    return ef * sum_direction(geometry, axes, weights, u.x, u.y, ex, ey);
}

Cut pattern_cut(const Pattern& pattern, double phi0_deg) {
    double phi0 = wrap_deg(phi0_deg);
    double j0f = phi0 / pattern.grid.dphi_deg;
    if (std::fabs(j0f - std::round(j0f)) > 1e-9) {
        double nearest = std::round(j0f) * pattern.grid.dphi_deg;
        throw ValidationError("pattern_cut: azimuth " + std::to_string(phi0) +
                              " not on grid; nearest grid azimuth is " + std::to_string(nearest));
    }
    double opp = wrap_deg(phi0 + 180.0);
    double jof = opp / pattern.grid.dphi_deg;
    if (std::fabs(jof - std::round(jof)) > 1e-9)
        throw ValidationError("pattern_cut: opposite azimuth " + std::to_string(opp) +
                              " not on grid; choose a grid with dphi dividing 180");
    int j0 = static_cast<int>(std::round(j0f)) % pattern.n_phi;
    int jo = static_cast<int>(std::round(jof)) % pattern.n_phi;

    double peak = pattern.peak_magnitude();
    if (peak <= 0.0)
        throw ComputationError("pattern_cut: pattern is identically zero");

    auto to_db = [&](const std::complex<double>& s) {
        double mag = std::abs(s);
        if (mag <= 0.0)
            return -400.0;
        return std::max(20.0 * std::log10(mag / peak), -400.0);
    };

    Cut cut;
    cut.phi_deg = phi0;
    cut.samples.reserve(static_cast<std::size_t>(2 * pattern.n_theta - 1));
    for (int it = pattern.n_theta - 1; it >= 1; --it)
        cut.samples.push_back({-pattern.theta_at(it), to_db(pattern.at(it, jo))});
    for (int it = 0; it < pattern.n_theta; ++it)
        cut.samples.push_back({pattern.theta_at(it), to_db(pattern.at(it, j0))});
    return cut;
}

Pattern rcs_response(const ArrayGeometry& geometry, const Direction& incidence,
                     const QuantizedMap& map, const GridSpec& grid, double element_exponent) {
    SourceModel source = SourceModel::plane(incidence);
    Pattern pattern = radiate(geometry, illuminate(geometry, source), map, grid,
                              element_exponent);
    pattern.annotation = "rcs";
    pattern.metadata["source"] = "plane";
    pattern.metadata["incidence_theta_deg"] = std::to_string(incidence.theta_deg);
    pattern.metadata["incidence_phi_deg"] = std::to_string(incidence.phi_deg);
    return pattern;
}

} // namespace rissim

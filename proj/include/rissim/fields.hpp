#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "rissim/geometry.hpp"
#include "rissim/source.hpp"
#include "rissim/synthesis.hpp"

namespace rissim {

// Direction grid: theta in [0, 90] inclusive with step dtheta_deg, phi in
// [0, 360) with step dphi_deg. Steps must divide 90 and 360.
struct GridSpec {
    double dtheta_deg = 0.5;
    double dphi_deg = 1.0;
};

// Complex field samples over a direction grid, row-major with theta outer.
struct Pattern {
    GridSpec grid;
    int n_theta = 0;
    int n_phi = 0;
    double frequency = 0.0;
    std::vector<std::complex<double>> samples;
    std::string annotation = "radiation"; // "radiation" or "rcs"
    std::map<std::string, std::string> metadata; // source, steer, quantization, ...

    double theta_at(int i) const { return i * grid.dtheta_deg; }
    double phi_at(int j) const { return j * grid.dphi_deg; }
    const std::complex<double>& at(int i, int j) const {
        return samples[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_phi) +
                       static_cast<std::size_t>(j)];
    }
    Direction direction_at(int i, int j) const { return {theta_at(i), phi_at(j)}; }
    double peak_magnitude() const;
};

// One sample of a great-circle cut; power in dB relative to the pattern peak.
struct CutSample {
    double angle_deg = 0.0;
    double power_db_rel = 0.0;
};

struct Cut {
    double phi_deg = 0.0; // azimuth of the positive-angle half
    std::vector<CutSample> samples;
};

// Per-element complex incident amplitude, normalized so the strongest
// element has magnitude 1. Spherical feeds are aimed at the array center
// and tapered as cos^q off boresight with 1/r spreading; plane waves give
// uniform amplitude and a linear phase front.
std::vector<std::complex<double>> illuminate(const ArrayGeometry& geometry,
                                             const SourceModel& source);

// Scalar radiated field E(u) = cos^qe(theta) * sum_e a_e Gamma_e exp(j k u.r_e)
// over the full direction grid.
Pattern radiate(const ArrayGeometry& geometry, const std::vector<std::complex<double>>& excitation,
                const std::vector<std::complex<double>>& reflection, const GridSpec& grid = {},
                double element_exponent = 1.0);
Pattern radiate(const ArrayGeometry& geometry, const std::vector<std::complex<double>>& excitation,
                const QuantizedMap& map, const GridSpec& grid = {},
                double element_exponent = 1.0);
Pattern radiate(const ArrayGeometry& geometry, const std::vector<std::complex<double>>& excitation,
                const PhaseMap& map, const GridSpec& grid = {}, double element_exponent = 1.0);

// Field in a single direction, same kernel as radiate.
std::complex<double> field_at(const ArrayGeometry& geometry,
                              const std::vector<std::complex<double>>& excitation,
                              const std::vector<std::complex<double>>& reflection,
                              const Direction& direction, double element_exponent = 1.0);

// Great-circle cut through broadside at fixed azimuth phi0, stitched from
// the phi0 and phi0+180 half-cuts to cover [-90, 90] degrees. Power is
// normalized to the pattern peak. phi0 (and phi0+180) must lie on the grid.
Cut pattern_cut(const Pattern& pattern, double phi0_deg);

// Azimuths of the principal planes: the E-plane is the xz-plane (phi = 0),
// the H-plane the yz-plane (phi = 90).
inline constexpr double kEPlaneAzimuthDeg = 0.0;
inline constexpr double kHPlaneAzimuthDeg = 90.0;

// Plane-wave illumination of the given reflection map; relative levels only.
Pattern rcs_response(const ArrayGeometry& geometry, const Direction& incidence,
                     const QuantizedMap& map, const GridSpec& grid = {},
                     double element_exponent = 1.0);

} // namespace rissim

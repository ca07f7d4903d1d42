#pragma once

#include <complex>
#include <random>
#include <vector>

#include "rissim/fields.hpp"
#include "rissim/geometry.hpp"

namespace rissim::testing {

// Brute-force double-sum reference for the radiated field: per-element
// positions and phases recomputed from first principles, one complex
// exponential per element. Kept independent of the library's evaluation
// path on purpose.
inline std::complex<double> oracle_field(const ArrayGeometry& g,
                                         const std::vector<std::complex<double>>& excitation,
                                         const std::vector<std::complex<double>>& reflection,
                                         double theta_deg, double phi_deg,
                                         double element_exponent) {
    double lambda = 299792458.0 / g.frequency;
    double k = 2.0 * kPi / lambda;
    double t = deg2rad(theta_deg);
    double p = deg2rad(phi_deg);
    double ux = std::sin(t) * std::cos(p);
    double uy = std::sin(t) * std::sin(p);
    std::complex<double> acc{0.0, 0.0};
    std::size_t e = 0;
    for (int i = 0; i < g.n_rows; ++i)
        for (int j = 0; j < g.n_cols; ++j, ++e) {
            double x = (j - (g.n_cols - 1) / 2.0) * g.pitch;
            double y = ((g.n_rows - 1) / 2.0 - i) * g.pitch;
            std::complex<double> phase{0.0, k * (ux * x + uy * y)};
            acc += excitation[e] * reflection[e] * std::exp(phase);
        }
    double ct = std::cos(t);
    double ef = element_exponent == 0.0 ? 1.0 : std::pow(std::max(ct, 0.0), element_exponent);
    return ef * acc;
}

inline std::vector<std::complex<double>> random_excitation(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> amp(0.05, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (std::size_t e = 0; e < n; ++e)
        out.push_back(std::polar(amp(rng), phase(rng)));
    return out;
}

} // namespace rissim::testing

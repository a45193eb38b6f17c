#pragma once

#include <string>
#include <vector>

#include "wavemask/image2d.hpp"
#include "wavemask/rand_stats.hpp"

namespace wavemask {

// Discrete periodic pupil P_n = A_n exp(i phi_n). The aperture convention is
// fixed: A_n = 1 for n < floor(N/2), A_n = 0 otherwise.
struct PupilFunction {
    int period = 0;
    std::vector<double> amplitude;
    std::vector<double> phase; // radians; consumers treat values mod 2*pi
};

enum class MaskKind { Uniform, Bernoulli };

// Distribution of a random phase mask. Uniform draws phases from [0, 2*pi);
// Bernoulli draws pi * B with B ~ Bern(p).
struct MaskSpec {
    MaskKind kind = MaskKind::Uniform;
    double p = 0.5; // ignored for Uniform
};

// One realized mask: phases W_n.
struct MaskSample {
    std::vector<double> phases;
};

// Classical low-order aberration strengths, in radians of peak phase at the
// aperture edge (|x| = 1 in 1-D, rho = 1 in 2-D).
struct SeidelCoefficients {
    double sphere = 0.0;
    double coma = 0.0;
    double astigmatism = 0.0;
    double defocus = 0.0;
    double tilt = 0.0;
};

// Number of aperture support points, floor(N/2).
int aperture_points(int period);

// Builds a pupil with the fixed aperture convention. period must be even and
// >= 4; phase must have length == period.
PupilFunction make_pupil(int period, std::vector<double> phase);

// 1-D Seidel phase on the aperture support, zero outside. The pupil
// coordinate is x = (n - c)/c with c = (floor(N/2)-1)/2, so x spans [-1, 1]
// across the support. Astigmatism and defocus coincide in 1-D (both x^2).
std::vector<double> seidel_phase_1d(const SeidelCoefficients& coeffs, int period);

// 2-D Seidel phase on the unit disk inscribed in a side x side grid:
//   phi = sphere*rho^4 + coma*rho^3 cos(th) + astigmatism*rho^2 cos^2(th)
//       + defocus*rho^2 + tilt*rho cos(th)
// zero outside the disk. Grid center is (side/2, side/2), disk radius side/2,
// so the pixel at column 0 of the center row sits exactly at rho = 1.
Image2D seidel_phase_2d(const SeidelCoefficients& coeffs, int side);

// Disk aperture matching seidel_phase_2d's convention: 1 inside rho <= 1.
Image2D disk_aperture(int side);

// Draws `count` i.i.d. mask phases. Deterministic given the stream state.
MaskSample sample_mask(const MaskSpec& spec, int count, RandomStream& rng);

// Adds mask phases to the pupil phase; amplitude unchanged.
PupilFunction apply_mask(const PupilFunction& pupil, const MaskSample& mask);

// Maps an aberration name ("sphere", "coma", "astigmatism", "defocus",
// "tilt", "none") to coefficients with that single term set to `strength`.
SeidelCoefficients seidel_from_name(const std::string& type, double strength);

} // namespace wavemask

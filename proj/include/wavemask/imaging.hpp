#pragma once

#include "wavemask/core_optics.hpp"
#include "wavemask/image2d.hpp"
#include "wavemask/rand_stats.hpp"

namespace wavemask {

// Point spread function on the image grid. As produced by psf_from_pupil_2d
// the pixels are nonnegative and sum to 1; a noisy copy (the deconvolution
// input measured in practice) keeps the type but not the invariants.
struct Psf2D {
    Image2D image;
};

struct NoiseSpec {
    double sigma = 0.0; // additive Gaussian std dev, scene-intensity units
};

// 2-D pupil on the imaging grid: disk aperture of diameter
// grid_side*diameter_frac centered on the grid, with the Seidel phase
// evaluated on that disk (rho = 1 at the disk edge).
struct Pupil2D {
    Image2D amplitude;
    Image2D phase;
};
Pupil2D make_pupil_2d(const SeidelCoefficients& coeffs, int grid_side, double diameter_frac);

// Per-pixel mask phases on a side x side grid (row-major reshape of
// sample_mask over side^2 points).
Image2D mask_phase_2d(const MaskSpec& spec, int side, RandomStream& rng);

// PSF = |centered DFT of A e^{i phi}|^2, normalized to unit sum. The global
// maximum of the zero-phase PSF lands on the center pixel (h/2, w/2).
Psf2D psf_from_pupil_2d(const Image2D& amplitude, const Image2D& phase);

// Circular convolution in the frequency domain. The PSF's center pixel
// (h/2, w/2) is treated as the kernel origin, so a centered delta PSF is the
// identity. Preserves mean brightness (PSF sums to 1).
Image2D convolve_2d(const Image2D& scene, const Psf2D& psf);

// Adds i.i.d. N(0, sigma^2) per pixel; no clipping.
Image2D add_gaussian_noise(const Image2D& img, const NoiseSpec& spec, RandomStream& rng);
Psf2D add_gaussian_noise(const Psf2D& psf, const NoiseSpec& spec, RandomStream& rng);

// Frequency-domain Wiener estimate X = Y H* / (|H|^2 + nsr) where H is the
// transform of the supplied (possibly noisy) PSF and nsr is the scalar
// noise-to-signal power ratio. nsr = 0 with an exact zero in H is an error
// naming the offending frequency.
Image2D wiener_deconvolve(const Image2D& measurement, const Psf2D& psf, double nsr);

// Mean local SSIM over all 8x8 sliding windows (uniform weights, population
// moments), C1 = (0.01 L)^2, C2 = (0.03 L)^2 with L = 1. Both inputs are
// first rescaled by one shared affine map taking their joint [min, max] to
// [0, 1] (identical inputs score exactly 1).
double ssim(const Image2D& a, const Image2D& b);

// |2-D OTF| = |DFT of the PSF|, normalized so the DC bin is 1. Returned in
// DFT layout (DC at (0,0)). Used for passband/null diagnostics.
Image2D mtf_2d(const Psf2D& psf);

// Deterministic textured test scene in [0,1]: gradient background, disks,
// bars and a checkerboard patch. Stands in when no scene file is configured.
Image2D synthetic_scene(int side);

} // namespace wavemask

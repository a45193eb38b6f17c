#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wavemask/core_optics.hpp"

namespace wavemask {

// Modulation transfer function: H_n = |autocorrelation of P| / ||P||^2.
// H_0 = 1, 0 <= H_n <= 1, H_n = H_{N-n}.
struct Mtf {
    int period = 0;
    std::vector<double> values;
};

// Per-frequency statistics over mask realizations.
struct MtfEnsemble {
    int period = 0;
    int draws = 0;
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<double> q05;
    std::vector<double> q50;
    std::vector<double> q95;
    // Retained only when draws <= the raw cap passed to monte_carlo_mtf.
    std::optional<std::vector<std::vector<double>>> raw;

    // Envelope slack: for nonnegative draws mean >= 0.95*q05 up to quantile
    // interpolation noise; invariant checks use mean >= q05*(1 - kQuantileEps).
    static constexpr double kQuantileEps = 0.06;
};

// Aberration coupling entries a_{jk} = |cos(phi_j - phi_{j-n} - phi_k + phi_{k-n})|
// over unordered pairs j < k with both indices in {n, ..., floor(N/2)-1}.
struct AberrationCouplingVector {
    int source_n = 0;
    std::vector<double> entries;
    int pair_count = 0;
};

// Exact expectations enumerate at most 2^kEnumerationCap vertices and refuse
// otherwise (callers should fall back to Monte Carlo).
inline constexpr int kEnumerationCap = 20;

// Circular autocorrelation magnitude, normalized by its n=0 value.
// Direct O(N^2) summation; mtf_via_fft is the frequency-domain route and the
// two are required to agree to 1e-10.
Mtf mtf(const PupilFunction& pupil);
Mtf mtf_via_fft(const PupilFunction& pupil);

// Cauchy-Schwarz envelope |1 - |n|'/floor(N/2)| with |n|' = min(n, N-n),
// clipped at zero. Any pupil's MTF lies at or below this pointwise.
Mtf diffraction_limit(int period);

// Draws W ~ Unif[0,2pi)^N and evaluates the masked MTF in closed form:
// H_n = (1/M)|sum_{j=n}^{M-1} e^{i(W_j - W_{j-n})}|, M = floor(N/2).
// Identical (to fp) to mtf(apply_mask(zero-aberration pupil, same W)).
Mtf uniform_mtf_sample(int period, RandomStream& rng);

// Samples a Bernoulli-p mask, applies it, returns the MTF (direct route).
Mtf binary_mtf_sample(const PupilFunction& pupil, double p, RandomStream& rng);

// Coupling vector at frequency n, 1 <= n <= floor(N/2)-1.
AberrationCouplingVector coupling_vector(const PupilFunction& pupil, int n);

// Exact E[H_n] under a fair binary mask, by enumerating the lagged-sign
// vector s_j = R_j R_{j-n} over the C(N,n)-dimensional hypercube (uniform by
// the chained-product argument):
//   E[H_n] = 2^{-C} sum_{s in {-1,1}^C} |sum_j e^{i(phi_j - phi_{j-n})} s_j| / M.
// Returns 1 for n = 0 and 1/M for n = M-1.
double binary_mtf_expectation_exact(const PupilFunction& pupil, int n);

// Full exact law of H_n under a fair binary mask: sorted (value, probability)
// pairs with near-equal values (1e-12) merged.
std::vector<std::pair<double, double>> binary_mtf_law(const PupilFunction& pupil, int n);

// The pair-product hypercube route:
//   (sqrt(C)/M) 2^{-pair_count} sum_u sqrt(max(0, 1 + 2 a^T u / C)).
// Negative radicands are clipped and counted. Coincides with the exact law
// for C <= 2; for C >= 3 the pair products carry parity constraints the
// independent-vertex model ignores, so this route deviates from the exact
// expectation (the deviation is what theory reports record).
struct PairHypercubeExpectation {
    double value = 0.0;
    std::int64_t clipped_vertices = 0;
    std::int64_t vertex_count = 0;
};
PairHypercubeExpectation binary_mtf_expectation_pair_hypercube(const PupilFunction& pupil, int n);

// Aberration-invariant lower bound on E[H_n]: the exact-expectation formula
// evaluated at zero aberration (coupling vector = all ones), i.e.
// E|S_C| / (2^C M) with S_C a sum of C independent signs. Tight at phi = 0.
double binary_mtf_expectation_lower_bound(int period, int n);

// Closed-form second moment of H_n under a Bernoulli-p mask:
//   E[H_n^2] = 1{n=0} + 1{n>0} [ C/M^2
//     + ((1-2p)^2/M^2) Re( sum_{j=n}^{M-n-1} e^{i(2phi_j - phi_{j-n} - phi_{j+n})}
//                        + sum_{j=2n}^{M-1} e^{i(phi_j - 2phi_{j-n} + phi_{j-2n})} )
//     + ((1-2p)^4/M^2) Re( sum_{j=n}^{M-1} sum_{k != j, k != j+-n} e^{i(...)} ) ].
// The assembled expression is real by conjugate pairing.
double binary_mtf_second_moment(const PupilFunction& pupil, int n, double p);

// K masked-MTF draws with per-trial substreams (master_seed, trial).
// Bit-reproducible for a fixed master_seed regardless of thread scheduling.
MtfEnsemble monte_carlo_mtf(const PupilFunction& pupil, const MaskSpec& spec, int trials,
                            std::uint64_t master_seed, int raw_cap = 10000);

} // namespace wavemask

#include "wavemask/rand_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace wavemask {

namespace {

// splitmix64 finalizer (Steele/Lea/Flood construction as popularized by Vigna)
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t stream_state(StreamKey key) {
    // Counter-based derivation: hash master and trial through distinct odd
    // multipliers before combining so (s, t) and (s+1, t-1) do not collide.
    const std::uint64_t a = mix64(key.master_seed);
    const std::uint64_t b = mix64(key.trial_index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull);
    return mix64(a ^ b);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t label) {
    return stream_state(StreamKey{master_seed, label});
}

RandomStream::RandomStream(StreamKey key) : key_(key), state_(stream_state(key)) {}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t trial_index)
    : RandomStream(StreamKey{master_seed, trial_index}) {}

std::uint64_t RandomStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double RandomStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

bool RandomStream::bernoulli(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bernoulli: p must lie in [0,1]");
    return uniform01() < p;
}

double RandomStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; 1-u keeps the log argument in (0,1].
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

namespace {

// Asymptotic KS tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double ks_tail(double lambda) {
    if (lambda < 1e-9) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16 * std::abs(sum) || term < 1e-300) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

} // namespace

TestReport ks_two_sample(std::span<const double> x, std::span<const double> y, double alpha) {
    if (x.empty() || y.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> a(x.begin(), x.end());
    std::vector<double> b(y.begin(), y.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const std::size_t n1 = a.size(), n2 = b.size();
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < n1 && j < n2) {
        const double v = std::min(a[i], b[j]);
        while (i < n1 && a[i] <= v) ++i; // step over ties together
        while (j < n2 && b[j] <= v) ++j;
        const double f1 = static_cast<double>(i) / n1;
        const double f2 = static_cast<double>(j) / n2;
        d = std::max(d, std::abs(f1 - f2));
    }

    const double ne = static_cast<double>(n1) * n2 / (static_cast<double>(n1) + n2);
    const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    const double p = ks_tail(lambda);

    TestReport report;
    report.statistic = d;
    report.p_value = p;
    report.sample_sizes = {n1, n2};
    report.alpha = alpha;
    report.decision = (p >= alpha) ? TestDecision::Pass : TestDecision::Fail;
    return report;
}

TestReport chi_square_uniform(std::span<const std::int64_t> counts, double alpha) {
    if (counts.size() < 2) throw std::invalid_argument("chi_square_uniform: need >= 2 categories");
    double total = 0.0;
    for (const auto c : counts) {
        if (c < 0) throw std::invalid_argument("chi_square_uniform: negative count");
        total += static_cast<double>(c);
    }
    const double expected = total / static_cast<double>(counts.size());
    if (expected < 5.0)
        throw std::invalid_argument("chi_square_uniform: underpowered design (expected count < 5)");

    double stat = 0.0;
    for (const auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    const double dof = static_cast<double>(counts.size()) - 1.0;
    const double p = boost::math::gamma_q(dof / 2.0, stat / 2.0);

    TestReport report;
    report.statistic = stat;
    report.p_value = p;
    report.sample_sizes = {counts.size(), static_cast<std::size_t>(total)};
    report.alpha = alpha;
    report.decision = (p >= alpha) ? TestDecision::Pass : TestDecision::Fail;
    return report;
}

std::pair<double, double> mean_with_stderr(std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("mean_with_stderr: need at least 2 samples");
    double mean = 0.0;
    for (const double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (const double v : x) ss += (v - mean) * (v - mean);
    const double var = ss / (static_cast<double>(x.size()) - 1.0);
    return {mean, std::sqrt(var / static_cast<double>(x.size()))};
}

} // namespace wavemask

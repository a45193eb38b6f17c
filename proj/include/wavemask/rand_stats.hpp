#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wavemask {

// Identifies one deterministic substream. Distinct (master_seed, trial_index)
// pairs yield statistically independent streams; equal pairs yield identical
// streams regardless of thread scheduling.
struct StreamKey {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

// Derives a fresh 64-bit seed from a master seed and an integer label.
// Used to give experiment cells independent stream families.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t label);

// Counter-derived splitmix64 stream. Single-owner: never share across threads.
class RandomStream {
public:
    explicit RandomStream(StreamKey key);
    RandomStream(std::uint64_t master_seed, std::uint64_t trial_index = 0);

    std::uint64_t next_u64();

    // 53-bit uniform in [0, 1)
    double uniform01();
    // uniform in [lo, hi)
    double uniform(double lo, double hi);
    // true with probability p; p=0 never, p=1 always
    bool bernoulli(double p);
    // standard normal via Box-Muller (second deviate cached)
    double gaussian();

    StreamKey key() const { return key_; }

private:
    StreamKey key_;
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

enum class TestDecision { Pass, Fail };

struct TestReport {
    double statistic = 0.0;
    double p_value = 1.0;
    std::pair<std::size_t, std::size_t> sample_sizes{0, 0};
    double alpha = 0.01;
    TestDecision decision = TestDecision::Pass;
};

// Two-sample Kolmogorov-Smirnov with the asymptotic p-value. Pass iff
// p_value >= alpha. Rejects empty samples.
TestReport ks_two_sample(std::span<const double> x, std::span<const double> y, double alpha);

// Pearson chi-square of observed counts against the uniform null (k-1 dof).
// Rejects designs with fewer than 2 categories or expected count < 5.
TestReport chi_square_uniform(std::span<const std::int64_t> counts, double alpha);

// Sample mean and sqrt(s^2 / n). Requires n >= 2.
std::pair<double, double> mean_with_stderr(std::span<const double> x);

} // namespace wavemask

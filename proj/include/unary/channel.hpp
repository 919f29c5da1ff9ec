#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "unary/bitstring.hpp"

namespace unary {

// Deterministic generator behind every random draw in the library.
using ChannelRng = std::mt19937_64;

struct ChannelParams {
    double p = 0.0;  // bit error probability
    std::uint64_t seed = 0;
};

/// Generator seeded from params.seed. Throws RangeError if p is outside [0, 1].
ChannelRng make_rng(const ChannelParams& params);

/// Seed of the `stream`-th independent stream derived from a base seed.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(ChannelRng& rng);

/// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(ChannelRng& rng, std::uint64_t bound);

/// Binary symmetric channel: every bit flips independently with probability
/// params.p. Only `rng` is mutated.
Bitstring transmit(const Bitstring& bits, const ChannelParams& params, ChannelRng& rng);

// Set of distinct 1-based positions to flip.
class ErrorPattern {
public:
    ErrorPattern() = default;
    /// Throws RangeError on a zero or repeated position.
    explicit ErrorPattern(std::vector<std::size_t> positions);

    const std::vector<std::size_t>& positions() const noexcept { return positions_; }
    std::size_t weight() const noexcept { return positions_.size(); }

    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;

private:
    std::vector<std::size_t> positions_;  // sorted ascending
};

/// Flips exactly the bits named by the pattern. Throws OutOfRange if a
/// position exceeds the length.
Bitstring apply_error_pattern(const Bitstring& bits, const ErrorPattern& pattern);

/// All C(length, weight) patterns in lexicographic order of their positions.
/// Throws RangeError if weight > length.
std::vector<ErrorPattern> enumerate_patterns(std::size_t length, std::size_t weight);

/// Visits the same sequence as enumerate_patterns without materializing it.
void for_each_pattern(std::size_t length, std::size_t weight,
                      const std::function<void(const ErrorPattern&)>& visit);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace unary

#include "unary/channel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "unary/errors.hpp"

namespace unary {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw RangeError("bit error probability must lie in [0, 1], got " + std::to_string(p));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

ChannelRng make_rng(const ChannelParams& params) {
    check_probability(params.p);
    return ChannelRng(params.seed);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

double uniform_unit(ChannelRng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(ChannelRng& rng, std::uint64_t bound) {
    if (bound == 0) throw RangeError("uniform_below needs a positive bound");
    // Largest multiple of bound representable, so every residue is equally likely.
    const std::uint64_t limit = ChannelRng::max() - ChannelRng::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Bitstring transmit(const Bitstring& bits, const ChannelParams& params, ChannelRng& rng) {
    check_probability(params.p);
    Bitstring out = bits;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (uniform_unit(rng) < params.p) out.flip(i);
    return out;
}

ErrorPattern::ErrorPattern(std::vector<std::size_t> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    if (!positions_.empty() && positions_.front() == 0)
        throw RangeError("error pattern positions are 1-based");
    if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end())
        throw RangeError("error pattern positions must be distinct");
}

Bitstring apply_error_pattern(const Bitstring& bits, const ErrorPattern& pattern) {
    Bitstring out = bits;
    for (std::size_t pos : pattern.positions()) {
        if (pos > bits.size())
            throw OutOfRange("error position " + std::to_string(pos) + " exceeds length " +
                             std::to_string(bits.size()));
        out.flip(pos - 1);
    }
    return out;
}

void for_each_pattern(std::size_t length, std::size_t weight,
                      const std::function<void(const ErrorPattern&)>& visit) {
    if (weight > length)
        throw RangeError("error weight " + std::to_string(weight) + " exceeds length " +
                         std::to_string(length));
    std::vector<std::size_t> pos(weight);
    std::iota(pos.begin(), pos.end(), std::size_t{1});
    while (true) {
        visit(ErrorPattern(pos));
        // Advance to the next combination in lexicographic order.
        std::size_t i = weight;
        while (i > 0 && pos[i - 1] == length - weight + i) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < weight; ++j) pos[j] = pos[j - 1] + 1;
    }
}

std::vector<ErrorPattern> enumerate_patterns(std::size_t length, std::size_t weight) {
    std::vector<ErrorPattern> out;
    for_each_pattern(length, weight, [&](const ErrorPattern& p) { out.push_back(p); });
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace unary

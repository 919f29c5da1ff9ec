#include "unary/codec.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "unary/errors.hpp"

namespace unary {

namespace {

bool symbol_for(UnaryVariant variant) {
    return variant == UnaryVariant::OnesThenZero;
}

// Reads a unary prefix starting at `pos`; advances `pos` past the terminator.
std::uint64_t read_unary(const Bitstring& bits, std::size_t& pos, UnaryVariant variant) {
    const bool repeat = symbol_for(variant);
    std::uint64_t count = 0;
    while (pos < bits.size() && bits[pos] == repeat) {
        ++count;
        ++pos;
    }
    if (pos == bits.size())
        throw MalformedCodeword("unary prefix of \"" + bits.str() + "\" has no terminator");
    ++pos;
    return count;
}

constexpr std::uint64_t kMaxGolombM = std::uint64_t{1} << 62;

void check_golomb_m(std::uint64_t m) {
    if (m == 0 || m > kMaxGolombM)
        throw RangeError("golomb group size m must lie in [1, 2^62], got " + std::to_string(m));
}

// Truncated-binary layout for remainders in [0, m): `short_bits` bits for the
// first `short_count` remainders, one more bit for the rest.
struct RemainderLayout {
    int short_bits;
    std::uint64_t short_count;
};

RemainderLayout remainder_layout(std::uint64_t m) {
    const int k = std::bit_width(m) - 1;
    return {k, (std::uint64_t{1} << (k + 1)) - m};
}

void write_binary(Bitstring& out, std::uint64_t x, int width) {
    for (int b = width - 1; b >= 0; --b) out.push_back(((x >> b) & 1U) != 0);
}

}  // namespace

Bitstring encode_unary(std::uint64_t v, UnaryVariant variant) {
    const bool repeat = symbol_for(variant);
    Bitstring out(v + 1, repeat);
    out.set(v, !repeat);
    return out;
}

std::uint64_t decode_unary(const Bitstring& bits, UnaryVariant variant) {
    if (bits.empty()) throw MalformedCodeword("empty unary codeword");
    std::size_t pos = 0;
    const std::uint64_t v = read_unary(bits, pos, variant);
    if (pos != bits.size())
        throw MalformedCodeword("trailing symbols after unary terminator in \"" + bits.str() + "\"");
    return v;
}

Bitstring encode_thermometer(int v, int n) {
    if (n < 1) throw RangeError("thermometer range n must be >= 1, got " + std::to_string(n));
    if (v < 0 || v > n)
        throw RangeError("thermometer value " + std::to_string(v) + " outside [0, " +
                         std::to_string(n) + "]");
    Bitstring out(static_cast<std::size_t>(n));
    for (int i = n - v; i < n; ++i) out.set(static_cast<std::size_t>(i), true);
    return out;
}

int decode_thermometer_strict(const Bitstring& bits) {
    if (bits.empty()) throw NotACodeword("empty thermometer word");
    bool seen_one = false;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            seen_one = true;
        } else if (seen_one) {
            throw NotACodeword("\"" + bits.str() + "\" has a one left of a zero");
        }
    }
    return static_cast<int>(bits.popcount());
}

Bitstring encode_space(int v, int slots) {
    if (slots < 1) throw RangeError("space code needs at least one slot");
    if (v < 1 || v > slots)
        throw RangeError("space value " + std::to_string(v) + " outside [1, " +
                         std::to_string(slots) + "]");
    Bitstring out(static_cast<std::size_t>(slots));
    const int ones = slots - v + 1;
    for (int i = 0; i < ones; ++i) out.set(static_cast<std::size_t>(i), true);
    return out;
}

int decode_space(const Bitstring& bits) {
    if (bits.empty()) throw NotACodeword("empty space-code word");
    std::size_t ones = 0;
    while (ones < bits.size() && bits[ones]) ++ones;
    for (std::size_t i = ones; i < bits.size(); ++i)
        if (bits[i]) throw NotACodeword("\"" + bits.str() + "\" is not a space-code word");
    if (ones == 0) throw NotACodeword("space code has no pattern for 0");
    return static_cast<int>(bits.size() - ones + 1);
}

GolombParams GolombParams::split(std::uint64_t value, std::uint64_t m) {
    check_golomb_m(m);
    return {m, value / m, value % m};
}

Bitstring encode_golomb(std::uint64_t value, std::uint64_t m, UnaryVariant prefix) {
    const GolombParams g = GolombParams::split(value, m);
    Bitstring out = encode_unary(g.q, prefix);
    const RemainderLayout layout = remainder_layout(m);
    if (g.r < layout.short_count)
        write_binary(out, g.r, layout.short_bits);
    else
        write_binary(out, g.r + layout.short_count, layout.short_bits + 1);
    return out;
}

std::uint64_t decode_golomb(const Bitstring& bits, std::uint64_t m, UnaryVariant prefix) {
    check_golomb_m(m);
    if (bits.empty()) throw MalformedCodeword("empty golomb codeword");
    std::size_t pos = 0;
    const std::uint64_t q = read_unary(bits, pos, prefix);

    const RemainderLayout layout = remainder_layout(m);
    auto read_bits = [&](int width) {
        if (bits.size() - pos < static_cast<std::size_t>(width))
            throw MalformedCodeword("short remainder field in \"" + bits.str() + "\"");
        std::uint64_t x = 0;
        for (int i = 0; i < width; ++i) x = (x << 1) | (bits[pos++] ? 1U : 0U);
        return x;
    };
    std::uint64_t r = read_bits(layout.short_bits);
    if (r >= layout.short_count) r = ((r << 1) | read_bits(1)) - layout.short_count;
    if (pos != bits.size())
        throw MalformedCodeword("trailing bits after golomb codeword in \"" + bits.str() + "\"");
    return q * m + r;
}

TruncatedDistribution truncate_distribution(const std::function<double(int)>& pmf,
                                            const std::function<int(int)>& length, int cutoff) {
    if (cutoff < 1) throw RangeError("distribution cutoff must be >= 1");
    TruncatedDistribution out;
    double kept = 0.0;
    for (int i = 1; i <= cutoff; ++i) {
        const double p = pmf(i);
        out.dist.probs.push_back({i, p});
        out.dist.lengths.push_back(length(i));
        kept += p;
    }
    out.residual_mass = 1.0 - kept;
    return out;
}

DistributionStats distribution_stats(const Distribution& dist) {
    if (dist.probs.empty()) throw InvalidDistribution("empty distribution");
    if (dist.lengths.size() != dist.probs.size())
        throw InvalidDistribution("got " + std::to_string(dist.lengths.size()) + " lengths for " +
                                  std::to_string(dist.probs.size()) + " symbols");

    DistributionStats stats;
    double total = 0.0;
    bool monotone = true;
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
        const double p = dist.probs[k].p;
        const int len = dist.lengths[k];
        if (!(p >= 0.0)) throw InvalidDistribution("negative or NaN probability");
        if (dist.probs[k].value < 1) throw InvalidDistribution("symbols must be positive integers");
        if (len < 1) throw InvalidDistribution("code lengths must be positive");
        if (k > 0) {
            if (dist.probs[k].value <= dist.probs[k - 1].value)
                throw InvalidDistribution("symbols must be listed in increasing order");
            if (p > dist.probs[k - 1].p || len < dist.lengths[k - 1]) monotone = false;
        }
        total += p;
        stats.expected_length += p * len;
        if (p > 0.0) stats.entropy -= p * std::log2(p);
    }
    if (std::abs(total - 1.0) > kDistributionTolerance)
        throw InvalidDistribution("probabilities sum to " + std::to_string(total));
    stats.monotone = monotone;
    return stats;
}

double kraft_sum(const std::vector<int>& lengths) {
    double s = 0.0;
    for (int len : lengths) s += std::ldexp(1.0, -len);
    return s;
}

}  // namespace unary

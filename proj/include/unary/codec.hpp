#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "unary/bitstring.hpp"

namespace unary {

enum class UnaryVariant {
    OnesThenZero,  // 3 -> 1110
    ZerosThenOne,  // 3 -> 0001
};

// Variable-length unary code: v repeated symbols followed by a terminator.
Bitstring encode_unary(std::uint64_t v, UnaryVariant variant = UnaryVariant::OnesThenZero);

/// Inverse of encode_unary. The whole string must be exactly one codeword;
/// a missing terminator or anything after it raises MalformedCodeword.
std::uint64_t decode_unary(const Bitstring& bits, UnaryVariant variant = UnaryVariant::OnesThenZero);

// Fixed-length unary ("thermometer") code of range n: (n - v) zeros then v ones.
Bitstring encode_thermometer(int v, int n);

/// Returns the number of ones of a word shaped 0...01...1.
/// Throws NotACodeword when a one sits left of a zero.
int decode_thermometer_strict(const Bitstring& bits);

// Space code over `slots` positions: slot v (counted from the right, 1-based)
// is marked and everything to its left is filled with ones. There is no
// pattern for 0.
Bitstring encode_space(int v, int slots);
int decode_space(const Bitstring& bits);

struct GolombParams {
    std::uint64_t m = 1;
    std::uint64_t q = 0;
    std::uint64_t r = 0;

    static GolombParams split(std::uint64_t value, std::uint64_t m);
};

/// Golomb code with group size m: the quotient in unary followed by the
/// remainder in binary. Power-of-two m gives the Rice code with a log2(m)-bit
/// remainder. Other m use truncated binary for the remainder, which is the
/// usual Golomb construction; only m = 8 is exercised by the published table.
Bitstring encode_golomb(std::uint64_t value, std::uint64_t m,
                        UnaryVariant prefix = UnaryVariant::OnesThenZero);

/// Inverse of encode_golomb; raises MalformedCodeword on an unterminated
/// prefix, a short remainder field, or trailing bits.
std::uint64_t decode_golomb(const Bitstring& bits, std::uint64_t m,
                            UnaryVariant prefix = UnaryVariant::OnesThenZero);

struct SymbolProbability {
    int value = 0;  // positive integer symbol
    double p = 0.0;
};

struct Distribution {
    std::vector<SymbolProbability> probs;
    std::vector<int> lengths;  // code length of probs[k]
};

// A distribution cut off at a finite support. The mass beyond the cutoff is
// reported, never folded back into the retained probabilities.
struct TruncatedDistribution {
    Distribution dist;
    double residual_mass = 0.0;
};

/// Builds {p(i), length(i)} for i = 1..cutoff.
TruncatedDistribution truncate_distribution(const std::function<double(int)>& pmf,
                                            const std::function<int(int)>& length, int cutoff);

struct DistributionStats {
    double expected_length = 0.0;
    double entropy = 0.0;  // bits
    bool monotone = false;
};

inline constexpr double kDistributionTolerance = 1e-9;

/// Expected code length, Shannon entropy, and whether probabilities are
/// non-increasing while lengths are non-decreasing in symbol order.
/// Throws InvalidDistribution on negative probabilities, a sum away from 1 by
/// more than kDistributionTolerance, or mismatched/non-positive lengths.
DistributionStats distribution_stats(const Distribution& dist);

/// Sum of 2^-length over the code lengths.
double kraft_sum(const std::vector<int>& lengths);

}  // namespace unary

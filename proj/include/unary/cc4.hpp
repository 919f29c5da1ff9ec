#pragma once

#include <cstddef>
#include <vector>

#include "unary/bitstring.hpp"

namespace unary::cc4 {

struct Sample {
    Bitstring pattern;
    int label = 0;  // 0 or 1
};

struct HiddenUnit {
    std::vector<int> weights;  // +1 where the training pattern has a one, -1 elsewhere
    int bias_weight = 0;       // r - s + 1, applied to a constant input of 1
    int ones = 0;              // s, the number of ones in the training pattern
};

// Corner-classification network with one hidden unit per training sample.
// Immutable once trained.
struct Network {
    std::size_t input_len = 0;
    int radius = 0;
    std::vector<HiddenUnit> hidden;
    std::vector<int> output_weights;  // +1 for label 1, -1 for label 0
};

/// Builds the network directly from the samples; no iteration.
/// Throws EmptyTrainingSet, LengthMismatch on ragged or empty patterns,
/// RangeError on a negative radius or a label other than 0/1.
Network train(const std::vector<Sample>& samples, int radius);

/// Net input of hidden unit j: dot(weights, x) + bias_weight. Equals
/// r + 1 - d(x, x_j), so the unit fires exactly within Hamming radius r.
int net_input(const HiddenUnit& unit, const Bitstring& x);

/// Unit j fires iff its net input is strictly positive.
std::vector<bool> hidden_activations(const Network& net, const Bitstring& x);

/// 1 iff the output weights of the firing units sum to a positive value.
/// A zero sum, including the case where nothing fires, yields 0.
int predict(const Network& net, const Bitstring& x);

}  // namespace unary::cc4

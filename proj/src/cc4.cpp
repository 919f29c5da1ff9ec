#include "unary/cc4.hpp"

#include <string>

#include "unary/errors.hpp"

namespace unary::cc4 {

namespace {

void check_input(const Network& net, const Bitstring& x) {
    if (x.size() != net.input_len)
        throw LengthMismatch("input of length " + std::to_string(x.size()) +
                             " for a network of input length " + std::to_string(net.input_len));
}

}  // namespace

Network train(const std::vector<Sample>& samples, int radius) {
    if (samples.empty()) throw EmptyTrainingSet("CC4 needs at least one training sample");
    if (radius < 0) throw RangeError("radius of generalization must be >= 0");

    Network net;
    net.input_len = samples.front().pattern.size();
    net.radius = radius;
    if (net.input_len == 0) throw LengthMismatch("training patterns must be non-empty");

    for (const Sample& s : samples) {
        if (s.pattern.size() != net.input_len)
            throw LengthMismatch("training pattern \"" + s.pattern.str() + "\" has length " +
                                 std::to_string(s.pattern.size()) + ", expected " +
                                 std::to_string(net.input_len));
        if (s.label != 0 && s.label != 1)
            throw RangeError("training label must be 0 or 1, got " + std::to_string(s.label));

        HiddenUnit unit;
        unit.weights.reserve(net.input_len);
        for (std::size_t i = 0; i < net.input_len; ++i) unit.weights.push_back(s.pattern[i] ? 1 : -1);
        unit.ones = static_cast<int>(s.pattern.popcount());
        unit.bias_weight = radius - unit.ones + 1;
        net.hidden.push_back(std::move(unit));
        net.output_weights.push_back(s.label == 1 ? 1 : -1);
    }
    return net;
}

int net_input(const HiddenUnit& unit, const Bitstring& x) {
    if (x.size() != unit.weights.size())
        throw LengthMismatch("input length differs from hidden unit fan-in");
    int sum = unit.bias_weight;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) sum += unit.weights[i];
    return sum;
}

std::vector<bool> hidden_activations(const Network& net, const Bitstring& x) {
    check_input(net, x);
    std::vector<bool> fired;
    fired.reserve(net.hidden.size());
    for (const HiddenUnit& unit : net.hidden) fired.push_back(net_input(unit, x) > 0);
    return fired;
}

int predict(const Network& net, const Bitstring& x) {
    const std::vector<bool> fired = hidden_activations(net, x);
    int sum = 0;
    for (std::size_t j = 0; j < fired.size(); ++j)
        if (fired[j]) sum += net.output_weights[j];
    return sum > 0 ? 1 : 0;
}

}  // namespace unary::cc4

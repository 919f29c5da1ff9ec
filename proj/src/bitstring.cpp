#include "unary/bitstring.hpp"

#include <algorithm>

#include "unary/errors.hpp"

namespace unary {

Bitstring::Bitstring(std::size_t length, bool fill) : bits_(length, fill ? 1 : 0) {}

Bitstring::Bitstring(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidBitstring("bit value must be 0 or 1");
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

Bitstring Bitstring::parse(std::string_view text) {
    Bitstring out;
    out.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw InvalidBitstring("invalid bit character '" + std::string(1, c) + "' in \"" +
                                   std::string(text) + "\"");
        out.bits_.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

std::string Bitstring::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

void Bitstring::append(const Bitstring& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::size_t Bitstring::popcount() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t hamming_distance(const Bitstring& a, const Bitstring& b) {
    if (a.size() != b.size())
        throw LengthMismatch("hamming distance of lengths " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace unary

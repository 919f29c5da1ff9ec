#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace unary {

/// Ordered sequence of binary symbols. Index 0 is the leftmost symbol, which
/// the rest of the library calls position 1 when talking about error patterns.
class Bitstring {
public:
    Bitstring() = default;
    explicit Bitstring(std::size_t length, bool fill = false);
    Bitstring(std::initializer_list<int> bits);

    /// Parses an ASCII string of '0'/'1'. Throws InvalidBitstring otherwise.
    static Bitstring parse(std::string_view text);

    std::string str() const;

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) noexcept { bits_[i] ^= 1; }
    void push_back(bool value) { bits_.push_back(value ? 1 : 0); }
    void append(const Bitstring& other);

    std::size_t popcount() const noexcept;

    friend bool operator==(const Bitstring&, const Bitstring&) = default;
    friend std::strong_ordering operator<=>(const Bitstring&, const Bitstring&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Number of positions at which two equal-length bitstrings differ.
/// Throws LengthMismatch when the lengths differ.
std::size_t hamming_distance(const Bitstring& a, const Bitstring& b);

}  // namespace unary

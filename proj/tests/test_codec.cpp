#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "unary/codec.hpp"
#include "unary/errors.hpp"

using namespace unary;

namespace {
std::string bits(const Bitstring& b) { return b.str(); }
Bitstring B(const char* s) { return Bitstring::parse(s); }
}  // namespace

TEST_CASE("unary code matches the published table") {
    CHECK(bits(encode_unary(0, UnaryVariant::OnesThenZero)) == "0");
    CHECK(bits(encode_unary(3, UnaryVariant::OnesThenZero)) == "1110");
    CHECK(bits(encode_unary(10, UnaryVariant::OnesThenZero)) == "11111111110");
    CHECK(bits(encode_unary(2, UnaryVariant::ZerosThenOne)) == "001");
    CHECK(bits(encode_unary(0, UnaryVariant::ZerosThenOne)) == "1");
}

TEST_CASE("unary decode") {
    CHECK(decode_unary(B("1110")) == 3);
    CHECK(decode_unary(B("0")) == 0);
    CHECK(decode_unary(B("0001"), UnaryVariant::ZerosThenOne) == 3);
    CHECK_THROWS_AS(decode_unary(B("11")), MalformedCodeword);
    CHECK_THROWS_AS(decode_unary(B("1101")), MalformedCodeword);
    CHECK_THROWS_AS(decode_unary(B("00"), UnaryVariant::ZerosThenOne), MalformedCodeword);
    CHECK_THROWS_AS(decode_unary(Bitstring{}), MalformedCodeword);
}

TEST_CASE("thermometer encode and strict decode") {
    CHECK(bits(encode_thermometer(3, 5)) == "00111");
    CHECK(bits(encode_thermometer(0, 5)) == "00000");
    CHECK(bits(encode_thermometer(5, 5)) == "11111");
    CHECK(bits(encode_thermometer(1, 1)) == "1");
    CHECK_THROWS_AS(encode_thermometer(6, 5), RangeError);
    CHECK_THROWS_AS(encode_thermometer(-1, 5), RangeError);
    CHECK_THROWS_AS(encode_thermometer(0, 0), RangeError);

    CHECK(decode_thermometer_strict(B("00111")) == 3);
    CHECK(decode_thermometer_strict(B("00000")) == 0);
    CHECK_THROWS_AS(decode_thermometer_strict(B("00101")), NotACodeword);
    CHECK_THROWS_AS(decode_thermometer_strict(B("10")), NotACodeword);
}

TEST_CASE("thermometer codewords nest") {
    for (int n = 1; n <= 12; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                const Bitstring lo = encode_thermometer(a, n), hi = encode_thermometer(b, n);
                for (std::size_t i = 0; i < lo.size(); ++i)
                    if (lo[i]) REQUIRE(hi[i]);
            }
}

TEST_CASE("space code fills left of the marked slot") {
    CHECK(bits(encode_space(1, 4)) == "1111");
    CHECK(bits(encode_space(2, 4)) == "1110");
    CHECK(bits(encode_space(3, 4)) == "1100");
    CHECK(bits(encode_space(4, 4)) == "1000");
    CHECK_THROWS_AS(encode_space(0, 4), RangeError);
    CHECK_THROWS_AS(encode_space(5, 4), RangeError);
    CHECK(decode_space(B("1100")) == 3);
    CHECK_THROWS_AS(decode_space(B("0000")), NotACodeword);
    CHECK_THROWS_AS(decode_space(B("1010")), NotACodeword);
}

TEST_CASE("golomb m=8 matches the published table") {
    const char* expected[] = {"10000", "10001", "10010", "10011", "10100", "10101"};
    for (std::uint64_t value = 8; value <= 13; ++value) {
        CHECK(bits(encode_golomb(value, 8)) == expected[value - 8]);
        const GolombParams g = GolombParams::split(value, 8);
        CHECK(g.q == 1);
        CHECK(g.r == value - 8);
    }
    CHECK(bits(encode_golomb(0, 8)) == "0000");
    CHECK(decode_golomb(B("10001"), 8) == 9);
    CHECK(decode_golomb(B("0000"), 8) == 0);
}

TEST_CASE("golomb truncated binary remainder for m=5") {
    // m=5: remainders 0..2 take 2 bits, 3..4 take 3 bits (110, 111).
    CHECK(bits(encode_golomb(0, 5)) == "000");
    CHECK(bits(encode_golomb(2, 5)) == "010");
    CHECK(bits(encode_golomb(3, 5)) == "0110");
    CHECK(bits(encode_golomb(4, 5)) == "0111");
    CHECK(bits(encode_golomb(5, 5)) == "1000");
    CHECK(bits(encode_golomb(3, 1)) == "1110");
}

TEST_CASE("golomb decode errors") {
    CHECK_THROWS_AS(decode_golomb(B("1"), 8), MalformedCodeword);
    CHECK_THROWS_AS(decode_golomb(B("100"), 8), MalformedCodeword);
    CHECK_THROWS_AS(decode_golomb(B("100010"), 8), MalformedCodeword);
    CHECK_THROWS_AS(decode_golomb(B("011"), 5), MalformedCodeword);
    CHECK_THROWS_AS(encode_golomb(3, 0), RangeError);
}

TEST_CASE("golomb prefix convention is selectable") {
    CHECK(bits(encode_golomb(9, 8, UnaryVariant::ZerosThenOne)) == "01001");
    CHECK(decode_golomb(B("01001"), 8, UnaryVariant::ZerosThenOne) == 9);
}

TEST_CASE("golomb length and prefix-freeness") {
    for (std::uint64_t m : {1, 2, 4, 8, 16}) {
        const int log2m = std::bit_width(m) - 1;
        for (std::uint64_t v = 0; v <= 2000; ++v)
            REQUIRE(encode_golomb(v, m).size() == v / m + 1 + static_cast<std::uint64_t>(log2m));
    }
    for (std::uint64_t m : {1, 3, 5, 8}) {
        std::vector<std::string> words;
        for (std::uint64_t v = 0; v <= 1000; ++v) words.push_back(encode_golomb(v, m).str());
        std::sort(words.begin(), words.end());
        // After sorting, a word that prefixes another is immediately followed by one it prefixes.
        for (std::size_t i = 0; i + 1 < words.size(); ++i)
            REQUIRE(words[i + 1].compare(0, words[i].size(), words[i]) != 0);
    }
}

TEST_CASE("round trips over random inputs") {
    std::mt19937_64 rng(20261018);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t v = rng() % 10001;
        for (auto variant : {UnaryVariant::OnesThenZero, UnaryVariant::ZerosThenOne})
            REQUIRE(decode_unary(encode_unary(v, variant), variant) == v);
        const int n = 1 + static_cast<int>(rng() % 64);
        const int t = static_cast<int>(rng() % (n + 1));
        REQUIRE(decode_thermometer_strict(encode_thermometer(t, n)) == t);
        const int slot = 1 + static_cast<int>(rng() % n);
        REQUIRE(decode_space(encode_space(slot, n)) == slot);
        const std::uint64_t ms[] = {1, 2, 4, 8, 16, 5, 7};
        const std::uint64_t m = ms[rng() % 7];
        REQUIRE(decode_golomb(encode_golomb(v, m), m) == v);
    }
}

TEST_CASE("distribution stats: dyadic distribution meets the entropy") {
    const TruncatedDistribution t = truncate_distribution(
        [](int i) { return std::ldexp(1.0, -i); }, [](int i) { return i; }, 40);
    CHECK(t.residual_mass == doctest::Approx(std::ldexp(1.0, -40)).epsilon(1e-6));
    const DistributionStats s = distribution_stats(t.dist);
    CHECK(std::abs(s.expected_length - s.entropy) < 1e-9);
    CHECK(std::abs(s.expected_length - 2.0) < 1e-9);
    CHECK(std::abs(s.entropy - 2.0) < 1e-9);
    CHECK(s.monotone);
}

TEST_CASE("distribution stats: small cases and errors") {
    Distribution d{{{1, 0.5}, {2, 0.5}}, {1, 2}};
    DistributionStats s = distribution_stats(d);
    CHECK(s.expected_length == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(s.entropy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.monotone);

    d = {{{1, 0.2}, {2, 0.8}}, {1, 2}};
    CHECK_FALSE(distribution_stats(d).monotone);

    d = {{{1, 1.0}, {2, 0.0}}, {1, 2}};
    s = distribution_stats(d);
    CHECK(s.entropy == 0.0);

    CHECK_THROWS_AS(distribution_stats({{{1, 0.5}, {2, 0.4}}, {1, 2}}), InvalidDistribution);
    CHECK_THROWS_AS(distribution_stats({{{1, 1.2}, {2, -0.2}}, {1, 2}}), InvalidDistribution);
    CHECK_THROWS_AS(distribution_stats({{{1, 1.0}}, {1, 2}}), InvalidDistribution);
    CHECK_THROWS_AS(distribution_stats({}), InvalidDistribution);
}

TEST_CASE("expected length never beats entropy under Kraft") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 12);
        std::vector<int> lengths;
        do {
            lengths.clear();
            for (int i = 0; i < k; ++i) lengths.push_back(1 + static_cast<int>(rng() % 10));
        } while (kraft_sum(lengths) > 1.0);
        std::vector<double> w(k);
        double sum = 0.0;
        for (double& x : w) sum += (x = unit(rng));
        Distribution d;
        for (int i = 0; i < k; ++i) d.probs.push_back({i + 1, w[i] / sum});
        d.lengths = lengths;
        const DistributionStats s = distribution_stats(d);
        REQUIRE(s.expected_length >= s.entropy - 1e-12);
    }
}

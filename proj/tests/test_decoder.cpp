#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "unary/decoder.hpp"
#include "unary/errors.hpp"

using namespace unary;

namespace {

Bitstring B(const char* s) { return Bitstring::parse(s); }

Bitstring from_mask(std::uint32_t w, int n) {
    Bitstring b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.set(static_cast<std::size_t>(i), (w >> (n - 1 - i)) & 1U);
    return b;
}

std::vector<std::string> strs(const std::vector<Bitstring>& v) {
    std::vector<std::string> out;
    for (const auto& b : v) out.push_back(b.str());
    return out;
}

constexpr TiePolicy kAllPolicies[] = {TiePolicy::RejectTies, TiePolicy::LowestValue,
                                      TiePolicy::HighestValue, TiePolicy::PaperParity};

}  // namespace

TEST_CASE("codebook construction") {
    CHECK(strs(build_codebook(5).codewords()) ==
          std::vector<std::string>{"00000", "00001", "00011", "00111", "01111", "11111"});
    CHECK(strs(build_codebook(1).codewords()) == std::vector<std::string>{"0", "1"});
    CHECK(strs(build_codebook(2).codewords()) == std::vector<std::string>{"00", "01", "11"});
    CHECK_THROWS_AS(build_codebook(0), RangeError);

    const Codebook cb(9);
    for (int v = 0; v < 9; ++v) CHECK(hamming_distance(cb.codeword(v), cb.codeword(v + 1)) == 1);
}

TEST_CASE("nearest_set") {
    const Codebook cb(5);
    NearestSet s = nearest_set(B("00111"), cb);
    CHECK(s.distance == 0);
    CHECK(s.values == std::vector<int>{3});
    s = nearest_set(B("00010"), cb);
    CHECK(s.distance == 1);
    CHECK(s.values == std::vector<int>{0, 2});
    s = nearest_set(B("01010"), cb);
    CHECK(s.distance == 2);
    CHECK(s.values == std::vector<int>{0, 2, 4});
    CHECK_THROWS_AS(nearest_set(B("0010"), cb), LengthMismatch);
}

TEST_CASE("decode with tie policies") {
    const Codebook cb(5);
    DecodeOutcome d = decode(B("00010"), cb, TiePolicy::PaperParity);
    CHECK(d.decoded());
    CHECK(d.value == 0);
    CHECK(d.distance == 1);
    CHECK(d.ambiguous);

    CHECK(decode(B("00101"), cb, TiePolicy::PaperParity).value == 3);
    CHECK(decode(B("01011"), cb, TiePolicy::PaperParity).value == 2);
    CHECK(decode(B("10111"), cb, TiePolicy::PaperParity).value == 5);

    for (TiePolicy p : kAllPolicies) {
        d = decode(B("00111"), cb, p);
        CHECK(d.decoded());
        CHECK(d.value == 3);
        CHECK(d.distance == 0);
        CHECK_FALSE(d.ambiguous);
    }

    d = decode(B("00010"), cb, TiePolicy::RejectTies);
    CHECK_FALSE(d.decoded());
    CHECK(d.ambiguous);
    CHECK(decode(B("00010"), cb, TiePolicy::HighestValue).value == 2);
    CHECK(decode(B("00010"), cb, TiePolicy::LowestValue).value == 0);

    // Three-way tie: parity falls back to the lowest value.
    CHECK(decode(B("01010"), cb, TiePolicy::PaperParity).value == 0);
    CHECK(decode(B("10101"), cb, TiePolicy::PaperParity).value == 1);
    CHECK_THROWS_AS(decode(B("0"), cb), LengthMismatch);
}

TEST_CASE("policy names round trip") {
    for (TiePolicy p : kAllPolicies) CHECK(parse_policy(policy_name(p)) == p);
    CHECK_THROWS_AS(parse_policy("nearest"), RangeError);
}

TEST_CASE("decode picks from the nearest set at minimal distance") {
    for (int n = 1; n <= 10; ++n) {
        const Codebook cb(n);
        for (std::uint32_t w = 0; w < (1U << n); ++w) {
            const Bitstring word = from_mask(w, n);
            const NearestSet s = nearest_set(word, cb);
            REQUIRE(static_cast<int>(s.distance) == oracle::min_distance_to_code(w, n));
            for (TiePolicy p : kAllPolicies) {
                const DecodeOutcome d = decode(word, cb, p);
                REQUIRE(d.distance == s.distance);
                if (d.decoded()) {
                    REQUIRE(std::find(s.values.begin(), s.values.end(), d.value) != s.values.end());
                    REQUIRE(hamming_distance(word, cb.codeword(d.value)) == d.distance);
                } else {
                    REQUIRE(p == TiePolicy::RejectTies);
                    REQUIRE(s.values.size() > 1);
                }
            }
        }
    }
}

TEST_CASE("correctable_set rows") {
    const Codebook cb5(5);
    CHECK(strs(correctable_set(1, 1, cb5)) == std::vector<std::string>{"10001", "01001"});
    CHECK(strs(correctable_set(5, 1, cb5)) ==
          std::vector<std::string>{"10111", "11011", "11101", "11110"});
    for (TiePolicy p : kAllPolicies) CHECK(correctable_set(0, 1, Codebook(1), p).empty());
    CHECK_THROWS_AS(correctable_set(6, 1, cb5), RangeError);
    CHECK_THROWS_AS(correctable_set(0, 6, cb5), RangeError);
}

TEST_CASE("census examples") {
    CorrectionCensus c = correction_census(5, 1, TiePolicy::PaperParity);
    std::vector<std::uint64_t> counts;
    for (const auto& row : c.per_codeword) counts.push_back(row.count);
    CHECK(counts == std::vector<std::uint64_t>{4, 2, 2, 2, 2, 4});
    CHECK(c.total == 16);

    for (TiePolicy p : kCompletePolicies) {
        CHECK(correction_census(5, 2, p).total == 10);
        CHECK(correction_census(1, 1, p).total == 0);
        CHECK(correction_census(2, 1, p).total == 1);
    }
    CHECK(correction_census(5, 1, TiePolicy::RejectTies).total == 12);
    CHECK(correction_census(5, 0, TiePolicy::RejectTies).total == 6);

    CHECK_THROWS_AS(correction_census(0, 0), RangeError);
    CHECK_THROWS_AS(correction_census(5, 6), RangeError);
    CHECK_THROWS_AS(correction_census(kMaxCensusN + 1, 1), Infeasible);
}

TEST_CASE("census totals match the distance histogram for every policy") {
    for (int n = 1; n <= 12; ++n) {
        const auto hist = oracle::distance_histogram(n);
        for (int t = 0; t <= n; ++t)
            for (TiePolicy p : kCompletePolicies)
                REQUIRE(correction_census(n, t, p).total == hist[static_cast<std::size_t>(t)]);
        REQUIRE(correction_census(n, 1, TiePolicy::RejectTies).total ==
                oracle::unambiguous_single_errors(n));
        REQUIRE(correction_census(n, 1, TiePolicy::RejectTies).total <= hist[1]);
    }
}

TEST_CASE("parity policy gives (n-1) at the ends and (n-3) in the middle for odd n") {
    for (int n = 3; n <= 13; n += 2) {
        const CorrectionCensus c = correction_census(n, 1, TiePolicy::PaperParity);
        for (const auto& row : c.per_codeword) {
            const bool end = row.value == 0 || row.value == n;
            REQUIRE(row.count == static_cast<std::uint64_t>(end ? n - 1 : n - 3));
        }
    }
}

TEST_CASE("parity policy per-codeword counts for even n") {
    // The top tie {n-2, n} has an even lower member, so value n gives it up
    // and value n-1 keeps both of its neighbours.
    for (int n = 4; n <= 14; n += 2) {
        const CorrectionCensus c = correction_census(n, 1, TiePolicy::PaperParity);
        for (const auto& row : c.per_codeword) {
            std::uint64_t expected = static_cast<std::uint64_t>(n - 3);
            if (row.value == 0) expected = static_cast<std::uint64_t>(n - 1);
            if (row.value >= n - 1) expected = static_cast<std::uint64_t>(n - 2);
            REQUIRE(row.count == expected);
        }
    }
}

TEST_CASE("no tie assignment yields the (n-1)/(n-3) shape for even n") {
    // Ties at distance 1 are exactly the pairs {k, k+2}; try every way of
    // awarding them.
    for (int n = 4; n <= 12; n += 2) {
        const int ties = n - 1;
        bool found = false;
        for (std::uint32_t award = 0; award < (1U << ties) && !found; ++award) {
            std::vector<int> count(static_cast<std::size_t>(n) + 1);
            for (int v = 0; v <= n; ++v) count[static_cast<std::size_t>(v)] = (v == 0 || v == n) ? n - 1 : n - 2;
            for (int k = 0; k < ties; ++k) {
                const int loser = ((award >> k) & 1U) ? k : k + 2;
                --count[static_cast<std::size_t>(loser)];
            }
            bool shape = true;
            for (int v = 0; v <= n; ++v)
                shape &= count[static_cast<std::size_t>(v)] == ((v == 0 || v == n) ? n - 1 : n - 3);
            found = shape;
        }
        REQUIRE_FALSE(found);
    }
}

TEST_CASE("census rows decode back to their codeword") {
    const Codebook cb(7);
    for (TiePolicy p : kCompletePolicies) {
        const CorrectionCensus c = correction_census(7, 2, p);
        std::uint64_t sum = 0;
        for (const auto& row : c.per_codeword) {
            sum += row.count;
            for (const Bitstring& w : row.corrected) {
                REQUIRE(hamming_distance(w, cb.codeword(row.value)) == 2);
                REQUIRE(decode(w, cb, p).value == row.value);
            }
        }
        REQUIRE(sum == c.total);
    }
}

TEST_CASE("boundary flips are undetectable") {
    for (int n = 2; n <= 10; ++n) {
        const Codebook cb(n);
        for (int v = 0; v <= n; ++v) {
            // The zero just left of the ones, and the leftmost one.
            for (int target : {v + 1, v - 1}) {
                if (target < 0 || target > n) continue;
                const std::size_t pos = static_cast<std::size_t>(n - std::max(v, target));
                Bitstring w = cb.codeword(v);
                w.flip(pos);
                const DecodeOutcome d = decode(w, cb);
                REQUIRE(d.value == target);
                REQUIRE(d.distance == 0);
            }
        }
    }
}

TEST_CASE("census renderings") {
    const CorrectionCensus c = correction_census(5, 1);
    const std::string table = render_census_table(c);
    CHECK(table.find("10000, 01000, 00100, 00010, 00001") != std::string::npos);
    CHECK(table.find("10000, 01000, 00100, 00010") != std::string::npos);
    CHECK(table.find("10111, 11011, 11101, 11110") != std::string::npos);
    CHECK(table.find("total: 16") != std::string::npos);
    CHECK(render_census_csv(c) ==
          "value,count,total\n0,4,16\n1,2,16\n2,2,16\n3,2,16\n4,2,16\n5,4,16\n");
}

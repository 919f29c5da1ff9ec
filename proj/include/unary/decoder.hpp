#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unary/bitstring.hpp"

namespace unary {

/// The n + 1 thermometer codewords of range n; codewords()[v] has v ones.
class Codebook {
public:
    /// Throws RangeError if n < 1.
    explicit Codebook(int n);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return codewords_.size(); }
    const std::vector<Bitstring>& codewords() const noexcept { return codewords_; }
    const Bitstring& codeword(int value) const;

private:
    int n_;
    std::vector<Bitstring> codewords_;
};

Codebook build_codebook(int n);

// How decode picks among several equidistant codewords.
enum class TiePolicy {
    RejectTies,    // never guess; the only incomplete policy
    LowestValue,
    HighestValue,
    PaperParity,   // {k, k+2}: k if k is even, else k+2; otherwise lowest
};

inline constexpr TiePolicy kCompletePolicies[] = {
    TiePolicy::LowestValue, TiePolicy::HighestValue, TiePolicy::PaperParity};

std::string_view policy_name(TiePolicy policy);
/// Accepts the names produced by policy_name; throws RangeError otherwise.
TiePolicy parse_policy(std::string_view name);

struct NearestSet {
    std::size_t distance = 0;
    std::vector<int> values;  // ascending
};

/// Exhaustive minimum-distance search. Throws LengthMismatch if the word
/// length differs from cb.n().
NearestSet nearest_set(const Bitstring& word, const Codebook& cb);

/// Chooses one value from a nearest set, or -1 under RejectTies when the set
/// has more than one member.
int resolve_tie(const std::vector<int>& values, TiePolicy policy);

struct DecodeOutcome {
    enum class Status { Decoded, Rejected };

    Status status = Status::Rejected;
    int value = -1;  // meaningful only when Decoded
    std::size_t distance = 0;
    bool ambiguous = false;

    bool decoded() const noexcept { return status == Status::Decoded; }
};

DecodeOutcome decode(const Bitstring& word, const Codebook& cb,
                     TiePolicy policy = TiePolicy::PaperParity);

/// Received words codeword(v) + weight-t error that decode back to v,
/// listed in lexicographic order of the error positions.
std::vector<Bitstring> correctable_set(int value, int weight, const Codebook& cb,
                                       TiePolicy policy = TiePolicy::PaperParity);

struct CodewordCensus {
    int value = 0;
    std::uint64_t count = 0;
    std::vector<Bitstring> corrected;
};

struct CorrectionCensus {
    int n = 0;
    int t = 0;
    TiePolicy policy = TiePolicy::PaperParity;
    std::vector<CodewordCensus> per_codeword;
    std::uint64_t total = 0;
};

// Largest n accepted by correction_census; above it the (n+1) * C(n, t)
// enumeration is refused with Infeasible.
inline constexpr int kMaxCensusN = 20;

/// Exhaustive count of weight-t error events corrected under `policy`.
/// Throws RangeError for n < 1 or t outside [0, n], Infeasible for n > kMaxCensusN.
CorrectionCensus correction_census(int n, int t, TiePolicy policy = TiePolicy::PaperParity);

/// Plain-text table: codeword, every weight-t corruption, corrected subset, count.
std::string render_census_table(const CorrectionCensus& census);

/// CSV with header `value,count,total`; total is repeated on every row.
std::string render_census_csv(const CorrectionCensus& census);

}  // namespace unary

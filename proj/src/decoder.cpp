#include "unary/decoder.hpp"

#include <algorithm>
#include <sstream>

#include "unary/channel.hpp"
#include "unary/codec.hpp"
#include "unary/errors.hpp"

namespace unary {

Codebook::Codebook(int n) : n_(n) {
    if (n < 1) throw RangeError("codebook range n must be >= 1, got " + std::to_string(n));
    codewords_.reserve(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) codewords_.push_back(encode_thermometer(v, n));
}

const Bitstring& Codebook::codeword(int value) const {
    if (value < 0 || value > n_)
        throw RangeError("codeword value " + std::to_string(value) + " outside [0, " +
                         std::to_string(n_) + "]");
    return codewords_[static_cast<std::size_t>(value)];
}

Codebook build_codebook(int n) { return Codebook(n); }

std::string_view policy_name(TiePolicy policy) {
    switch (policy) {
        case TiePolicy::RejectTies: return "reject-ties";
        case TiePolicy::LowestValue: return "lowest-value";
        case TiePolicy::HighestValue: return "highest-value";
        case TiePolicy::PaperParity: return "paper-parity";
    }
    return "unknown";
}

TiePolicy parse_policy(std::string_view name) {
    for (TiePolicy p : {TiePolicy::RejectTies, TiePolicy::LowestValue, TiePolicy::HighestValue,
                        TiePolicy::PaperParity})
        if (policy_name(p) == name) return p;
    throw RangeError("unknown tie policy '" + std::string(name) + "'");
}

NearestSet nearest_set(const Bitstring& word, const Codebook& cb) {
    if (word.size() != static_cast<std::size_t>(cb.n()))
        throw LengthMismatch("received word has length " + std::to_string(word.size()) +
                             ", codebook length is " + std::to_string(cb.n()));
    NearestSet best;
    best.distance = word.size() + 1;
    for (int v = 0; v <= cb.n(); ++v) {
        const std::size_t d = hamming_distance(word, cb.codeword(v));
        if (d < best.distance) {
            best.distance = d;
            best.values.assign(1, v);
        } else if (d == best.distance) {
            best.values.push_back(v);
        }
    }
    return best;
}

int resolve_tie(const std::vector<int>& values, TiePolicy policy) {
    if (values.empty()) throw RangeError("empty nearest set");
    if (values.size() == 1) return values.front();
    switch (policy) {
        case TiePolicy::RejectTies: return -1;
        case TiePolicy::LowestValue: return values.front();
        case TiePolicy::HighestValue: return values.back();
        case TiePolicy::PaperParity: {
            const int k = values.front();
            if (values.size() == 2 && values.back() == k + 2) return k % 2 == 0 ? k : k + 2;
            return k;
        }
    }
    return -1;
}

DecodeOutcome decode(const Bitstring& word, const Codebook& cb, TiePolicy policy) {
    const NearestSet nearest = nearest_set(word, cb);
    DecodeOutcome out;
    out.distance = nearest.distance;
    out.ambiguous = nearest.values.size() > 1;
    out.value = resolve_tie(nearest.values, policy);
    out.status = out.value < 0 ? DecodeOutcome::Status::Rejected : DecodeOutcome::Status::Decoded;
    return out;
}

namespace {

void check_census_args(int value, int weight, const Codebook& cb) {
    if (value < 0 || value > cb.n())
        throw RangeError("codeword value " + std::to_string(value) + " outside [0, " +
                         std::to_string(cb.n()) + "]");
    if (weight < 0 || weight > cb.n())
        throw RangeError("error weight " + std::to_string(weight) + " outside [0, " +
                         std::to_string(cb.n()) + "]");
}

}  // namespace

std::vector<Bitstring> correctable_set(int value, int weight, const Codebook& cb,
                                       TiePolicy policy) {
    check_census_args(value, weight, cb);
    const Bitstring& sent = cb.codeword(value);
    std::vector<Bitstring> out;
    for_each_pattern(sent.size(), static_cast<std::size_t>(weight), [&](const ErrorPattern& e) {
        Bitstring received = apply_error_pattern(sent, e);
        const DecodeOutcome d = decode(received, cb, policy);
        if (d.decoded() && d.value == value) out.push_back(std::move(received));
    });
    return out;
}

CorrectionCensus correction_census(int n, int t, TiePolicy policy) {
    if (n < 1) throw RangeError("census range n must be >= 1, got " + std::to_string(n));
    if (n > kMaxCensusN)
        throw Infeasible("exhaustive census limited to n <= " + std::to_string(kMaxCensusN) +
                         ", got " + std::to_string(n));
    const Codebook cb(n);
    if (t < 0 || t > n)
        throw RangeError("error weight " + std::to_string(t) + " outside [0, " + std::to_string(n) +
                         "]");

    CorrectionCensus census;
    census.n = n;
    census.t = t;
    census.policy = policy;
    for (int v = 0; v <= n; ++v) {
        CodewordCensus row;
        row.value = v;
        row.corrected = correctable_set(v, t, cb, policy);
        row.count = row.corrected.size();
        census.total += row.count;
        census.per_codeword.push_back(std::move(row));
    }
    return census;
}

namespace {

std::string join(const std::vector<Bitstring>& words) {
    std::string out;
    for (const Bitstring& w : words) {
        if (!out.empty()) out += ", ";
        out += w.str();
    }
    return out;
}

}  // namespace

std::string render_census_table(const CorrectionCensus& census) {
    const Codebook cb(census.n);
    std::vector<std::string> col_word, col_all, col_fixed, col_count;
    for (const CodewordCensus& row : census.per_codeword) {
        const Bitstring& sent = cb.codeword(row.value);
        std::vector<Bitstring> all;
        for_each_pattern(sent.size(), static_cast<std::size_t>(census.t),
                         [&](const ErrorPattern& e) { all.push_back(apply_error_pattern(sent, e)); });
        col_word.push_back(sent.str());
        col_all.push_back(join(all));
        col_fixed.push_back(join(row.corrected));
        col_count.push_back(std::to_string(row.count));
    }

    const std::string headers[] = {"codeword", "weight-" + std::to_string(census.t) + " errors",
                                   "corrected", "count"};
    const std::vector<std::string>* columns[] = {&col_word, &col_all, &col_fixed, &col_count};
    std::size_t width[4];
    for (int c = 0; c < 4; ++c) {
        width[c] = headers[c].size();
        for (const std::string& s : *columns[c]) width[c] = std::max(width[c], s.size());
    }

    std::ostringstream os;
    auto emit = [&](const std::string* cells) {
        for (int c = 0; c < 4; ++c) {
            os << cells[c];
            if (c < 3) os << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << '\n';
    };
    os << "n=" << census.n << " t=" << census.t << " policy=" << policy_name(census.policy) << '\n';
    emit(headers);
    for (std::size_t r = 0; r < col_word.size(); ++r) {
        const std::string cells[] = {col_word[r], col_all[r], col_fixed[r], col_count[r]};
        emit(cells);
    }
    os << "total: " << census.total << '\n';
    return os.str();
}

std::string render_census_csv(const CorrectionCensus& census) {
    std::ostringstream os;
    os << "value,count,total\n";
    for (const CodewordCensus& row : census.per_codeword)
        os << row.value << ',' << row.count << ',' << census.total << '\n';
    return os.str();
}

}  // namespace unary

#include "unary/capacity.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "unary/channel.hpp"
#include "unary/errors.hpp"

namespace unary {

namespace {

void check_n(int n, int minimum) {
    if (n < minimum)
        throw RangeError("n must be >= " + std::to_string(minimum) + ", got " + std::to_string(n));
}

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw RangeError("p must lie in [0, 1], got " + std::to_string(p));
}

void check_step(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw RangeError("grid step must lie in (0, 1]");
}

std::string format_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

double single_correction_probability(int n, double p) {
    check_n(n, 1);
    check_p(p);
    const double m = n - 1;
    return m * m * p * std::pow(1.0 - p, n - 1);
}

double single_correction_capacity(int n, double p) {
    const double count = single_correction_probability(n, p);
    return count / (static_cast<double>(n) * (n + 1));
}

double single_correction_derivative(int n, double p) {
    check_n(n, 2);
    check_p(p);
    return -p * (n - 1) * std::pow(1.0 - p, n - 2) + std::pow(1.0 - p, n - 1);
}

double grid_argmax_single_correction(int n, double step) {
    check_n(n, 2);
    check_step(step);
    const auto points = static_cast<long>(std::llround(1.0 / step));
    double best_p = step;
    double best = -1.0;
    for (long k = 1; k < points; ++k) {
        const double p = static_cast<double>(k) * step;
        const double value = single_correction_probability(n, p);
        if (value > best) {
            best = value;
            best_p = p;
        }
    }
    return best_p;
}

int derivative_sign_changes(int n, double step) {
    check_n(n, 2);
    check_step(step);
    const auto points = static_cast<long>(std::llround(1.0 / step));
    int changes = 0;
    int previous = 0;
    for (long k = 1; k < points; ++k) {
        const double d = single_correction_derivative(n, static_cast<double>(k) * step);
        const int sign = (d > 0.0) - (d < 0.0);
        if (sign == 0) continue;
        if (previous != 0 && sign != previous) ++changes;
        previous = sign;
    }
    return changes;
}

double optimal_p(int n) {
    check_n(n, 2);
    const double closed_form = 1.0 / n;
    const double numeric = grid_argmax_single_correction(n, kOptimumGridStep);
    if (std::abs(numeric - closed_form) > kOptimumGridTolerance)
        throw std::logic_error("grid argmax " + std::to_string(numeric) + " disagrees with 1/n");
    return closed_form;
}

double double_correction_capacity(int n, double p, std::uint64_t census_total) {
    check_n(n, 2);
    check_p(p);
    return static_cast<double>(census_total) * p * p * std::pow(1.0 - p, n - 2) / (n + 1);
}

std::vector<CapacityPoint> capacity_curve(int n, const std::vector<double>& p_grid,
                                          std::optional<std::uint64_t> double_census_total) {
    check_n(n, 1);
    if (double_census_total) check_n(n, 2);
    std::vector<CapacityPoint> curve;
    curve.reserve(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        const double p = p_grid[i];
        check_p(p);
        if (i > 0 && !(p > p_grid[i - 1])) throw RangeError("grid must be strictly increasing");
        CapacityPoint pt;
        pt.n = n;
        pt.p = p;
        pt.single_correction = single_correction_probability(n, p);
        pt.single_capacity = single_correction_capacity(n, p);
        if (double_census_total)
            pt.double_capacity = double_correction_capacity(n, p, *double_census_total);
        curve.push_back(pt);
    }
    return curve;
}

std::vector<double> uniform_grid(double step) {
    check_step(step);
    const auto intervals = static_cast<long>(std::llround(1.0 / step));
    if (std::abs(static_cast<double>(intervals) * step - 1.0) > 1e-9)
        throw RangeError("grid step must divide 1 evenly");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(intervals) + 1);
    for (long k = 0; k <= intervals; ++k) grid.push_back(static_cast<double>(k) / intervals);
    return grid;
}

std::size_t curve_argmax(const std::vector<CapacityPoint>& curve) {
    if (curve.empty()) throw RangeError("empty curve");
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (curve[i].single_correction > curve[best].single_correction) best = i;
    return best;
}

std::string render_curve_csv(const std::vector<CapacityPoint>& curve) {
    std::ostringstream os;
    os << "n,p,single_correction,single_capacity,double_capacity\n";
    for (const CapacityPoint& pt : curve) {
        os << pt.n << ',' << format_g12(pt.p) << ',' << format_g12(pt.single_correction) << ','
           << format_g12(pt.single_capacity) << ',';
        if (pt.double_capacity) os << format_g12(*pt.double_capacity);
        os << '\n';
    }
    return os.str();
}

namespace {

struct StreamTally {
    std::uint64_t single_error_trials = 0;
    std::uint64_t corrected = 0;
};

StreamTally run_stream(const Codebook& cb, double p, std::uint64_t trials, std::uint64_t seed,
                       TiePolicy policy) {
    const ChannelParams params{p, seed};
    ChannelRng rng = make_rng(params);
    const auto values = static_cast<std::uint64_t>(cb.n()) + 1;
    StreamTally tally;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const int sent = static_cast<int>(uniform_below(rng, values));
        const Bitstring& codeword = cb.codeword(sent);
        const Bitstring received = transmit(codeword, params, rng);
        if (hamming_distance(codeword, received) != 1) continue;
        ++tally.single_error_trials;
        const DecodeOutcome out = decode(received, cb, policy);
        if (out.decoded() && out.value == sent) ++tally.corrected;
    }
    return tally;
}

double binomial_se(double rate, std::uint64_t count) {
    return count == 0 ? 0.0 : std::sqrt(rate * (1.0 - rate) / static_cast<double>(count));
}

}  // namespace

MonteCarloReport monte_carlo_estimate(int n, double p, std::uint64_t trials, std::uint64_t seed,
                                      TiePolicy policy, unsigned streams) {
    check_n(n, 1);
    check_p(p);
    if (trials < 1) throw RangeError("monte carlo needs at least one trial");
    if (streams < 1) throw RangeError("monte carlo needs at least one stream");

    const Codebook cb(n);
    std::vector<StreamTally> tallies(streams);
    {
        std::vector<std::jthread> workers;
        workers.reserve(streams);
        for (unsigned s = 0; s < streams; ++s) {
            const std::uint64_t share = trials / streams + (s < trials % streams ? 1 : 0);
            workers.emplace_back([&, s, share] {
                tallies[s] = run_stream(cb, p, share, stream_seed(seed, s), policy);
            });
        }
    }

    MonteCarloReport report;
    report.trials = trials;
    for (const StreamTally& t : tallies) {
        report.single_error_trials += t.single_error_trials;
        report.corrected += t.corrected;
    }
    if (report.single_error_trials > 0)
        report.empirical_conditional =
            static_cast<double>(report.corrected) / static_cast<double>(report.single_error_trials);
    report.empirical_unconditional =
        static_cast<double>(report.corrected) / static_cast<double>(report.trials);
    report.standard_error = binomial_se(report.empirical_conditional, report.single_error_trials);
    report.standard_error_unconditional =
        binomial_se(report.empirical_unconditional, report.trials);
    return report;
}

std::string render_report(const MonteCarloReport& r) {
    std::ostringstream os;
    os << "trials: " << r.trials << '\n'
       << "single_error_trials: " << r.single_error_trials << '\n'
       << "corrected: " << r.corrected << '\n'
       << "empirical_conditional: " << format_g12(r.empirical_conditional) << '\n'
       << "empirical_unconditional: " << format_g12(r.empirical_unconditional) << '\n'
       << "standard_error: " << format_g12(r.standard_error) << '\n'
       << "standard_error_unconditional: " << format_g12(r.standard_error_unconditional) << '\n';
    return os.str();
}

}  // namespace unary

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unary/decoder.hpp"

namespace unary {

// Closed forms for single- and double-error correction of the length-n
// thermometer code over a binary symmetric channel with bit error rate p.

/// (n-1)^2 p (1-p)^(n-1). This is an expected count of corrected single-error
/// patterns summed over codewords, not a probability, and it can exceed 1.
/// Divide by n+1 for the per-transmission probability, or see
/// single_correction_capacity for the per-event fraction.
double single_correction_probability(int n, double p);

/// single_correction_probability / (n (n+1)); 0 for n = 1.
double single_correction_capacity(int n, double p);

/// Derivative of single_correction_probability divided by (n-1)^2:
/// -p (n-1) (1-p)^(n-2) + (1-p)^(n-1).
double single_correction_derivative(int n, double p);

/// Interior grid point k*step in (0, 1) maximizing single_correction_probability.
double grid_argmax_single_correction(int n, double step);

/// Sign changes of single_correction_derivative over the interior grid,
/// skipping exact zeros.
int derivative_sign_changes(int n, double step);

inline constexpr double kOptimumGridStep = 1e-4;
inline constexpr double kOptimumGridTolerance = 1e-3;

/// The maximizing error rate 1/n. The grid argmax at kOptimumGridStep is
/// checked against it; a miss beyond kOptimumGridTolerance throws std::logic_error.
/// Throws RangeError for n < 2.
double optimal_p(int n);

/// census_total * p^2 (1-p)^(n-2) / (n+1), where census_total is the complete
/// policy census at t = 2. Note the n+1 normalization differs from the
/// n(n+1) of the single-error capacity; both forms are kept as published.
double double_correction_capacity(int n, double p, std::uint64_t census_total);

struct CapacityPoint {
    int n = 0;
    double p = 0.0;
    double single_correction = 0.0;
    double single_capacity = 0.0;
    std::optional<double> double_capacity;
};

/// One point per grid value. The grid must be strictly increasing within
/// [0, 1] (RangeError otherwise). double_capacity is filled when a t = 2
/// census total is supplied.
std::vector<CapacityPoint> capacity_curve(int n, const std::vector<double>& p_grid,
                                          std::optional<std::uint64_t> double_census_total = {});

/// Grid 0, step, 2*step, ..., 1 built from integer multiples.
std::vector<double> uniform_grid(double step);

/// Index of the first point with the largest single_correction.
std::size_t curve_argmax(const std::vector<CapacityPoint>& curve);

/// CSV with header n,p,single_correction,single_capacity,double_capacity at 12
/// significant digits; an absent double capacity leaves the field empty.
std::string render_curve_csv(const std::vector<CapacityPoint>& curve);

struct MonteCarloReport {
    std::uint64_t trials = 0;
    std::uint64_t single_error_trials = 0;
    std::uint64_t corrected = 0;
    double empirical_conditional = 0.0;    // corrected / single_error_trials
    double empirical_unconditional = 0.0;  // corrected / trials
    double standard_error = 0.0;           // of the conditional rate
    double standard_error_unconditional = 0.0;
};

/// Per trial: draw a codeword value uniformly from [0, n], send it through the
/// channel, decode with `policy`, and count trials with exactly one flipped
/// bit that decode to the sent value. Trials are split across `streams`
/// independently seeded generators (run concurrently); the report depends
/// only on (n, p, trials, seed, policy, streams).
MonteCarloReport monte_carlo_estimate(int n, double p, std::uint64_t trials, std::uint64_t seed,
                                      TiePolicy policy = TiePolicy::PaperParity,
                                      unsigned streams = 1);

std::string render_report(const MonteCarloReport& report);

}  // namespace unary

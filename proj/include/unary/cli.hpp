#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unary/bitstring.hpp"
#include "unary/codec.hpp"
#include "unary/decoder.hpp"
#include "unary/errors.hpp"

namespace unary::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
    using Error::Error;
};

enum class CodeKind { Unary, Thermometer, Space };

struct EncodeCommand {
    CodeKind code = CodeKind::Unary;
    std::uint64_t value = 0;
    UnaryVariant variant = UnaryVariant::OnesThenZero;
    int n = 0;  // thermometer range or space slot count
};

struct DecodeCommand {
    CodeKind code = CodeKind::Unary;
    Bitstring bits;
    UnaryVariant variant = UnaryVariant::OnesThenZero;
};

struct GolombCommand {
    std::optional<std::uint64_t> value;  // encode when set
    std::optional<Bitstring> bits;       // decode when set
    std::uint64_t m = 8;
    UnaryVariant variant = UnaryVariant::OnesThenZero;
};

struct CensusCommand {
    int n = 5;
    int t = 1;
    TiePolicy policy = TiePolicy::PaperParity;
    std::optional<std::string> out;
};

struct CurveCommand {
    int n = 5;
    double step = 0.01;
    std::optional<std::string> out;
};

struct SimulateCommand {
    int n = 5;
    double p = 0.2;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    TiePolicy policy = TiePolicy::PaperParity;
    unsigned streams = 1;
};

struct Cc4DemoCommand {
    std::string train_path;
    int radius = 0;
    std::vector<Bitstring> queries;
};

struct HelpCommand {
    std::string text;
};

using Command = std::variant<EncodeCommand, DecodeCommand, GolombCommand, CensusCommand,
                             CurveCommand, SimulateCommand, Cc4DemoCommand, HelpCommand>;

/// Parses arguments (without the program name) into a validated command.
/// Throws UsageError naming the offending flag.
Command parse_args(const std::vector<std::string>& args);

/// Runs a parsed command. Library errors propagate to the caller.
void execute(const Command& cmd, std::ostream& out);

/// parse_args + execute with diagnostics on `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unary::cli

#include "unary/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unary/capacity.hpp"
#include "unary/cc4.hpp"

namespace unary::cli {

namespace {

constexpr const char* kProgram = "unary-ecc";

UnaryVariant parse_variant(const std::string& name) {
    if (name == "ones-then-zero") return UnaryVariant::OnesThenZero;
    if (name == "zeros-then-one") return UnaryVariant::ZerosThenOne;
    throw UsageError("--variant: expected ones-then-zero or zeros-then-one, got '" + name + "'");
}

CodeKind parse_code(const std::string& name) {
    if (name == "unary") return CodeKind::Unary;
    if (name == "thermometer") return CodeKind::Thermometer;
    if (name == "space") return CodeKind::Space;
    throw UsageError("--code: expected unary, thermometer or space, got '" + name + "'");
}

TiePolicy parse_policy_flag(const std::string& name) {
    try {
        return parse_policy(name);
    } catch (const RangeError&) {
        throw UsageError("--policy: expected reject-ties, lowest-value, highest-value or "
                         "paper-parity, got '" + name + "'");
    }
}

Bitstring parse_bits_flag(const std::string& flag, const std::string& text) {
    try {
        Bitstring bits = Bitstring::parse(text);
        if (bits.empty()) throw UsageError(flag + ": empty bitstring");
        return bits;
    } catch (const InvalidBitstring& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

void write_csv(const std::optional<std::string>& path, const std::string& csv, std::ostream& out) {
    if (!path) {
        out << csv;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw Error("cannot open '" + *path + "' for writing");
    file << csv;
    if (!file) throw Error("failed writing '" + *path + "'");
}

std::vector<cc4::Sample> read_training_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open training set '" + path + "'");
    std::vector<cc4::Sample> samples;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.find(',');
        const std::string where = path + ":" + std::to_string(line_no);
        if (comma == std::string::npos) throw Error(where + ": expected 'bitstring,label'");
        const std::string label = line.substr(comma + 1);
        if (label != "0" && label != "1") throw Error(where + ": label must be 0 or 1");
        try {
            samples.push_back({Bitstring::parse(line.substr(0, comma)), label == "1" ? 1 : 0});
        } catch (const InvalidBitstring& e) {
            throw Error(where + ": " + e.what());
        }
    }
    return samples;
}

void run_encode(const EncodeCommand& c, std::ostream& out) {
    switch (c.code) {
        case CodeKind::Unary: out << encode_unary(c.value, c.variant).str() << '\n'; break;
        case CodeKind::Thermometer:
            out << encode_thermometer(static_cast<int>(c.value), c.n).str() << '\n';
            break;
        case CodeKind::Space: out << encode_space(static_cast<int>(c.value), c.n).str() << '\n'; break;
    }
}

void run_decode(const DecodeCommand& c, std::ostream& out) {
    switch (c.code) {
        case CodeKind::Unary: out << decode_unary(c.bits, c.variant) << '\n'; break;
        case CodeKind::Thermometer: out << decode_thermometer_strict(c.bits) << '\n'; break;
        case CodeKind::Space: out << decode_space(c.bits) << '\n'; break;
    }
}

void run_golomb(const GolombCommand& c, std::ostream& out) {
    if (c.value)
        out << encode_golomb(*c.value, c.m, c.variant).str() << '\n';
    else
        out << decode_golomb(*c.bits, c.m, c.variant) << '\n';
}

void run_census(const CensusCommand& c, std::ostream& out) {
    const CorrectionCensus census = correction_census(c.n, c.t, c.policy);
    out << render_census_table(census);
    if (!c.out) out << '\n';
    write_csv(c.out, render_census_csv(census), out);
}

void run_curve(const CurveCommand& c, std::ostream& out) {
    std::optional<std::uint64_t> double_total;
    if (c.n >= 2 && c.n <= kMaxCensusN) double_total = correction_census(c.n, 2).total;
    const auto curve = capacity_curve(c.n, uniform_grid(c.step), double_total);
    write_csv(c.out, render_curve_csv(curve), out);
}

void run_simulate(const SimulateCommand& c, std::ostream& out) {
    const MonteCarloReport report =
        monte_carlo_estimate(c.n, c.p, c.trials, c.seed, c.policy, c.streams);
    out << "n: " << c.n << '\n' << "p: " << c.p << '\n' << "seed: " << c.seed << '\n'
        << "policy: " << policy_name(c.policy) << '\n' << "streams: " << c.streams << '\n'
        << render_report(report);
}

void run_cc4(const Cc4DemoCommand& c, std::ostream& out) {
    const std::vector<cc4::Sample> samples = read_training_set(c.train_path);
    const cc4::Network net = cc4::train(samples, c.radius);
    out << "inputs: " << net.input_len << " (+1 bias)  radius: " << net.radius
        << "  hidden: " << net.hidden.size() << '\n';
    for (std::size_t j = 0; j < net.hidden.size(); ++j) {
        const cc4::HiddenUnit& h = net.hidden[j];
        out << "h" << j << "  pattern " << samples[j].pattern.str() << "  weights [";
        for (std::size_t i = 0; i < h.weights.size(); ++i) out << (i ? " " : "") << h.weights[i];
        out << "]  bias " << h.bias_weight << "  out " << net.output_weights[j] << '\n';
    }
    std::vector<Bitstring> queries = c.queries;
    if (queries.empty())
        for (const cc4::Sample& s : samples) queries.push_back(s.pattern);
    for (const Bitstring& q : queries) {
        const std::vector<bool> fired = cc4::hidden_activations(net, q);
        out << q.str() << " -> " << cc4::predict(net, q) << "  fired:";
        bool any = false;
        for (std::size_t j = 0; j < fired.size(); ++j)
            if (fired[j]) {
                out << " h" << j;
                any = true;
            }
        if (!any) out << " none";
        out << '\n';
    }
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Unary, thermometer and Golomb codes with error-correction analysis", kProgram};
    app.require_subcommand(1);

    std::string code = "unary", variant = "ones-then-zero", policy = "paper-parity";
    std::string bits_text, train_path;
    std::vector<std::string> query_texts;
    std::uint64_t value = 0, m = 8, trials = 1'000'000, seed = 0;
    long long n = 5, t = 1, slots = 0, radius = 0, streams = 1;
    double p = 0.2, step = 0.01;
    std::string out_path;

    auto* encode = app.add_subcommand("encode", "Encode a value with a unary-family code");
    encode->add_option("--value", value, "Value to encode")->required();
    encode->add_option("--code", code, "unary | thermometer | space");
    encode->add_option("--variant", variant, "ones-then-zero | zeros-then-one");
    encode->add_option("--n", n, "Thermometer range");
    encode->add_option("--slots", slots, "Space-code slot count");

    auto* decode_cmd = app.add_subcommand("decode", "Decode a unary-family codeword");
    decode_cmd->add_option("--bits", bits_text, "Codeword as 0/1 characters")->required();
    decode_cmd->add_option("--code", code, "unary | thermometer | space");
    decode_cmd->add_option("--variant", variant, "ones-then-zero | zeros-then-one");

    auto* golomb = app.add_subcommand("golomb", "Golomb encode (--value) or decode (--decode)");
    auto* golomb_value = golomb->add_option("--value", value, "Value to encode");
    auto* golomb_bits = golomb->add_option("--decode", bits_text, "Codeword to decode");
    golomb_value->excludes(golomb_bits);
    golomb->add_option("--m", m, "Group size");
    golomb->add_option("--variant", variant, "Quotient prefix convention");

    auto* census = app.add_subcommand("census", "Exhaustive correction census");
    census->add_option("--n", n, "Code range");
    census->add_option("--t", t, "Error weight");
    census->add_option("--policy", policy, "Tie policy");
    census->add_option("--out", out_path, "Write the CSV here instead of stdout");

    auto* curve = app.add_subcommand("curve", "Capacity curve CSV over a uniform p grid");
    curve->add_option("--n", n, "Code range");
    curve->add_option("--step", step, "Grid step");
    curve->add_option("--out", out_path, "Write the CSV here instead of stdout");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo over the binary symmetric channel");
    simulate->add_option("--n", n, "Code range");
    simulate->add_option("--p", p, "Bit error probability");
    simulate->add_option("--trials", trials, "Number of transmissions");
    simulate->add_option("--seed", seed, "Generator seed");
    simulate->add_option("--policy", policy, "Tie policy");
    simulate->add_option("--streams", streams, "Independently seeded streams");

    auto* cc4_demo = app.add_subcommand("cc4", "Train a CC4 network from 'bitstring,label' lines");
    cc4_demo->add_option("--train", train_path, "Training set file")->required();
    cc4_demo->add_option("--r", radius, "Radius of generalization");
    cc4_demo->add_option("--query", query_texts, "Input to classify (repeatable)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return HelpCommand{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const bool has_out = !out_path.empty();
    if (*encode) {
        EncodeCommand c;
        c.code = parse_code(code);
        c.variant = parse_variant(variant);
        c.value = value;
        if (c.code == CodeKind::Thermometer) {
            require(n >= 1 && n <= 1'000'000, "--n: thermometer range must lie in [1, 10^6]");
            require(value <= static_cast<std::uint64_t>(n), "--value: must lie in [0, n]");
            c.n = static_cast<int>(n);
        } else if (c.code == CodeKind::Space) {
            require(slots >= 1 && slots <= 1'000'000, "--slots: must lie in [1, 10^6]");
            require(value >= 1 && value <= static_cast<std::uint64_t>(slots),
                    "--value: must lie in [1, slots]");
            c.n = static_cast<int>(slots);
        } else {
            require(value <= 1'000'000, "--value: unary values are limited to 10^6");
        }
        return c;
    }
    if (*decode_cmd) {
        DecodeCommand c;
        c.code = parse_code(code);
        c.variant = parse_variant(variant);
        c.bits = parse_bits_flag("--bits", bits_text);
        return c;
    }
    if (*golomb) {
        GolombCommand c;
        require(m >= 1 && m <= (std::uint64_t{1} << 62), "--m: must lie in [1, 2^62]");
        c.m = m;
        c.variant = parse_variant(variant);
        if (golomb_bits->count() > 0)
            c.bits = parse_bits_flag("--decode", bits_text);
        else if (golomb_value->count() > 0)
            c.value = value;
        else
            throw UsageError("golomb: one of --value or --decode is required");
        if (c.value) require(*c.value / m <= 1'000'000, "--value: quotient exceeds 10^6");
        return c;
    }
    if (*census) {
        CensusCommand c;
        require(n >= 1, "--n: must be >= 1");
        require(n <= kMaxCensusN, "--n: exhaustive census is limited to n <= " +
                                      std::to_string(kMaxCensusN));
        require(t >= 0 && t <= n, "--t: must lie in [0, n]");
        c.n = static_cast<int>(n);
        c.t = static_cast<int>(t);
        c.policy = parse_policy_flag(policy);
        if (has_out) c.out = out_path;
        return c;
    }
    if (*curve) {
        CurveCommand c;
        require(n >= 1 && n <= 1'000'000, "--n: must lie in [1, 10^6]");
        require(step > 0.0 && step <= 1.0, "--step: must lie in (0, 1]");
        try {
            uniform_grid(step);
        } catch (const RangeError& e) {
            throw UsageError(std::string("--step: ") + e.what());
        }
        c.n = static_cast<int>(n);
        c.step = step;
        if (has_out) c.out = out_path;
        return c;
    }
    if (*simulate) {
        SimulateCommand c;
        require(n >= 1 && n <= 4096, "--n: must lie in [1, 4096]");
        require(p >= 0.0 && p <= 1.0, "--p: must lie in [0, 1]");
        require(trials >= 1, "--trials: must be >= 1");
        require(streams >= 1 && streams <= 256, "--streams: must lie in [1, 256]");
        c.n = static_cast<int>(n);
        c.p = p;
        c.trials = trials;
        c.seed = seed;
        c.policy = parse_policy_flag(policy);
        c.streams = static_cast<unsigned>(streams);
        return c;
    }
    Cc4DemoCommand c;
    require(radius >= 0 && radius <= 1'000'000, "--r: must lie in [0, 10^6]");
    c.radius = static_cast<int>(radius);
    c.train_path = train_path;
    for (const std::string& q : query_texts) c.queries.push_back(parse_bits_flag("--query", q));
    return c;
}

void execute(const Command& cmd, std::ostream& out) {
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, EncodeCommand>) run_encode(c, out);
            else if constexpr (std::is_same_v<T, DecodeCommand>) run_decode(c, out);
            else if constexpr (std::is_same_v<T, GolombCommand>) run_golomb(c, out);
            else if constexpr (std::is_same_v<T, CensusCommand>) run_census(c, out);
            else if constexpr (std::is_same_v<T, CurveCommand>) run_curve(c, out);
            else if constexpr (std::is_same_v<T, SimulateCommand>) run_simulate(c, out);
            else if constexpr (std::is_same_v<T, Cc4DemoCommand>) run_cc4(c, out);
            else out << c.text;
        },
        cmd);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const UsageError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << kProgram << ": usage error: " << msg << '\n';
        return kExitUsage;
    }
    try {
        execute(cmd, out);
    } catch (const std::exception& e) {
        err << kProgram << ": error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitOk;
}

}  // namespace unary::cli

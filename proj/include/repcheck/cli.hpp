// Copyright 2026 The repcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "repcheck/verify.hpp"

namespace repcheck {

enum class OutputFormat { Text, Json };

struct CliConfig {
    std::string command;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::size_t> rounds;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::string> out_path;
    std::string group_name;
    std::optional<std::string> state;
};

/// Bad flag values found after parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace cli {

inline Rational parse_rational(const std::string &s) {
    static const std::regex re(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("not a rational number: '" + s + "'");
    BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    BigInt den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

/// "re" or "re:im".
inline CycloNum parse_amplitude(const std::string &s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return CycloNum(parse_rational(s));
    return CycloNum(parse_rational(s.substr(0, colon))) +
           CycloNum(parse_rational(s.substr(colon + 1))) * CycloNum::i();
}

/// "a,b" -> a|0> + b|1>.
inline PureState parse_state(const std::string &s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
        throw UsageError("--state expects two amplitudes 'a,b', got '" + s + "'");
    }
    PureState st(std::vector<CycloNum>{parse_amplitude(s.substr(0, comma)), parse_amplitude(s.substr(comma + 1))});
    if (st.is_zero()) throw UsageError("--state must be non-zero");
    return st;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string format_rows(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> width;
    for (const auto &r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t c = 0; c < r.size(); c++) width[c] = std::max(width[c], display_width(r[c]));
    }
    std::string out;
    for (const auto &r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); c++) line += (c ? "  " : "") + pad(r[c], width[c]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

inline std::string show_group(const CliConfig &cfg, Json *json) {
    auto which = parse_builtin_group(cfg.group_name);
    if (!which) throw UsageError("unknown group '" + cfg.group_name + "' (expected K4, Z4, D4, D8 or Pauli1)");
    const GroupPtr g = builtin_group(*which);
    if (json) {
        Json table = Json::array();
        for (Element a = 0; a < g->order(); a++) {
            Json row = Json::array();
            for (Element b = 0; b < g->order(); b++) row.push_back(g->mul(a, b));
            table.push_back(row);
        }
        Json classes = Json::array();
        for (const auto &cls : g->classes().classes) classes.push_back(cls);
        *json = Json{{"group", g->name()}, {"order", g->order()}, {"elements", g->words()},
                     {"table", table},     {"classes", classes}};
        return {};
    }
    return format_group(*g);
}

inline std::string show_table(const CliConfig &cfg, Json *json) {
    auto which = parse_builtin_group(cfg.group_name);
    if (!which) throw UsageError("unknown group '" + cfg.group_name + "' (expected K4, Z4, D4, D8 or Pauli1)");
    const auto &t = char_table(*which);
    if (json) {
        *json = char_table_json(t);
        return {};
    }
    return format_char_table(t);
}

inline std::string classify(Json *json) {
    auto doc = full_report();
    if (json) *json = doc.json;
    return doc.text;
}

inline std::string simulate_teleport(const CliConfig &cfg, Json *json) {
    const PureState input = cfg.state ? parse_state(*cfg.state) : PureState(std::vector<CycloNum>{1, 0});
    const auto trace = teleport(input);
    if (json) {
        Json amps = Json::array();
        for (std::size_t k = 0; k < input.dim(); k++) amps.push_back(cyclo_json(input[k]));
        *json = Json{{"input", amps}, {"outcomes", trace_json(trace)},
                     {"total_probability", rational_json(trace.total_probability())}};
        return {};
    }
    std::vector<std::vector<std::string>> rows{{"outcome", "probability", "correction", "restored", "corrected state"}};
    for (const auto &o : trace.outcomes) {
        rows.push_back({o.outcome, to_string(o.probability), o.correction_label, yes_no(o.restored),
                        o.corrected_state.str()});
    }
    return "teleport input " + input.str() + "\n" + format_rows(rows) +
           "total probability: " + to_string(trace.total_probability()) + "\n";
}

inline std::string simulate_swap(const CliConfig &cfg, Json *json) {
    const std::size_t rounds = cfg.rounds.value_or(1);
    if (rounds == 0) throw UsageError("--rounds must be at least 1");
    if (rounds <= 2 && (cfg.seed || cfg.samples)) {
        throw UsageError("--seed and --samples only apply to sampled runs (--rounds 3 or more)");
    }
    const auto p = povm_construction();
    std::ostringstream os;
    if (rounds == 1) {
        const auto trace = entanglement_swap(p);
        if (json) {
            *json = Json{{"rounds", 1}, {"outcomes", trace_json(trace)},
                         {"total_probability", rational_json(trace.total_probability())}};
            return {};
        }
        std::vector<std::vector<std::string>> rows{{"outcome", "probability", "correction", "restored", "CHSH"}};
        for (const auto &o : trace.outcomes) {
            rows.push_back({o.outcome, to_string(o.probability), o.correction_label, yes_no(o.restored),
                            o.chsh ? o.chsh->str() : "-"});
        }
        os << "entanglement swap: " << trace.outcomes.size() << " outcomes\n"
           << format_rows(rows) << "total probability: " << to_string(trace.total_probability()) << "\n";
        return os.str();
    }
    std::vector<SwapIteration> paths;
    const bool sampled = rounds > 2;
    const std::uint64_t seed = cfg.seed.value_or(0);
    if (sampled) {
        for (std::size_t k = 0; k < cfg.samples.value_or(20); k++) {
            paths.push_back(iterate_swap(p.instrument, p.corrections, rounds, seed + k));
        }
    } else {
        paths = iterate_swap_exhaustive(p.instrument, p.corrections, rounds);
    }
    const CycloNum tsirelson = CycloNum(2) * CycloNum::sqrt2();
    std::size_t stable = 0;
    for (const auto &it : paths) {
        bool ok = true;
        for (const auto &c : it.chsh) ok = ok && c == tsirelson;
        stable += ok;
    }
    if (json) {
        Json arr = Json::array();
        for (const auto &it : paths) {
            Json labels = Json::array(), chsh = Json::array();
            for (auto k : it.path) labels.push_back(p.instrument.labels[k]);
            for (const auto &c : it.chsh) chsh.push_back(cyclo_json(c));
            arr.push_back(Json{{"path", labels}, {"probability", rational_json(it.path_probability())}, {"chsh", chsh}});
        }
        *json = Json{{"rounds", rounds}, {"mode", sampled ? "sampled" : "exhaustive"}};
        if (sampled) (*json)["seed"] = seed;
        (*json)["paths"] = arr;
        (*json)["stable_paths"] = stable;
        return {};
    }
    std::vector<std::vector<std::string>> rows{{"path", "probability", "CHSH per round"}};
    for (const auto &it : paths) {
        std::string path, chsh;
        for (auto k : it.path) path += (path.empty() ? "" : "·") + p.instrument.labels[k];
        for (const auto &c : it.chsh) chsh += (chsh.empty() ? "" : " ") + c.str();
        rows.push_back({path, to_string(it.path_probability()), chsh});
    }
    os << "entanglement swap, " << rounds << " rounds, " << (sampled ? "sampled" : "exhaustive") << " ("
       << paths.size() << " paths";
    if (sampled) os << ", seed " << seed;
    os << ")\n" << format_rows(rows) << "CHSH 2√2 at every round: " << stable << "/" << paths.size() << " paths\n";
    return os.str();
}

inline std::string verify_all(Json *json, bool &all_passed) {
    const auto results = run_battery();
    std::size_t passed = 0;
    for (const auto &r : results) passed += r.passed;
    all_passed = passed == results.size();
    if (json) {
        Json arr = Json::array();
        for (const auto &r : results) arr.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"message", r.message}});
        *json = Json{{"checks", arr}, {"passed", passed}, {"total", results.size()}};
        return {};
    }
    std::ostringstream os;
    for (const auto &r : results) os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.message << "\n";
    os << "verify-all: " << passed << "/" << results.size() << " passed\n";
    return os.str();
}

// Errors a user can provoke with flag values rather than a broken build.
inline bool is_input_error(ErrorKind k) {
    return k == ErrorKind::UnknownGroup || k == ErrorKind::ZeroState || k == ErrorKind::DimensionMismatch;
}

}  // namespace cli

/// Runs one command; returns 0 on success, 1 on a failed verification or
/// internal error, 2 on flag misuse.
inline int run(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    std::string text;
    Json json;
    Json *jp = cfg.output_format == OutputFormat::Json ? &json : nullptr;
    bool ok = true;
    try {
        if (cfg.command == "classify") {
            text = cli::classify(jp);
        } else if (cfg.command == "show-group") {
            text = cli::show_group(cfg, jp);
        } else if (cfg.command == "show-table") {
            text = cli::show_table(cfg, jp);
        } else if (cfg.command == "simulate-teleport") {
            text = cli::simulate_teleport(cfg, jp);
        } else if (cfg.command == "simulate-swap") {
            text = cli::simulate_swap(cfg, jp);
        } else if (cfg.command == "verify-all") {
            text = cli::verify_all(jp, ok);
        } else {
            err << "repcheck: unknown command '" << cfg.command << "'\n";
            return 2;
        }
    } catch (const UsageError &e) {
        err << "repcheck: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "repcheck: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return cli::is_input_error(e.kind()) && cfg.command != "verify-all" ? 2 : 1;
    } catch (const std::exception &e) {
        err << "repcheck: internal check failed: " << e.what() << "\n";
        return 1;
    }
    const std::string payload = jp ? json.dump(2) + "\n" : text;
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path, std::ios::binary);
        if (!f) {
            err << "repcheck: cannot open '" << *cfg.out_path << "' for writing\n";
            return 2;
        }
        f << payload;
    } else {
        out << payload;
    }
    if (!ok) err << "repcheck: verification failed\n";
    return ok ? 0 : 1;
}

/// Parses argv and runs the selected command.
inline int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    CLI::App app{"Exact classification of conjugation-representation families and qubit protocol checks", "repcheck"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    CliConfig cfg;
    bool json_flag = false;
    bool text_flag = false;
    std::string out_path;
    app.add_flag("--json", json_flag, "JSON output (default when REPCHECK_OUTPUT=json)");
    app.add_flag("--text", text_flag, "text output, overriding REPCHECK_OUTPUT")->excludes("--json");
    app.add_option("-o,--out", out_path, "write output to a file");

    app.add_subcommand("classify", "classify the seven families");
    app.add_subcommand("show-group", "print a built-in group's multiplication table")
        ->add_option("name", cfg.group_name, "K4, Z4, D4, D8 or Pauli1")
        ->required();
    app.add_subcommand("show-table", "print a built-in character table")
        ->add_option("name", cfg.group_name, "K4, Z4, D4, D8 or Pauli1")
        ->required();
    auto *tele = app.add_subcommand("simulate-teleport", "teleport one qubit through |Φ+>");
    std::string state;
    tele->add_option("--state", state, "amplitudes 'a,b'; each is 're' or 're:im' with rationals like -3/4");
    auto *swap = app.add_subcommand("simulate-swap", "entanglement swapping with the eight-outcome POVM");
    std::size_t rounds = 1, samples = 0;
    std::uint64_t seed = 0;
    auto *rounds_opt = swap->add_option("--rounds", rounds, "number of chained swaps")->check(CLI::PositiveNumber);
    auto *seed_opt = swap->add_option("--seed", seed, "seed for sampled paths (rounds >= 3)");
    auto *samples_opt = swap->add_option("--samples", samples, "number of sampled paths (rounds >= 3, default 20)")
                            ->check(CLI::PositiveNumber);
    app.add_subcommand("verify-all", "run the full invariant battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    const char *env = std::getenv("REPCHECK_OUTPUT");
    if (env && std::string(env) == "json") cfg.output_format = OutputFormat::Json;
    if (json_flag) cfg.output_format = OutputFormat::Json;
    if (text_flag) cfg.output_format = OutputFormat::Text;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (tele->count("--state")) cfg.state = state;
    if (rounds_opt->count()) cfg.rounds = rounds;
    if (seed_opt->count()) cfg.seed = seed;
    if (samples_opt->count()) cfg.samples = samples;
    return run(cfg, out, err);
}

}  // namespace repcheck

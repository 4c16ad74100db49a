/**
 * @file cli.hpp
 * @brief The dnalex command line, callable in-process.
 *
 * Commands: construct, tables, distance, bounds (and bounds export), convert,
 * verify. Payload output (stdout and files) is deterministic for a given
 * command line; wall-clock timings go only to a sidecar log in the output
 * directory. Exit codes: 0 success, 1 verification failed, 2 usage or parse
 * error, 3 search budget exceeded.
 */

#ifndef DNALEX_CLI_HPP
#define DNALEX_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "bounds_io.hpp"
#include "codefile.hpp"
#include "edit_distance.hpp"
#include "lexicode.hpp"
#include "property.hpp"
#include "tables.hpp"

namespace dnalex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "DNALEX_OUTPUT_DIR";
inline constexpr const char* kDefaultOutputDir = "dnalex-out";
inline constexpr const char* kSidecarLog = "dnalex.log";

struct GlobalOptions {
    bool json = false;
    std::uint64_t seed = 1;
    std::string out_dir;

    std::filesystem::path output_dir() const {
        if (!out_dir.empty()) return out_dir;
        if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
        return kDefaultOutputDir;
    }
};

/// Appends one line with a timestamp and runtime to the sidecar log.
inline void log_run(const std::filesystem::path& dir, const std::string& what, double runtime_ms) {
    std::filesystem::create_directories(dir);
    std::ofstream log(dir / kSidecarLog, std::ios::app);
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    log << stamp << ' ' << what << " runtime_ms=" << runtime_ms << '\n';
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline CostModel cost_model_from(const std::string& path) { return path.empty() ? CostModel::unit() : load_cost_model(path); }

/// Inclusive range "a..b", a single value, or a comma list.
inline std::vector<std::size_t> parse_range(const std::string& text, const std::string& what) {
    std::vector<std::size_t> out;
    std::stringstream parts(text);
    std::string part;
    auto number = [&](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (s.empty() || pos != s.size() || s[0] == '-') throw usage_error("bad " + what + " value '" + s + "'");
        return v;
    };
    while (std::getline(parts, part, ',')) {
        if (const auto dots = part.find(".."); dots != std::string::npos) {
            const std::size_t a = number(part.substr(0, dots)), b = number(part.substr(dots + 2));
            if (a > b) throw usage_error("empty " + what + " range '" + part + "'");
            for (std::size_t v = a; v <= b; ++v) out.push_back(v);
        } else {
            out.push_back(number(part));
        }
    }
    if (out.empty()) throw usage_error("empty " + what + " range");
    return out;
}

inline std::string json_opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "null"; }

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    std::size_t n = 0;
    std::string property = "true";
    std::string basis = "canonical";
    std::string mode = "full-check";
    std::string format = "z4";
    bool dna = false;
    bool fasta = false;
    std::string output;
    std::string cost_file;
    bool allow_non_multiplicative = false;
};

inline OrderedBasis load_basis(const std::string& spec, std::size_t n) {
    if (spec == "canonical") return OrderedBasis::canonical(n);
    std::ifstream in(spec);
    if (!in) throw usage_error("cannot open basis file " + spec);
    std::vector<Z4Vector> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        rows.push_back(parse_word(t));
    }
    if (rows.size() != n) throw usage_error("basis file must list exactly n = " + std::to_string(n) + " vectors");
    return OrderedBasis(std::move(rows));
}

inline int cmd_construct(const ConstructArgs& a, const GlobalOptions& g, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    if (a.n == 0) throw usage_error("-n must be positive");
    const CostModel cm = cost_model_from(a.cost_file);
    const PropertySpec p = parse_property(a.property, cm);
    WordFormat fmt = parse_word_format(a.format);
    if (a.dna) fmt = WordFormat::dna;
    if (a.fasta) fmt = WordFormat::fasta;

    BuildOptions opt;
    opt.mode = parse_check_mode(a.mode);
    opt.allow_non_multiplicative = a.allow_non_multiplicative;
    opt.multiplicativity_budget.seed = g.seed;
    const LinearCode code = build_lexicode(load_basis(a.basis, a.n), p, opt);
    const auto& v = *code.verification;

    const std::filesystem::path dir = g.output_dir();
    const std::filesystem::path file = a.output.empty() ? dir / ("lexicode_n" + std::to_string(a.n) + ".txt") : std::filesystem::path(a.output);
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    {
        std::ofstream f(file);
        if (!f) throw usage_error("cannot write " + file.string());
        write_code_file(f, to_code_file(code, p), fmt);
    }

    if (g.json) {
        nlohmann::ordered_json j;
        j["n"] = a.n;
        j["size"] = code.codewords.size();
        j["dH"] = v.min_hamming_distance ? nlohmann::ordered_json(*v.min_hamming_distance) : nlohmann::ordered_json(nullptr);
        j["minGC"] = v.min_gc_weight ? nlohmann::ordered_json(*v.min_gc_weight) : nlohmann::ordered_json(nullptr);
        j["gens"] = code.generators.size();
        j["property"] = to_string(p);
        j["mode"] = to_string(opt.mode);
        j["multiplicative"] = to_string(code.multiplicativity->status);
        j["verified"] = v.ok();
        j["file"] = file.string();
        out << j.dump() << '\n';
    } else {
        out << "n=" << a.n << " size=" << code.codewords.size() << " dH=" << detail::opt_str(v.min_hamming_distance)
            << " minGC=" << detail::opt_str(v.min_gc_weight) << " gens=" << code.generators.size() << '\n';
        if (!v.ok())
            out << "verification: linear=" << (v.linear ? "yes" : "no") << " property-violations=" << v.property_violation_count
                << '\n';
    }
    log_run(dir, "construct n=" + std::to_string(a.n) + " property=" + to_string(p), elapsed_ms(start));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// tables

inline nlohmann::ordered_json table1_json(const std::vector<Table1Outcome>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.row.n;
        j["w"] = r.row.w;
        j["dH"] = r.row.dH;
        j["property"] = r.property;
        for (const auto& m : r.modes) {
            nlohmann::ordered_json mj;
            std::vector<std::string> gens;
            for (const auto& x : m.generators) gens.push_back(x.str());
            mj["generators"] = gens;
            mj["size"] = m.size;
            mj["parameters_match"] = m.parameters_match;
            mj["generators_exact"] = m.generators_exact;
            j[to_string(m.mode)] = mj;
        }
        arr.push_back(j);
    }
    return arr;
}

inline int cmd_tables(const std::string& which, const GlobalOptions& g, std::ostream& out) {
    const auto rows1 = load_table1();
    std::vector<std::string> selected;
    if (which == "all") selected = {"1", "2", "3", "4"};
    else if (which == "1" || which == "2" || which == "3" || which == "4") selected = {which};
    else throw usage_error("tables expects 1, 2, 3, 4 or all");

    for (const auto& t : selected) {
        if (!g.json) out << "== table " << t << " ==\n";
        if (t == "1") {
            std::vector<Table1Outcome> res;
            for (const auto& r : rows1) res.push_back(reproduce_table1_row(r, table1_modes(r)));
            if (g.json) {
                out << nlohmann::ordered_json{{"table", 1}, {"rows", table1_json(res)}}.dump() << '\n';
            } else {
                write_table1_report(out, res);
                std::size_t params = 0, exact = 0;
                for (const auto& r : res) {
                    params += r.mode(CheckMode::full_check).parameters_match;
                    exact += r.mode(CheckMode::full_check).generators_exact;
                }
                out << "summary: parameters-match=" << params << "/" << res.size() << " generators-exact=" << exact << "/"
                    << res.size() << " (full-check)\n";
            }
        } else if (t == "2" || t == "3") {
            const Table1Row& row = rows1.at(t == "2" ? 0 : 1);
            const auto built = run_table1_mode(row, table1_property(row), 0, CheckMode::full_check);
            const auto res = compare_strand_table(load_strand_table("table" + t + ".txt"), built.codewords,
                                                  span_of(row.n, row.generators), row.w);
            if (g.json) {
                nlohmann::ordered_json j{{"table", std::stoi(t)},
                                         {"transcribed", res.transcribed},
                                         {"generated", res.generated},
                                         {"overlap", res.overlap},
                                         {"in_printed_span", res.in_printed_span},
                                         {"generated_min_gc", res.generated_min_gc},
                                         {"transcribed_linear", res.transcribed_linear},
                                         {"findings", res.issues.size()},
                                         {"unexplained", res.missing_unexplained.size()}};
                out << j.dump() << '\n';
            } else {
                out << "code: n=" << row.n << " property=" << to_string(table1_property(row)) << " mode=full-check\n";
                write_strand_table_report(out, res);
            }
        } else {
            std::vector<Table4Outcome> res;
            for (const auto& r : load_table4()) res.push_back(reproduce_table4_row(r));
            if (g.json) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& r : res) {
                    std::size_t findings = 0;
                    for (const auto& pg : r.printed) findings += !pg.within_m + !pg.gc_ok;
                    arr.push_back({{"ref", r.row.ref.str()}, {"m", r.row.m}, {"wgc", r.row.wgc}, {"findings", findings}});
                }
                out << nlohmann::ordered_json{{"table", 4}, {"rows", arr}}.dump() << '\n';
            } else {
                write_table4_report(out, res);
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// distance

struct DistanceArgs {
    std::string s, t;
    std::string metric = "edit";
    std::string cost_file;
    bool transcript = false;
};

/// Strand text from a strand or a Z4 digit string.
inline std::string as_strand_text(const std::string& word) {
    if (word.empty()) return word;
    return phi(parse_word(word)).str();
}

inline int cmd_distance(const DistanceArgs& a, const GlobalOptions& g, std::ostream& out) {
    const std::string s = as_strand_text(a.s), t = as_strand_text(a.t);
    nlohmann::ordered_json j;
    j["s"] = s;
    j["t"] = t;
    j["metric"] = a.metric;
    if (a.metric == "hamming") {
        if (s.size() != t.size()) throw usage_error("Hamming distance needs equal lengths");
        std::size_t d = 0;
        for (std::size_t i = 0; i < s.size(); ++i) d += s[i] != t[i];
        j["distance"] = d;
        if (g.json) out << j.dump() << '\n';
        else out << d << '\n';
        return kExitOk;
    }
    if (a.metric != "edit") throw usage_error("--metric must be edit or hamming");
    const CostModel cm = cost_model_from(a.cost_file);
    if (!a.transcript) {
        const double d = edit_distance(s, t, cm);
        j["distance"] = d;
        if (g.json) out << j.dump() << '\n';
        else out << detail::format_number(d) << '\n';
        return kExitOk;
    }
    const EditTranscript tr = edit_distance_with_transcript(s, t, cm).second;
    if (g.json) {
        j["distance"] = tr.total;
        nlohmann::ordered_json ops = nlohmann::ordered_json::array();
        for (const auto& op : tr.ops)
            ops.push_back({{"op", to_string(op.kind)},
                           {"source_pos", op.source_pos},
                           {"target_pos", op.target_pos},
                           {"from", std::string(op.from ? 1 : 0, op.from)},
                           {"to", std::string(op.to ? 1 : 0, op.to)},
                           {"cost", op.cost}});
        j["transcript"] = ops;
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << detail::format_number(tr.total) << '\n';
    for (const auto& op : tr.ops) {
        out << to_string(op.kind) << " src=" << op.source_pos << " dst=" << op.target_pos << ' '
            << (op.from ? std::string(1, op.from) : "-") << "->" << (op.to ? std::string(1, op.to) : "-")
            << " cost=" << detail::format_number(op.cost) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
    std::string n, d, w = "all";
    std::string metric = "hamming";
    std::string variant = "plain";
    std::string cost_file;
    bool check_relations = false;
    bool allow_gap = false;
    std::size_t budget = 2000;
    bool with_runtime = false;
};

inline std::vector<Metric> parse_metrics(const std::string& text, const CostModel& cm) {
    if (text == "hamming") return {Metric::hamming()};
    if (text == "edit") return {Metric::edit(cm)};
    if (text == "both") return {Metric::hamming(), Metric::edit(cm)};
    throw usage_error("--metric must be hamming, edit or both");
}

inline std::vector<Variant> parse_variants(const std::string& text) {
    if (text == "all") return {Variant::plain, Variant::R, Variant::RC};
    return {parse_variant(text)};
}

inline std::string record_line(const BoundRecord& r) {
    std::ostringstream s;
    s << "A[" << to_string(r.key.metric) << "," << to_string(r.key.variant) << "](n=" << r.key.n << ",d=" << r.key.d
      << ",w=" << (r.key.w ? std::to_string(*r.key.w) : std::string("any")) << ") = ";
    if (r.status == BoundStatus::exact) s << r.lower << " exact (" << r.method << ")";
    else s << r.lower << ".." << r.upper << " gap (lower " << r.lower_method << ", upper " << r.method << ")";
    return s.str();
}

inline int cmd_bounds(const BoundsArgs& a, const GlobalOptions& g, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    if (a.n.empty() || a.d.empty()) throw usage_error("bounds needs -n and -d");
    const CostModel cm = cost_model_from(a.cost_file);
    const auto ns = parse_range(a.n, "n");
    const auto ds = parse_range(a.d, "d");
    const auto metrics = parse_metrics(a.metric, cm);
    const auto variants = parse_variants(a.variant);
    BoundsLab lab(BoundOptions{a.budget, a.allow_gap});
    const std::filesystem::path dir = g.output_dir() / "bounds";

    for (const auto& m : metrics)
        for (auto v : variants)
            for (auto n : ns) {
                std::vector<std::optional<std::size_t>> ws;
                if (a.w == "all") {
                    for (std::size_t w = 0; w <= n; ++w) ws.emplace_back(w);
                } else if (a.w == "any") {
                    ws.emplace_back(std::nullopt);
                } else {
                    for (auto w : parse_range(a.w, "w"))
                        if (w <= n) ws.emplace_back(w);
                }
                for (const auto& w : ws)
                    for (auto d : ds) {
                        const BoundKey key{n, d, w, m, v};
                        key.validate();
                        const BoundRecord& r = lab.record(key);
                        save_record(dir, r, a.with_runtime);
                        if (g.json) out << to_json(r, a.with_runtime).dump() << '\n';
                        else out << record_line(r) << '\n';
                    }
            }

    if (a.check_relations) {
        RelationRange range;
        range.n_min = *std::min_element(ns.begin(), ns.end());
        range.n_max = *std::max_element(ns.begin(), ns.end());
        range.metrics = metrics;
        const RelationReport rep = lab.check_relations(range);
        std::ostringstream text;
        write_relation_report(text, rep);
        std::filesystem::create_directories(g.output_dir());
        std::ofstream(g.output_dir() / "relations.txt") << text.str();
        if (g.json) {
            out << nlohmann::ordered_json{{"relations_pass", rep.count(Outcome::pass)},
                                          {"relations_fail", rep.count(Outcome::fail)},
                                          {"relations_finding", rep.count(Outcome::finding)}}
                       .dump()
                << '\n';
        } else {
            out << text.str();
        }
    }
    log_run(g.output_dir(), "bounds n=" + a.n + " d=" + a.d + " w=" + a.w + " metric=" + a.metric, elapsed_ms(start));
    return kExitOk;
}

inline int cmd_bounds_export(const std::string& dir_arg, const GlobalOptions& g, std::ostream& out) {
    const std::filesystem::path dir = dir_arg.empty() ? g.output_dir() / "bounds" : std::filesystem::path(dir_arg);
    render_table(out, load_records(dir));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// convert and verify

inline int cmd_convert(const std::string& input, const std::string& to, const std::string& output, std::ostream& out) {
    const WordFormat fmt = parse_word_format(to);
    std::ostringstream text;
    if (std::filesystem::is_regular_file(input)) {
        write_code_file(text, load_code_file(input), fmt);
    } else {
        const Z4Vector x = parse_word(input);
        if (fmt == WordFormat::fasta) text << ">cw0\n" << phi(x).str() << '\n';
        else text << format_word(x, fmt) << '\n';
    }
    if (output.empty()) {
        out << text.str();
    } else {
        std::ofstream f(output);
        if (!f) throw usage_error("cannot write " + output);
        f << text.str();
    }
    return kExitOk;
}

inline int cmd_verify(const std::string& path, const std::string& property_text, const std::string& cost_file,
                      const GlobalOptions& g, std::ostream& out) {
    const CodeFile file = load_code_file(path);
    const std::string ptext = property_text.empty() ? file.property : property_text;
    const PropertySpec p = parse_property(ptext.empty() ? "true" : ptext, cost_model_from(cost_file));
    const VerificationReport rep = verify_lexicode(file.codewords, p);

    std::optional<bool> span_ok;
    if (!file.generators.empty()) {
        const auto span = span_of(file.n, file.generators);
        span_ok = std::set<Z4Vector>(span.begin(), span.end()) == std::set<Z4Vector>(file.codewords.begin(), file.codewords.end());
    }
    const bool ok = rep.ok() && span_ok.value_or(true);

    if (g.json) {
        nlohmann::ordered_json j;
        j["file"] = path;
        j["property"] = to_string(p);
        j["size"] = rep.size;
        j["contains_zero"] = rep.contains_zero;
        j["linear"] = rep.linear;
        j["property_checked"] = rep.property_checked;
        j["property_violations"] = rep.property_violation_count;
        j["dH"] = rep.min_hamming_distance ? nlohmann::ordered_json(*rep.min_hamming_distance) : nlohmann::ordered_json(nullptr);
        j["minGC"] = rep.min_gc_weight ? nlohmann::ordered_json(*rep.min_gc_weight) : nlohmann::ordered_json(nullptr);
        j["generators_span_code"] = span_ok ? nlohmann::ordered_json(*span_ok) : nlohmann::ordered_json(nullptr);
        j["result"] = ok ? "PASS" : "FAIL";
        out << j.dump() << '\n';
    } else {
        out << "file=" << path << " property=" << to_string(p) << '\n';
        out << "size=" << rep.size << " contains-zero=" << (rep.contains_zero ? "yes" : "no")
            << " linear=" << (rep.linear ? "yes" : "no") << " property-checked=" << rep.property_checked
            << " property-violations=" << rep.property_violation_count << " dH=" << detail::opt_str(rep.min_hamming_distance)
            << " minGC=" << detail::opt_str(rep.min_gc_weight);
        if (span_ok) out << " generators-span-code=" << (*span_ok ? "yes" : "no");
        out << '\n';
        for (const auto& wv : rep.linearity_witnesses)
            out << "linearity witness: " << wv.x.str() << " + " << wv.y.str() << " = " << wv.missing.str() << " missing\n";
        for (const auto& x : rep.property_violations) out << "property violation: " << x.str() << '\n';
        out << "result=" << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"dnalex: linear DNA codes over Z4 and code-size bounds"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_flag("--json", g.json, "Single-line JSON summaries");
    app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--out-dir", g.out_dir, std::string("Output directory (default: $") + kOutputDirEnv + " or " + kDefaultOutputDir + ")");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a lexicode and write it to a code file");
    construct->add_option("-n", ca.n, "Code length")->required();
    construct->add_option("-P,--property", ca.property, "Selection property, e.g. \"gc>=4&hw>=4\"")->capture_default_str();
    construct->add_option("--basis", ca.basis, "canonical or a file with n basis vectors")->capture_default_str();
    construct->add_option("--mode", ca.mode, "full-check or as-written")->capture_default_str();
    construct->add_option("--format", ca.format, "z4, dna or fasta")->capture_default_str();
    construct->add_flag("--dna", ca.dna, "Write nucleotide strings");
    construct->add_flag("--fasta", ca.fasta, "Write FASTA-like records");
    construct->add_option("-o,--output", ca.output, "Code file path (default: <out-dir>/lexicode_n<n>.txt)");
    construct->add_option("--cost-file", ca.cost_file, "Edit cost model for edit-distance atoms");
    construct->add_flag("--allow-non-multiplicative", ca.allow_non_multiplicative, "Build even if P[x] => P[3x] fails");

    std::string which;
    auto* tables = app.add_subcommand("tables", "Reproduce a reference table and diff it against the transcription");
    tables->add_option("which", which, "1, 2, 3, 4 or all")->required();

    DistanceArgs da;
    auto* distance = app.add_subcommand("distance", "Distance between two strands or Z4 words");
    distance->add_option("s", da.s)->required();
    distance->add_option("t", da.t)->required();
    distance->add_option("--metric", da.metric, "edit or hamming")->capture_default_str();
    distance->add_option("--cost-file", da.cost_file, "Edit cost model file");
    distance->add_flag("--transcript", da.transcript, "Print an optimal operation list");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Exact maximum code sizes and bound relations");
    bounds->add_option("-n", ba.n, "Length range, e.g. 1..4");
    bounds->add_option("-d", ba.d, "Distance range");
    bounds->add_option("-w", ba.w, "GC weight range, 'all' (0..n) or 'any' (unconstrained)")->capture_default_str();
    bounds->add_option("--metric", ba.metric, "hamming, edit or both")->capture_default_str();
    bounds->add_option("--variant", ba.variant, "plain, R, RC or all")->capture_default_str();
    bounds->add_option("--cost-file", ba.cost_file, "Edit cost model file");
    bounds->add_option("--budget", ba.budget, "Largest universe searched exactly")->capture_default_str();
    bounds->add_flag("--allow-gap", ba.allow_gap, "Report lower/upper gaps instead of failing over budget");
    bounds->add_flag("--check-relations", ba.check_relations, "Check the bound relations over the n range");
    bounds->add_flag("--with-runtime", ba.with_runtime, "Include runtime_ms in records (breaks byte-identical reruns)");
    std::string export_dir;
    bool export_table = false;
    auto* bexport = bounds->add_subcommand("export", "Render stored records");
    bexport->add_flag("--table", export_table, "Render a text grid")->required();
    bexport->add_option("--dir", export_dir, "Records directory (default: <out-dir>/bounds)");

    std::string conv_input, conv_to, conv_out;
    auto* convert = app.add_subcommand("convert", "Convert a word or code file between z4, dna and fasta");
    convert->add_option("input", conv_input, "Word or code file")->required();
    convert->add_option("--to", conv_to, "z4, dna or fasta")->required();
    convert->add_option("-o,--output", conv_out, "Write to a file instead of stdout");

    std::string ver_file, ver_property, ver_cost;
    auto* verify = app.add_subcommand("verify", "Re-verify a code file");
    verify->add_option("file", ver_file)->required();
    verify->add_option("property", ver_property, "Property to check (default: the file header's)");
    verify->add_option("--cost-file", ver_cost, "Edit cost model file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(ca, g, out);
        if (*tables) return cmd_tables(which, g, out);
        if (*distance) return cmd_distance(da, g, out);
        if (*bounds) return *bexport ? cmd_bounds_export(export_dir, g, out) : cmd_bounds(ba, g, out);
        if (*convert) return cmd_convert(conv_input, conv_to, conv_out, out);
        if (*verify) return cmd_verify(ver_file, ver_property, ver_cost, g, out);
    } catch (const budget_error& e) {
        err << "dnalex: " << e.what() << " (use --allow-gap or raise --budget)\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "dnalex: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "dnalex: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dnalex::cli

#endif  // DNALEX_CLI_HPP

/**
 * @file tables.hpp
 * @brief Transcribed reference tables and their reproduction.
 *
 * The data directory holds verbatim transcriptions of the published lexicode
 * tables plus a checksum file. Each reproduction runs the construction named
 * by a table row and diffs the result against the transcription; mismatches
 * are report content, not errors.
 */

#ifndef DNALEX_TABLES_HPP
#define DNALEX_TABLES_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "codefile.hpp"
#include "lexicode.hpp"
#include "property.hpp"

namespace dnalex {

/// 64-bit FNV-1a, used to pin the transcriptions.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

inline std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("DNALEX_DATA_DIR"); env && *env) return env;
#ifdef DNALEX_DATA_DIR
    return DNALEX_DATA_DIR;
#else
    return "data";
#endif
}

namespace detail {

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw usage_error("cannot open " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Reads reference_tables/<name>, verifying it against reference_tables/checksums.txt.
inline std::string read_table_file(const std::filesystem::path& data_dir, const std::string& name) {
    const auto dir = data_dir / "reference_tables";
    const std::string sums = slurp(dir / "checksums.txt");
    const std::string text = slurp(dir / name);
    std::istringstream in(sums);
    std::string sum, file;
    while (in >> sum >> file) {
        if (file != name) continue;
        if (sum != hex64(fnv1a64(text)))
            throw usage_error("checksum mismatch for " + (dir / name).string() + ": the transcription was modified");
        return text;
    }
    throw usage_error("no checksum recorded for " + name);
}

inline std::map<std::string, std::string> row_fields(const std::string& line) {
    std::map<std::string, std::string> f;
    std::istringstream in(line.substr(3));
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw usage_error("malformed table row: " + line);
        f[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return f;
}

inline std::size_t field_size(const std::map<std::string, std::string>& f, const std::string& key) {
    auto it = f.find(key);
    if (it == f.end()) throw usage_error("table row lacks " + key);
    return std::stoul(it->second);
}

}  // namespace detail

struct Table1Row {
    std::size_t n = 0;
    std::size_t w = 0;
    std::size_t dH = 0;
    std::vector<Z4Vector> generators;
};

struct Table4Row {
    std::size_t n = 0;
    DnaStrand ref;
    double m = 0;
    std::size_t wgc = 0;
    std::vector<Z4Vector> generators;
};

inline std::vector<Table1Row> load_table1(const std::filesystem::path& data_dir = default_data_dir()) {
    std::istringstream in(detail::read_table_file(data_dir, "table1.txt"));
    std::vector<Table1Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.starts_with("row ")) {
            const auto f = detail::row_fields(line);
            rows.push_back({detail::field_size(f, "n"), detail::field_size(f, "w"), detail::field_size(f, "dH"), {}});
        } else if (line.starts_with("G ") && !rows.empty()) {
            rows.back().generators.push_back(Z4Vector::parse(line.substr(2)));
        } else {
            throw usage_error("unexpected line in table1.txt: " + line);
        }
    }
    return rows;
}

inline std::vector<Table4Row> load_table4(const std::filesystem::path& data_dir = default_data_dir()) {
    std::istringstream in(detail::read_table_file(data_dir, "table4.txt"));
    std::vector<Table4Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.starts_with("row ")) {
            const auto f = detail::row_fields(line);
            rows.push_back({detail::field_size(f, "n"), DnaStrand::parse(f.at("ref")), std::stod(f.at("m")),
                            detail::field_size(f, "wgc"), {}});
        } else if (line.starts_with("G ") && !rows.empty()) {
            rows.back().generators.push_back(Z4Vector::parse(line.substr(2)));
        } else {
            throw usage_error("unexpected line in table4.txt: " + line);
        }
    }
    return rows;
}

/// Strand listings (tables 2 and 3), in printed row-major order.
inline std::vector<DnaStrand> load_strand_table(const std::string& name, const std::filesystem::path& data_dir = default_data_dir()) {
    std::istringstream in(detail::read_table_file(data_dir, name));
    std::vector<DnaStrand> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream words(line);
        std::string w;
        while (words >> w) out.push_back(DnaStrand::parse(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Table 1

/// The selection property of a Table 1 row: GC weight >= w, plus Hamming
/// weight >= d_H when the printed distance exceeds 1. The algorithm tests P
/// on every sum u*a + c, zero included, so the weight conjunct also keeps
/// order-2 generators out of the distance-4 rows.
inline PropertySpec table1_property(const Table1Row& row) {
    if (row.dH <= 1) return PropertySpec(MinGC{row.w});
    return PropertySpec(MinGC{row.w}) & PropertySpec(MinHammingWeight{row.dH});
}

struct ModeOutcome {
    CheckMode mode = CheckMode::full_check;
    std::vector<Z4Vector> generators;
    std::size_t size = 0;
    std::optional<std::size_t> min_hamming;
    std::optional<std::size_t> min_gc;
    bool verified = false;
    bool parameters_match = false;
    bool generators_exact = false;
    std::vector<Z4Vector> printed_only;
    std::vector<Z4Vector> constructed_only;
    std::vector<Z4Vector> codewords;
};

struct Table1Outcome {
    Table1Row row;
    std::string property;
    std::size_t printed_size = 0;
    std::optional<std::size_t> printed_min_hamming;
    std::optional<std::size_t> printed_min_gc;
    std::vector<ModeOutcome> modes;

    const ModeOutcome& mode(CheckMode m) const {
        for (const auto& o : modes)
            if (o.mode == m) return o;
        throw std::out_of_range("mode not run");
    }
};

inline ModeOutcome run_table1_mode(const Table1Row& row, const PropertySpec& p, std::size_t printed_size, CheckMode mode) {
    BuildOptions opt;
    opt.mode = mode;
    const LinearCode code = build_lexicode(row.n, p, opt);
    const auto& v = *code.verification;
    ModeOutcome o;
    o.mode = mode;
    o.generators = code.generators;
    o.size = code.codewords.size();
    o.min_hamming = v.min_hamming_distance;
    o.min_gc = v.min_gc_weight;
    o.verified = v.ok();
    o.parameters_match = v.ok() && o.generators.size() == row.generators.size() && o.size == printed_size &&
                         o.min_hamming == row.dH && o.min_gc && *o.min_gc >= row.w;
    o.generators_exact = o.generators == row.generators;
    const std::set<Z4Vector> printed(row.generators.begin(), row.generators.end());
    const std::set<Z4Vector> built(o.generators.begin(), o.generators.end());
    std::set_difference(printed.begin(), printed.end(), built.begin(), built.end(), std::back_inserter(o.printed_only));
    std::set_difference(built.begin(), built.end(), printed.begin(), printed.end(), std::back_inserter(o.constructed_only));
    o.codewords = code.codewords;
    return o;
}

inline Table1Outcome reproduce_table1_row(const Table1Row& row, std::vector<CheckMode> modes) {
    Table1Outcome out;
    out.row = row;
    const PropertySpec p = table1_property(row);
    out.property = to_string(p);
    const auto printed = span_of(row.n, row.generators);
    const auto pv = verify_lexicode(printed, p);
    out.printed_size = pv.size;
    out.printed_min_hamming = pv.min_hamming_distance;
    out.printed_min_gc = pv.min_gc_weight;
    for (auto m : modes) out.modes.push_back(run_table1_mode(row, p, out.printed_size, m));
    return out;
}

/// Rows whose printed generators are not all of order 2 are run in both
/// check modes; the diagonal rows only in full-check mode.
inline std::vector<CheckMode> table1_modes(const Table1Row& row) {
    const bool diagonal = std::all_of(row.generators.begin(), row.generators.end(), [](const Z4Vector& g) {
        return hamming_weight(g) == 1 && symbol_count(g, 2) == 1;
    });
    if (diagonal) return {CheckMode::full_check};
    return {CheckMode::full_check, CheckMode::as_written};
}

namespace detail {
inline std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); }
inline std::string join(const std::vector<Z4Vector>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.str();
    return s.empty() ? "-" : s;
}
}  // namespace detail

inline void write_table1_report(std::ostream& out, const std::vector<Table1Outcome>& rows) {
    for (const auto& r : rows) {
        out << "row n=" << r.row.n << " w=" << r.row.w << " dH=" << r.row.dH << " property=" << r.property << '\n';
        out << "  printed generators: " << detail::join(r.row.generators) << '\n';
        out << "  printed code: size=" << r.printed_size << " dH=" << detail::opt_str(r.printed_min_hamming)
            << " minGC=" << detail::opt_str(r.printed_min_gc) << '\n';
        for (const auto& m : r.modes) {
            out << "  [" << to_string(m.mode) << "] generators: " << detail::join(m.generators) << '\n';
            out << "  [" << to_string(m.mode) << "] size=" << m.size << " dH=" << detail::opt_str(m.min_hamming)
                << " minGC=" << detail::opt_str(m.min_gc) << " verified=" << (m.verified ? "yes" : "no")
                << " parameters=" << (m.parameters_match ? "MATCH" : "MISMATCH")
                << " generators=" << (m.generators_exact ? "EXACT" : "DIFFER") << '\n';
            if (!m.generators_exact)
                out << "  [" << to_string(m.mode) << "] printed-only: " << detail::join(m.printed_only)
                    << " | constructed-only: " << detail::join(m.constructed_only) << '\n';
        }
    }
}

// ---------------------------------------------------------------------------
// Tables 2 and 3

struct EntryIssue {
    DnaStrand entry;
    std::string constraint;
    std::string witness;
};

struct StrandTableOutcome {
    std::size_t transcribed = 0;
    std::size_t transcribed_unique = 0;
    std::size_t generated = 0;
    std::size_t overlap = 0;                 ///< transcribed entries present in the generated code
    std::size_t in_printed_span = 0;         ///< transcribed entries in the span of the printed generators
    std::size_t generated_min_gc = 0;
    std::size_t transcribed_gc_violations = 0;
    bool transcribed_linear = false;
    std::vector<EntryIssue> issues;          ///< reference-side failures, each with a witness
    std::vector<DnaStrand> missing_explained;  ///< non-overlapping entries with at least one issue
    std::vector<DnaStrand> missing_unexplained;
};

/**
 * Compares a transcribed strand listing with the constructed code and with
 * the code spanned by the printed generators. Each transcribed entry that is
 * not a constructed codeword is checked against the listing's own claims:
 * membership in the printed code (witness: nearest printed codeword) and
 * closure under addition (witness: a partner whose sum leaves the listing).
 */
inline StrandTableOutcome compare_strand_table(const std::vector<DnaStrand>& transcribed, const std::vector<Z4Vector>& generated,
                                               const std::vector<Z4Vector>& printed_span, std::size_t w) {
    StrandTableOutcome out;
    out.transcribed = transcribed.size();
    const std::set<DnaStrand> table(transcribed.begin(), transcribed.end());
    out.transcribed_unique = table.size();
    out.generated = generated.size();

    std::set<DnaStrand> gen;
    out.generated_min_gc = generated.empty() ? 0 : generated.front().size();
    for (const auto& g : generated) {
        gen.insert(phi(g));
        out.generated_min_gc = std::min(out.generated_min_gc, gc_weight(g));
    }
    const std::set<Z4Vector> span(printed_span.begin(), printed_span.end());

    std::vector<Z4Vector> table_z4;
    for (const auto& s : table) table_z4.push_back(phi_inv(s));
    const std::set<Z4Vector> table_set(table_z4.begin(), table_z4.end());
    out.transcribed_linear = verify_lexicode(table_z4, PropertySpec(Constant{true}), 1).linear;

    for (const auto& s : table) {
        const Z4Vector x = phi_inv(s);
        if (gc_weight(s) < w) {
            ++out.transcribed_gc_violations;
            out.issues.push_back({s, "gc>=" + std::to_string(w), "GC weight " + std::to_string(gc_weight(s))});
        }
        const bool in_span = span.contains(x);
        out.in_printed_span += in_span;
        if (gen.contains(s)) {
            ++out.overlap;
            continue;
        }
        bool explained = false;
        if (!in_span) {
            std::size_t best = x.size() + 1;
            Z4Vector nearest;
            for (const auto& c : printed_span)
                if (std::size_t d = hamming_distance(x, c); d < best) best = d, nearest = c;
            out.issues.push_back({s, "member of the printed code",
                                  "not in the span of the printed generators; nearest printed codeword " + phi(nearest).str() +
                                      " at Hamming distance " + std::to_string(best)});
            explained = true;
        }
        for (const auto& y : table_z4) {
            const Z4Vector sum = add(x, y);
            if (!table_set.contains(sum)) {
                out.issues.push_back({s, "closed under addition",
                                      s.str() + " + " + phi(y).str() + " = " + phi(sum).str() + " is not listed"});
                explained = true;
                break;
            }
        }
        (explained ? out.missing_explained : out.missing_unexplained).push_back(s);
    }
    return out;
}

inline void write_strand_table_report(std::ostream& out, const StrandTableOutcome& r) {
    out << "transcribed=" << r.transcribed << " unique=" << r.transcribed_unique << " generated=" << r.generated
        << " overlap=" << r.overlap << "/" << r.transcribed_unique << " in-printed-span=" << r.in_printed_span
        << " generated-minGC=" << r.generated_min_gc << " transcribed-gc-violations=" << r.transcribed_gc_violations
        << " transcribed-linear=" << (r.transcribed_linear ? "yes" : "no") << '\n';
    out << "entries not generated: " << r.missing_explained.size() + r.missing_unexplained.size()
        << " (with reference-side witness: " << r.missing_explained.size() << ", unexplained: " << r.missing_unexplained.size()
        << ")\n";
    for (const auto& i : r.issues) out << "FINDING " << i.entry.str() << " violates '" << i.constraint << "': " << i.witness << '\n';
    for (const auto& s : r.missing_unexplained) out << "UNEXPLAINED " << s.str() << '\n';
}

// ---------------------------------------------------------------------------
// Table 4

struct Table4Outcome {
    Table4Row row;
    struct Reading {
        std::string property;
        std::vector<Z4Vector> generators;
        std::size_t size = 0;
        bool verified = false;
        bool generators_exact = false;
    };
    std::vector<Reading> readings;  ///< at-most and at-least readings of the threshold
    struct PrintedGenerator {
        Z4Vector generator;
        double distance = 0;
        std::size_t gc = 0;
        bool within_m = false;
        bool gc_ok = false;
    };
    std::vector<PrintedGenerator> printed;
    std::size_t printed_span_size = 0;
};

inline Table4Outcome reproduce_table4_row(const Table4Row& row, const CostModel& cm = CostModel::unit()) {
    Table4Outcome out;
    out.row = row;
    const std::vector<PropertySpec> readings{
        PropertySpec(EditToRefAtMost{row.ref, row.m, cm}) & PropertySpec(MinGC{row.wgc}),
        PropertySpec(EditToRefAtLeast{row.ref, row.m, cm}) & PropertySpec(MinGC{row.wgc}),
    };
    for (const auto& p : readings) {
        BuildOptions opt;
        opt.allow_non_multiplicative = true;
        const LinearCode code = build_lexicode(row.n, p, opt);
        out.readings.push_back({to_string(p), code.generators, code.codewords.size(), code.verification->ok(),
                                code.generators == row.generators});
    }
    for (const auto& g : row.generators) {
        const double d = edit_distance(phi(g), row.ref, cm);
        out.printed.push_back({g, d, gc_weight(g), d <= row.m + kDistanceTolerance, gc_weight(g) >= row.wgc});
    }
    out.printed_span_size = span_of(row.n, row.generators).size();
    return out;
}

inline void write_table4_report(std::ostream& out, const std::vector<Table4Outcome>& rows) {
    for (const auto& r : rows) {
        out << "row n=" << r.row.n << " ref=" << r.row.ref.str() << " m=" << detail::format_number(r.row.m)
            << " wGC=" << r.row.wgc << '\n';
        out << "  printed generators: " << detail::join(r.row.generators) << " (span size " << r.printed_span_size << ")\n";
        for (const auto& g : r.printed) {
            out << "  printed " << g.generator.str() << " phi=" << phi(g.generator).str()
                << " d(phi, ref)=" << detail::format_number(g.distance) << " gc=" << g.gc << '\n';
            if (!g.within_m)
                out << "FINDING printed generator " << g.generator.str() << " has d(" << phi(g.generator).str() << ", "
                    << r.row.ref.str() << ")=" << detail::format_number(g.distance) << " > m=" << detail::format_number(r.row.m)
                    << '\n';
            if (!g.gc_ok)
                out << "FINDING printed generator " << g.generator.str() << " has GC weight " << g.gc << " < " << r.row.wgc << '\n';
        }
        for (const auto& rd : r.readings) {
            out << "  [" << rd.property << "] generators: " << detail::join(rd.generators) << " size=" << rd.size
                << " verified=" << (rd.verified ? "yes" : "no") << " generators=" << (rd.generators_exact ? "EXACT" : "DIFFER")
                << '\n';
        }
    }
}

}  // namespace dnalex

#endif  // DNALEX_TABLES_HPP

/**
 * @file bounds_io.hpp
 * @brief JSON persistence of bound records, text tables, relation reports.
 */

#ifndef DNALEX_BOUNDS_IO_HPP
#define DNALEX_BOUNDS_IO_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"

namespace dnalex {

using ordered_json = nlohmann::ordered_json;

/// File name of a record inside a results directory.
inline std::string record_filename(const BoundKey& k) {
    std::string metric = to_string(k.metric);
    if (metric == "edit(custom)") metric = "editc";
    return "A_" + metric + "_" + to_string(k.variant) + "_n" + std::to_string(k.n) + "_d" + std::to_string(k.d) + "_w" +
           (k.w ? std::to_string(*k.w) : std::string("any")) + ".json";
}

/// Record as JSON. Wall-clock runtime is included only on request so that
/// repeated runs produce identical documents.
inline ordered_json to_json(const BoundRecord& r, bool with_runtime = false) {
    ordered_json j;
    j["n"] = r.key.n;
    j["d"] = r.key.d;
    j["w"] = r.key.w ? ordered_json(*r.key.w) : ordered_json(nullptr);
    j["metric"] = to_string(r.key.metric);
    if (r.key.metric.kind == Metric::Kind::edit && !r.key.metric.cm.is_unit()) j["cost_model"] = format_cost_model(r.key.metric.cm);
    j["variant"] = to_string(r.key.variant);
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["status"] = to_string(r.status);
    ordered_json witness = ordered_json::array();
    for (const auto& s : r.witness) witness.push_back(s.str());
    j["witness"] = witness;
    j["method"] = r.method;
    j["lower_method"] = r.lower_method;
    j["search_nodes"] = r.search_nodes;
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    j["tool_version"] = kToolVersion;
    return j;
}

inline BoundRecord record_from_json(const ordered_json& j) {
    try {
        BoundRecord r;
        r.key.n = j.at("n").get<std::size_t>();
        r.key.d = j.at("d").get<std::size_t>();
        if (!j.at("w").is_null()) r.key.w = j.at("w").get<std::size_t>();
        const auto metric = j.at("metric").get<std::string>();
        if (metric == "hamming") r.key.metric = Metric::hamming();
        else if (metric == "edit") r.key.metric = Metric::edit();
        else r.key.metric = Metric::edit(parse_cost_model(j.at("cost_model").get<std::string>()));
        r.key.variant = parse_variant(j.at("variant").get<std::string>());
        r.lower = j.at("lower").get<std::uint64_t>();
        r.upper = j.at("upper").get<std::uint64_t>();
        r.status = j.at("status").get<std::string>() == "exact" ? BoundStatus::exact : BoundStatus::gap;
        for (const auto& s : j.at("witness")) r.witness.push_back(DnaStrand::parse(s.get<std::string>()));
        r.method = j.at("method").get<std::string>();
        r.lower_method = j.value("lower_method", r.method);
        r.search_nodes = j.value("search_nodes", std::uint64_t{0});
        r.runtime_ms = j.value("runtime_ms", 0.0);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed bound record: ") + e.what());
    }
}

inline void save_record(const std::filesystem::path& dir, const BoundRecord& r, bool with_runtime = false) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / record_filename(r.key));
    if (!out) throw usage_error("cannot write to " + (dir / record_filename(r.key)).string());
    out << to_json(r, with_runtime).dump(2) << '\n';
}

/// All records in `dir`, sorted by (metric, variant, w, n, d).
inline std::vector<BoundRecord> load_records(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw usage_error("no results directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json" && e.path().filename().string().starts_with("A_")) files.push_back(e.path());
    std::vector<BoundRecord> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        ordered_json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(f.string() + ": " + e.what());
        }
        out.push_back(record_from_json(j));
    }
    std::sort(out.begin(), out.end(), [](const BoundRecord& a, const BoundRecord& b) {
        auto key = [](const BoundRecord& r) {
            return std::make_tuple(to_string(r.key.metric), static_cast<int>(r.key.variant), r.key.w ? static_cast<long>(*r.key.w) : -1L,
                                   r.key.n, r.key.d);
        };
        return key(a) < key(b);
    });
    return out;
}

inline std::string cell_text(const BoundRecord& r) {
    if (r.status == BoundStatus::exact) return std::to_string(r.lower);
    return std::to_string(r.lower) + "-" + std::to_string(r.upper);
}

/// One grid per (metric, variant): rows (n, w), columns d.
inline void render_table(std::ostream& out, const std::vector<BoundRecord>& records) {
    using GroupKey = std::pair<std::string, int>;
    std::map<GroupKey, std::vector<const BoundRecord*>> groups;
    for (const auto& r : records) groups[{to_string(r.key.metric), static_cast<int>(r.key.variant)}].push_back(&r);

    for (const auto& [gk, recs] : groups) {
        std::size_t max_d = 0;
        std::map<std::pair<std::size_t, long>, std::map<std::size_t, std::string>> rows;
        for (const auto* r : recs) {
            max_d = std::max(max_d, r->key.d);
            rows[{r->key.n, r->key.w ? static_cast<long>(*r->key.w) : -1L}][r->key.d] = cell_text(*r);
        }
        out << "A_4^{" << (gk.second == 0 ? "GC" : gk.second == 1 ? "GC,R" : "GC,RC") << "}(n,d,w)  metric=" << gk.first << '\n';
        std::ostringstream rule;
        rule << "+----+----+";
        for (std::size_t d = 0; d <= max_d; ++d) rule << "--------+";
        out << rule.str() << '\n' << "|  n |  w |";
        for (std::size_t d = 0; d <= max_d; ++d) {
            std::string h = "d=" + std::to_string(d);
            out << ' ' << std::string(h.size() < 6 ? 6 - h.size() : 0, ' ') << h << " |";
        }
        out << '\n' << rule.str() << '\n';
        for (const auto& [rk, cells] : rows) {
            const std::string n = std::to_string(rk.first), w = rk.second < 0 ? "-" : std::to_string(rk.second);
            out << "| " << std::string(2 - std::min<std::size_t>(2, n.size()), ' ') << n << " | "
                << std::string(2 - std::min<std::size_t>(2, w.size()), ' ') << w << " |";
            for (std::size_t d = 0; d <= max_d; ++d) {
                auto it = cells.find(d);
                const std::string c = it == cells.end() ? "" : it->second;
                out << ' ' << std::string(c.size() < 6 ? 6 - c.size() : 0, ' ') << c << " |";
            }
            out << '\n';
        }
        out << rule.str() << '\n';
    }
}

inline void write_relation_report(std::ostream& out, const RelationReport& rep) {
    for (const auto& note : rep.notes) out << "# " << note << '\n';
    for (const auto& c : rep.checks) {
        out << to_string(c.outcome) << ' ' << c.relation << " [" << c.metric << "] " << c.claim << "  (" << c.lhs << " vs "
            << c.rhs << ")";
        if (!c.note.empty()) out << "  " << c.note;
        out << '\n';
    }
    std::map<std::string, std::array<std::size_t, 4>> tally;
    for (const auto& c : rep.checks) ++tally[c.relation + " [" + c.metric + "]"][static_cast<std::size_t>(c.outcome)];
    out << "summary:\n";
    for (const auto& [rel, t] : tally)
        out << "  " << rel << ": pass=" << t[0] << " fail=" << t[1] << " finding=" << t[2] << '\n';
}

}  // namespace dnalex

#endif  // DNALEX_BOUNDS_IO_HPP

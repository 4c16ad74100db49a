/**
 * @file edit_distance.hpp
 * @brief Weighted string edit distance over nucleotide strings, Hamming set
 *        distances, and the cost-model text format.
 */

#ifndef DNALEX_EDIT_DISTANCE_HPP
#define DNALEX_EDIT_DISTANCE_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "z4.hpp"

namespace dnalex {

/// Row/column order of every cost table.
inline constexpr std::array<char, 4> kCostAlphabet{'A', 'C', 'G', 'T'};

constexpr int cost_index(char base) {
    switch (base) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
    }
}

/**
 * Costs of the primitive edit operations: substitution a->b, deletion of a,
 * insertion of b. The unit model accepts any characters and charges 1 per
 * mismatch, insertion or deletion; other models are restricted to A, C, G, T.
 */
class CostModel {
public:
    using Matrix = std::array<std::array<double, 4>, 4>;
    using Vector = std::array<double, 4>;

    CostModel() = default;  // unit

    static CostModel unit() { return CostModel{}; }

    static CostModel from_tables(const Matrix& substitution, const Vector& insertion, const Vector& deletion) {
        CostModel cm;
        cm.unit_ = false;
        cm.sub_ = substitution;
        cm.ins_ = insertion;
        cm.del_ = deletion;
        auto bad = [](double v) { return !(v >= 0.0) || !std::isfinite(v); };
        for (const auto& row : cm.sub_)
            if (std::any_of(row.begin(), row.end(), bad)) throw usage_error("substitution costs must be finite and >= 0");
        if (std::any_of(cm.ins_.begin(), cm.ins_.end(), bad) || std::any_of(cm.del_.begin(), cm.del_.end(), bad))
            throw usage_error("insertion/deletion costs must be finite and >= 0");
        if (cm == CostModel::unit()) cm.unit_ = true;
        return cm;
    }

    bool is_unit() const noexcept { return unit_; }

    double substitution(char a, char b) const {
        if (unit_) return a == b ? 0.0 : 1.0;
        return sub_[index(a)][index(b)];
    }
    double insertion(char b) const { return unit_ ? 1.0 : ins_[index(b)]; }
    double deletion(char a) const { return unit_ ? 1.0 : del_[index(a)]; }

    /// All costs are whole numbers, so distances can be computed exactly in integers.
    bool is_integral() const noexcept {
        if (unit_) return true;
        auto whole = [](double v) { return v == std::floor(v) && v < 1e15; };
        for (const auto& row : sub_)
            if (!std::all_of(row.begin(), row.end(), whole)) return false;
        return std::all_of(ins_.begin(), ins_.end(), whole) && std::all_of(del_.begin(), del_.end(), whole);
    }

    /// Symmetric substitution with zero diagonal and positive off-diagonal,
    /// deletion(a) == insertion(a) > 0, and the single-symbol triangle
    /// inequalities. Set-level distance claims are only meaningful then.
    bool is_metric() const {
        if (unit_) return true;
        for (int a = 0; a < 4; ++a) {
            if (sub_[a][a] != 0.0 || del_[a] != ins_[a] || del_[a] <= 0.0) return false;
            for (int b = 0; b < 4; ++b) {
                if (sub_[a][b] != sub_[b][a]) return false;
                if (a != b && sub_[a][b] <= 0.0) return false;
                if (del_[a] > sub_[a][b] + del_[b]) return false;
                for (int c = 0; c < 4; ++c)
                    if (sub_[a][c] > sub_[a][b] + sub_[b][c]) return false;
            }
        }
        return true;
    }

    CostModel as_tables() const {
        CostModel cm = *this;
        if (unit_) {
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) cm.sub_[a][b] = a == b ? 0.0 : 1.0;
                cm.ins_[a] = cm.del_[a] = 1.0;
            }
        }
        cm.unit_ = false;
        return cm;
    }

    friend bool operator==(const CostModel& l, const CostModel& r) {
        const CostModel a = l.as_tables(), b = r.as_tables();
        return a.sub_ == b.sub_ && a.ins_ == b.ins_ && a.del_ == b.del_;
    }

    const Matrix& substitution_table() const noexcept { return sub_; }
    const Vector& insertion_table() const noexcept { return ins_; }
    const Vector& deletion_table() const noexcept { return del_; }

private:
    static int index(char base) {
        const int i = cost_index(base);
        if (i < 0) throw usage_error("cost model is defined over A,C,G,T only; got '" + std::string(1, base) + "'");
        return i;
    }

    Matrix sub_{};
    Vector ins_{};
    Vector del_{};
    bool unit_ = true;
};

/**
 * Parses the key-value cost document:
 *
 *     # comment
 *     substitution.A = 0 1 1 1
 *     substitution.C = 1 0 1 1
 *     substitution.G = 1 1 0 1
 *     substitution.T = 1 1 1 0
 *     insertion = 1 1 1 1
 *     deletion  = 1 1 1 1
 *
 * Rows and columns are in A,C,G,T order. Keys that are absent keep their
 * unit-model values.
 */
inline CostModel parse_cost_model(std::string_view text) {
    CostModel base = CostModel::unit().as_tables();
    CostModel::Matrix sub = base.substitution_table();
    CostModel::Vector ins = base.insertion_table(), del = base.deletion_table();

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw usage_error("cost file line " + std::to_string(lineno) + ": expected key = values");
        std::string key = line.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char c) { return std::isspace(c); }), key.end());
        std::istringstream values(line.substr(eq + 1));
        CostModel::Vector row{};
        for (double& v : row)
            if (!(values >> v)) throw usage_error("cost file line " + std::to_string(lineno) + ": expected four numbers");
        std::string extra;
        if (values >> extra) throw usage_error("cost file line " + std::to_string(lineno) + ": trailing token '" + extra + "'");

        if (key == "insertion") {
            ins = row;
        } else if (key == "deletion") {
            del = row;
        } else if (key.size() == 14 && key.starts_with("substitution.") && cost_index(key[13]) >= 0) {
            sub[static_cast<std::size_t>(cost_index(key[13]))] = row;
        } else {
            throw usage_error("cost file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return CostModel::from_tables(sub, ins, del);
}

inline CostModel load_cost_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open cost file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cost_model(buf.str());
}

inline std::string format_cost_model(const CostModel& model) {
    const CostModel cm = model.as_tables();
    std::ostringstream out;
    auto row = [&](const CostModel::Vector& v) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    };
    for (std::size_t a = 0; a < 4; ++a) {
        out << "substitution." << kCostAlphabet[a] << " = ";
        row(cm.substitution_table()[a]);
    }
    out << "insertion = ";
    row(cm.insertion_table());
    out << "deletion = ";
    row(cm.deletion_table());
    return out.str();
}

// ---------------------------------------------------------------------------
// Distance

namespace detail {

template <class Cost>
Cost to_cost(double v) {
    if constexpr (std::is_integral_v<Cost>) return static_cast<Cost>(std::llround(v));
    else return v;
}

/// Two-row DP over the (|s|+1) x (|t|+1) grid.
template <class Cost>
Cost edit_dp(std::string_view s, std::string_view t, const CostModel& cm) {
    std::vector<Cost> prev(t.size() + 1), cur(t.size() + 1);
    prev[0] = 0;
    for (std::size_t j = 1; j <= t.size(); ++j) prev[j] = prev[j - 1] + to_cost<Cost>(cm.insertion(t[j - 1]));
    for (std::size_t i = 1; i <= s.size(); ++i) {
        const Cost del = to_cost<Cost>(cm.deletion(s[i - 1]));
        cur[0] = prev[0] + del;
        for (std::size_t j = 1; j <= t.size(); ++j) {
            cur[j] = std::min({prev[j - 1] + to_cost<Cost>(cm.substitution(s[i - 1], t[j - 1])), prev[j] + del,
                               cur[j - 1] + to_cost<Cost>(cm.insertion(t[j - 1]))});
        }
        std::swap(prev, cur);
    }
    return prev[t.size()];
}

}  // namespace detail

inline double edit_distance(std::string_view s, std::string_view t, const CostModel& cm = CostModel::unit()) {
    if (cm.is_integral()) return static_cast<double>(detail::edit_dp<std::int64_t>(s, t, cm));
    return detail::edit_dp<double>(s, t, cm);
}

inline double edit_distance(const DnaStrand& s, const DnaStrand& t, const CostModel& cm = CostModel::unit()) {
    return edit_distance(s.view(), t.view(), cm);
}

struct EditOp {
    enum class Kind { match, substitute, remove, insert };
    Kind kind;
    std::size_t source_pos;  ///< index in the source (for insert: insertion point)
    std::size_t target_pos;  ///< index in the target (for remove: alignment point)
    char from;               ///< '\0' for insert
    char to;                 ///< '\0' for remove
    double cost;

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditTranscript {
    std::vector<EditOp> ops;
    double total = 0.0;
};

inline std::string to_string(EditOp::Kind k) {
    switch (k) {
    case EditOp::Kind::match: return "match";
    case EditOp::Kind::substitute: return "substitute";
    case EditOp::Kind::remove: return "delete";
    case EditOp::Kind::insert: return "insert";
    }
    return "?";
}

/// Distance plus one optimal alignment. The backtrace prefers
/// match/substitute, then delete, then insert.
inline std::pair<double, EditTranscript> edit_distance_with_transcript(std::string_view s, std::string_view t,
                                                                       const CostModel& cm = CostModel::unit()) {
    const std::size_t rows = s.size() + 1, cols = t.size() + 1;
    std::vector<double> dp(rows * cols, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return dp[i * cols + j]; };
    for (std::size_t j = 1; j < cols; ++j) at(0, j) = at(0, j - 1) + cm.insertion(t[j - 1]);
    for (std::size_t i = 1; i < rows; ++i) {
        at(i, 0) = at(i - 1, 0) + cm.deletion(s[i - 1]);
        for (std::size_t j = 1; j < cols; ++j) {
            at(i, j) = std::min({at(i - 1, j - 1) + cm.substitution(s[i - 1], t[j - 1]),
                                 at(i - 1, j) + cm.deletion(s[i - 1]), at(i, j - 1) + cm.insertion(t[j - 1])});
        }
    }

    EditTranscript tr;
    std::size_t i = s.size(), j = t.size();
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0) {
            const double c = cm.substitution(s[i - 1], t[j - 1]);
            if (at(i, j) == at(i - 1, j - 1) + c) {
                const auto kind = s[i - 1] == t[j - 1] && c == 0.0 ? EditOp::Kind::match : EditOp::Kind::substitute;
                tr.ops.push_back({kind, i - 1, j - 1, s[i - 1], t[j - 1], c});
                --i, --j;
                continue;
            }
        }
        if (i > 0 && at(i, j) == at(i - 1, j) + cm.deletion(s[i - 1])) {
            tr.ops.push_back({EditOp::Kind::remove, i - 1, j, s[i - 1], '\0', cm.deletion(s[i - 1])});
            --i;
            continue;
        }
        tr.ops.push_back({EditOp::Kind::insert, i, j - 1, '\0', t[j - 1], cm.insertion(t[j - 1])});
        --j;
    }
    std::reverse(tr.ops.begin(), tr.ops.end());
    for (const auto& op : tr.ops) tr.total += op.cost;
    return {at(s.size(), t.size()), tr};
}

/// Applies a transcript to its source string.
inline std::string replay(const EditTranscript& tr, std::string_view source) {
    std::string out;
    std::size_t consumed = 0;
    for (const auto& op : tr.ops) {
        switch (op.kind) {
        case EditOp::Kind::match:
        case EditOp::Kind::substitute:
            if (op.source_pos != consumed || op.source_pos >= source.size() || source[op.source_pos] != op.from)
                throw usage_error("transcript does not match source");
            out.push_back(op.to);
            ++consumed;
            break;
        case EditOp::Kind::remove:
            if (op.source_pos != consumed || op.source_pos >= source.size() || source[op.source_pos] != op.from)
                throw usage_error("transcript does not match source");
            ++consumed;
            break;
        case EditOp::Kind::insert: out.push_back(op.to); break;
        }
    }
    if (consumed != source.size()) throw usage_error("transcript leaves source symbols unconsumed");
    return out;
}

/// Absolute slack applied to real-valued distance thresholds; integral
/// cost models compare exactly.
inline constexpr double kDistanceTolerance = 1e-9;

/// Sentinel returned by set-level minima over fewer than two distinct words.
inline constexpr double kNoPairDistance = std::numeric_limits<double>::infinity();

/// Minimum over unordered distinct pairs; an asymmetric model contributes
/// the smaller of both directions. Duplicates collapse.
inline double min_pairwise_edit(const std::vector<std::string>& code, const CostModel& cm = CostModel::unit()) {
    const std::set<std::string> uniq(code.begin(), code.end());
    const std::vector<std::string> words(uniq.begin(), uniq.end());
    const bool symmetric = cm.is_metric();
    double best = kNoPairDistance;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            double d = edit_distance(words[i], words[j], cm);
            if (!symmetric) d = std::min(d, edit_distance(words[j], words[i], cm));
            best = std::min(best, d);
        }
    }
    return best;
}

inline double min_pairwise_edit(const std::vector<DnaStrand>& code, const CostModel& cm = CostModel::unit()) {
    std::vector<std::string> words;
    words.reserve(code.size());
    for (const auto& s : code) words.push_back(s.str());
    return min_pairwise_edit(words, cm);
}

/// Minimum Hamming distance over distinct pairs; nullopt when fewer than two
/// distinct words remain.
inline std::optional<std::size_t> min_pairwise_hamming(const std::vector<Z4Vector>& code) {
    const std::set<Z4Vector> uniq(code.begin(), code.end());
    const std::vector<Z4Vector> words(uniq.begin(), uniq.end());
    for (const auto& w : words)
        if (w.size() != words.front().size()) throw usage_error("code words must share one length");
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const std::size_t d = hamming_distance(words[i], words[j]);
            if (!best || d < *best) best = d;
        }
    return best;
}

}  // namespace dnalex

#endif  // DNALEX_EDIT_DISTANCE_HPP

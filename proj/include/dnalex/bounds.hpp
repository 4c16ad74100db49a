/**
 * @file bounds.hpp
 * @brief Exact small-instance values of maximum DNA code sizes and checks of
 *        the relations between them.
 *
 * A_4^{GC}(n, d, w) is the largest set of length-n strands, each with exactly
 * w G/C symbols, whose distinct members are at distance >= d. The R and RC
 * variants further require the set to be closed under reversal or reverse
 * complement. Values are computed as maximum-weight cliques in a
 * compatibility graph whose vertices are closure orbits ({x} or {x, x^R}).
 */

#ifndef DNALEX_BOUNDS_HPP
#define DNALEX_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "clique.hpp"
#include "edit_distance.hpp"
#include "z4.hpp"

namespace dnalex {

inline constexpr const char* kToolVersion = "0.1.0";

/// Raised when an instance exceeds the exact-search budget and gaps are not allowed.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Metric {
    enum class Kind { hamming, edit };
    Kind kind = Kind::hamming;
    CostModel cm{};

    static Metric hamming() { return {Kind::hamming, {}}; }
    static Metric edit(CostModel cm = CostModel::unit()) { return {Kind::edit, std::move(cm)}; }

    friend bool operator==(const Metric& a, const Metric& b) {
        return a.kind == b.kind && (a.kind == Kind::hamming || a.cm == b.cm);
    }
};

inline std::string to_string(const Metric& m) {
    if (m.kind == Metric::Kind::hamming) return "hamming";
    return m.cm.is_unit() ? "edit" : "edit(custom)";
}

enum class Variant { plain, R, RC };

inline std::string to_string(Variant v) {
    switch (v) {
    case Variant::plain: return "plain";
    case Variant::R: return "R";
    case Variant::RC: return "RC";
    }
    return "?";
}

inline Variant parse_variant(std::string_view s) {
    if (s == "plain") return Variant::plain;
    if (s == "R") return Variant::R;
    if (s == "RC") return Variant::RC;
    throw usage_error("unknown variant '" + std::string(s) + "' (expected plain, R or RC)");
}

struct BoundKey {
    std::size_t n = 1;
    std::size_t d = 1;
    std::optional<std::size_t> w;  ///< nullopt: GC content unconstrained
    Metric metric{};
    Variant variant = Variant::plain;

    void validate() const {
        if (n == 0) throw usage_error("n must be positive");
        if (w && *w > n) throw usage_error("w must satisfy 0 <= w <= n");
    }

    std::string label() const {
        return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " w=" + (w ? std::to_string(*w) : std::string("any")) +
               " metric=" + to_string(metric) + " variant=" + to_string(variant);
    }
};

enum class BoundStatus { exact, gap };

inline std::string to_string(BoundStatus s) { return s == BoundStatus::exact ? "exact" : "gap"; }

struct BoundRecord {
    BoundKey key;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::vector<DnaStrand> witness;  ///< a code of size `lower`
    std::string lower_method;        ///< "exhaustive-clique", "trivial" or "greedy"
    std::string method;              ///< upper bound: "exhaustive-clique", "trivial" or "colouring-bound"
    BoundStatus status = BoundStatus::exact;
    std::uint64_t search_nodes = 0;
    double runtime_ms = 0.0;

    std::uint64_t value() const {
        if (status != BoundStatus::exact) throw std::logic_error("bound for " + key.label() + " is not exact");
        return lower;
    }
};

struct BoundOptions {
    std::size_t budget = 2000;  ///< largest universe searched exactly
    bool allow_gap = false;
};

// ---------------------------------------------------------------------------
// Universes and distances

inline constexpr std::array<char, 4> kStrandOrder{'A', 'C', 'G', 'T'};

/// All strands of length n in lexicographic order, optionally with exactly
/// w G/C symbols.
inline std::vector<DnaStrand> strand_universe(std::size_t n, std::optional<std::size_t> w = std::nullopt) {
    if (n > 12) throw usage_error("strand universe limited to n <= 12");
    std::vector<DnaStrand> out;
    std::string s(n, 'A');
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t j = 0; j < total; ++j) {
        std::uint64_t k = j;
        std::size_t gc = 0;
        for (std::size_t i = n; i-- > 0; k >>= 2) {
            s[i] = kStrandOrder[k & 3u];
            gc += is_gc(s[i]);
        }
        if (!w || gc == *w) out.push_back(DnaStrand::parse(s));
    }
    return out;
}

inline std::vector<DnaStrand> constant_gc_universe(std::size_t n, std::size_t w) {
    if (w > n) throw usage_error("w must satisfy 0 <= w <= n");
    return strand_universe(n, w);
}

inline double strand_distance(std::string_view a, std::string_view b, const Metric& m) {
    if (m.kind == Metric::Kind::hamming) {
        if (a.size() != b.size()) throw usage_error("Hamming distance needs equal lengths");
        std::size_t d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
        return static_cast<double>(d);
    }
    return edit_distance(a, b, m.cm);
}

/// Both directions at least d (they coincide for symmetric metrics).
inline bool far_enough(std::string_view a, std::string_view b, std::size_t d, const Metric& m) {
    const double tol = m.kind == Metric::Kind::edit && !m.cm.is_integral() ? kDistanceTolerance : 0.0;
    const double need = static_cast<double>(d) - tol;
    if (strand_distance(a, b, m) < need) return false;
    if (m.kind == Metric::Kind::edit && !m.cm.is_metric() && strand_distance(b, a, m) < need) return false;
    return true;
}

namespace detail {

inline std::string reversed(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

inline std::string reverse_complemented(std::string_view s) {
    std::string out(s.rbegin(), s.rend());
    for (char& c : out) c = watson_crick(c);
    return out;
}

inline std::function<std::string(std::string_view)> closure_map(Variant v) {
    switch (v) {
    case Variant::R: return reversed;
    case Variant::RC: return reverse_complemented;
    case Variant::plain: break;
    }
    return [](std::string_view s) { return std::string(s); };
}

struct MaxCodeResult {
    std::vector<std::string> words;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    bool exact = true;
    bool complete_graph = false;
    std::uint64_t nodes = 0;
};

/// Largest subset of `universe` (closed under `variant`) with pairwise
/// distance >= d. The universe must itself be closed under the variant map.
inline MaxCodeResult max_code(const std::vector<std::string>& universe, std::size_t d, const Metric& metric, Variant variant,
                              const BoundOptions& opt, const std::string& label) {
    const auto image = closure_map(variant);
    const std::set<std::string> pool(universe.begin(), universe.end());

    std::vector<std::vector<std::string>> orbits;
    std::set<std::string> seen;
    for (const auto& s : universe) {
        if (seen.contains(s)) continue;
        std::string t = image(s);
        if (!pool.contains(t)) throw std::logic_error("universe is not closed under " + to_string(variant));
        std::vector<std::string> orbit{s};
        if (t != s) orbit.push_back(t);
        for (const auto& x : orbit) seen.insert(x);
        if (orbit.size() == 2 && !far_enough(orbit[0], orbit[1], d, metric)) continue;
        orbits.push_back(std::move(orbit));
    }

    std::vector<std::uint64_t> weights;
    for (const auto& o : orbits) weights.push_back(o.size());
    Graph g(orbits.size(), weights);
    bool complete = true;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (std::size_t j = i + 1; j < orbits.size(); ++j) {
            bool ok = true;
            for (const auto& a : orbits[i]) {
                for (const auto& b : orbits[j])
                    if (!far_enough(a, b, d, metric)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) g.add_edge(i, j);
            else complete = false;
        }
    }

    MaxCodeResult r;
    r.complete_graph = complete;
    CliqueResult clique;
    if (universe.size() <= opt.budget || complete) {
        clique = max_weight_clique(g);
        r.upper = clique.weight;
    } else {
        if (!opt.allow_gap)
            throw budget_error(label + ": universe of " + std::to_string(universe.size()) + " strands exceeds the exact budget of " +
                               std::to_string(opt.budget));
        clique = greedy_clique(g);
        Bitset all(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) all.set(v);
        r.upper = std::min<std::uint64_t>(colouring_bound(g, all, degeneracy_order(g)), universe.size());
        r.exact = r.upper == clique.weight;
    }
    r.lower = clique.weight;
    r.nodes = clique.nodes;
    for (auto v : clique.vertices)
        for (const auto& s : orbits[v]) r.words.push_back(s);
    std::sort(r.words.begin(), r.words.end());
    return r;
}

}  // namespace detail

inline BoundRecord exact_max_code(const BoundKey& key, const BoundOptions& opt = {}) {
    key.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> universe;
    for (const auto& s : strand_universe(key.n, key.w)) universe.push_back(s.str());
    const auto r = detail::max_code(universe, key.d, key.metric, key.variant, opt, key.label());

    BoundRecord rec;
    rec.key = key;
    rec.lower = r.lower;
    rec.upper = r.upper;
    for (const auto& w : r.words) rec.witness.push_back(DnaStrand::parse(w));
    rec.status = r.exact ? BoundStatus::exact : BoundStatus::gap;
    if (r.complete_graph) rec.lower_method = rec.method = "trivial";
    else if (r.exact && universe.size() <= opt.budget) rec.lower_method = rec.method = "exhaustive-clique";
    else {
        rec.lower_method = "greedy";
        rec.method = "colouring-bound";
    }
    rec.search_nodes = r.nodes;
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

/// Maximum binary code of length n at distance d, over the alphabet {0,1}.
/// The edit metric here uses unit costs (other cost tables are defined over
/// nucleotides only).
inline std::uint64_t a2(std::size_t n, std::size_t d, const Metric& metric = Metric::hamming(), const BoundOptions& opt = {}) {
    if (n == 0 || d > n) throw usage_error("a2 needs n > 0 and 0 <= d <= n");
    if (n > 16) throw usage_error("a2 limited to n <= 16");
    if (metric.kind == Metric::Kind::edit && !metric.cm.is_unit())
        throw usage_error("a2 over the binary alphabet supports the unit edit model only");
    std::vector<std::string> universe;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if ((j >> (n - 1 - i)) & 1u) s[i] = '1';
        universe.push_back(s);
    }
    const auto r = detail::max_code(universe, d, metric, Variant::plain, opt,
                                    "a2(" + std::to_string(n) + "," + std::to_string(d) + ")");
    if (!r.exact) throw budget_error("a2 instance not solved exactly");
    return r.lower;
}

/// Independent check of a record's witness: lengths, GC weight, pairwise
/// distance and closure. Returns human-readable problems (empty when valid).
inline std::vector<std::string> verify_witness(const BoundRecord& rec) {
    std::vector<std::string> problems;
    const auto& k = rec.key;
    std::set<std::string> members;
    for (const auto& s : rec.witness) {
        if (s.size() != k.n) problems.push_back("length of " + s.str() + " is not " + std::to_string(k.n));
        if (k.w && gc_weight(s) != *k.w) problems.push_back("GC weight of " + s.str() + " is not " + std::to_string(*k.w));
        if (!members.insert(s.str()).second) problems.push_back("duplicate word " + s.str());
    }
    if (members.size() != rec.lower) problems.push_back("witness size differs from lower bound");
    const std::vector<std::string> words(members.begin(), members.end());
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i].size() != words[j].size()) continue;
            if (!far_enough(words[i], words[j], k.d, k.metric))
                problems.push_back(words[i] + " and " + words[j] + " are closer than " + std::to_string(k.d));
        }
    }
    for (const auto& s : rec.witness) {
        if (k.variant == Variant::R && !members.contains(reverse(s).str()))
            problems.push_back("reverse of " + s.str() + " missing");
        if (k.variant == Variant::RC && !members.contains(reverse_complement(s).str()))
            problems.push_back("reverse complement of " + s.str() + " missing");
    }
    return problems;
}

// ---------------------------------------------------------------------------
// Code transforms used in the relation proofs

/// Picks the position to drop from a strand, or nullopt when none is allowed.
using PuncturePolicy = std::function<std::optional<std::size_t>(const DnaStrand&)>;

/// Drops the last A/T symbol, keeping the GC weight.
inline std::optional<std::size_t> last_at_position(const DnaStrand& s) {
    for (std::size_t i = s.size(); i-- > 0;)
        if (!is_gc(s[i])) return i;
    return std::nullopt;
}

inline std::optional<std::size_t> first_at_position(const DnaStrand& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!is_gc(s[i])) return i;
    return std::nullopt;
}

/// Always drops position `pos`, refusing when that symbol is G or C.
inline PuncturePolicy fixed_position(std::size_t pos) {
    return [pos](const DnaStrand& s) -> std::optional<std::size_t> {
        if (pos >= s.size() || is_gc(s[pos])) return std::nullopt;
        return pos;
    };
}

struct PunctureResult {
    std::vector<DnaStrand> words;
    std::optional<std::size_t> blocked;  ///< index of a word with no allowed position
};

inline PunctureResult gc_preserving_puncture(const std::vector<DnaStrand>& code, const PuncturePolicy& policy = last_at_position) {
    PunctureResult r;
    for (std::size_t k = 0; k < code.size(); ++k) {
        const auto pos = policy(code[k]);
        if (!pos || *pos >= code[k].size() || is_gc(code[k][*pos])) {
            r.blocked = k;
            r.words.clear();
            return r;
        }
        std::string s = code[k].str();
        s.erase(*pos, 1);
        r.words.push_back(DnaStrand::parse(s));
    }
    return r;
}

struct FirstSymbolPartition {
    std::array<std::vector<DnaStrand>, 4> subsets;  ///< keyed A, C, G, T
    char largest = 'A';                             ///< first symbol of the largest subset (ties: earliest letter)
    std::vector<DnaStrand> shortened;               ///< largest subset with its common first symbol removed
};

inline FirstSymbolPartition partition_by_first_symbol(const std::vector<DnaStrand>& code) {
    if (code.empty()) throw usage_error("partition needs a non-empty code");
    FirstSymbolPartition p;
    for (const auto& s : code) {
        if (s.empty()) throw usage_error("partition needs words of positive length");
        p.subsets[static_cast<std::size_t>(cost_index(s[0]))].push_back(s);
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < 4; ++k)
        if (p.subsets[k].size() > p.subsets[best].size()) best = k;
    p.largest = kCostAlphabet[best];
    for (const auto& s : p.subsets[best]) p.shortened.push_back(DnaStrand::parse(s.view().substr(1)));
    return p;
}

/// Complements the first floor(n/2) symbols.
inline DnaStrand half_complement(const DnaStrand& s) {
    std::string out = s.str();
    for (std::size_t i = 0; i < out.size() / 2; ++i) out[i] = watson_crick(out[i]);
    return DnaStrand::parse(out);
}

inline std::vector<DnaStrand> half_complement_transform(const std::vector<DnaStrand>& code) {
    std::vector<DnaStrand> out;
    out.reserve(code.size());
    for (const auto& s : code) out.push_back(half_complement(s));
    return out;
}

// ---------------------------------------------------------------------------
// Relation checks

enum class Outcome { pass, fail, finding, skipped };

inline std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::finding: return "FINDING";
    case Outcome::skipped: return "SKIP";
    }
    return "?";
}

struct RelationCheck {
    std::string relation;  ///< e.g. "eq1", "eq6-left", "rc-even"
    std::string metric;
    std::string claim;     ///< instantiated statement
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    Outcome outcome = Outcome::pass;
    bool hypothesis = false;  ///< failures are reported as findings
    std::string note;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    std::vector<std::string> notes;

    std::size_t count(Outcome o, std::string_view relation = {}) const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const RelationCheck& c) {
            return c.outcome == o && (relation.empty() || c.relation == relation);
        }));
    }
};

struct RelationRange {
    std::size_t n_min = 1;
    std::size_t n_max = 4;
    std::vector<Metric> metrics{Metric::hamming(), Metric::edit()};
};

/// Memoising front end over exact_max_code.
class BoundsLab {
public:
    explicit BoundsLab(BoundOptions opt = {}) : opt_(opt) {}

    const BoundRecord& record(const BoundKey& key) {
        const auto id = std::make_tuple(key.n, key.d, key.w ? static_cast<long>(*key.w) : -1L, to_string(key.metric),
                                        static_cast<int>(key.variant));
        auto it = cache_.find(id);
        if (it == cache_.end()) it = cache_.emplace(id, exact_max_code(key, opt_)).first;
        return it->second;
    }

    std::uint64_t value(std::size_t n, std::size_t d, std::size_t w, const Metric& m, Variant v = Variant::plain) {
        return record(BoundKey{n, d, w, m, v}).value();
    }

    RelationReport check_relations(const RelationRange& range);

    std::size_t cached() const { return cache_.size(); }

private:
    BoundOptions opt_;
    std::map<std::tuple<std::size_t, std::size_t, long, std::string, int>, BoundRecord> cache_;
};

inline RelationReport BoundsLab::check_relations(const RelationRange& range) {
    RelationReport rep;
    rep.notes.push_back("eq1: GC weight 0 restricts strands to {A,T}, i.e. residues {1,3} under phi, not {0,1}; "
                        "the equality with binary codes holds for any two-letter alphabet");
    rep.notes.push_back("eq3, rc-even and rc-odd are hypotheses under test: disagreements are FINDINGs");

    auto str = [](std::size_t v) { return std::to_string(v); };
    auto A = [&](std::string_view sup, std::size_t n, std::size_t d, std::size_t w) {
        return std::string("A") + std::string(sup) + "(" + str(n) + "," + str(d) + "," + str(w) + ")";
    };

    for (const auto& m : range.metrics) {
        const std::string mname = to_string(m);
        auto add = [&](std::string rel, std::string claim, std::uint64_t lhs, std::uint64_t rhs, bool holds, bool hypothesis,
                       std::string note = {}) {
            RelationCheck c{std::move(rel), mname, std::move(claim), lhs, rhs, Outcome::pass, hypothesis, std::move(note)};
            if (!holds) c.outcome = hypothesis ? Outcome::finding : Outcome::fail;
            rep.checks.push_back(std::move(c));
        };
        auto V = [&](std::size_t n, std::size_t d, std::size_t w, Variant v = Variant::plain) { return value(n, d, w, m, v); };

        for (std::size_t n = range.n_min; n <= range.n_max; ++n) {
            for (std::size_t d = 0; d <= n; ++d) {
                // (1) binary codes
                if (m.kind == Metric::Kind::hamming || m.cm.is_unit()) {
                    const auto lhs = V(n, d, 0), rhs = a2(n, d, m, opt_);
                    add("eq1", A("GC", n, d, 0) + " = A2(" + str(n) + "," + str(d) + ")", lhs, rhs, lhs == rhs, false);
                }
                for (std::size_t w = 0; w <= n; ++w) {
                    // (2) GC / AT symmetry
                    {
                        const auto lhs = V(n, d, w), rhs = V(n, d, n - w);
                        add("eq2", A("GC", n, d, w) + " = " + A("GC", n, d, n - w), lhs, rhs, lhs == rhs, false);
                    }
                    // (3) balanced GC content
                    if (2 * w == n) {
                        const auto lhs = V(n, d, w);
                        add("eq3", A("GC", n, d, w) + " = 4", lhs, 4, lhs == 4, true);
                    }
                    // (4), (5): length n+1 against n
                    if (n + 1 <= range.n_max) {
                        const auto lhs4 = V(n, d, w), rhs4 = V(n + 1, d + 1, w);
                        add("eq4", A("GC", n, d, w) + " >= " + A("GC", n + 1, d + 1, w), lhs4, rhs4, lhs4 >= rhs4, false);
                        const auto rhs5 = V(n + 1, d, w);
                        add("eq5", A("GC", n, d, w) + " >= " + A("GC", n + 1, d, w) + "/4", lhs4, rhs5, 4 * lhs4 >= rhs5, false);
                    }
                    // (6), (7): reverse-closed codes
                    if (n >= 2 && n - 1 >= range.n_min && d <= n - 1 && w <= n - 1) {
                        const auto shorter = V(n - 1, d, w, Variant::R), longer = V(n, d, w, Variant::R);
                        add("eq6-left", A("GC,R", n - 1, d, w) + " <= " + A("GC,R", n, d, w), shorter, longer, shorter <= longer, false);
                        add("eq7", A("GC,R", n - 1, d, w) + " >= " + A("GC,R", n, d, w) + "/4", shorter, longer,
                            4 * shorter >= longer, false);
                    }
                    if (d >= 1) {
                        const auto lhs = V(n, d, w, Variant::R), rhs = V(n, d - 1, w, Variant::R);
                        add("eq6-right", A("GC,R", n, d, w) + " <= " + A("GC,R", n, d - 1, w), lhs, rhs, lhs <= rhs, false);
                    }
                    // RC versus R
                    const auto rc = V(n, d, w, Variant::RC);
                    if (n % 2 == 0) {
                        const auto r = V(n, d, w, Variant::R);
                        add("rc-even", A("GC,RC", n, d, w) + " = " + A("GC,R", n, d, w), rc, r, rc == r, true);
                    } else {
                        if (d + 1 <= n) {
                            const auto r = V(n, d + 1, w, Variant::R);
                            add("rc-odd-lower", A("GC,R", n, d + 1, w) + " <= " + A("GC,RC", n, d, w), r, rc, r <= rc, true);
                        }
                        if (d >= 1) {
                            const auto r = V(n, d - 1, w, Variant::R);
                            add("rc-odd-upper(d-1)", A("GC,RC", n, d, w) + " <= " + A("GC,R", n, d - 1, w), rc, r, rc <= r, true);
                        }
                        const auto r = V(n, d, w, Variant::R);
                        add("rc-odd-upper(d)", A("GC,RC", n, d, w) + " <= " + A("GC,R", n, d, w), rc, r, rc <= r, true);
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace dnalex

#endif  // DNALEX_BOUNDS_HPP

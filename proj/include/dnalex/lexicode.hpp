/**
 * @file lexicode.hpp
 * @brief Greedy lexicode construction over Z4^n.
 *
 * With an ordered basis b_1..b_n the list V_n is built as
 *
 *     V_0 = 0,  V_i = V_{i-1}, b_i + V_{i-1}, 2b_i + V_{i-1}, 3b_i + V_{i-1},
 *
 * so element j of V_n is sum_i u_i b_i where u_1 u_2 ... are the base-4 digits
 * of j, least significant first. Step i scans the block V_i \ V_{i-1} once
 * and takes the first vector a for which every u*a + c (c in the current
 * code) satisfies the selection property; the code then grows to
 * C, a + C, 2a + C, 3a + C.
 */

#ifndef DNALEX_LEXICODE_HPP
#define DNALEX_LEXICODE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "property.hpp"
#include "z4.hpp"

namespace dnalex {

// ---------------------------------------------------------------------------
// Basis

class OrderedBasis {
public:
    /// Throws unless the rows form an invertible n x n matrix over Z4.
    explicit OrderedBasis(std::vector<Z4Vector> rows) : rows_(std::move(rows)) {
        const std::size_t n = rows_.size();
        if (n == 0) throw usage_error("basis must contain at least one vector");
        for (const auto& r : rows_)
            if (r.size() != n) throw usage_error("basis of Z4^" + std::to_string(n) + " needs vectors of length " + std::to_string(n));
        if (!invertible(rows_)) throw usage_error("basis vectors do not generate Z4^" + std::to_string(n));
    }

    static OrderedBasis canonical(std::size_t n) {
        std::vector<Z4Vector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(Z4Vector::unit(n, i));
        return OrderedBasis(std::move(rows));
    }

    /// A matrix over Z4 is invertible iff its determinant is odd, i.e. iff
    /// its reduction mod 2 has full rank over GF(2).
    static bool invertible(const std::vector<Z4Vector>& rows) {
        const std::size_t n = rows.size();
        std::vector<std::vector<std::uint8_t>> m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) return false;
            for (std::size_t j = 0; j < n; ++j) m[i].push_back(rows[i][j] & 1u);
        }
        for (std::size_t col = 0, rank = 0; col < n; ++col) {
            std::size_t pivot = rank;
            while (pivot < n && !m[pivot][col]) ++pivot;
            if (pivot == n) return false;
            std::swap(m[pivot], m[rank]);
            for (std::size_t r = 0; r < n; ++r)
                if (r != rank && m[r][col])
                    for (std::size_t k = 0; k < n; ++k) m[r][k] ^= m[rank][k];
            ++rank;
        }
        return true;
    }

    std::size_t size() const noexcept { return rows_.size(); }
    const Z4Vector& operator[](std::size_t i) const { return rows_[i]; }
    const std::vector<Z4Vector>& rows() const noexcept { return rows_; }
    bool is_canonical() const { return *this == canonical(size()); }

    friend bool operator==(const OrderedBasis&, const OrderedBasis&) = default;

private:
    std::vector<Z4Vector> rows_;
};

namespace detail {

/// Writes element `index` of V_n into `out` (length n) without allocating.
inline void v_element_into(const OrderedBasis& basis, std::uint64_t index, Z4Vector& out) {
    const std::size_t n = basis.size();
    for (std::size_t k = 0; k < n; ++k) out.set(k, 0);
    for (std::size_t i = 0; i < n && index != 0; ++i, index >>= 2) {
        const int digit = static_cast<int>(index & 3u);
        if (!digit) continue;
        const Z4Vector& b = basis[i];
        for (std::size_t k = 0; k < n; ++k) out.set(k, (out[k] + digit * b[k]) & 3);
    }
}

}  // namespace detail

/// Element `index` of V_n (closed form).
inline Z4Vector v_element(const OrderedBasis& basis, std::uint64_t index) {
    Z4Vector x(basis.size());
    detail::v_element_into(basis, index, x);
    return x;
}

/// Calls f(index, vector) for every element of V_n in list order; stops early
/// when f returns false. Requires 4^n to fit in 64 bits.
template <class F>
void enumerate_V(const OrderedBasis& basis, F&& f) {
    if (basis.size() >= 32) throw usage_error("V_n enumeration supports n < 32");
    const std::uint64_t total = std::uint64_t{1} << (2 * basis.size());
    for (std::uint64_t j = 0; j < total; ++j)
        if (!f(j, v_element(basis, j))) return;
}

inline std::vector<Z4Vector> enumerate_V(const OrderedBasis& basis) {
    std::vector<Z4Vector> out;
    enumerate_V(basis, [&](std::uint64_t, Z4Vector x) {
        out.push_back(std::move(x));
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Codes

enum class CheckMode {
    as_written,  ///< step 2 tests P[2a + c] only
    full_check,  ///< step 2 tests P[u*a + c] for u = 1, 2, 3
};

inline std::string to_string(CheckMode m) { return m == CheckMode::as_written ? "as-written" : "full-check"; }

inline CheckMode parse_check_mode(std::string_view s) {
    if (s == "as-written") return CheckMode::as_written;
    if (s == "full-check") return CheckMode::full_check;
    throw usage_error("unknown check mode '" + std::string(s) + "' (expected as-written or full-check)");
}

struct Rejection {
    Z4Vector candidate;
    int multiplier;   ///< u in u*a + c
    Z4Vector offset;  ///< c
};

struct SelectionStep {
    std::size_t step = 0;  ///< i, 1-based
    std::uint64_t candidates_tested = 0;
    std::optional<Z4Vector> accepted;
    std::vector<Rejection> rejections;  ///< first few rejections, capped
    std::size_t code_size = 0;          ///< |C_i| after the step
};

struct LinearityWitness {
    Z4Vector x;
    Z4Vector y;
    Z4Vector missing;  ///< x + y, absent from the set
};

struct VerificationReport {
    std::size_t size = 0;
    bool contains_zero = false;
    bool linear = false;
    std::vector<LinearityWitness> linearity_witnesses;  ///< capped
    std::uint64_t property_checked = 0;
    std::vector<Z4Vector> property_violations;  ///< capped
    std::uint64_t property_violation_count = 0;
    std::optional<std::size_t> min_hamming_distance;
    std::optional<std::size_t> min_gc_weight;

    bool ok() const { return linear && property_violation_count == 0; }
};

struct LinearCode {
    std::size_t n = 0;
    std::vector<Z4Vector> generators;
    std::vector<Z4Vector> codewords;  ///< nested-construction order, duplicates dropped
    std::vector<SelectionStep> selection_log;
    CheckMode mode = CheckMode::full_check;
    std::optional<MultiplicativityReport> multiplicativity;
    std::optional<VerificationReport> verification;
};

struct GreedyCode {
    std::size_t n = 0;
    std::vector<Z4Vector> codewords;  ///< acceptance order
    std::uint64_t candidates_seen = 0;
};

namespace detail {

/// 2 bits per coordinate; valid for n <= 32.
inline std::uint64_t pack(const Z4Vector& x) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < x.size(); ++i) key |= std::uint64_t{x[i]} << (2 * i);
    return key;
}

class WordSet {
public:
    explicit WordSet(std::span<const Z4Vector> words) : packed_(!words.empty() && words.front().size() <= 32) {
        for (const auto& w : words) insert(w);
    }
    bool insert(const Z4Vector& x) { return packed_ ? small_.insert(pack(x)).second : large_.insert(x).second; }
    bool contains(const Z4Vector& x) const { return packed_ ? small_.contains(pack(x)) : large_.contains(x); }
    std::size_t size() const { return packed_ ? small_.size() : large_.size(); }

private:
    bool packed_;
    std::unordered_set<std::uint64_t> small_;
    std::unordered_set<Z4Vector> large_;
};

/// Appends u*a + c for u = 1..3 to the code, skipping words already present.
inline void extend_code(std::vector<Z4Vector>& code, const Z4Vector& a) {
    const std::size_t base = code.size();
    WordSet seen(code);
    for (int u = 1; u < 4; ++u) {
        const Z4Vector ua = scalar_mul(u, a);
        for (std::size_t k = 0; k < base; ++k) {
            Z4Vector w = add(ua, code[k]);
            if (seen.insert(w)) code.push_back(std::move(w));
        }
    }
}

}  // namespace detail

/// Generated subgroup of Z4^n, in the nested order of the generators.
inline std::vector<Z4Vector> span_of(std::size_t n, const std::vector<Z4Vector>& generators) {
    std::vector<Z4Vector> code{Z4Vector(n)};
    for (const auto& g : generators) {
        if (g.size() != n) throw usage_error("generator length mismatch");
        detail::extend_code(code, g);
    }
    return code;
}

inline constexpr std::size_t kDefaultWitnessCap = 8;

/**
 * Checks closure under addition (which for a finite set containing 0 also
 * gives closure under scalar multiples), the property on every nonzero
 * word, and reports the minimum Hamming distance and GC weight.
 */
inline VerificationReport verify_lexicode(const std::vector<Z4Vector>& codewords, const PropertySpec& property,
                                          std::size_t witness_cap = kDefaultWitnessCap) {
    VerificationReport rep;
    rep.size = codewords.size();
    if (codewords.empty()) return rep;
    const std::size_t n = codewords.front().size();
    for (const auto& w : codewords)
        if (w.size() != n) throw usage_error("code words must share one length");

    detail::WordSet set(codewords);
    rep.size = set.size();
    rep.contains_zero = set.contains(Z4Vector(n));
    rep.linear = rep.contains_zero;
    if (!rep.contains_zero)
        rep.linearity_witnesses.push_back({codewords.front(), scalar_mul(3, codewords.front()), Z4Vector(n)});
    for (std::size_t i = 0; i < codewords.size(); ++i) {
        for (std::size_t j = i; j < codewords.size(); ++j) {
            Z4Vector s = add(codewords[i], codewords[j]);
            if (!set.contains(s)) {
                rep.linear = false;
                if (rep.linearity_witnesses.size() < witness_cap)
                    rep.linearity_witnesses.push_back({codewords[i], codewords[j], std::move(s)});
            }
        }
    }

    const bool reads_code = property.reads_code();
    for (const auto& w : codewords) {
        if (w.is_zero()) continue;
        ++rep.property_checked;
        const bool holds = reads_code ? evaluate(property, w, codewords) : evaluate(property, w);
        if (!holds) {
            ++rep.property_violation_count;
            if (rep.property_violations.size() < witness_cap) rep.property_violations.push_back(w);
        }
    }

    for (const auto& w : codewords) {
        const std::size_t g = gc_weight(w);
        if (!rep.min_gc_weight || g < *rep.min_gc_weight) rep.min_gc_weight = g;
    }
    if (rep.linear) {
        for (const auto& w : codewords) {
            if (w.is_zero()) continue;
            const std::size_t h = hamming_weight(w);
            if (!rep.min_hamming_distance || h < *rep.min_hamming_distance) rep.min_hamming_distance = h;
        }
    } else {
        rep.min_hamming_distance = min_pairwise_hamming(codewords);
    }
    return rep;
}

struct BuildOptions {
    CheckMode mode = CheckMode::full_check;
    /// Build even if the multiplicativity check finds a counterexample.
    bool allow_non_multiplicative = false;
    std::size_t rejection_log_cap = 4;
    /// Sampling used by the multiplicativity pre-check when n exceeds the
    /// exhaustive limit.
    SamplingBudget multiplicativity_budget{};
    bool verify = true;
};

/// Greedy lexicode over the given ordered basis.
inline LinearCode build_lexicode(const OrderedBasis& basis, const PropertySpec& property, const BuildOptions& opt = {}) {
    const std::size_t n = basis.size();
    if (n >= 32) throw usage_error("lexicode construction supports n < 32");

    LinearCode code;
    code.n = n;
    code.mode = opt.mode;
    code.multiplicativity = is_multiplicative_empirical(property, n, opt.multiplicativity_budget);
    if (code.multiplicativity->status == MultiplicativityReport::Status::violated && !opt.allow_non_multiplicative)
        throw usage_error("property " + to_string(property) + " is not multiplicative: P[x] holds but P[3x] fails for x = " +
                          code.multiplicativity->counterexample->str());

    code.codewords.push_back(Z4Vector(n));
    const bool reads_code = property.reads_code();
    const std::vector<int> multipliers = opt.mode == CheckMode::full_check ? std::vector<int>{1, 2, 3} : std::vector<int>{2};

    Z4Vector a(n), ua(n), w(n);
    for (std::size_t i = 1; i <= n; ++i) {
        SelectionStep step;
        step.step = i;
        const std::uint64_t first = std::uint64_t{1} << (2 * (i - 1));
        const std::uint64_t last = std::uint64_t{1} << (2 * i);
        for (std::uint64_t j = first; j < last; ++j) {
            detail::v_element_into(basis, j, a);
            ++step.candidates_tested;
            bool ok = true;
            for (int u : multipliers) {
                for (std::size_t k = 0; k < n; ++k) ua.set(k, (u * a[k]) & 3);
                for (const auto& c : code.codewords) {
                    for (std::size_t k = 0; k < n; ++k) w.set(k, (ua[k] + c[k]) & 3);
                    const bool holds = reads_code ? evaluate(property, w, code.codewords) : evaluate(property, w);
                    if (!holds) {
                        if (step.rejections.size() < opt.rejection_log_cap) step.rejections.push_back({a, u, c});
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) {
                step.accepted = a;
                code.generators.push_back(a);
                detail::extend_code(code.codewords, a);
                break;
            }
        }
        step.code_size = code.codewords.size();
        code.selection_log.push_back(std::move(step));
    }

    if (opt.verify) code.verification = verify_lexicode(code.codewords, property);
    return code;
}

inline LinearCode build_lexicode(std::size_t n, const PropertySpec& property, const BuildOptions& opt = {}) {
    return build_lexicode(OrderedBasis::canonical(n), property, opt);
}

/// Pairwise acceptance test: (candidate, words accepted so far).
using GreedyAccept = std::function<bool(const Z4Vector&, std::span<const Z4Vector>)>;

/// Accepts each vector of `order` that passes `accept` against the words
/// already taken. `budget` caps the number of candidates examined.
inline GreedyCode build_greedy_code(std::span<const Z4Vector> order, const GreedyAccept& accept,
                                    std::optional<std::uint64_t> budget = std::nullopt) {
    GreedyCode g;
    if (!order.empty()) g.n = order.front().size();
    for (const auto& x : order) {
        if (budget && g.candidates_seen >= *budget) break;
        ++g.candidates_seen;
        if (accept(x, g.codewords)) g.codewords.push_back(x);
    }
    return g;
}

/// Acceptance test: Hamming distance at least d from every accepted word.
inline GreedyAccept min_hamming_accept(std::size_t d) {
    return [d](const Z4Vector& x, std::span<const Z4Vector> taken) {
        return std::all_of(taken.begin(), taken.end(), [&](const Z4Vector& y) { return hamming_distance(x, y) >= d; });
    };
}

/// Acceptance test: edit distance between images under phi at least d from
/// every accepted word (both directions for asymmetric models).
inline GreedyAccept min_edit_accept(double d, const CostModel& cm = CostModel::unit()) {
    return [d, cm](const Z4Vector& x, std::span<const Z4Vector> taken) {
        const DnaStrand s = phi(x);
        const double tol = cm.is_integral() ? 0.0 : kDistanceTolerance;
        for (const auto& y : taken) {
            const DnaStrand t = phi(y);
            double dist = edit_distance(s, t, cm);
            if (!cm.is_metric()) dist = std::min(dist, edit_distance(t, s, cm));
            if (dist < d - tol) return false;
        }
        return true;
    };
}

}  // namespace dnalex

#endif  // DNALEX_LEXICODE_HPP

/**
 * @file property.hpp
 * @brief Selection properties for greedy lexicode construction.
 *
 * A property is a boolean predicate on Z4 vectors. Most variants look at one
 * vector; MinEditToCode additionally reads a snapshot of the code built so
 * far, passed explicitly to evaluate().
 *
 * Text form (used on the command line), terms joined with '&':
 *
 *     true | false
 *     gc>=W               GC weight of phi(x) at least W
 *     hw>=D               Hamming weight of x at least D
 *     editref<=STRAND:M   edit distance from phi(x) to STRAND at most M
 *     editref>=STRAND:M   edit distance from phi(x) to STRAND at least M
 *     editcode>=D         edit distance from phi(x) to every other word of
 *                         the current code at least D
 */

#ifndef DNALEX_PROPERTY_HPP
#define DNALEX_PROPERTY_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edit_distance.hpp"
#include "z4.hpp"

namespace dnalex {

struct PropertySpec;

struct MinGC {
    std::size_t w;
};
struct MinHammingWeight {
    std::size_t d;
};
struct EditToRefAtMost {
    DnaStrand ref;
    double m;
    CostModel cm;
};
struct EditToRefAtLeast {
    DnaStrand ref;
    double m;
    CostModel cm;
};
struct MinEditToCode {
    double d;
    CostModel cm;
};
struct Constant {
    bool value;
};
/// Arbitrary predicate; not expressible in the text form.
struct Custom {
    std::string name;
    std::function<bool(const Z4Vector&)> fn;
};
struct And {
    std::vector<PropertySpec> terms;
};

struct PropertySpec {
    using Variant = std::variant<Constant, MinGC, MinHammingWeight, EditToRefAtMost, EditToRefAtLeast, MinEditToCode,
                                 Custom, And>;
    Variant v;

    PropertySpec() : v(Constant{true}) {}
    template <class T>
        requires std::is_constructible_v<Variant, T&&>
    PropertySpec(T&& alt) : v(std::forward<T>(alt)) {}  // NOLINT(google-explicit-constructor)

    /// Whether evaluation depends on the code snapshot.
    bool reads_code() const;
};

inline PropertySpec operator&(PropertySpec a, PropertySpec b) {
    And out;
    auto absorb = [&](PropertySpec&& p) {
        if (auto* inner = std::get_if<And>(&p.v))
            for (auto& t : inner->terms) out.terms.push_back(std::move(t));
        else
            out.terms.push_back(std::move(p));
    };
    absorb(std::move(a));
    absorb(std::move(b));
    return out;
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline double tolerance_for(const CostModel& cm) { return cm.is_integral() ? 0.0 : kDistanceTolerance; }

inline void require_ref_length(const DnaStrand& ref, const Z4Vector& x) {
    if (ref.size() != x.size())
        throw usage_error("reference strand length " + std::to_string(ref.size()) + " does not match vector length " +
                          std::to_string(x.size()));
}

}  // namespace detail

inline bool PropertySpec::reads_code() const {
    return std::visit(detail::overloaded{[](const MinEditToCode&) { return true; },
                                         [](const And& a) {
                                             for (const auto& t : a.terms)
                                                 if (t.reads_code()) return true;
                                             return false;
                                         },
                                         [](const auto&) { return false; }},
                      v);
}

/// Evaluates p on x. `code` is the current code snapshot for MinEditToCode.
inline bool evaluate(const PropertySpec& p, const Z4Vector& x, std::span<const Z4Vector> code = {}) {
    using namespace detail;
    return std::visit(
        overloaded{
            [](const Constant& c) { return c.value; },
            [&](const MinGC& g) {
                if (g.w > x.size()) throw usage_error("gc>=" + std::to_string(g.w) + " exceeds length " + std::to_string(x.size()));
                return gc_weight(x) >= g.w;
            },
            [&](const MinHammingWeight& h) {
                if (h.d > x.size()) throw usage_error("hw>=" + std::to_string(h.d) + " exceeds length " + std::to_string(x.size()));
                return hamming_weight(x) >= h.d;
            },
            [&](const EditToRefAtMost& e) {
                require_ref_length(e.ref, x);
                return edit_distance(phi(x), e.ref, e.cm) <= e.m + tolerance_for(e.cm);
            },
            [&](const EditToRefAtLeast& e) {
                require_ref_length(e.ref, x);
                return edit_distance(phi(x), e.ref, e.cm) >= e.m - tolerance_for(e.cm);
            },
            [&](const MinEditToCode& e) {
                const DnaStrand s = phi(x);
                const bool symmetric = e.cm.is_metric();
                for (const auto& c : code) {
                    if (c == x) continue;
                    const DnaStrand t = phi(c);
                    double d = edit_distance(s, t, e.cm);
                    if (!symmetric) d = std::min(d, edit_distance(t, s, e.cm));
                    if (d < e.d - tolerance_for(e.cm)) return false;
                }
                return true;
            },
            [&](const Custom& c) { return c.fn(x); },
            [&](const And& a) {
                for (const auto& t : a.terms)
                    if (!evaluate(t, x, code)) return false;
                return true;
            },
        },
        p.v);
}

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline std::string format_number(double v) {
    std::ostringstream out;
    out.precision(15);
    out << v;
    return out.str();
}

template <class Int>
Int parse_int(std::string_view text, std::string_view atom) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw usage_error("bad integer in property atom '" + std::string(atom) + "'");
    return value;
}

inline double parse_real(std::string_view text, std::string_view atom) {
    std::string s(text);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size() || s.empty() || !(v >= 0.0) || !std::isfinite(v))
        throw usage_error("bad distance in property atom '" + std::string(atom) + "'");
    return v;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline std::string to_string(const PropertySpec& p) {
    using namespace detail;
    return std::visit(overloaded{
                          [](const Constant& c) -> std::string { return c.value ? "true" : "false"; },
                          [](const MinGC& g) { return "gc>=" + std::to_string(g.w); },
                          [](const MinHammingWeight& h) { return "hw>=" + std::to_string(h.d); },
                          [](const EditToRefAtMost& e) { return "editref<=" + e.ref.str() + ":" + format_number(e.m); },
                          [](const EditToRefAtLeast& e) { return "editref>=" + e.ref.str() + ":" + format_number(e.m); },
                          [](const MinEditToCode& e) { return "editcode>=" + format_number(e.d); },
                          [](const Custom& c) { return "custom(" + c.name + ")"; },
                          [](const And& a) {
                              if (a.terms.empty()) return std::string("true");
                              std::string out;
                              for (std::size_t i = 0; i < a.terms.size(); ++i) out += (i ? "&" : "") + to_string(a.terms[i]);
                              return out;
                          },
                      },
                      p.v);
}

/// Parses the '&'-joined text form. Edit atoms use `cm` as their cost model.
inline PropertySpec parse_property(std::string_view text, const CostModel& cm = CostModel::unit()) {
    using namespace detail;
    std::vector<PropertySpec> terms;
    std::size_t start = 0;
    while (true) {
        const std::size_t amp = text.find('&', start);
        const std::string_view atom = trim(text.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start));
        if (atom.empty()) throw usage_error("empty term in property '" + std::string(text) + "'");

        auto ref_atom = [&](std::string_view rest) {
            const auto colon = rest.find(':');
            if (colon == std::string_view::npos) throw usage_error("expected STRAND:M in '" + std::string(atom) + "'");
            return std::pair{DnaStrand::parse(rest.substr(0, colon)), parse_real(rest.substr(colon + 1), atom)};
        };

        if (atom == "true") {
            terms.emplace_back(Constant{true});
        } else if (atom == "false") {
            terms.emplace_back(Constant{false});
        } else if (atom.starts_with("gc>=")) {
            terms.emplace_back(MinGC{parse_int<std::size_t>(atom.substr(4), atom)});
        } else if (atom.starts_with("hw>=")) {
            terms.emplace_back(MinHammingWeight{parse_int<std::size_t>(atom.substr(4), atom)});
        } else if (atom.starts_with("editref<=")) {
            auto [ref, m] = ref_atom(atom.substr(9));
            terms.emplace_back(EditToRefAtMost{ref, m, cm});
        } else if (atom.starts_with("editref>=")) {
            auto [ref, m] = ref_atom(atom.substr(9));
            terms.emplace_back(EditToRefAtLeast{ref, m, cm});
        } else if (atom.starts_with("editcode>=")) {
            terms.emplace_back(MinEditToCode{parse_real(atom.substr(10), atom), cm});
        } else {
            throw usage_error("unknown property atom '" + std::string(atom) + "'");
        }

        if (amp == std::string_view::npos) break;
        start = amp + 1;
    }
    if (terms.size() == 1) return std::move(terms.front());
    return And{std::move(terms)};
}

// ---------------------------------------------------------------------------
// Multiplicativity

/// Vectors of length n up to which the checker sweeps all of Z4^n.
inline constexpr std::size_t kExhaustiveMultiplicativityLength = 8;

struct SamplingBudget {
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
};

struct MultiplicativityReport {
    enum class Status { holds, violated, inconclusive };
    Status status = Status::inconclusive;
    std::optional<Z4Vector> counterexample;
    std::uint64_t tested = 0;
    bool exhaustive = false;
};

inline std::string to_string(MultiplicativityReport::Status s) {
    switch (s) {
    case MultiplicativityReport::Status::holds: return "holds";
    case MultiplicativityReport::Status::violated: return "violated";
    case MultiplicativityReport::Status::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Vector whose base-4 digits (least significant first) are those of `index`.
inline Z4Vector z4_from_index(std::uint64_t index, std::size_t n) {
    Z4Vector x(n);
    for (std::size_t i = 0; i < n; ++i, index >>= 2) x.set(i, static_cast<int>(index & 3u));
    return x;
}

/**
 * Checks P[x] => P[3x]. For n up to kExhaustiveMultiplicativityLength every
 * vector is tested and the answer is definitive. Longer vectors are sampled
 * when a budget is given; a clean sample is reported as inconclusive, never
 * as holds. The code snapshot for code-reading properties is empty.
 */
inline MultiplicativityReport is_multiplicative_empirical(const PropertySpec& p, std::size_t n,
                                                          std::optional<SamplingBudget> budget = std::nullopt) {
    MultiplicativityReport rep;
    auto test = [&](const Z4Vector& x) {
        ++rep.tested;
        if (evaluate(p, x) && !evaluate(p, scalar_mul(3, x))) {
            rep.status = MultiplicativityReport::Status::violated;
            rep.counterexample = x;
            return false;
        }
        return true;
    };

    if (n <= kExhaustiveMultiplicativityLength) {
        rep.exhaustive = true;
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        for (std::uint64_t j = 0; j < total; ++j)
            if (!test(z4_from_index(j, n))) return rep;
        rep.status = MultiplicativityReport::Status::holds;
        return rep;
    }
    if (!budget) return rep;
    std::mt19937_64 rng(budget->seed);
    std::uniform_int_distribution<int> digit(0, 3);
    for (std::size_t k = 0; k < budget->samples; ++k) {
        Z4Vector x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, digit(rng));
        if (!test(x)) return rep;
    }
    return rep;
}

}  // namespace dnalex

#endif  // DNALEX_PROPERTY_HPP

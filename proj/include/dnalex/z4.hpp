/**
 * @file z4.hpp
 * @brief Vectors over Z4, nucleotide strands, and the symbol map between them.
 *
 * Residues map to nucleotides as 0 -> G, 1 -> A, 2 -> C, 3 -> T. Under that
 * map the Watson-Crick complement (A<->T, G<->C) is the translation x -> x + 2.
 */

#ifndef DNALEX_Z4_HPP
#define DNALEX_Z4_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dnalex {

/// Raised for malformed input or incompatible operands.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Residue = std::uint8_t;

class Z4Vector {
public:
    Z4Vector() = default;
    explicit Z4Vector(std::size_t n) : coords_(n, 0) {}
    Z4Vector(std::initializer_list<int> values) {
        coords_.reserve(values.size());
        for (int v : values) coords_.push_back(checked(v));
    }
    explicit Z4Vector(std::span<const int> values) {
        coords_.reserve(values.size());
        for (int v : values) coords_.push_back(checked(v));
    }

    /// Parses a contiguous digit string such as "21111000".
    static Z4Vector parse(std::string_view digits) {
        Z4Vector x;
        x.coords_.reserve(digits.size());
        for (char ch : digits) {
            if (ch < '0' || ch > '3')
                throw usage_error("invalid Z4 digit '" + std::string(1, ch) + "' in \"" + std::string(digits) + "\"");
            x.coords_.push_back(static_cast<Residue>(ch - '0'));
        }
        return x;
    }

    static Z4Vector constant(std::size_t n, int value) {
        Z4Vector x(n);
        std::fill(x.coords_.begin(), x.coords_.end(), checked(value));
        return x;
    }

    /// Unit vector e_{index} (zero-based index).
    static Z4Vector unit(std::size_t n, std::size_t index, int value = 1) {
        Z4Vector x(n);
        x.set(index, value);
        return x;
    }

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }
    Residue operator[](std::size_t i) const { return coords_[i]; }
    void set(std::size_t i, int value) { coords_.at(i) = checked(value); }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }
    std::span<const Residue> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept {
        return std::all_of(coords_.begin(), coords_.end(), [](Residue r) { return r == 0; });
    }

    std::string str() const {
        std::string s(coords_.size(), '0');
        for (std::size_t i = 0; i < coords_.size(); ++i) s[i] = static_cast<char>('0' + coords_[i]);
        return s;
    }

    friend bool operator==(const Z4Vector&, const Z4Vector&) = default;
    friend auto operator<=>(const Z4Vector&, const Z4Vector&) = default;

private:
    static Residue checked(int v) {
        if (v < 0 || v > 3) throw usage_error("Z4 residue out of range: " + std::to_string(v));
        return static_cast<Residue>(v);
    }

    friend Z4Vector add(const Z4Vector&, const Z4Vector&);
    friend Z4Vector subtract(const Z4Vector&, const Z4Vector&);
    friend Z4Vector scalar_mul(int, const Z4Vector&);

    std::vector<Residue> coords_;
};

namespace detail {
inline void require_same_length(const Z4Vector& x, const Z4Vector& y) {
    if (x.size() != y.size())
        throw usage_error("length mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
}
}  // namespace detail

inline Z4Vector add(const Z4Vector& x, const Z4Vector& y) {
    detail::require_same_length(x, y);
    Z4Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z.coords_[i] = static_cast<Residue>((x[i] + y[i]) & 3u);
    return z;
}

inline Z4Vector subtract(const Z4Vector& x, const Z4Vector& y) {
    detail::require_same_length(x, y);
    Z4Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z.coords_[i] = static_cast<Residue>((x[i] + 4u - y[i]) & 3u);
    return z;
}

inline Z4Vector scalar_mul(int u, const Z4Vector& x) {
    const unsigned s = static_cast<unsigned>(((u % 4) + 4) % 4);
    Z4Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z.coords_[i] = static_cast<Residue>((s * x[i]) & 3u);
    return z;
}

/// n_r(x): number of coordinates equal to r.
inline std::size_t symbol_count(const Z4Vector& x, int r) {
    return static_cast<std::size_t>(std::count(x.begin(), x.end(), static_cast<Residue>(r)));
}

inline std::size_t hamming_weight(const Z4Vector& x) { return x.size() - symbol_count(x, 0); }

inline std::size_t hamming_distance(const Z4Vector& x, const Z4Vector& y) {
    detail::require_same_length(x, y);
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

/// Coordinates in {0,2}, i.e. the G/C positions of phi(x).
inline std::size_t gc_weight(const Z4Vector& x) { return symbol_count(x, 0) + symbol_count(x, 2); }

inline Z4Vector reverse(const Z4Vector& x) {
    Z4Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r.set(i, x[x.size() - 1 - i]);
    return r;
}

inline Residue complement(Residue r) { return static_cast<Residue>((r + 2u) & 3u); }

inline Z4Vector complement(const Z4Vector& x) {
    Z4Vector c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c.set(i, complement(x[i]));
    return c;
}

inline Z4Vector reverse_complement(const Z4Vector& x) { return reverse(complement(x)); }

// ---------------------------------------------------------------------------
// Nucleotides

/// Residue -> nucleotide letter.
inline constexpr std::array<char, 4> kResidueToBase{'G', 'A', 'C', 'T'};

/// Watson-Crick pairing on letters; -1 for anything outside {A,C,G,T}.
constexpr char watson_crick(char base) {
    switch (base) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'G': return 'C';
    case 'C': return 'G';
    default: return '\0';
    }
}

constexpr int base_to_residue(char base) {
    switch (base) {
    case 'G': return 0;
    case 'A': return 1;
    case 'C': return 2;
    case 'T': return 3;
    default: return -1;
    }
}

constexpr bool is_base(char ch) { return base_to_residue(ch) >= 0; }
constexpr bool is_gc(char ch) { return ch == 'G' || ch == 'C'; }

/// A 5'->3' oriented string over {A,C,G,T}.
class DnaStrand {
public:
    DnaStrand() = default;

    /// Accepts a bare letter string (read 5'->3') or one wrapped as
    /// "5'-...-3'" / "3'-...-5'"; the latter is reversed into 5'->3' order.
    static DnaStrand parse(std::string_view text) {
        bool flip = false;
        if (text.size() >= 6 && (text.starts_with("5'-") || text.starts_with("3'-"))) {
            const bool five_first = text[0] == '5';
            const std::string_view tail = five_first ? "-3'" : "-5'";
            if (!text.ends_with(tail)) throw usage_error("unbalanced strand orientation markers: " + std::string(text));
            text = text.substr(3, text.size() - 6);
            flip = !five_first;
        }
        DnaStrand s;
        s.bases_.reserve(text.size());
        for (char ch : text) {
            if (!is_base(ch))
                throw usage_error("invalid nucleotide '" + std::string(1, ch) + "' in \"" + std::string(text) + "\"");
            s.bases_.push_back(ch);
        }
        if (flip) std::reverse(s.bases_.begin(), s.bases_.end());
        return s;
    }

    std::size_t size() const noexcept { return bases_.size(); }
    bool empty() const noexcept { return bases_.empty(); }
    char operator[](std::size_t i) const { return bases_[i]; }
    const std::string& str() const noexcept { return bases_; }
    std::string_view view() const noexcept { return bases_; }

    friend bool operator==(const DnaStrand&, const DnaStrand&) = default;
    friend auto operator<=>(const DnaStrand&, const DnaStrand&) = default;

private:
    friend DnaStrand phi(const Z4Vector&);
    std::string bases_;
};

inline DnaStrand phi(const Z4Vector& x) {
    DnaStrand s;
    s.bases_.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s.bases_[i] = kResidueToBase[x[i]];
    return s;
}

inline Z4Vector phi_inv(const DnaStrand& s) {
    Z4Vector x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) x.set(i, base_to_residue(s[i]));
    return x;
}

inline std::size_t gc_weight(const DnaStrand& s) {
    return static_cast<std::size_t>(std::count_if(s.str().begin(), s.str().end(), is_gc));
}

inline DnaStrand reverse(const DnaStrand& s) { return phi(reverse(phi_inv(s))); }
inline DnaStrand complement(const DnaStrand& s) { return phi(complement(phi_inv(s))); }
inline DnaStrand reverse_complement(const DnaStrand& s) { return phi(reverse_complement(phi_inv(s))); }

/// True when the arithmetic complement agrees with Watson-Crick pairing on
/// every residue.
inline bool complement_matches_pairing() {
    for (int r = 0; r < 4; ++r) {
        if (kResidueToBase[complement(static_cast<Residue>(r))] != watson_crick(kResidueToBase[r])) return false;
    }
    return true;
}

struct Z4VectorHash {
    std::size_t operator()(const Z4Vector& x) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (Residue r : x) h = (h ^ r) * 1099511628211ull;
        return static_cast<std::size_t>(h ^ x.size());
    }
};

}  // namespace dnalex

template <>
struct std::hash<dnalex::Z4Vector> : dnalex::Z4VectorHash {};

#endif  // DNALEX_Z4_HPP

/**
 * @file clique.hpp
 * @brief Exact vertex-weighted maximum clique by branch and bound.
 *
 * Candidates are ordered by a degeneracy ordering and bounded with a greedy
 * colouring: a clique takes at most one vertex per colour class, so the sum
 * of the heaviest weight in each class bounds what the candidates can still
 * add. The search is single threaded and fully deterministic.
 */

#ifndef DNALEX_CLIQUE_HPP
#define DNALEX_CLIQUE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dnalex {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    std::size_t size() const noexcept { return n_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            for (std::uint64_t w = words_[k]; w; w &= w - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

class Graph {
public:
    explicit Graph(std::size_t n, std::vector<std::uint64_t> weights = {})
        : adj_(n, Bitset(n)), weights_(std::move(weights)) {
        if (weights_.empty()) weights_.assign(n, 1);
        if (weights_.size() != n) throw std::invalid_argument("weight count does not match vertex count");
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) return;
        adj_[u].set(v);
        adj_[v].set(u);
    }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const Bitset& neighbours(std::size_t v) const { return adj_[v]; }
    std::size_t size() const noexcept { return adj_.size(); }
    std::uint64_t weight(std::size_t v) const { return weights_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }

    bool is_clique(const std::vector<std::size_t>& vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!adjacent(vs[i], vs[j])) return false;
        return true;
    }
    std::uint64_t weight_of(const std::vector<std::size_t>& vs) const {
        std::uint64_t w = 0;
        for (auto v : vs) w += weight(v);
        return w;
    }

private:
    std::vector<Bitset> adj_;
    std::vector<std::uint64_t> weights_;
};

struct CliqueResult {
    std::vector<std::size_t> vertices;  ///< sorted ascending
    std::uint64_t weight = 0;
    std::uint64_t nodes = 0;  ///< search nodes expanded
};

/// Vertices ordered by repeatedly removing one of minimum remaining degree
/// (lowest index first); returned in reverse removal order.
inline std::vector<std::size_t> degeneracy_order(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        g.neighbours(best).for_each([&](std::size_t u) {
            if (!removed[u]) --deg[u];
        });
    }
    std::reverse(order.begin(), order.end());
    return order;
}

/// Upper bound on the heaviest clique inside `candidates` from a greedy
/// colouring taken in `order`.
inline std::uint64_t colouring_bound(const Graph& g, const Bitset& candidates, const std::vector<std::size_t>& order) {
    std::vector<std::vector<std::size_t>> classes;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> class_max;
    for (auto v : order) {
        if (!candidates.test(v)) continue;
        std::size_t k = 0;
        for (; k < classes.size(); ++k) {
            bool clash = false;
            for (auto u : classes[k])
                if (g.adjacent(u, v)) {
                    clash = true;
                    break;
                }
            if (!clash) break;
        }
        if (k == classes.size()) {
            classes.emplace_back();
            class_max.push_back(0);
        }
        classes[k].push_back(v);
        class_max[k] = std::max(class_max[k], g.weight(v));
    }
    for (auto w : class_max) bound += w;
    return bound;
}

namespace detail {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::vector<std::size_t> order) : g_(g), order_(std::move(order)) {}

    CliqueResult run(std::vector<std::size_t> seed) {
        best_ = std::move(seed);
        best_weight_ = g_.weight_of(best_);
        Bitset all(g_.size());
        for (std::size_t v = 0; v < g_.size(); ++v) all.set(v);
        std::vector<std::size_t> current;
        expand(current, 0, all);
        std::sort(best_.begin(), best_.end());
        return {best_, best_weight_, nodes_};
    }

private:
    // Colour the candidates in search order; returns them with cumulative
    // bounds so the tail can be pruned in one pass.
    void colour(const Bitset& cand, std::vector<std::size_t>& verts, std::vector<std::uint64_t>& bounds) const {
        std::vector<std::size_t> pending;
        for (auto v : order_)
            if (cand.test(v)) pending.push_back(v);
        std::uint64_t running = 0;
        while (!pending.empty()) {
            std::vector<std::size_t> cls, rest;
            std::uint64_t heaviest = 0;
            for (auto v : pending) {
                bool clash = false;
                for (auto u : cls)
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (clash) {
                    rest.push_back(v);
                } else {
                    cls.push_back(v);
                    heaviest = std::max(heaviest, g_.weight(v));
                }
            }
            running += heaviest;
            for (auto v : cls) {
                verts.push_back(v);
                bounds.push_back(running);
            }
            pending.swap(rest);
        }
    }

    void expand(std::vector<std::size_t>& current, std::uint64_t current_weight, Bitset cand) {
        ++nodes_;
        std::vector<std::size_t> verts;
        std::vector<std::uint64_t> bounds;
        colour(cand, verts, bounds);
        for (std::size_t k = verts.size(); k-- > 0;) {
            if (current_weight + bounds[k] <= best_weight_) return;
            const std::size_t v = verts[k];
            current.push_back(v);
            const std::uint64_t w = current_weight + g_.weight(v);
            Bitset next = cand & g_.neighbours(v);
            if (next.none()) {
                if (w > best_weight_) {
                    best_weight_ = w;
                    best_ = current;
                }
            } else {
                expand(current, w, std::move(next));
            }
            current.pop_back();
            cand.reset(v);
        }
    }

    const Graph& g_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> best_;
    std::uint64_t best_weight_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Greedy clique: repeatedly add the heaviest (then lowest-index) vertex
/// adjacent to everything chosen so far.
inline CliqueResult greedy_clique(const Graph& g) {
    Bitset cand(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) cand.set(v);
    CliqueResult r;
    while (!cand.none()) {
        std::size_t pick = g.size();
        cand.for_each([&](std::size_t v) {
            if (pick == g.size() || g.weight(v) > g.weight(pick) ||
                (g.weight(v) == g.weight(pick) && g.degree(v) > g.degree(pick)))
                pick = v;
        });
        r.vertices.push_back(pick);
        r.weight += g.weight(pick);
        cand &= g.neighbours(pick);
    }
    std::sort(r.vertices.begin(), r.vertices.end());
    return r;
}

/// Exact maximum-weight clique.
inline CliqueResult max_weight_clique(const Graph& g) {
    if (g.size() == 0) return {};
    detail::CliqueSearch search(g, degeneracy_order(g));
    return search.run(greedy_clique(g).vertices);
}

}  // namespace dnalex

#endif  // DNALEX_CLIQUE_HPP

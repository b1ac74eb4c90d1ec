#pragma once

// Weyl orbits: breadth-first enumeration, dominant representatives, and
// stabilizer orders from the parabolic rule (the stabilizer of a dominant
// weight is the Weyl group of the sub-diagram on its zero coordinates).

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "root_system.hpp"

namespace liechar {

struct Orbit {
    Weight dominant;
    std::vector<Weight> elements;          // BFS discovery order, deduplicated
    Integer stabilizer_order = 0;
    // word [i1,...,ik] maps the queried weight to the element via
    // gamma_{ik}( ... gamma_{i1}(w) ... ); BFS yields words of minimal length
    std::map<Weight, std::vector<int>> witness_words;

    std::size_t size() const { return elements.size(); }
};

// order of the Weyl group generated by the reflections {gamma_i : w_i = 0}
inline Integer stabilizer_order(const RootSystem& rs, const Weight& w) {
    if (!w.is_dominant()) throw NotDominant("stabilizer rule needs a dominant weight, got " + w.str());
    const int n = rs.rank();
    std::vector<int> zero_nodes;
    for (int i = 0; i < n; ++i)
        if (w[i] == 0) zero_nodes.push_back(i);

    std::set<int> left(zero_nodes.begin(), zero_nodes.end());
    Integer order = 1;
    while (!left.empty()) {
        // flood one connected component of the induced sub-diagram
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (auto it = left.begin(); it != left.end();) {
                if (rs.cartan[comp[k]][*it] != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        const int sz = static_cast<int>(comp.size());
        int max_bond = 0;   // a_ij * a_ji over component edges
        bool fork = false;  // some node with three neighbours inside the component
        for (int a : comp) {
            int deg = 0;
            for (int b : comp) {
                if (a == b || rs.cartan[a][b] == 0) continue;
                ++deg;
                max_bond = std::max(max_bond, rs.cartan[a][b] * rs.cartan[b][a]);
            }
            fork = fork || deg >= 3;
        }
        if (fork)
            order *= detail::factorial(sz) << (sz - 1);    // D-shaped component
        else if (max_bond == 3)
            order *= 12;                                   // G2 component
        else if (max_bond == 2)
            order *= detail::factorial(sz) << sz;          // B/C-shaped chain
        else
            order *= detail::factorial(sz + 1);            // A-chain (or isolated node)
    }
    return order;
}

inline Orbit orbit(const RootSystem& rs, const Weight& w) {
    Orbit o;
    std::deque<Weight> queue{w};
    o.elements.push_back(w);
    o.witness_words[w] = {};
    bool found_dominant = false;
    while (!queue.empty()) {
        const Weight cur = queue.front();
        queue.pop_front();
        if (!found_dominant && cur.is_dominant()) {
            o.dominant = cur;
            found_dominant = true;
        }
        for (int i = 1; i <= rs.rank(); ++i) {
            Weight next = simple_reflection(rs, i, cur);
            if (o.witness_words.count(next)) continue;
            auto word = o.witness_words.at(cur);
            word.push_back(i);
            o.elements.push_back(next);
            queue.push_back(next);
            o.witness_words.emplace(std::move(next), std::move(word));
        }
    }
    if (!found_dominant) throw Error("orbit without a dominant element");
    o.stabilizer_order = stabilizer_order(rs, o.dominant);
    if (o.stabilizer_order * Integer(o.elements.size()) != rs.weyl_order)
        throw Error("parabolic stabilizer order disagrees with the BFS orbit count for " + o.dominant.str());
    return o;
}

// repeatedly reflect at a negative coordinate; returns the dominant weight
// and the applied word (same convention as Orbit::witness_words)
inline std::pair<Weight, std::vector<int>> dominant_representative(const RootSystem& rs, Weight w) {
    std::vector<int> word;
    for (;;) {
        int neg = 0;
        for (int i = 0; i < rs.rank(); ++i)
            if (w[i] < 0) { neg = i + 1; break; }
        if (neg == 0) return {std::move(w), std::move(word)};
        w = simple_reflection(rs, neg, w);
        word.push_back(neg);
    }
}

} // namespace liechar

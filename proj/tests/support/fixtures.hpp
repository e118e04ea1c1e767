#pragma once

// Shared fixtures and test-only oracles. Nothing here goes through
// HypermapIndex: the oracles rebuild the permutations straight from the
// constructor trace, or from cycles written by hand.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"

namespace hmap::testing {

struct Link {
    Dim k;
    Dart x, y;
};

inline FreeMap build(std::size_t n_darts, const std::vector<Link>& links) {
    FreeMap m;
    for (Dart z = 1; z <= n_darts; ++z) m = std::move(m).inserted(z);
    for (const auto& l : links) m = std::move(m).linked(l.k, l.x, l.y);
    return m;
}

constexpr Dim D0 = Dim::zero;
constexpr Dim D1 = Dim::one;

/// 15 darts, 3 components, genus 1. Open chains:
///   zero: 4-3-5, 1-6-2-9, 11-12, 8-15, 10-14
///   one:  4-1-2-3, 5-9, 6-7-11, 8-14-10-15
inline FreeMap fix1() {
    return build(15, {{D0, 4, 3},  {D0, 3, 5},  {D0, 1, 6},   {D0, 6, 2},   {D0, 2, 9},   {D0, 11, 12},
                      {D0, 8, 15}, {D0, 10, 14}, {D1, 4, 1},  {D1, 1, 2},   {D1, 2, 3},   {D1, 5, 9},
                      {D1, 6, 7},  {D1, 7, 11},  {D1, 8, 14}, {D1, 14, 10}, {D1, 10, 15}});
}

/// Two darts joined by one zero-link.
inline FreeMap m2() { return build(2, {{D0, 1, 2}}); }

inline FreeMap digon_minus_last() { return build(4, {{D1, 2, 3}, {D1, 4, 1}, {D0, 1, 2}}); }
inline FreeMap digon() { return digon_minus_last().linked(D0, 3, 4); }

inline FreeMap k4t_minus_last() { return build(4, {{D1, 1, 2}, {D1, 2, 3}, {D1, 3, 4}, {D0, 1, 3}}); }
inline FreeMap k4t() { return k4t_minus_last().linked(D0, 2, 4); }

// ---------------------------------------------------------------------------
// Brute-force permutation model

using Perm = std::map<Dart, Dart>;

struct PermModel {
    std::set<Dart> darts;
    Perm alpha[2];
};

inline Perm inverse(const Perm& p) {
    Perm q;
    for (const auto& [a, b] : p) q[b] = a;
    return q;
}

/// Hypermap given by explicit cycles; darts not mentioned are fixed points.
inline PermModel model_from_cycles(const std::set<Dart>& darts, const std::vector<std::vector<Dart>>& cycles0,
                                   const std::vector<std::vector<Dart>>& cycles1) {
    PermModel pm;
    pm.darts = darts;
    for (int k = 0; k < 2; ++k)
        for (const Dart z : darts) pm.alpha[k][z] = z;
    const std::vector<std::vector<Dart>>* cs[2] = {&cycles0, &cycles1};
    for (int k = 0; k < 2; ++k)
        for (const auto& c : *cs[k])
            for (std::size_t i = 0; i < c.size(); ++i) pm.alpha[k][c[i]] = c[(i + 1) % c.size()];
    return pm;
}

/// Closes every open chain of the raw trace: last dart of a chain maps to
/// the first. Assumes a well-formed hypermap term.
inline PermModel model_from_trace(const FreeMap& m) {
    PermModel pm;
    Perm succ[2], pred[2];
    for (const auto& c : m.trace()) {
        if (c.kind == Constructor::Kind::insert) {
            pm.darts.insert(c.x);
        } else {
            succ[to_int(c.dim)][c.x] = c.y;
            pred[to_int(c.dim)][c.y] = c.x;
        }
    }
    for (int k = 0; k < 2; ++k) {
        for (const Dart z : pm.darts) {
            if (succ[k].count(z)) {
                pm.alpha[k][z] = succ[k][z];
                continue;
            }
            Dart b = z;
            while (pred[k].count(b)) b = pred[k][b];
            pm.alpha[k][z] = b;
        }
    }
    return pm;
}

/// phi = alpha1^-1 o alpha0^-1
inline Perm face_perm(const PermModel& pm) {
    const Perm i0 = inverse(pm.alpha[0]), i1 = inverse(pm.alpha[1]);
    Perm phi;
    for (const Dart z : pm.darts) phi[z] = i1.at(i0.at(z));
    return phi;
}

inline std::vector<std::set<Dart>> cycles_of(const Perm& p) {
    std::vector<std::set<Dart>> out;
    std::set<Dart> seen;
    for (const auto& [z, _] : p) {
        if (seen.count(z)) continue;
        std::set<Dart> c;
        for (Dart w = z; !c.count(w); w = p.at(w)) c.insert(w);
        seen.insert(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<std::set<Dart>> components_of(const PermModel& pm) {
    std::vector<std::set<Dart>> out;
    std::set<Dart> seen;
    const Perm i0 = inverse(pm.alpha[0]), i1 = inverse(pm.alpha[1]);
    for (const Dart z : pm.darts) {
        if (seen.count(z)) continue;
        std::set<Dart> comp{z};
        std::vector<Dart> stack{z};
        while (!stack.empty()) {
            const Dart w = stack.back();
            stack.pop_back();
            for (const Dart v : {pm.alpha[0].at(w), pm.alpha[1].at(w), i0.at(w), i1.at(w)})
                if (comp.insert(v).second) stack.push_back(v);
        }
        seen.insert(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

struct BruteStats {
    std::size_t nd, ne, nv, nf, nc;
    long long ec, genus_times_2;
};

inline BruteStats brute_stats(const PermModel& pm) {
    BruteStats s{};
    s.nd = pm.darts.size();
    s.ne = cycles_of(pm.alpha[0]).size();
    s.nv = cycles_of(pm.alpha[1]).size();
    s.nf = cycles_of(face_perm(pm)).size();
    s.nc = components_of(pm).size();
    s.ec = static_cast<long long>(s.nv + s.ne + s.nf) - static_cast<long long>(s.nd);
    s.genus_times_2 = 2 * static_cast<long long>(s.nc) - s.ec;
    return s;
}

inline std::set<Dart> cycle_containing(const Perm& p, Dart z) {
    std::set<Dart> c;
    for (Dart w = z; !c.count(w); w = p.at(w)) c.insert(w);
    return c;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// All sets of open chains on darts 1..n, as successor maps (0 = none).
inline std::vector<std::vector<Dart>> linear_forests(std::size_t n) {
    std::vector<std::vector<Dart>> out;
    std::vector<Dart> succ(n + 1, 0);
    std::vector<bool> has_pred(n + 1, false);
    auto acyclic = [&] {
        for (Dart z = 1; z <= n; ++z) {
            Dart w = z;
            for (std::size_t i = 0; i <= n && w != 0; ++i) w = succ[w];
            if (w != 0) return false;
        }
        return true;
    };
    std::function<void(Dart)> rec = [&](Dart z) {
        if (z > n) {
            if (acyclic()) out.push_back(succ);
            return;
        }
        succ[z] = 0;
        rec(z + 1);
        for (Dart y = 1; y <= n; ++y) {
            if (y == z || has_pred[y]) continue;
            succ[z] = y;
            has_pred[y] = true;
            rec(z + 1);
            has_pred[y] = false;
        }
        succ[z] = 0;
    };
    rec(1);
    return out;
}

/// Calls f on every hypermap with exactly n darts (1..n), one term per
/// pair of chain systems: darts first, then zero-links, then one-links,
/// each in increasing source order.
template <class F>
void for_each_hypermap(std::size_t n, F&& f) {
    const auto forests = linear_forests(n);
    FreeMap base;
    for (Dart z = 1; z <= n; ++z) base = std::move(base).inserted(z);
    for (const auto& s0 : forests) {
        FreeMap m0 = base;
        for (Dart z = 1; z <= n; ++z)
            if (s0[z]) m0 = std::move(m0).linked(Dim::zero, z, s0[z]);
        for (const auto& s1 : forests) {
            FreeMap m = m0;
            for (Dart z = 1; z <= n; ++z)
                if (s1[z]) m = std::move(m).linked(Dim::one, z, s1[z]);
            f(m);
        }
    }
}

}  // namespace hmap::testing

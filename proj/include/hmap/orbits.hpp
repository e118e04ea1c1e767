#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"

namespace hmap {

/// A cycle of some permutation, listed in successor order from its
/// representative.
struct Orbit {
    Dart representative = nil;
    std::vector<Dart> members;
    std::size_t period = 0;
};

/// Cycle of z under step. step must be a permutation of a finite set that
/// contains z; bound caps the walk so a non-permutation fails loudly.
template <class Step>
Orbit orbit_of(Step&& step, Dart z, std::size_t bound) {
    Orbit o{z, {}, 0};
    Dart w = z;
    do {
        if (o.members.size() > bound) throw std::logic_error("orbit walk did not return to its start");
        o.members.push_back(w);
        w = step(w);
    } while (w != z);
    o.period = o.members.size();
    return o;
}

/// Orbit of z in successor order. Throws PreconditionError for absent darts.
Orbit orbit(const HypermapIndex& m, OrbitKind kind, Dart z);
/// Same, evaluated with the term observers only.
Orbit orbit(const FreeMap& m, OrbitKind kind, Dart z);

/// Every orbit of the given kind, each starting at its minimum dart,
/// ordered by that minimum.
std::vector<Orbit> all_orbits(const HypermapIndex& m, OrbitKind kind);

/// Reachability of t from z under the selected permutation. False whenever
/// either dart is absent.
inline bool same_orbit(const HypermapIndex& m, OrbitKind kind, Dart z, Dart t) {
    return m.has_dart(z) && m.has_dart(t) && m.orbit_rep(kind, z) == m.orbit_rep(kind, t);
}
bool same_orbit(const FreeMap& m, OrbitKind kind, Dart z, Dart t);

inline bool same_face(const HypermapIndex& m, Dart z, Dart t) { return same_orbit(m, OrbitKind::face, z, t); }
inline bool same_edge(const HypermapIndex& m, Dart z, Dart t) { return same_orbit(m, OrbitKind::edge, z, t); }
inline bool same_face(const FreeMap& m, Dart z, Dart t) { return same_orbit(m, OrbitKind::face, z, t); }

inline bool same_component(const HypermapIndex& m, Dart z, Dart t) {
    return m.has_dart(z) && m.has_dart(t) && m.component_rep(z) == m.component_rep(t);
}

/// The component relation evaluated structurally over the term:
///   void:       nothing is related
///   insert x:   adds (x, x)
///   link x->y:  relates z, t when z~x and y~t, or z~y and x~t
/// Quadratic memory in the dart count; meant for moderate maps and as an
/// oracle for the index.
class ComponentRelation {
public:
    explicit ComponentRelation(const FreeMap& m);

    bool operator()(Dart z, Dart t) const;
    std::size_t classes() const;

private:
    std::uint32_t slot(Dart z) const;
    bool test(std::uint32_t a, std::uint32_t b) const { return (rows_[a][b / 64] >> (b % 64)) & 1u; }

    std::unordered_map<Dart, std::uint32_t> slot_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

inline bool same_component(const FreeMap& m, Dart z, Dart t) { return ComponentRelation(m)(z, t); }

}  // namespace hmap

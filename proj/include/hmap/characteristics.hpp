#pragma once

#include <string>
#include <vector>

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"

namespace hmap {

/// Counts by direct orbit enumeration. Throws PreconditionError when m is
/// not a hypermap.
MapStats counts(const FreeMap& m);
inline const MapStats& counts(const HypermapIndex& m) { return m.stats(); }

/// Counts by replaying the term and applying the per-constructor change
/// to each count:
///   insert:    every count +1
///   k-link:    ne (k = 0) or nv (k = 1) -1;
///              nc -1 unless x and y were already connected;
///              nf +1 when the link splits a face, -1 when it merges two.
/// A zero-link x->y splits iff closure_prev(one, x) shares a face with y;
/// a one-link splits iff x shares a face with closure_next(zero, y).
/// Independent of HypermapIndex.
MapStats counts_by_recurrence(const FreeMap& m);

inline std::int64_t euler_characteristic(const FreeMap& m) { return counts(m).ec; }
inline std::int64_t genus(const FreeMap& m) { return counts(m).genus; }
inline bool planar(const FreeMap& m) { return counts(m).planar; }

struct TheoremReport {
    bool pass = true;
    MapStats stats;
    std::vector<std::string> failures;
    std::string witness;  // serialized map, filled on failure

    explicit operator bool() const { return pass; }
};

/// ec even, genus >= 0 and 2 nc >= ec.
TheoremReport check_genus_theorem(const FreeMap& m);
/// For a planar map: ec / 2 == nc, and v + e + f - d == 2 when the map is
/// connected and non-empty. Throws PreconditionError for non-planar input.
TheoremReport check_euler_formula(const FreeMap& m);

}  // namespace hmap

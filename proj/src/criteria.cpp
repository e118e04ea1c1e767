#include "hmap/criteria.hpp"

#include <string>

#include "hmap/index.hpp"
#include "hmap/orbits.hpp"

namespace hmap {

namespace {

bool link_criterion(const HypermapIndex& m, Dim k, Dart x, Dart y) {
    if (!m.stats().planar) return false;
    if (!same_component(m, x, y)) return true;
    if (k == Dim::zero) return same_face(m, m.closure_prev(Dim::one, x), y);
    return same_face(m, x, m.closure_next(Dim::zero, y));
}

void require_successor(const FreeMap& m, Dim k, Dart x) {
    if (!has_next(m, k, x))
        throw PreconditionError("dart " + std::to_string(x) + " has no " + std::to_string(to_int(k)) +
                                "-successor");
}

}  // namespace

bool planar_after_link(const FreeMap& m, Dim k, Dart x, Dart y) { return planar_after_link(HypermapIndex(m), k, x, y); }

bool planar_after_link(const HypermapIndex& m, Dim k, Dart x, Dart y) {
    Conjunct why = Conjunct::none;
    if (!m.has_dart(x)) why = Conjunct::x_missing;
    else if (!m.has_dart(y)) why = Conjunct::y_missing;
    else if (m.has_next(k, x)) why = Conjunct::x_has_next;
    else if (m.has_prev(k, y)) why = Conjunct::y_has_prev;
    else if (m.closure_next(k, x) == y) why = Conjunct::closes_orbit;
    if (why != Conjunct::none) throw PreconditionError(std::string("link precondition: ") + describe(why));
    return link_criterion(m, k, x, y);
}

bool planar_before_break(const FreeMap& m, Dim k, Dart x) {
    if (!is_hypermap(m)) throw PreconditionError("not a hypermap");
    require_successor(m, k, x);
    const Dart y = next(m, k, x);
    return link_criterion(HypermapIndex(unlink_next(m, k, x)), k, x, y);
}

bool break_disconnects(const FreeMap& m, Dart x) {
    const HypermapIndex index(m);
    if (!index.stats().planar) throw PreconditionError("map is not planar");
    require_successor(m, Dim::zero, x);
    return same_face(index, index.next(Dim::zero, x), index.bottom(Dim::zero, x));
}

}  // namespace hmap

#pragma once

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"

namespace hmap {

/// Planarity of link(m, k, x, y) decided on m alone: m must be planar, and
/// the link must either join two components or run inside one face.
///
/// For k = zero the face test is same_face(closure_prev(one, x), y). For
/// k = one it is the mirror same_face(x, closure_next(zero, y)); both come
/// from writing the new face permutation as the old one composed with a
/// transposition of the two darts tested.
///
/// Requires is_hypermap(m) and can_link(m, k, x, y); throws
/// PreconditionError otherwise.
bool planar_after_link(const FreeMap& m, Dim k, Dart x, Dart y);
bool planar_after_link(const HypermapIndex& m, Dim k, Dart x, Dart y);

/// Planarity of m decided on m0 = unlink_next(m, k, x): the link criterion
/// applied to m0 and the broken link x -> next(k, x). Requires a k-successor.
bool planar_before_break(const FreeMap& m, Dim k, Dart x);

/// On a planar m, whether breaking the zero-link out of x disconnects it:
/// next(zero, x) and bottom(zero, x) share a face. Requires a planar
/// hypermap and a zero-successor.
bool break_disconnects(const FreeMap& m, Dart x);

}  // namespace hmap

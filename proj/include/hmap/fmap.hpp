#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmap {

/// Darts are plain naturals; 0 is reserved as the "no dart" value.
using Dart = std::uint64_t;
inline constexpr Dart nil = 0;

enum class Dim : std::uint8_t { zero = 0, one = 1 };

inline constexpr Dim other(Dim k) { return k == Dim::zero ? Dim::one : Dim::zero; }
inline constexpr int to_int(Dim k) { return static_cast<int>(k); }

/// Raised by checked operations whose precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One constructor of a free-map term: either the insertion of a dart or
/// a k-link from x to y.
struct Constructor {
    enum class Kind : std::uint8_t { insert, link };

    Kind kind = Kind::insert;
    Dim dim = Dim::zero;
    Dart x = nil;
    Dart y = nil;

    static constexpr Constructor insertion(Dart x) { return {Kind::insert, Dim::zero, x, nil}; }
    static constexpr Constructor linking(Dim k, Dart x, Dart y) { return {Kind::link, k, x, y}; }

    friend bool operator==(const Constructor&, const Constructor&) = default;
};

/// A free-map term: the empty map followed by a trace of insertions and
/// links, innermost constructor first. The trace is the whole state; two
/// maps are equal exactly when their terms are.
///
/// Any sequence of constructors is representable. Whether the term is a
/// well-formed hypermap (every insertion fresh, every link opening no
/// cycle) is decided separately by check_hypermap().
class FreeMap {
public:
    FreeMap() = default;
    explicit FreeMap(std::vector<Constructor> trace) : trace_(std::move(trace)) {}

    std::span<const Constructor> trace() const { return trace_; }
    std::size_t size() const { return trace_.size(); }
    bool is_void() const { return trace_.empty(); }

    /// Raw constructors; no precondition is checked.
    FreeMap inserted(Dart x) const&;
    FreeMap inserted(Dart x) &&;
    FreeMap linked(Dim k, Dart x, Dart y) const&;
    FreeMap linked(Dim k, Dart x, Dart y) &&;

    /// Darts in insertion order (duplicates kept for raw terms).
    std::vector<Dart> darts() const;

    friend bool operator==(const FreeMap&, const FreeMap&) = default;

private:
    std::vector<Constructor> trace_;
};

// Observers. These follow the recursive term semantics directly: every
// query walks the trace from the outermost constructor inwards. They are
// total: nil or an absent dart yields nil / false.

bool has_dart(const FreeMap& m, Dart z);
Dart next(const FreeMap& m, Dim k, Dart z);  // latest k-link out of z
Dart prev(const FreeMap& m, Dim k, Dart z);  // latest k-link into z
bool has_next(const FreeMap& m, Dim k, Dart z);
bool has_prev(const FreeMap& m, Dim k, Dart z);

/// End of z's open k-orbit (no successor). nil if z is absent, or if the
/// links around z form a cycle (only possible for ill-formed terms).
Dart top(const FreeMap& m, Dim k, Dart z);
/// Start of z's open k-orbit (no predecessor).
Dart bottom(const FreeMap& m, Dim k, Dart z);

/// Closure of next: wraps the top of an open orbit to its bottom.
Dart closure_next(const FreeMap& m, Dim k, Dart z);
Dart closure_prev(const FreeMap& m, Dim k, Dart z);

/// Open face step prev(one, prev(zero, z)), nil-propagating, and its inverse.
Dart face_next_open(const FreeMap& m, Dart z);
Dart face_prev_open(const FreeMap& m, Dart z);
/// Face permutation closure_prev(one, closure_prev(zero, z)) and its inverse.
Dart face_next(const FreeMap& m, Dart z);
Dart face_prev(const FreeMap& m, Dart z);

// Construction preconditions.

enum class Conjunct : std::uint8_t {
    none,
    dart_is_nil,
    dart_exists,
    x_missing,
    y_missing,
    x_has_next,
    y_has_prev,
    closes_orbit,
};

const char* describe(Conjunct c);

/// First failing conjunct of "x != nil and x not in m", or Conjunct::none.
Conjunct insert_violation(const FreeMap& m, Dart x);
/// First failing conjunct of "x, y in m, x has no k-successor, y has no
/// k-predecessor, closure_next(k, x) != y", or Conjunct::none.
Conjunct link_violation(const FreeMap& m, Dim k, Dart x, Dart y);

inline bool can_insert(const FreeMap& m, Dart x) { return insert_violation(m, x) == Conjunct::none; }
inline bool can_link(const FreeMap& m, Dim k, Dart x, Dart y) {
    return link_violation(m, k, x, y) == Conjunct::none;
}

struct HypermapVerdict {
    bool ok = true;
    std::size_t position = 0;  // index of the first offending constructor
    Conjunct failed = Conjunct::none;

    explicit operator bool() const { return ok; }
};

/// Checks every constructor of the trace against its precondition in the
/// prefix map it extends. Linear in the trace apart from orbit walks.
HypermapVerdict check_hypermap(const FreeMap& m);
inline bool is_hypermap(const FreeMap& m) { return check_hypermap(m).ok; }

/// Checked builders. The input must be a hypermap; throw PreconditionError
/// naming the failed conjunct otherwise.
FreeMap insert_dart(const FreeMap& m, Dart x);
FreeMap link(const FreeMap& m, Dim k, Dart x, Dart y);

// Destructors. Each removes the most recent matching constructor from the
// term and returns the map unchanged when there is none.

FreeMap unlink_next(const FreeMap& m, Dim k, Dart x);  // latest L(k, x, _)
FreeMap unlink_prev(const FreeMap& m, Dim k, Dart y);  // latest L(k, _, y)
FreeMap remove_dart(const FreeMap& m, Dart x);         // latest I(x)

/// Result of a checked destructor: the new map plus a warning when the
/// call had nothing to remove.
struct Edited {
    FreeMap map;
    std::optional<std::string> warning;
};

Edited checked_unlink_next(const FreeMap& m, Dim k, Dart x);
Edited checked_unlink_prev(const FreeMap& m, Dim k, Dart y);
/// Refuses (PreconditionError) to delete a dart that still carries a link.
Edited checked_remove_dart(const FreeMap& m, Dart x);

}  // namespace hmap

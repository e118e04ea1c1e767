#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"
#include "hmap/rings.hpp"

namespace hmap {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Map documents: a `hmap 1` header, then one constructor per line,
// innermost first:
//
//   i <dart>            insert
//   l <0|1> <x> <y>     link
//
// `#` starts a comment and blank lines are ignored. The empty map is the
// header alone. Hypermap validity is not checked here.

FreeMap parse_map(std::string_view text);
std::string serialize_map(const FreeMap& m);

// Ring documents: one `<dart> <t|f>` item per line, in break order.

RingList parse_ring(std::string_view text);
std::string serialize_ring(const RingList& l);

/// Graphviz rendering: one cluster per component, zero-links solid,
/// one-links dashed.
std::string to_dot(const HypermapIndex& m);

std::string format_stats(const MapStats& s);

}  // namespace hmap

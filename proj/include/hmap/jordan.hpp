#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hmap/fmap.hpp"
#include "hmap/index.hpp"
#include "hmap/rings.hpp"

namespace hmap {

/// A serialized (map, ring) pair that reproduces a result.
struct Witness {
    std::string map_text;
    std::string ring_text;
};

struct JordanOutcome {
    std::size_t nc_before = 0;
    std::size_t nc_after = 0;
    std::int64_t delta = 0;
    bool pass = false;  // delta == 1
    std::optional<Witness> witness;
};

/// Component count before and after breaking m along l. Requires a planar
/// hypermap and a valid ring; throws PreconditionError naming the failed
/// requirement.
JordanOutcome jordan_check(const FreeMap& m, std::span<const RingItem> l);

/// For a ring of two or more items on a planar map: the first item's
/// next(zero, x) and bottom(zero, x) lie in different faces, so breaking
/// that link leaves the map connected.
bool first_break_keeps_face_split(const HypermapIndex& m, std::span<const RingItem> l);

/// Unicity, continuity, circularity and simplicity of l's tail in the map
/// obtained by breaking l's first link.
RingDiagnostics tail_after_first_break(const FreeMap& m, std::span<const RingItem> l);

/// Seeded 64-bit Mersenne Twister with a bounded draw that gives the same
/// sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t operator()();
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Seed of the i-th independent stream derived from a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

struct GenOptions {
    // Relative weights of the three link moves.
    unsigned cross_component = 2;  // zero-link between two components
    unsigned inside_face = 3;      // zero-link inside one face
    unsigned dim_one = 2;          // one-link, either of the above
    /// Attempts per requested link before giving up on it.
    std::size_t attempts_per_link = 24;
};

/// Random planar hypermap on darts 1..n_darts with up to n_links links.
/// Every accepted link passes planar_after_link, so fewer links than
/// requested may be delivered. Throws PreconditionError if
/// n_links > 2 * n_darts.
FreeMap generate_planar(std::uint64_t seed, std::size_t n_darts, std::size_t n_links, const GenOptions& opt = {});

/// Random hypermap with no planarity constraint.
FreeMap generate_hypermap(std::uint64_t seed, std::size_t n_darts, std::size_t n_links);

/// Searches the face adjacency multigraph (faces as nodes, zero-links as
/// edges) for a simple cycle of at most max_len links using pairwise
/// distinct edges, and returns it as a ring that passes ring_check. The
/// seed only shuffles the search order.
std::optional<RingList> find_ring(const HypermapIndex& m, std::size_t max_len, std::uint64_t seed);
inline std::optional<RingList> find_ring(const FreeMap& m, std::size_t max_len, std::uint64_t seed) {
    return find_ring(HypermapIndex(m), max_len, seed);
}

struct FuzzConfig {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t size_bound = 32;  // maximum dart count per trial
    std::size_t max_ring = 8;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::optional<std::filesystem::path> witness_dir;
};

struct FuzzFailure {
    std::size_t trial = 0;
    std::string what;
    Witness witness;
};

struct FuzzReport {
    std::size_t trials = 0;
    std::size_t rings_found = 0;
    std::size_t multi_item_rings = 0;
    std::size_t jordan_failures = 0;
    std::size_t face_split_failures = 0;
    std::size_t tail_failures = 0;
    std::size_t errors = 0;  // exceptions, including unsound rings from the search
    std::vector<FuzzFailure> failures;  // in trial order

    bool clean() const { return jordan_failures + face_split_failures + tail_failures + errors == 0; }
};

/// Generates one planar map per trial, looks for a ring on it and, when one
/// is found, checks the component count after the break along with the two
/// induction lemmas. The (seed, trials, size_bound) triple fixes every trial
/// input independently of thread scheduling. Failing witnesses are written
/// to witness_dir when set.
FuzzReport fuzz_jordan(const FuzzConfig& cfg);

std::string format_report(const FuzzReport& r);

}  // namespace hmap

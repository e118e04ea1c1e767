#include "hmap/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "hmap/characteristics.hpp"
#include "hmap/io.hpp"
#include "hmap/jordan.hpp"
#include "hmap/orbits.hpp"
#include "hmap/rings.hpp"

namespace hmap {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path);
}

FreeMap load_map(const std::string& path) {
    try {
        return parse_map(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

RingList load_ring(const std::string& path) { return parse_ring(read_file(path)); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypermaps: cells, genus, rings of faces and breaks along them", "hmap"};
    app.require_subcommand(1);

    std::string map_path, ring_path, out_path, kind_name, witness_dir;
    Dart dart = nil;
    std::size_t darts = 0, links = 0, trials = 0, size = 32, max_ring = 8;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool unconstrained = false;

    // Each command sets the action run after parsing.
    std::function<int()> action;

    auto* check = app.add_subcommand("check", "Check the hypermap construction invariant");
    check->add_option("map", map_path, "Map file")->required();
    check->callback([&] {
        action = [&] {
            const auto v = check_hypermap(load_map(map_path));
            out << "inv_hmap=" << yes_no(v.ok) << '\n';
            if (!v.ok) out << "failed=constructor " << v.position << ": " << describe(v.failed) << '\n';
            return v.ok ? exit_ok : exit_false;
        };
    });

    auto* stats = app.add_subcommand("stats", "Print cell counts, Euler characteristic and genus");
    stats->add_option("map", map_path, "Map file")->required();
    stats->callback([&] {
        action = [&] {
            out << format_stats(counts(load_map(map_path)));
            return exit_ok;
        };
    });

    auto* orbit_cmd = app.add_subcommand("orbit", "List the orbit of a dart");
    orbit_cmd->add_option("map", map_path, "Map file")->required();
    orbit_cmd->add_option("--kind", kind_name, "edge, vertex or face")
        ->required()
        ->check(CLI::IsMember({"edge", "vertex", "face"}));
    orbit_cmd->add_option("--dart", dart, "Starting dart")->required();
    orbit_cmd->callback([&] {
        action = [&] {
            const OrbitKind kind = kind_name == "edge"     ? OrbitKind::edge
                                   : kind_name == "vertex" ? OrbitKind::vertex
                                                           : OrbitKind::face;
            const auto o = orbit(HypermapIndex(load_map(map_path)), kind, dart);
            out << "period=" << o.period << "\nmembers=";
            for (std::size_t i = 0; i < o.members.size(); ++i) out << (i ? " " : "") << o.members[i];
            out << '\n';
            return exit_ok;
        };
    });

    auto* planar_cmd = app.add_subcommand("planar", "Exit 0 when the map is planar, 1 otherwise");
    planar_cmd->add_option("map", map_path, "Map file")->required();
    planar_cmd->callback([&] {
        action = [&] {
            const bool p = counts(load_map(map_path)).planar;
            out << "planar=" << yes_no(p) << '\n';
            return p ? exit_ok : exit_false;
        };
    });

    auto* ring_cmd = app.add_subcommand("ring-check", "Check the four ring conditions");
    ring_cmd->add_option("map", map_path, "Map file")->required();
    ring_cmd->add_option("ring", ring_path, "Ring file")->required();
    ring_cmd->callback([&] {
        action = [&] {
            const FreeMap m = load_map(map_path);
            const auto d = ring_check(HypermapIndex(m), load_ring(ring_path));
            out << "nonempty=" << yes_no(d.nonempty) << '\n'
                << "unicity=" << yes_no(d.unicity) << '\n'
                << "continuity=" << yes_no(d.continuity) << '\n'
                << "circularity=" << yes_no(d.circularity) << '\n'
                << "simplicity=" << yes_no(d.simplicity) << '\n'
                << "valid=" << yes_no(d.valid()) << '\n';
            if (!d.valid()) out << "failure=" << d.message() << '\n';
            return d.valid() ? exit_ok : exit_false;
        };
    });

    auto* break_cmd = app.add_subcommand("break", "Break a map along a ring and write the result");
    break_cmd->add_option("map", map_path, "Map file")->required();
    break_cmd->add_option("ring", ring_path, "Ring file")->required();
    break_cmd->add_option("-o,--output", out_path, "Output map file")->required();
    break_cmd->callback([&] {
        action = [&] {
            const FreeMap m = load_map(map_path);
            if (const auto v = check_hypermap(m); !v)
                throw PreconditionError(std::string("not a hypermap: ") + describe(v.failed));
            write_file(out_path, serialize_map(break_along(m, load_ring(ring_path))));
            return exit_ok;
        };
    });

    auto* jordan_cmd = app.add_subcommand("jordan", "Compare component counts before and after a break");
    jordan_cmd->add_option("map", map_path, "Map file")->required();
    jordan_cmd->add_option("ring", ring_path, "Ring file")->required();
    jordan_cmd->callback([&] {
        action = [&] {
            const auto j = jordan_check(load_map(map_path), load_ring(ring_path));
            out << "nc_before=" << j.nc_before << " nc_after=" << j.nc_after
                << " verdict=" << (j.pass ? "pass" : "fail") << '\n';
            return j.pass ? exit_ok : exit_false;
        };
    });

    auto* gen = app.add_subcommand("gen", "Generate a random planar map");
    gen->add_option("--darts", darts, "Number of darts")->required();
    gen->add_option("--links", links, "Number of links to attempt")->required();
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("-o,--output", out_path, "Output map file")->required();
    gen->add_flag("--any", unconstrained, "Drop the planarity constraint");
    gen->callback([&] {
        action = [&] {
            const FreeMap m = unconstrained ? generate_hypermap(seed, darts, links) : generate_planar(seed, darts, links);
            write_file(out_path, serialize_map(m));
            return exit_ok;
        };
    });

    auto* fuzz = app.add_subcommand("fuzz", "Break random planar maps along discovered rings");
    fuzz->add_option("--trials", trials, "Number of trials")->required();
    fuzz->add_option("--seed", seed, "Base seed")->required();
    fuzz->add_option("--size", size, "Maximum darts per map")->capture_default_str();
    fuzz->add_option("--max-ring", max_ring, "Maximum ring length")->capture_default_str();
    fuzz->add_option("--threads", threads, "Worker threads (0 = all cores)");
    fuzz->add_option("--witness-dir", witness_dir, "Where failing witnesses are written");
    fuzz->callback([&] {
        action = [&] {
            FuzzConfig cfg;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.size_bound = size;
            cfg.max_ring = max_ring;
            cfg.threads = threads;
            if (!witness_dir.empty())
                cfg.witness_dir = witness_dir;
            else if (const char* env = std::getenv("HMAP_WITNESS_DIR"); env && *env)
                cfg.witness_dir = env;
            else
                cfg.witness_dir = "hmap-witnesses";
            const auto report = fuzz_jordan(cfg);
            out << format_report(report) << "witness_dir=" << cfg.witness_dir->string() << '\n';
            return report.clean() ? exit_ok : exit_false;
        };
    });

    auto* dot = app.add_subcommand("dot", "Export a map as Graphviz");
    dot->add_option("map", map_path, "Map file")->required();
    dot->add_option("-o,--output", out_path, "Output file (stdout when omitted)");
    dot->callback([&] {
        action = [&] {
            const auto text = to_dot(HypermapIndex(load_map(map_path)));
            if (out_path.empty())
                out << text;
            else
                write_file(out_path, text);
            return exit_ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "hmap: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "hmap: parse error: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        err << "hmap: precondition: " << e.what() << '\n';
    } catch (const IoError& e) {
        err << "hmap: " << e.what() << '\n';
    }
    return exit_usage;
}

}  // namespace hmap

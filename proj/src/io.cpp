#include "hmap/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace hmap {

namespace {

// Splits a line into whitespace-separated tokens, dropping any comment.
std::vector<std::string_view> tokens(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        f(lineno, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

Dart parse_dart(std::string_view tok, std::size_t lineno) {
    Dart v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(lineno, "expected a dart number, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

FreeMap parse_map(std::string_view text) {
    std::vector<Constructor> trace;
    bool header = false;
    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        const auto tok = tokens(line);
        if (tok.empty()) return;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "hmap") throw ParseError(lineno, "expected header 'hmap 1'");
            if (tok[1] != "1") throw ParseError(lineno, "unsupported format version '" + std::string(tok[1]) + "'");
            header = true;
            return;
        }
        if (tok[0] == "i") {
            if (tok.size() != 2) throw ParseError(lineno, "insert takes one dart: 'i <dart>'");
            trace.push_back(Constructor::insertion(parse_dart(tok[1], lineno)));
        } else if (tok[0] == "l") {
            if (tok.size() != 4) throw ParseError(lineno, "link takes a dimension and two darts: 'l <0|1> <x> <y>'");
            if (tok[1] != "0" && tok[1] != "1") throw ParseError(lineno, "dimension must be 0 or 1");
            const Dim k = tok[1] == "0" ? Dim::zero : Dim::one;
            trace.push_back(Constructor::linking(k, parse_dart(tok[2], lineno), parse_dart(tok[3], lineno)));
        } else {
            throw ParseError(lineno, "unknown constructor '" + std::string(tok[0]) + "'");
        }
    });
    if (!header) throw ParseError(1, "missing header 'hmap 1'");
    return FreeMap(std::move(trace));
}

std::string serialize_map(const FreeMap& m) {
    std::string out = "hmap 1\n";
    for (const auto& c : m.trace()) {
        if (c.kind == Constructor::Kind::insert)
            out += "i " + std::to_string(c.x) + '\n';
        else
            out += "l " + std::to_string(to_int(c.dim)) + ' ' + std::to_string(c.x) + ' ' + std::to_string(c.y) + '\n';
    }
    return out;
}

RingList parse_ring(std::string_view text) {
    RingList l;
    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        const auto tok = tokens(line);
        if (tok.empty()) return;
        if (tok.size() != 2) throw ParseError(lineno, "ring item must be '<dart> <t|f>'");
        if (tok[1] != "t" && tok[1] != "f") throw ParseError(lineno, "flag must be 't' or 'f'");
        l.push_back({parse_dart(tok[0], lineno), tok[1] == "t"});
    });
    return l;
}

std::string serialize_ring(const RingList& l) {
    std::string out;
    for (const auto& it : l) out += std::to_string(it.x) + (it.flag ? " t\n" : " f\n");
    return out;
}

std::string to_dot(const HypermapIndex& m) {
    std::map<Dart, std::vector<Dart>> components;
    for (const Dart z : m.darts()) components[m.component_rep(z)].push_back(z);

    std::ostringstream os;
    os << "digraph hmap {\n";
    for (const auto& [rep, members] : components) {
        os << "  subgraph cluster_" << rep << " {\n    label=\"component " << rep << "\";\n";
        for (const Dart z : members) os << "    d" << z << " [label=\"" << z << "\"];\n";
        os << "  }\n";
    }
    for (const Dart z : m.darts()) {
        if (const Dart y = m.next(Dim::zero, z); y != nil) os << "  d" << z << " -> d" << y << " [style=solid];\n";
        if (const Dart y = m.next(Dim::one, z); y != nil) os << "  d" << z << " -> d" << y << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

std::string format_stats(const MapStats& s) {
    std::ostringstream os;
    os << "nd=" << s.nd << '\n'
       << "ne=" << s.ne << '\n'
       << "nv=" << s.nv << '\n'
       << "nf=" << s.nf << '\n'
       << "nc=" << s.nc << '\n'
       << "ec=" << s.ec << '\n'
       << "genus=" << s.genus << '\n'
       << "planar=" << (s.planar ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace hmap

#pragma once

#include <istream>

#include "skein.hpp"

namespace snakecalc {

// Graph files: blocks of component lines separated by blank lines.
//   case: <free text>
//   snake: URU rel=+1 | ...      band: ... glue=S      edge-graph: 3
//   graft: s=2 [delta3=N|E]      self-graft: s=3 [delta3=N|E]
struct GraphRecord {
    int line = 0;  // first line of the block
    std::string name;
    std::vector<Component> parts;
    bool graft = false, self_graft = false;
    int at = 0;
    std::optional<Side> delta3;
};

inline void parse_graft_line(GraphRecord& r, const std::string& val, int no)
{
    std::istringstream is(val);
    std::string tok;
    while (is >> tok) {
        if (tok.rfind("s=", 0) == 0) {
            std::string v = tok.substr(2);
            if (v.empty() || v.size() > 4 || v.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(no, "bad position '" + v + "'");
            r.at = std::stoi(v);
        } else if (tok == "delta3=N" || tok == "delta3=E") {
            r.delta3 = tok.back() == 'N' ? N : E;
        } else {
            throw ParseError(no, "unexpected '" + tok + "' (want s=<n> delta3=N|E)");
        }
    }
    if (r.at < 1) throw ParseError(no, "grafting needs s=<position>");
}

inline std::vector<GraphRecord> parse_graph_file(std::istream& in)
{
    std::vector<GraphRecord> out;
    GraphRecord cur;
    bool open = false;
    auto flush = [&] {
        if (open) out.push_back(cur);
        cur = GraphRecord{};
        open = false;
    };
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            flush();
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(no, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
        if (!open) {
            open = true;
            cur.line = no;
        }
        if (key == "case") {
            cur.name = val;
        } else if (key == "graft" || key == "self-graft") {
            cur.graft = key == "graft";
            cur.self_graft = key == "self-graft";
            parse_graft_line(cur, val, no);
        } else {
            try {
                cur.parts.push_back(parse_component(line));
            } catch (const std::exception& e) {
                throw ParseError(no, e.what());
            }
        }
    }
    flush();
    for (const auto& r : out)
        if (r.parts.empty()) throw ParseError(r.line, "block has no graph");
    return out;
}

inline std::vector<GraphRecord> load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph_file(in);
}

inline const Snake& snake_part(const GraphRecord& r, std::size_t i)
{
    if (i >= r.parts.size()) throw std::invalid_argument("record at line " + std::to_string(r.line) + " has too few graphs");
    auto* g = std::get_if<Snake>(&r.parts[i]);
    if (!g) throw std::invalid_argument("record at line " + std::to_string(r.line) + ": expected a snake graph, got a band");
    return *g;
}

// All resolutions a record asks for: the grafting it names, or every
// crossing overlap of its one or two snake graphs.
struct RecordResolution {
    Resolution res;
    std::optional<Overlap> overlap;
};

inline std::vector<RecordResolution> record_resolutions(const GraphRecord& r, int seed = 1)
{
    std::vector<RecordResolution> out;
    if (r.graft) {
        if (r.parts.size() != 2) throw std::invalid_argument("graft needs two graphs");
        out.push_back({graft_pair(snake_part(r, 0), snake_part(r, 1), r.at, r.delta3), std::nullopt});
        return out;
    }
    if (r.self_graft) {
        if (r.parts.size() != 1) throw std::invalid_argument("self-graft needs one graph");
        out.push_back({self_graft(snake_part(r, 0), r.at, r.delta3), std::nullopt});
        return out;
    }
    if (r.parts.size() == 1) {
        const Snake& g = snake_part(r, 0);
        for (const auto& ov : find_self_overlaps(g))
            if (is_self_crossing(g, ov, seed)) out.push_back({resolve_self(g, ov), ov});
        return out;
    }
    if (r.parts.size() == 2) {
        const Snake &a = snake_part(r, 0), &b = snake_part(r, 1);
        for (const auto& ov : find_pair_overlaps(a, b))
            if (is_crossing_pair(a, b, ov, seed)) out.push_back({resolve_pair(a, b, ov), ov});
        return out;
    }
    throw std::invalid_argument("resolve needs one or two snake graphs");
}

inline std::string overlap_text(const Overlap& ov)
{
    std::string g2 = ov.self ? "G1" : "G2";
    return "G1[" + std::to_string(ov.s) + "," + std::to_string(ov.t) + "] " + g2 + "[" + std::to_string(ov.sp) + "," +
           std::to_string(ov.tp) + "] " + (ov.direction() == Direction::same ? "same" : "opposite");
}

inline std::string matching_text(const Matching& m)
{
    std::string s;
    for (const auto& e : m) s += (s.empty() ? "(" : " (") + std::to_string(e.tile) + "," + side_char(e.side) + ")";
    return s;
}

}  // namespace snakecalc

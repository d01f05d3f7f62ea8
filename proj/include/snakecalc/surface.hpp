#pragma once

#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "laurent.hpp"

namespace snakecalc {

// Sides are ints: arcs are positive, boundary segments get ids <= -100 and
// carry the label kBoundary.
struct Triangulation {
    std::vector<std::array<int, 3>> triangles;  // clockwise
    std::map<std::string, int> names;          // boundary names -> id
    std::map<int, std::string> boundary_name;

    bool is_boundary(int side) const { return side <= -100; }
    int label(int side) const { return is_boundary(side) ? kBoundary : side; }

    std::string name(int side) const
    {
        if (is_boundary(side)) return boundary_name.at(side);
        return std::to_string(side);
    }

    std::vector<int> arcs() const
    {
        std::set<int> a;
        for (const auto& t : triangles)
            for (int s : t)
                if (!is_boundary(s)) a.insert(s);
        return {a.begin(), a.end()};
    }

    std::vector<int> triangles_of(int side) const
    {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(triangles.size()); ++i)
            for (int s : triangles[i])
                if (s == side) out.push_back(i);
        return out;
    }

    bool contains(int tri, int side) const
    {
        const auto& t = triangles.at(tri);
        return std::find(t.begin(), t.end(), side) != t.end();
    }

    int position(int tri, int side) const
    {
        const auto& t = triangles.at(tri);
        for (int k = 0; k < 3; ++k)
            if (t[k] == side) return k;
        throw std::logic_error("side " + name(side) + " not in triangle " + std::to_string(tri + 1));
    }

    int next(int tri, int side) const { return triangles.at(tri)[(position(tri, side) + 1) % 3]; }
    int prev(int tri, int side) const { return triangles.at(tri)[(position(tri, side) + 2) % 3]; }

    int third(int tri, int a, int b) const
    {
        for (int s : triangles.at(tri))
            if (s != a && s != b) return s;
        throw std::logic_error("triangle has no third side");
    }

    // the triangle across arc `side` from `tri`
    int across(int tri, int side) const
    {
        if (is_boundary(side)) throw std::invalid_argument("cannot cross boundary segment " + name(side));
        auto ts = triangles_of(side);
        if (ts.size() != 2) throw std::logic_error("arc " + name(side) + " is not in two triangles");
        if (ts[0] == tri) return ts[1];
        if (ts[1] == tri) return ts[0];
        throw std::logic_error("arc " + name(side) + " is not a side of triangle " + std::to_string(tri + 1));
    }

    void validate() const
    {
        std::map<int, int> uses;
        for (const auto& t : triangles) {
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw std::invalid_argument("triangle with repeated sides");
            for (int s : t) ++uses[s];
        }
        for (auto [s, n] : uses) {
            if (is_boundary(s) && n != 1) throw std::invalid_argument("boundary segment " + name(s) + " must lie in one triangle");
            if (!is_boundary(s) && n != 2) throw std::invalid_argument("arc " + name(s) + " must lie in two triangles");
        }
    }

    // b_ij = sum over triangles of +1 when j follows i clockwise
    std::map<std::pair<int, int>, int> exchange_matrix() const
    {
        std::map<std::pair<int, int>, int> b;
        for (const auto& t : triangles)
            for (int k = 0; k < 3; ++k) {
                int i = t[k], j = t[(k + 1) % 3];
                if (is_boundary(i) || is_boundary(j)) continue;
                b[{i, j}] += 1;
                b[{j, i}] -= 1;
            }
        return b;
    }

    // marked points = orbits of triangle corners
    int vertex_count() const
    {
        const int n = static_cast<int>(triangles.size());
        std::vector<int> parent(3 * n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
        // corner k of triangle i sits between sides k and k+1
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < 3; ++k) {
                int b = triangles[i][(k + 1) % 3];
                if (is_boundary(b)) continue;
                int j = across(i, b);
                int c = 3 * j + position(j, b);
                parent[find(3 * i + k)] = find(c);
            }
        std::set<int> roots;
        for (int v = 0; v < 3 * n; ++v) roots.insert(find(v));
        return static_cast<int>(roots.size());
    }
};

// A generalized arc or a closed loop given by the arcs it crosses.
struct CurveSpec {
    bool loop = false;
    int rel = 1;
    std::vector<int> crossings;
    int start = -1;  // triangle index containing the start (base triangle for loops); -1 = infer
    int kinks = 0;
    bool contractible = false;
    std::string name;
};

// Triangles Delta_0..Delta_d met by the curve.
inline std::vector<int> triangle_walk(const Triangulation& T, const CurveSpec& c)
{
    const auto& seq = c.crossings;
    if (seq.empty()) throw std::invalid_argument("curve crosses no arc");
    auto attempt = [&](int d0) -> std::optional<std::vector<int>> {
        std::vector<int> w{d0};
        for (std::size_t j = 0; j < seq.size(); ++j) {
            if (!T.contains(w.back(), seq[j])) return std::nullopt;
            if (j > 0 && seq[j] == seq[j - 1]) return std::nullopt;
            w.push_back(T.across(w.back(), seq[j]));
        }
        if (c.loop && w.back() != w.front()) return std::nullopt;
        return w;
    };
    if (c.start >= 0) {
        if (auto w = attempt(c.start)) return *w;
        throw std::invalid_argument("crossing sequence is not consistent from the given start triangle");
    }
    for (int d0 : T.triangles_of(seq.front()))
        if (auto w = attempt(d0)) return *w;
    throw std::invalid_argument("inconsistent crossing sequence: consecutive arcs share no triangle");
}

inline Snake build_labeled_snake(const Triangulation& T, const CurveSpec& c, int src = 0)
{
    if (c.rel != 1 && c.rel != -1) throw std::invalid_argument("rel must be +1 or -1");
    auto walk = triangle_walk(T, c);
    const auto& seq = c.crossings;
    const int d = static_cast<int>(seq.size());
    Snake g;
    for (int j = 1; j <= d; ++j) {
        int tau = seq[j - 1], r = (j % 2 == 1) ? c.rel : -c.rel;
        int before = walk[j - 1], after = walk[j];
        Tile tile;
        tile.src = src;
        tile.orig = j;
        tile.rel = r;
        tile.label = T.label(tau);
        // diagonal NW-SE; clockwise orders (tau, S, W) below it and (tau, N, E)
        // above it when r = +1, mirrored when r = -1
        auto place = [&](int tri, bool upper) {
            int fol = T.next(tri, tau), pre = T.prev(tri, tau);
            Side f = upper ? (r > 0 ? N : E) : (r > 0 ? S : W);
            Side p = upper ? (r > 0 ? E : N) : (r > 0 ? W : S);
            tile.side_label[f] = T.label(fol);
            tile.side_label[p] = T.label(pre);
        };
        place(before, false);
        place(after, true);
        if (j < d) {
            int e = T.third(after, tau, seq[j]);
            bool follows = T.next(after, tau) == e;
            g.steps.push_back(((r > 0) == follows) ? Dir::north : Dir::east);
        }
        g.tiles.push_back(tile);
    }
    // glued edges must carry the same label
    for (int i = 1; i < d; ++i) {
        Dir st = g.steps[i - 1];
        if (g.tile(i).side_label[out_side(st)] != g.tile(i + 1).side_label[in_side(st)])
            throw std::logic_error("labeled snake: glued edges disagree at e_" + std::to_string(i));
    }
    return g;
}

inline Band build_labeled_band(const Triangulation& T, const CurveSpec& c, int src = 0)
{
    if (!c.loop) throw std::invalid_argument("band graphs come from loops");
    if (c.contractible) throw std::invalid_argument("contractible loops have no band graph");
    Snake g = build_labeled_snake(T, c, src);
    auto walk = triangle_walk(T, c);
    int base = walk.front();
    int a = T.third(base, c.crossings.front(), c.crossings.back());
    int la = T.label(a);
    std::optional<Side> first, last;
    for (Side sd : {S, W})
        if (g.tile(1).label_at(sd) == la) first = sd;
    for (Side sd : {N, E})
        if (g.tile(g.d()).label_at(sd) == la) last = sd;
    if (!first || !last) throw std::logic_error("loop: edge a is not on the SW of the first and the NE of the last tile");
    Band b{g, *first, *last};
    check_band(b);
    return b;
}

// a generalized arc in T itself is its single edge
inline Snake arc_graph(const Triangulation& T, int arc) { return edge_graph(T.label(arc)); }

inline Laurent cluster_variable(const Triangulation& T, const CurveSpec& c)
{
    if (c.loop) throw std::invalid_argument("cluster_variable needs an arc");
    Laurent v = laurent_of(build_labeled_snake(T, c));
    return (c.kinks % 2) ? -v : v;
}

inline Laurent loop_laurent(const Triangulation& T, const CurveSpec& c)
{
    if (c.contractible) return (c.kinks % 2) ? Laurent(2) : Laurent(-2);
    Laurent v = laurent_of(build_labeled_band(T, c));
    return (c.kinks % 2) ? -v : v;
}

inline Laurent curve_laurent(const Triangulation& T, const CurveSpec& c)
{
    return c.loop ? loop_laurent(T, c) : cluster_variable(T, c);
}

// x_k x_k' = y_k prod x_i^[b_ik]+ + prod x_i^[-b_ik]+
inline Laurent exchange_rhs(const Triangulation& T, int k)
{
    auto b = T.exchange_matrix();
    Laurent plus = Laurent::y(k), minus = 1;
    for (int i : T.arcs()) {
        auto it = b.find({i, k});
        int v = it == b.end() ? 0 : it->second;
        if (v > 0) plus *= Laurent::x(i, v);
        if (v < 0) minus *= Laurent::x(i, -v);
    }
    return plus + minus;
}

// ---- text input --------------------------------------------------------------------

struct SurfaceFile {
    Triangulation T;
    std::vector<CurveSpec> curves;
    std::vector<std::pair<std::string, std::string>> directives;  // other `key: value` lines
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int l, const std::string& m) : std::runtime_error("line " + std::to_string(l) + ": " + m), line(l) {}
};

inline std::string trim(const std::string& s)
{
    auto a = s.find_first_not_of(" \t\r");
    auto z = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
}

inline SurfaceFile parse_surface(std::istream& in)
{
    SurfaceFile f;
    std::vector<std::pair<int, std::string>> tri_lines;
    std::vector<std::pair<int, std::string>> curve_lines;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(no, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
        if (key == "boundary") {
            std::istringstream is(val);
            std::string tok;
            while (is >> tok) {
                if (f.T.names.count(tok)) throw ParseError(no, "boundary segment '" + tok + "' listed twice");
                int id = -100 - static_cast<int>(f.T.names.size());
                f.T.names[tok] = id;
                f.T.boundary_name[id] = tok;
            }
        } else if (key == "triangle") {
            tri_lines.push_back({no, val});
        } else if (key == "arc" || key == "loop") {
            curve_lines.push_back({no, key + " " + val});
        } else {
            f.directives.push_back({key, val});
        }
    }
    auto side_id = [&](int ln, const std::string& tok) {
        if (auto it = f.T.names.find(tok); it != f.T.names.end()) return it->second;
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok == "0")
            throw ParseError(ln, "'" + tok + "' is neither a positive arc id nor a declared boundary segment");
        return std::stoi(tok);
    };
    for (const auto& [ln, val] : tri_lines) {
        std::istringstream is(val);
        std::vector<std::string> toks{std::istream_iterator<std::string>(is), {}};
        if (toks.size() != 3) throw ParseError(ln, "a triangle has three sides");
        f.T.triangles.push_back({side_id(ln, toks[0]), side_id(ln, toks[1]), side_id(ln, toks[2])});
    }
    try {
        f.T.validate();
    } catch (const std::exception& e) {
        throw ParseError(tri_lines.empty() ? no : tri_lines.back().first, e.what());
    }
    for (const auto& [ln, val] : curve_lines) {
        std::istringstream is(val);
        std::string kind, tok;
        is >> kind;
        CurveSpec c;
        c.loop = kind == "loop";
        while (is >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) {
                if (tok == "contractible") {
                    c.contractible = true;
                    continue;
                }
                int id = side_id(ln, tok);
                if (f.T.is_boundary(id)) throw ParseError(ln, "curves cannot cross boundary segments");
                c.crossings.push_back(id);
                continue;
            }
            std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
            try {
                if (k == "rel") c.rel = std::stoi(v);
                else if (k == "start" || k == "base") c.start = std::stoi(v) - 1;
                else if (k == "kinks") c.kinks = std::stoi(v);
                else if (k == "name") c.name = v;
                else throw ParseError(ln, "unknown option '" + k + "'");
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError(ln, "bad value for '" + k + "'");
            }
        }
        if (c.rel != 1 && c.rel != -1) throw ParseError(ln, "rel must be +1 or -1");
        if (c.start >= static_cast<int>(f.T.triangles.size())) throw ParseError(ln, "no such triangle");
        if (!c.contractible) {
            try {
                if (c.crossings.empty()) throw std::invalid_argument("curve crosses no arc");
                if (c.loop) build_labeled_band(f.T, c);
                else build_labeled_snake(f.T, c);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(ln, e.what());
            }
        }
        f.curves.push_back(c);
    }
    return f;
}

inline SurfaceFile load_surface(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_surface(in);
}

}  // namespace snakecalc

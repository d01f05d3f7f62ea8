#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "core.hpp"

namespace snakecalc {

struct HostEdge {
    int u = 0, v = 0;
    EdgeRef ref;
};

// Explicit graph of a snake or band. Vertex coordinates are kept for snakes
// (they are planar); bands lose them after identification.
struct Host {
    int nv = 0;
    std::vector<HostEdge> edges;  // sorted by ref
    std::vector<std::pair<int, int>> coord;

    int index_of(EdgeRef r) const
    {
        auto it = std::lower_bound(edges.begin(), edges.end(), r,
                                   [](const HostEdge& e, const EdgeRef& x) { return e.ref < x; });
        if (it == edges.end() || it->ref != r) return -1;
        return static_cast<int>(it - edges.begin());
    }
};

using Matching = std::vector<EdgeRef>;  // sorted

inline std::array<std::pair<int, int>, 2> side_segment(int x, int y, Side s)
{
    switch (s) {
        case N: return {{{x, y + 1}, {x + 1, y + 1}}};
        case E: return {{{x + 1, y}, {x + 1, y + 1}}};
        case S: return {{{x, y}, {x + 1, y}}};
        default: return {{{x, y}, {x, y + 1}}};
    }
}

inline Host materialize(const Snake& g)
{
    Host h;
    if (g.edge_only) {
        h.nv = 2;
        h.edges.push_back({0, 1, {0, N}});
        h.coord = {{0, 0}, {1, 0}};
        return h;
    }
    std::map<std::pair<int, int>, int> vid;
    auto vertex = [&](std::pair<int, int> p) {
        auto [it, fresh] = vid.emplace(p, h.nv);
        if (fresh) {
            ++h.nv;
            h.coord.push_back(p);
        }
        return it->second;
    };
    auto pos = tile_positions(g);
    std::set<EdgeRef> seen;
    for (int i = 1; i <= g.d(); ++i) {
        auto [x, y] = pos[i - 1];
        for (Side s : {S, W, E, N}) {
            EdgeRef r = canonical(g, {i, s});
            auto seg = side_segment(x, y, s);
            int a = vertex(seg[0]), b = vertex(seg[1]);
            if (seen.insert(r).second) h.edges.push_back({a, b, r});
        }
    }
    std::sort(h.edges.begin(), h.edges.end(), [](const HostEdge& p, const HostEdge& q) { return p.ref < q.ref; });
    return h;
}

// Band graph as a plain graph: x ~ x', y ~ y', and the edge `last` merged into `first`.
inline Host materialize(const Band& b)
{
    Host s = materialize(b.base);
    auto pos = tile_positions(b.base);
    std::map<std::pair<int, int>, int> vid;
    for (int i = 0; i < s.nv; ++i) vid[s.coord[i]] = i;
    auto p1 = pos.front(), pd = pos.back();
    auto seg_b = side_segment(p1.first, p1.second, b.first);
    auto seg_bp = side_segment(pd.first, pd.second, b.last);
    std::pair<int, int> x = {p1.first, p1.second};
    std::pair<int, int> y = (seg_b[0] == x) ? seg_b[1] : seg_b[0];
    std::pair<int, int> yp = {pd.first + 1, pd.second + 1};
    std::pair<int, int> xp = (seg_bp[0] == yp) ? seg_bp[1] : seg_bp[0];

    std::vector<int> parent(s.nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    auto unite = [&](int a, int c) {
        a = find(a);
        c = find(c);
        if (a != c) parent[std::max(a, c)] = std::min(a, c);
    };
    unite(vid.at(xp), vid.at(x));
    unite(vid.at(yp), vid.at(y));

    std::map<int, int> renum;
    for (int v = 0; v < s.nv; ++v) renum.emplace(find(v), static_cast<int>(renum.size()));
    Host h;
    h.nv = static_cast<int>(renum.size());
    EdgeRef drop{b.d(), b.last};
    for (const auto& e : s.edges) {
        if (e.ref == drop) continue;
        h.edges.push_back({renum.at(find(e.u)), renum.at(find(e.v)), e.ref});
    }
    return h;
}

// Perfect matchings by a sweep that always covers the lowest uncovered
// vertex; vertices are numbered in tile order, so the frontier moves left to right.
inline std::vector<Matching> perfect_matchings(const Host& h)
{
    std::vector<std::vector<int>> inc(h.nv);
    for (int i = 0; i < static_cast<int>(h.edges.size()); ++i) {
        const auto& e = h.edges[i];
        if (e.u == e.v) continue;
        inc[e.u].push_back(i);
        inc[e.v].push_back(i);
    }
    std::vector<Matching> out;
    std::vector<char> covered(h.nv, 0);
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
        int v = from;
        while (v < h.nv && covered[v]) ++v;
        if (v == h.nv) {
            Matching m;
            for (int i : chosen) m.push_back(h.edges[i].ref);
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        for (int i : inc[v]) {
            int w = h.edges[i].u == v ? h.edges[i].v : h.edges[i].u;
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            chosen.push_back(i);
            rec(v + 1);
            chosen.pop_back();
            covered[v] = covered[w] = 0;
        }
    };
    if (h.nv % 2 == 0) rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Matching> enumerate_matchings(const Snake& g) { return perfect_matchings(materialize(g)); }

inline bool is_perfect(const Host& h, const Matching& m)
{
    std::vector<int> deg(h.nv, 0);
    for (const auto& r : m) {
        int i = h.index_of(r);
        if (i < 0) return false;
        const auto& e = h.edges[i];
        if (e.u == e.v) return false;
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int x : deg)
        if (x != 1) return false;
    return true;
}

inline bool uses_interior(const Snake& g, const Matching& m)
{
    for (const auto& r : m)
        if (interior_index(g, r)) return true;
    return false;
}

inline std::vector<Matching> boundary_matchings(const Snake& g)
{
    std::vector<Matching> out;
    for (auto& m : enumerate_matchings(g))
        if (!uses_interior(g, m)) out.push_back(m);
    return out;
}

// The two all-boundary matchings (P_-, P_+). With rel_1 = +1 the minimal one
// contains the south edge of the first tile.
inline std::pair<Matching, Matching> extremal_matchings(const Snake& g)
{
    if (g.edge_only) throw std::logic_error("no extremal matchings on a single edge");
    auto bm = boundary_matchings(g);
    if (bm.size() != 2) throw std::logic_error("expected exactly two boundary matchings");
    bool first_has_s = std::binary_search(bm[0].begin(), bm[0].end(), EdgeRef{1, S});
    int rel = g.tiles.front().cur_rel();
    bool first_is_min = (rel > 0) == first_has_s;
    return first_is_min ? std::pair{bm[0], bm[1]} : std::pair{bm[1], bm[0]};
}

inline Matching minimal_matching(const Snake& g) { return extremal_matchings(g).first; }
inline Matching maximal_matching(const Snake& g) { return extremal_matchings(g).second; }

inline Matching sym_diff(const Matching& a, const Matching& b)
{
    Matching r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// Split an edge set into cycles; throws if it is not a disjoint union of cycles.
inline std::vector<std::vector<int>> cycles_of(const Host& h, const Matching& edges)
{
    std::vector<std::vector<int>> adj(h.nv);
    std::vector<int> idx;
    for (const auto& r : edges) {
        int i = h.index_of(r);
        if (i < 0) throw std::invalid_argument("edge not in host");
        idx.push_back(i);
        adj[h.edges[i].u].push_back(i);
        adj[h.edges[i].v].push_back(i);
    }
    for (int v = 0; v < h.nv; ++v)
        if (!adj[v].empty() && adj[v].size() != 2) throw std::logic_error("symmetric difference is not a union of cycles");
    std::set<int> left(idx.begin(), idx.end());
    std::vector<std::vector<int>> out;
    while (!left.empty()) {
        std::vector<int> cyc;
        int e = *left.begin();
        int v = h.edges[e].u;
        while (left.count(e)) {
            left.erase(e);
            cyc.push_back(e);
            v = (h.edges[e].u == v) ? h.edges[e].v : h.edges[e].u;
            e = (adj[v][0] == e) ? adj[v][1] : adj[v][0];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

// Tiles enclosed by the cycles of P_- (-) P, by even-odd ray casting of tile centres.
inline std::vector<int> enclosed_tiles(const Snake& g, const Matching& p, const Matching& pminus)
{
    Host h = materialize(g);
    if (!is_perfect(h, p) || !is_perfect(h, pminus)) throw std::invalid_argument("enclosed_tiles needs perfect matchings");
    auto cyc = cycles_of(h, sym_diff(p, pminus));
    auto pos = tile_positions(g);
    std::vector<int> out;
    for (int i = 1; i <= g.d(); ++i) {
        auto [tx, ty] = pos[i - 1];
        int inside = 0;
        for (const auto& c : cyc) {
            int crossings = 0;
            for (int e : c) {
                auto a = h.coord[h.edges[e].u], b = h.coord[h.edges[e].v];
                // ray from (tx+.5, ty+.5) towards +x hits vertical unit edges at x > tx with y-span [ty, ty+1]
                if (a.first == b.first && a.first > tx && std::min(a.second, b.second) == ty) ++crossings;
            }
            inside ^= (crossings & 1);
        }
        if (inside) out.push_back(i);
    }
    return out;
}

// ---- good matchings of band graphs ----------------------------------------

inline EdgeRef band_interior(const Band& b, int k)
{
    return k == 0 ? EdgeRef{1, b.first} : interior(b.base, k);
}

inline EdgeRef band_canonical(const Band& b, EdgeRef e)
{
    if (e == EdgeRef{b.d(), b.last}) return {1, b.first};
    return canonical(b.base, e);
}

// Transport a band edge to the cut snake rotate_band(b, k). Returns both
// copies when the edge is the cut edge itself.
inline std::vector<EdgeRef> band_to_cut(const Band& b, const Band& cut, int k, EdgeRef e)
{
    int d = b.d();
    std::vector<EdgeRef> out;
    auto put = [&](int base_tile, Side s) {
        Side o = b.base.tile(base_tile).org(s);
        int j = ((base_tile - 1 - k) % d + d) % d + 1;
        out.push_back(canonical(cut.base, {j, cut.base.tile(j).cur(o)}));
    };
    e = band_canonical(b, e);
    if (e == EdgeRef{1, b.first}) {
        put(1, b.first);
        put(d, b.last);
    } else if (int i = interior_index(b.base, e)) {
        put(i, e.side);
        put(i + 1, in_side(b.base.steps[i - 1]));
    } else {
        put(e.tile, e.side);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct GoodMatching {
    Matching edges;
    std::vector<int> witnesses;  // cut indices k (0 = glue edge)
};

// P (+) {e} on the cut at e_k: when e is already in P both copies are used.
inline std::optional<Matching> lift_to_cut(const Band& b, const Band& cut, int k, const Host& cut_host, const Matching& p)
{
    EdgeRef e = band_interior(b, k);
    bool has_e = std::binary_search(p.begin(), p.end(), e);
    Matching base;
    for (const auto& r : p) {
        if (r == e) continue;
        auto img = band_to_cut(b, cut, k, r);
        if (img.size() != 1) return std::nullopt;
        base.push_back(img[0]);
    }
    EdgeRef c1 = canonical(cut.base, {1, cut.first}), c2 = canonical(cut.base, {cut.d(), cut.last});
    std::vector<Matching> tries;
    if (has_e) tries.push_back({c1, c2});
    else tries = {{c1}, {c2}};
    for (const auto& extra : tries) {
        Matching m = base;
        m.insert(m.end(), extra.begin(), extra.end());
        std::sort(m.begin(), m.end());
        if (is_perfect(cut_host, m)) return m;
    }
    return std::nullopt;
}

inline std::vector<GoodMatching> enumerate_good_matchings(const Band& b)
{
    std::vector<Band> cuts;
    std::vector<Host> hosts;
    for (int k = 0; k < b.d(); ++k) {
        cuts.push_back(rotate_band(b, k));
        hosts.push_back(materialize(cuts.back().base));
    }
    std::vector<GoodMatching> out;
    for (auto& p : perfect_matchings(materialize(b))) {
        GoodMatching gm{p, {}};
        for (int k = 0; k < b.d(); ++k)
            if (lift_to_cut(b, cuts[k], k, hosts[k], p)) gm.witnesses.push_back(k);
        if (!gm.witnesses.empty()) out.push_back(std::move(gm));
    }
    return out;
}

// Oracle: union over cuts of the images of cut matchings that use a copy of
// the cut edge (one copy is dropped, two copies merge into the band edge).
inline std::vector<Matching> good_matchings_by_cuts(const Band& b)
{
    std::set<Matching> acc;
    for (int k = 0; k < b.d(); ++k) {
        Band c = rotate_band(b, k);
        EdgeRef c1 = canonical(c.base, {1, c.first}), c2 = canonical(c.base, {c.d(), c.last});
        for (const auto& m : enumerate_matchings(c.base)) {
            bool h1 = std::binary_search(m.begin(), m.end(), c1), h2 = std::binary_search(m.begin(), m.end(), c2);
            if (!h1 && !h2) continue;
            // map back: cut tile j is band tile (j-1+k) mod d + 1
            Matching p;
            for (const auto& r : m) {
                if (r == c1 || r == c2) continue;
                int bt = (r.tile - 1 + k) % b.d() + 1;
                Side o = c.base.tile(r.tile).org(r.side);
                p.push_back(band_canonical(b, {bt, b.base.tile(bt).cur(o)}));
            }
            if (h1 && h2) p.push_back(band_interior(b, k));
            std::sort(p.begin(), p.end());
            acc.insert(p);
        }
    }
    return {acc.begin(), acc.end()};
}

// ---- counting -------------------------------------------------------------

inline long long count_matchings(const Component& c)
{
    if (auto* g = std::get_if<Snake>(&c)) return static_cast<long long>(enumerate_matchings(*g).size());
    return static_cast<long long>(enumerate_good_matchings(std::get<Band>(c)).size());
}

inline long long count(const RElement& r)
{
    long long total = 0;
    for (const auto& [k, t] : r.terms()) {
        long long prod = t.coef;
        for (const auto& c : t.parts) prod *= count_matchings(c);
        total += prod;
    }
    return total;
}

// Oracle: exhaustive subset search over the edges of a snake host.
inline std::vector<Matching> matchings_by_subsets(const Snake& g)
{
    Host h = materialize(g);
    std::vector<Matching> out;
    const int m = static_cast<int>(h.edges.size());
    for (long mask = 0; mask < (1L << m); ++mask) {
        if (__builtin_popcountl(mask) * 2 != h.nv) continue;
        Matching cand;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) cand.push_back(h.edges[i].ref);
        if (is_perfect(h, cand)) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace snakecalc

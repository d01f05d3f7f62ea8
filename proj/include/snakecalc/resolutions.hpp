#pragma once

#include "overlaps.hpp"

namespace snakecalc {

using TileId = std::pair<int, int>;
using Signs = std::vector<std::array<int, 4>>;

// An edge named by a source tile and a side in that tile's original frame.
struct NamedEdge {
    TileId tile;
    Side side = N;
};

inline Snake tagged(const Snake& g, int src)
{
    Snake h = g;
    for (int i = 1; i <= h.d(); ++i) {
        h.tile(i).src = src;
        h.tile(i).orig = i;
    }
    return h;
}

inline int find_tile(const Snake& g, TileId id)
{
    for (int i = 1; i <= g.d(); ++i)
        if (g.tile(i).id() == id) return i;
    return 0;
}

inline NamedEdge named(const Snake& g, int i, Side current) { return {g.tile(i).id(), g.tile(i).org(current)}; }

inline EdgeRef locate(const Snake& g, NamedEdge n)
{
    int i = find_tile(g, n.tile);
    if (!i) throw std::logic_error("edge lookup: tile not in piece");
    return {i, g.tile(i).cur(n.side)};
}

// e_i of g, named through whichever incident tile survives in `piece`
inline EdgeRef locate_interior(const Snake& piece, const Snake& g, int i)
{
    if (find_tile(piece, g.tile(i).id())) return locate(piece, named(g, i, out_side(g.steps[i - 1])));
    return locate(piece, named(g, i + 1, in_side(g.steps[i - 1])));
}

inline Side other(Side s)
{
    switch (s) {
    case N: return E;
    case E: return N;
    case S: return W;
    default: return S;
    }
}

// the boundary edge of G_k among its N/E (resp. S/W) sides that is not interior
inline NamedEdge ne_boundary(const Snake& g, int k)
{
    if (k >= g.d()) throw std::logic_error("ne_boundary on the last tile is ambiguous");
    return named(g, k, other(out_side(g.steps[k - 1])));
}

inline NamedEdge sw_boundary(const Snake& g, int k)
{
    if (k <= 1) throw std::logic_error("sw_boundary on the first tile is ambiguous");
    return named(g, k, other(in_side(g.steps[k - 2])));
}

inline Snake glue(const Snake& a, NamedEdge ea, const Snake& b, NamedEdge eb)
{
    if (a.tiles.back().id() != ea.tile || b.tiles.front().id() != eb.tile)
        throw std::logic_error("glue: edges must lie on the facing end tiles");
    return join(a, a.tiles.back().cur(ea.side), b, b.tiles.front().cur(eb.side));
}

// first of e_from..e_{d-1}, then the NE pair, with sign `target`
inline EdgeRef first_with_sign(const Snake& g, const Signs& f, int target, int from = 1)
{
    for (int i = std::max(from, 1); i < g.d(); ++i)
        if (sign_of(f, interior(g, i)) == target) return interior(g, i);
    for (Side sd : {N, E})
        if (f.back()[sd] == target) return {g.d(), sd};
    throw std::logic_error("no edge with the requested sign");
}

// last of e_upto..e_1, then the SW pair, with sign `target`
inline EdgeRef last_with_sign(const Snake& g, const Signs& f, int target, int upto)
{
    for (int i = std::min(upto, g.d() - 1); i >= 1; --i)
        if (sign_of(f, interior(g, i)) == target) return interior(g, i);
    for (Side sd : {S, W})
        if (f[0][sd] == target) return {1, sd};
    throw std::logic_error("no edge with the requested sign");
}

// cut position of an edge: i for e_i, d for the NE pair, 0 for the SW pair
inline int cut_position(const Snake& g, EdgeRef e)
{
    if (int i = interior_index(g, e)) return i;
    if (in_ne(g, e)) return g.d();
    if (in_sw(g, e)) return 0;
    throw std::logic_error("cut_position: boundary edge in the middle");
}

enum class Kind { pair, self, graft, self_graft };

struct Resolution {
    Kind kind = Kind::pair;
    std::string tag;
    std::vector<Snake> inputs;  // tagged copies, src 1 and 2
    bool crossing = true;
    std::vector<Component> first;  // G3,G4 / G3,G4° / G34
    std::vector<Component> second;  // G5,G6 / G56 / G5,G6°; empty with second_zero
    int second_sign = 1;
    bool second_zero = false;
    // grafting data
    int s = 0;
    std::optional<NamedEdge> delta3;

    RElement element() const
    {
        RElement r(first, 1);
        if (!second_zero) r.add(second, second_sign);
        return r;
    }
};

inline Resolution unresolved(Kind k, std::vector<Snake> in)
{
    Resolution r;
    r.kind = k;
    r.tag = "NONE";
    r.crossing = false;
    r.inputs = in;
    for (const auto& g : in) r.first.push_back(g);
    r.second_zero = true;
    return r;
}

// ---- crossing pairs ----------------------------------------------------------

inline Resolution resolve_pair(const Snake& G1in, const Snake& G2in, const Overlap& ov)
{
    if (ov.self) throw std::invalid_argument("resolve_pair: self-overlap given");
    if (ov.t > G1in.d() || ov.tp > G2in.d() || !windows_match(G1in, ov.s, ov.t, G2in, ov.sp, ov.tp, ov.xf))
        throw std::invalid_argument("resolve_pair: not an overlap of the two graphs");
    Snake g1 = tagged(G1in, 1), g2 = tagged(G2in, 2);
    if (!is_crossing_pair(g1, g2, ov)) return unresolved(Kind::pair, {g1, g2});

    Overlap o = ov;
    Snake h = g2;
    if (o.direction() == Direction::opposite) {
        h = reflect(h);
        o = to_same_direction(o, g2.d());
    }
    if (o.xf == kSwap) h = swap_frame(h);
    const int d = g1.d(), dp = h.d(), s = o.s, t = o.t, sp = o.sp, tp = o.tp;

    Resolution r;
    r.kind = Kind::pair;
    r.tag = "PAIR";
    r.inputs = {g1, g2};

    Snake g3 = subgraph(g1, 1, t);
    if (tp < dp) {
        Dir st = h.steps[tp - 1];
        g3 = glue(g3, named(g1, t, out_side(st)), subgraph(h, tp + 1, dp), named(h, tp + 1, in_side(st)));
    }
    Snake g4 = subgraph(h, 1, tp);
    if (t < d) {
        Dir st = g1.steps[t - 1];
        g4 = glue(g4, named(h, tp, out_side(st)), subgraph(g1, t + 1, d), named(g1, t + 1, in_side(st)));
    }
    r.first = {g3, g4};

    Snake g5, g6;
    if (s > 1 && sp > 1) {
        bool north = g1.steps[s - 2] == Dir::north;
        g5 = glue(subgraph(g1, 1, s - 1), named(g1, s - 1, north ? E : N), reflect(subgraph(h, 1, sp - 1)),
                  named(h, sp - 1, north ? N : E));
    } else if (s == 1) {
        Snake p = reflect(subgraph(h, 1, sp - 1));
        auto f = sign_table(p);
        int target = sign_of(f, locate_interior(p, h, sp - 1));
        g5 = remove_pred(p, first_with_sign(p, f, target));
    } else {
        Snake p = subgraph(g1, 1, s - 1);
        auto f = sign_table(p);
        int target = sign_of(f, locate_interior(p, g1, s - 1));
        g5 = remove_succ(p, last_with_sign(p, f, target, p.d() - 1));
    }
    if (t < d && tp < dp) {
        bool north = g1.steps[t - 1] == Dir::north;
        g6 = glue(reflect(subgraph(h, tp + 1, dp)), named(h, tp + 1, north ? S : W), subgraph(g1, t + 1, d),
                  named(g1, t + 1, north ? W : S));
    } else if (t == d) {
        Snake p = reflect(subgraph(h, tp + 1, dp));
        auto f = sign_table(p);
        int target = sign_of(f, locate_interior(p, h, tp));
        g6 = remove_succ(p, last_with_sign(p, f, target, p.d() - 1));
    } else {
        Snake p = subgraph(g1, t + 1, d);
        auto f = sign_table(p);
        int target = sign_of(f, locate_interior(p, g1, t));
        g6 = remove_pred(p, first_with_sign(p, f, target));
    }
    r.second = {g5, g6};
    return r;
}

// ---- self-crossings -----------------------------------------------------------

// G1 \ pred(e) \ succ(e') read as the tiles strictly between the two cuts
inline std::optional<Snake> between(const Snake& g, EdgeRef e, EdgeRef ep)
{
    int i = cut_position(g, e), j = cut_position(g, ep);
    if (i < j) return subgraph(g, i + 1, j);
    if (i == j) return single_edge_of(g, e);
    return std::nullopt;
}

inline Resolution resolve_self_same(const Snake& g, const Overlap& ov)
{
    const int d = g.d(), s = ov.s, t = ov.t, sp = ov.sp, tp = ov.tp;
    const Xf x = ov.xf;
    auto f = sign_table(g);
    auto F = [&](int i) { return sign_of(f, interior(g, i)); };
    // side of G_{s+j} matching current side c of G_{s'+j}
    auto back = [&](int i, Side c) { return named(g, i, apply(x, c)); };

    Resolution r;
    r.kind = Kind::self;
    r.inputs = {g};

    Snake g3 = subgraph(g, 1, t);
    if (tp < d) {
        Dir st = g.steps[tp - 1];
        g3 = glue(g3, back(t, out_side(st)), subgraph(g, tp + 1, d), named(g, tp + 1, in_side(st)));
    }
    Band g4 = glue_band_at_end(subgraph(g, s, sp - 1), out_side(g.steps[sp - 2]));
    r.first = {g3, g4};

    if (sp <= t) {
        r.tag = "SELF-SAME-s'<=t";
        Snake m = subgraph(g, sp, t);
        if (s > 1) {
            Dir st = g.steps[s - 2];
            m = glue(subgraph(g, 1, s - 1), named(g, s - 1, out_side(st)), m, named(g, sp, apply(x, in_side(st))));
        }
        if (tp < d) {
            Dir st = g.steps[tp - 1];
            m = glue(m, back(t, out_side(st)), subgraph(g, tp + 1, d), named(g, tp + 1, in_side(st)));
        }
        r.second = {m};
        r.second_sign = -1;
        return r;
    }

    if (sp > t + 1) {
        Snake mid = reflect(subgraph(g, t + 1, sp - 1));
        Snake p = mid;
        if (s > 1) p = glue(subgraph(g, 1, s - 1), ne_boundary(g, s - 1), p, ne_boundary(g, sp - 1));
        if (tp < d) p = glue(p, sw_boundary(g, t + 1), subgraph(g, tp + 1, d), sw_boundary(g, tp + 1));
        auto fp = sign_table(p);
        if (s > 1 && tp < d) {
            r.tag = "SELF-SAME-s'>t+1(a)";
            r.second = {p};
        } else if (s == 1 && tp < d) {
            r.tag = "SELF-SAME-s'>t+1(b)";
            int target = sign_of(fp, locate_interior(p, g, sp - 1));
            r.second = {remove_pred(p, first_with_sign(p, fp, target))};
        } else if (s > 1) {
            r.tag = "SELF-SAME-s'>t+1(c)";
            int target = sign_of(fp, locate_interior(p, g, t));
            r.second = {remove_succ(p, last_with_sign(p, fp, target, p.d() - 1))};
        } else {
            r.tag = "SELF-SAME-s'>t+1(d)";
            EdgeRef e = first_with_sign(p, fp, sign_of(fp, locate_interior(p, g, sp - 1)));
            EdgeRef ep = last_with_sign(p, fp, sign_of(fp, locate_interior(p, g, t)), p.d() - 1);
            if (auto b = between(p, e, ep)) r.second = {*b};
            else r.second_zero = true;
        }
        return r;
    }

    // s' = t+1
    if (s == 1 && tp < d) {
        r.tag = "SELF-SAME-s'=t+1(a)";
        r.second = {remove_pred(g, first_with_sign(g, f, -F(tp), tp + 1))};
        r.second_sign = -1;
    } else if (s == 1) {
        r.tag = "SELF-SAME-s'=t+1(b)";
        r.second = {single_edge_of(g, interior(g, t))};
        r.second_sign = -1;
    } else if (tp < d) {
        r.tag = "SELF-SAME-s'=t+1(c)";
        int k = 0;
        auto fits = [&](int k) {
            int len = s - 1 - k;
            if (tp + len > d) return std::optional<Xf>{};
            // unlabeled, the frames of H are tied to those of the main overlap;
            // labeled, H is fixed by the crossed arcs and its frame follows from them
            Xf y = x ^ kRot;
            if (len == 0) return std::optional<Xf>{y};
            for (Xf z : {y, Xf(y ^ kSwap)}) {
                if (z != y && !g.labeled()) break;
                bool shape = window_word(g, k + 1, s - 1) == transformed_word(window_word(g, tp + 1, tp + len), z);
                if (shape && (!g.labeled() || tile_labels_match(g, k + 1, s - 1, g, tp + 1, tp + len, z))) return std::optional<Xf>{z};
            }
            return std::optional<Xf>{};
        };
        while (!fits(k)) ++k;
        const int lim = s + tp - d - 1;
        bool neg = false;
        if (k < s - 1) {
            Overlap hov{k + 1, s - 1, tp + 1, tp + s - k - 1, *fits(k), false};
            neg = is_crossing_pair(g, g, hov);
        }
        r.second_sign = neg ? -1 : 1;
        if (k > 0 && k > lim) {
            r.second = {glue(subgraph(g, 1, k), ne_boundary(g, k), subgraph(g, tp + s - k, d), sw_boundary(g, tp + s - k))};
        } else if (k == 0 && k > lim) {
            r.second = {remove_pred(g, first_with_sign(g, f, F(s + tp - 1), s + tp))};
        } else if (k > 0) {
            r.second = {remove_succ(g, last_with_sign(g, f, F(lim), lim - 1))};
        } else {
            r.second_zero = true;
        }
        r.tag += neg ? "-" : "+";
    } else {
        r.tag = "SELF-SAME-s'=t+1(d)";
        r.second = {remove_succ(g, last_with_sign(g, f, -F(s - 1), s - 2))};
        r.second_sign = -1;
    }
    return r;
}

inline Resolution resolve_self_opposite(const Snake& g, const Overlap& ov)
{
    const int d = g.d(), s = ov.s, t = ov.t, sp = ov.sp, tp = ov.tp;
    if (sp <= t) throw std::logic_error("opposite self-overlap with overlapping windows");
    Resolution r;
    r.kind = Kind::self;
    r.inputs = {g};
    r.tag = "SELF-OPPOSITE";

    Snake g34;
    if (sp > t + 1) {
        Snake mid = reflect(subgraph(g, t + 1, sp - 1));
        g34 = glue(subgraph(g, 1, t), ne_boundary(g, t), mid, named(g, sp - 1, out_side(g.steps[sp - 2])));
        g34 = glue(g34, named(g, t + 1, in_side(g.steps[t - 1])), subgraph(g, sp, d), sw_boundary(g, sp));
    } else {
        g34 = glue(subgraph(g, 1, t), ne_boundary(g, t), subgraph(g, sp, d), sw_boundary(g, sp));
    }
    r.first = {g34};

    std::optional<Snake> g5;
    if (s > 1 && tp < d) {
        g5 = glue(subgraph(g, 1, s - 1), ne_boundary(g, s - 1), subgraph(g, tp + 1, d), sw_boundary(g, tp + 1));
    } else if (s == 1 && tp < d) {
        Snake p = subgraph(g, tp + 1, d);
        auto fp = sign_table(p);
        g5 = remove_pred(p, first_with_sign(p, fp, sign_of(fp, locate_interior(p, g, tp))));
    } else if (s > 1) {
        Snake p = subgraph(g, 1, s - 1);
        auto fp = sign_table(p);
        g5 = remove_succ(p, last_with_sign(p, fp, sign_of(fp, locate_interior(p, g, s - 1)), p.d() - 1));
    }
    if (!g5) {
        r.second_zero = true;
        return r;
    }
    // adjacent windows leave no tiles for the band; it drops out as the empty product
    if (sp == t + 1) {
        r.second = {*g5};
        return r;
    }
    Snake piece = subgraph(g, t + 1, sp - 1);
    Band g6{piece, locate(piece, sw_boundary(g, t + 1)).side, locate(piece, ne_boundary(g, sp - 1)).side};
    check_band(g6);
    r.second = {*g5, g6};
    return r;
}

inline Resolution resolve_self(const Snake& G1in, const Overlap& ov)
{
    if (!ov.self || ov.tp > G1in.d() || ov.s >= ov.sp || !windows_match(G1in, ov.s, ov.t, G1in, ov.sp, ov.tp, ov.xf))
        throw std::invalid_argument("resolve_self: not a self-overlap of the graph");
    Snake g = tagged(G1in, 1);
    if (!is_self_crossing(g, ov)) throw std::invalid_argument("resolve_self: self-overlap does not cross");
    return ov.direction() == Direction::same ? resolve_self_same(g, ov) : resolve_self_opposite(g, ov);
}

// ---- grafting -----------------------------------------------------------------

inline Resolution graft_pair(const Snake& G1in, const Snake& G2in, int s, std::optional<Side> d3 = std::nullopt)
{
    if (G1in.edge_only) throw std::invalid_argument("graft: G1 must have tiles");
    Snake g1 = tagged(G1in, 1), g2 = tagged(G2in, 2);
    const int d = g1.d();
    if (s < 1 || s > d) throw std::invalid_argument("graft: position out of range");
    auto f1 = sign_table(g1);
    auto F = [&](int i) { return sign_of(f1, interior(g1, i)); };
    Resolution r;
    r.kind = Kind::graft;
    r.inputs = {g1, g2};
    r.s = s;

    if (g2.edge_only) {
        r.tag = "GRAFT-3";
        (void)F;
        r.first = {remove_succ(g1, last_with_sign(g1, f1, -1, s - 1)), remove_pred(g1, first_with_sign(g1, f1, 1, s))};
        r.second = {remove_succ(g1, last_with_sign(g1, f1, 1, s - 1)), remove_pred(g1, first_with_sign(g1, f1, -1, s))};
        return r;
    }
    const int dp = g2.d();
    if (s < d) {
        if (d3) throw std::invalid_argument("graft: the grafting edge is fixed when s < d");
        r.tag = "GRAFT-1";
        bool north = g1.steps[s - 1] == Dir::north;
        Side e3 = north ? E : N, e5 = north ? W : S, e3p = north ? W : S, e5p = north ? S : W;
        r.delta3 = named(g1, s, e3);
        int sg = f1[s - 1][e3];
        Snake g3 = glue(subgraph(g1, 1, s), named(g1, s, e3), g2, named(g2, 1, e3p));
        Snake g4 = remove_pred(g1, first_with_sign(g1, f1, sg, s + 1));
        Snake g5 = remove_succ(g1, last_with_sign(g1, f1, sg, s - 1));
        Snake g6 = glue(reflect(g2), named(g2, 1, e5p), subgraph(g1, s + 1, d), named(g1, s + 1, e5));
        r.first = {g3, g4};
        r.second = {g5, g6};
        return r;
    }
    if (!d3 || (*d3 != N && *d3 != E)) throw std::invalid_argument("graft at the last tile needs delta3 = N or E");
    r.tag = "GRAFT-2";
    Side e3 = *d3, e3p = (e3 == N) ? S : W;
    r.delta3 = named(g1, d, e3);
    Snake g3 = glue(g1, named(g1, d, e3), g2, named(g2, 1, e3p));
    Snake g4 = single_edge_of(g1, {d, e3});
    Snake g5 = remove_succ(g1, last_with_sign(g1, f1, f1[d - 1][e3], d - 1));
    auto f2 = sign_table(g2);
    Snake g6 = remove_pred(g2, first_with_sign(g2, f2, f2[0][e3p]));
    (void)dp;
    r.first = {g3, g4};
    r.second = {g5, g6};
    return r;
}

inline Resolution self_graft(const Snake& G1in, int s, std::optional<Side> d3 = std::nullopt)
{
    if (G1in.edge_only) throw std::invalid_argument("self-graft needs tiles");
    Snake g = tagged(G1in, 1);
    const int d = g.d();
    if (s < 1 || s > d) throw std::invalid_argument("self-graft: position out of range");
    auto f = sign_table(g);
    Resolution r;
    r.kind = Kind::self_graft;
    r.inputs = {g};
    r.s = s;
    if (s < d) {
        if (d3) throw std::invalid_argument("self-graft: the grafting edge is fixed when s < d");
        r.tag = "SELFGRAFT-1";
        bool north = g.steps[s - 1] == Dir::north;
        Side e3 = north ? E : N, e5 = north ? W : S;
        int sg = f[s - 1][e3];
        Side e3p = (f[0][S] == sg) ? S : W;
        Side e5p = other(e3p);
        r.delta3 = named(g, s, e3);
        Snake g3 = remove_pred(g, first_with_sign(g, f, sg, s + 1));
        Band g4{subgraph(g, 1, s), e3p, e3};
        check_band(g4);
        Snake p = glue(reflect(subgraph(g, 1, s)), named(g, 1, e5p), subgraph(g, s + 1, d), named(g, s + 1, e5));
        auto fp = sign_table(p);
        Snake g56 = remove_pred(p, first_with_sign(p, fp, sign_of(fp, locate(p, named(g, s, e3)))));
        r.first = {g3, g4};
        r.second = {g56};
        return r;
    }
    if (!d3 || (*d3 != N && *d3 != E)) throw std::invalid_argument("self-graft at the last tile needs delta3 = N or E");
    r.tag = "SELFGRAFT-2";
    Side e3 = *d3;
    int sg = f[d - 1][e3];
    Side e3p = (f[0][S] == sg) ? S : W;
    r.delta3 = named(g, d, e3);
    r.first = {single_edge_of(g, {d, e3}), Band{g, e3p, e3}};
    // last interior edge with the sign of delta3
    int i = 0;
    for (int k = d - 1; k >= 1 && !i; --k)
        if (sign_of(f, interior(g, k)) == sg) i = k;
    if (!i) {
        r.second_zero = true;
        return r;
    }
    // e' is searched in G[1,i] including its NE pair, where it may be e_i itself
    Snake h = subgraph(g, 1, i);
    r.second = {remove_pred(h, first_with_sign(h, sign_table(h), sg))};
    return r;
}

}  // namespace snakecalc

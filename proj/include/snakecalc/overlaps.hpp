#pragma once

#include "core.hpp"

namespace snakecalc {

enum class Direction { same, opposite };

// Windows G1[s,t] and G2[s',t'] (or G1[s',t'] for a self-overlap). xf maps
// the sides of window-one tiles to the corresponding window-two tiles; for
// the same direction G_{s+j} <-> G'_{s'+j}, for the opposite one G_{s+j} <-> G'_{t'-j}.
struct Overlap {
    int s = 1, t = 1, sp = 1, tp = 1;
    Xf xf = kId;
    bool self = false;

    Direction direction() const { return (xf & kRot) ? Direction::opposite : Direction::same; }
    int size() const { return t - s + 1; }
    bool intersecting() const { return self && sp <= t + 1; }
    friend bool operator==(const Overlap&, const Overlap&) = default;
};

inline std::vector<Dir> window_word(const Snake& g, int s, int t)
{
    return {g.steps.begin() + (s - 1), g.steps.begin() + (t - 1)};
}

inline std::vector<Dir> transformed_word(std::vector<Dir> w, Xf x)
{
    if (x & kSwap)
        for (auto& d : w) d = (d == Dir::north) ? Dir::east : Dir::north;
    if (x & kRot) std::reverse(w.begin(), w.end());
    return w;
}

// labeled graphs must also agree on every tile and side label
inline bool labels_match(const Snake& a, int s, int t, const Snake& b, int sp, int tp, Xf x)
{
    for (int j = 0; j <= t - s; ++j) {
        const Tile& ta = a.tile(s + j);
        const Tile& tb = b.tile((x & kRot) ? tp - j : sp + j);
        if (ta.label != tb.label) return false;
        for (Side c : {N, E, S, W})
            if (ta.label_at(c) != tb.label_at(apply(x, c))) return false;
    }
    return true;
}

// only the crossed arcs, for local overlaps whose frames are fixed by the main one
inline bool tile_labels_match(const Snake& a, int s, int t, const Snake& b, int sp, int tp, Xf x)
{
    for (int j = 0; j <= t - s; ++j)
        if (a.tile(s + j).label != b.tile((x & kRot) ? tp - j : sp + j).label) return false;
    return true;
}

inline bool windows_match(const Snake& a, int s, int t, const Snake& b, int sp, int tp, Xf x)
{
    if (t - s != tp - sp) return false;
    if (window_word(a, s, t) != transformed_word(window_word(b, sp, tp), x)) return false;
    return !(a.labeled() && b.labeled()) || labels_match(a, s, t, b, sp, tp, x);
}

// Some strictly larger pair of windows containing both, isomorphic by any symmetry.
inline bool extendable(const Snake& a, int s, int t, const Snake& b, int sp, int tp, bool self)
{
    for (int S0 = 1; S0 <= s; ++S0)
        for (int T0 = t; T0 <= a.d(); ++T0) {
            int len = T0 - S0;
            for (int S1 = std::max(1, tp - len); S1 <= sp; ++S1) {
                int T1 = S1 + len;
                if (T1 < tp || T1 > b.d()) continue;
                if (S0 == s && T0 == t && S1 == sp && T1 == tp) continue;
                if (self && S0 == S1) continue;
                for (Xf x = 0; x < 4; ++x)
                    if (windows_match(a, S0, T0, b, S1, T1, x)) return true;
            }
        }
    return false;
}

// the same correspondence x would also match one more tile at either end
inline bool extends_locally(const Snake& a, int s, int t, const Snake& b, int sp, int tp, Xf x)
{
    bool opp = x & kRot;
    if (s > 1) {
        int S1 = opp ? sp : sp - 1, T1 = opp ? tp + 1 : tp;
        if (S1 >= 1 && T1 <= b.d() && windows_match(a, s - 1, t, b, S1, T1, x)) return true;
    }
    if (t < a.d()) {
        int S1 = opp ? sp - 1 : sp, T1 = opp ? tp : tp + 1;
        if (S1 >= 1 && T1 <= b.d() && windows_match(a, s, t + 1, b, S1, T1, x)) return true;
    }
    return false;
}

inline bool single_tile_ok(const Snake& a, int k, const Snake& b, int kp)
{
    if (k == 1 || k == a.d() || kp == 1 || kp == b.d()) return true;
    auto wa = window_word(a, k - 1, k + 1), wb = window_word(b, kp - 1, kp + 1);
    return (is_straight(wa) && is_straight(wb)) || (is_zigzag(wa) && is_zigzag(wb));
}

inline std::vector<Overlap> find_overlaps_impl(const Snake& a, const Snake& b, bool self)
{
    std::vector<Overlap> out;
    if (a.edge_only || b.edge_only) return out;
    for (int s = 1; s <= a.d(); ++s)
        for (int t = s; t <= a.d(); ++t)
            for (int sp = self ? s + 1 : 1; sp <= b.d(); ++sp) {
                int tp = sp + (t - s);
                if (tp > b.d()) break;
                bool single = (s == t);
                if (single && !single_tile_ok(a, s, b, sp)) continue;
                if (!single && extendable(a, s, t, b, sp, tp, self)) continue;
                // one record per direction; a lone tile against a lone tile only once
                bool lone = single && a.d() == 1 && b.d() == 1;
                bool found = false;
                for (Xf base : {kId, kRot}) {
                    if (lone && found) continue;
                    for (Xf x : {base, Xf(base | kSwap)})
                        if (windows_match(a, s, t, b, sp, tp, x) && !extends_locally(a, s, t, b, sp, tp, x)) {
                            out.push_back({s, t, sp, tp, x, self});
                            found = true;
                            break;
                        }
                }
            }
    return out;
}

inline std::vector<Overlap> find_pair_overlaps(const Snake& g1, const Snake& g2) { return find_overlaps_impl(g1, g2, false); }
inline std::vector<Overlap> find_self_overlaps(const Snake& g) { return find_overlaps_impl(g, g, true); }

// Opposite pair overlaps are handled through the half-turn of G2.
inline Overlap to_same_direction(const Overlap& ov, int d2)
{
    if (ov.direction() == Direction::same) return ov;
    Overlap r = ov;
    r.sp = d2 + 1 - ov.tp;
    r.tp = d2 + 1 - ov.sp;
    r.xf = ov.xf ^ kRot;
    return r;
}

// Sign function on G2 induced from the one on G1 (seed) through a same-direction overlap.
inline std::vector<std::array<int, 4>> induced_signs(const Snake& g1, const Snake& g2, const Overlap& ov, int seed)
{
    auto f1 = sign_table(g1, seed);
    auto f2 = sign_table(g2, 1);
    if (f2[ov.sp - 1][apply(ov.xf, S)] != f1[ov.s - 1][S]) f2 = sign_table(g2, -1);
    return f2;
}

inline bool crossing_same(const Snake& g1, const Snake& g2, const Overlap& ov, int seed)
{
    const int d = g1.d(), dp = g2.d();
    const int s = ov.s, t = ov.t, sp = ov.sp, tp = ov.tp;
    auto f1 = sign_table(g1, seed);
    auto f2 = induced_signs(g1, g2, ov, seed);
    auto F1 = [&](int i) { return sign_of(f1, interior(g1, i)); };
    auto F2 = [&](int i) { return sign_of(f2, interior(g2, i)); };
    if (s > 1 && t < d && F1(s - 1) == -F1(t)) return true;
    if (sp > 1 && tp < dp && F2(sp - 1) == -F2(tp)) return true;
    if (s == 1 && t < d && sp > 1 && tp == dp && F1(t) == F2(sp - 1)) return true;
    if (s > 1 && t == d && sp == 1 && tp < dp && F1(s - 1) == F2(tp)) return true;
    return false;
}

inline bool is_crossing_pair(const Snake& g1, const Snake& g2, const Overlap& ov, int seed = 1)
{
    if (ov.direction() == Direction::same) return crossing_same(g1, g2, ov, seed);
    return crossing_same(g1, reflect(g2), to_same_direction(ov, g2.d()), seed);
}

inline bool is_self_crossing(const Snake& g, const Overlap& ov, int seed = 1)
{
    const int d = g.d();
    auto f = sign_table(g, seed);
    auto F = [&](int i) { return sign_of(f, interior(g, i)); };
    bool c1 = (ov.s > 1 && F(ov.s - 1) == -F(ov.t)) || (ov.tp < d && F(ov.sp - 1) == -F(ov.tp));
    if (!c1) return false;
    if (ov.t >= d || ov.sp <= 1) return false;
    return F(ov.t) == F(ov.sp - 1);
}

}  // namespace snakecalc

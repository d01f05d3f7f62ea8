#pragma once

#include <cctype>

#include "surface.hpp"

namespace snakecalc {

// Every way a curve on T can be smoothed, found from the crossing sequences.
struct Smoothing {
    Resolution res;
    std::optional<Overlap> overlap;  // crossings only
    Laurent lhs;                     // product of the input Laurent polynomials
};

struct SmoothingCheck {
    ResolutionLaurent rl;
    bool ok = false;
    std::string error;  // set when the coefficient rule throws
};

inline SmoothingCheck check_smoothing(const Smoothing& sm)
{
    SmoothingCheck c;
    try {
        c.rl = resolution_laurent(sm.res, sm.overlap ? &*sm.overlap : nullptr);
        c.ok = c.rl.total == sm.lhs;
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    return c;
}

// All crossing sequences of length <= max_len, from every triangle, both orientations.
inline std::vector<CurveSpec> enumerate_arcs(const Triangulation& T, int max_len)
{
    std::vector<CurveSpec> out;
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& seq, int start, int tri) {
        if (!seq.empty())
            for (int rel : {1, -1}) {
                CurveSpec c;
                c.crossings = seq;
                c.start = start;
                c.rel = rel;
                out.push_back(c);
            }
        if (static_cast<int>(seq.size()) == max_len) return;
        for (int s : T.triangles[tri]) {
            if (T.is_boundary(s) || (!seq.empty() && s == seq.back())) continue;
            seq.push_back(s);
            rec(seq, start, T.across(tri, s));
            seq.pop_back();
        }
    };
    for (int t = 0; t < static_cast<int>(T.triangles.size()); ++t) {
        std::vector<int> seq;
        rec(seq, t, t);
    }
    return out;
}

inline std::string curve_text(const Triangulation& T, const CurveSpec& c)
{
    if (!c.name.empty()) return c.name;
    std::string s = c.loop ? "loop" : "arc";
    s += c.rel > 0 ? " rel=+1" : " rel=-1";
    if (c.start >= 0) s += " start=" + std::to_string(c.start + 1);
    for (int x : c.crossings) s += ' ' + T.name(x);
    return s;
}

namespace detail {

// the N or E side of `tile` carrying label `lab`, if exactly one does
inline std::optional<Side> ne_side_labeled(const Tile& t, int lab)
{
    std::optional<Side> r;
    int n = 0;
    for (Side x : {N, E})
        if (t.label_at(x) == lab) {
            r = x;
            ++n;
        }
    if (n != 1) return std::nullopt;
    return r;
}

inline int rel_at(const CurveSpec& c, int j) { return (j % 2 == 1) ? c.rel : -c.rel; }

}  // namespace detail

// Crossings of two arcs plus graftings where gamma2 starts on gamma1
// (gamma2 leaves Delta_s through the side gamma1 does not use).
inline std::vector<Smoothing> pair_smoothings(const Triangulation& T, const CurveSpec& c1, const CurveSpec& c2)
{
    std::vector<Smoothing> out;
    Snake g1 = build_labeled_snake(T, c1), g2 = build_labeled_snake(T, c2);
    Laurent lhs = laurent_of(g1) * laurent_of(g2);
    for (const auto& ov : find_pair_overlaps(g1, g2))
        if (is_crossing_pair(g1, g2, ov)) out.push_back({resolve_pair(g1, g2, ov), ov, lhs});

    auto w1 = triangle_walk(T, c1), w2 = triangle_walk(T, c2);
    const auto& q1 = c1.crossings;
    const auto& q2 = c2.crossings;
    const int d = static_cast<int>(q1.size());
    for (int s = 1; s < d; ++s) {
        if (w2[0] != w1[s] || q2[0] != T.third(w1[s], q1[s - 1], q1[s])) continue;
        if (c2.rel != -detail::rel_at(c1, s)) continue;
        out.push_back({graft_pair(g1, g2, s), std::nullopt, lhs});
    }
    if (w2[0] == w1[d] && q2[0] != q1[d - 1] && c2.rel == -detail::rel_at(c1, d)) {
        int lab = T.label(T.third(w1[d], q1[d - 1], q2[0]));
        if (auto sd = detail::ne_side_labeled(g1.tile(d), lab))
            out.push_back({graft_pair(g1, g2, d, *sd), std::nullopt, lhs});
    }
    return out;
}

// Grafting the arc tau of T itself onto the curve wherever the curve crosses it.
inline std::vector<Smoothing> arc_smoothings(const Triangulation& T, const CurveSpec& c, int tau)
{
    std::vector<Smoothing> out;
    Snake g = build_labeled_snake(T, c);
    Laurent lhs = laurent_of(g) * x_of_label(T.label(tau));
    for (int s = 1; s <= static_cast<int>(c.crossings.size()); ++s)
        if (c.crossings[s - 1] == tau) out.push_back({graft_pair(g, arc_graph(T, tau), s), std::nullopt, lhs});
    return out;
}

// Self-crossings plus self-graftings (the curve returns to its start triangle).
inline std::vector<Smoothing> self_smoothings(const Triangulation& T, const CurveSpec& c)
{
    std::vector<Smoothing> out;
    Snake g = build_labeled_snake(T, c);
    Laurent lhs = laurent_of(g);
    for (const auto& ov : find_self_overlaps(g))
        if (is_self_crossing(g, ov)) out.push_back({resolve_self(g, ov), ov, lhs});

    auto w = triangle_walk(T, c);
    const auto& q = c.crossings;
    const int d = static_cast<int>(q.size());
    for (int s = 1; s < d; ++s)
        if (w[0] == w[s] && q[0] == T.third(w[s], q[s - 1], q[s])) out.push_back({self_graft(g, s), std::nullopt, lhs});
    if (d >= 2 && w[0] == w[d] && q[0] != q[d - 1]) {
        int lab = T.label(T.third(w[d], q[d - 1], q[0]));
        if (auto sd = detail::ne_side_labeled(g.tile(d), lab)) out.push_back({self_graft(g, d, *sd), std::nullopt, lhs});
    }
    return out;
}

// ---- crossing windows read off the surface --------------------------------------------

// Maximal runs where both curves pass through the same triangles and arcs,
// in the same or the opposite order. Windows are 1-based tile ranges.
struct GeometricOverlap {
    int s, t, sp, tp;
    Direction dir;
    friend auto operator<=>(const GeometricOverlap&, const GeometricOverlap&) = default;
};

inline std::vector<GeometricOverlap> geometric_overlaps(const Triangulation& T, const CurveSpec& c1, const CurveSpec& c2)
{
    auto w1 = triangle_walk(T, c1), w2 = triangle_walk(T, c2);
    const auto& q1 = c1.crossings;
    const auto& q2 = c2.crossings;
    const int d1 = static_cast<int>(q1.size()), d2 = static_cast<int>(q2.size());
    std::vector<GeometricOverlap> out;
    // same: tile i of 1 against tile i+off of 2
    auto same_ok = [&](int i, int j) { return q1[i - 1] == q2[j - 1] && w1[i - 1] == w2[j - 1] && w1[i] == w2[j]; };
    // opposite: tile i against tile j walking backwards
    auto opp_ok = [&](int i, int j) { return q1[i - 1] == q2[j - 1] && w1[i - 1] == w2[j] && w1[i] == w2[j - 1]; };
    for (int s = 1; s <= d1; ++s)
        for (int sp = 1; sp <= d2; ++sp) {
            if (same_ok(s, sp) && !(s > 1 && sp > 1 && same_ok(s - 1, sp - 1))) {
                int t = s, tp = sp;
                while (t < d1 && tp < d2 && same_ok(t + 1, tp + 1)) ++t, ++tp;
                out.push_back({s, t, sp, tp, Direction::same});
            }
            if (opp_ok(s, sp) && !(s > 1 && sp < d2 && opp_ok(s - 1, sp + 1))) {
                int t = s, lo = sp;
                while (t < d1 && lo > 1 && opp_ok(t + 1, lo - 1)) ++t, --lo;
                out.push_back({s, t, lo, sp, Direction::opposite});
            }
        }
    // keep the windows not contained in a larger one on both curves; single
    // tiles are judged by their neighbours instead, as for snake graphs
    auto inside = [](const GeometricOverlap& a, const GeometricOverlap& b) {
        return !(a == b) && a.s < a.t && b.s <= a.s && a.t <= b.t && b.sp <= a.sp && a.tp <= b.tp;
    };
    std::vector<GeometricOverlap> kept;
    for (const auto& o : out)
        if (std::none_of(out.begin(), out.end(), [&](const GeometricOverlap& b) { return inside(o, b); })) kept.push_back(o);
    std::sort(kept.begin(), kept.end());
    return kept;
}

inline CurveSpec reversed(const Triangulation& T, const CurveSpec& c)
{
    CurveSpec r = c;
    auto w = triangle_walk(T, c);
    std::reverse(r.crossings.begin(), r.crossings.end());
    r.start = w.back();
    return r;
}

// Do the two curves cross inside the shared strip? Each curve is placed left
// (+1), right (-1) or at the corner (0, an endpoint) where it joins and where
// it leaves the strip, relative to the direction of travel; they cross when
// the order flips.
inline bool geometric_crossing(const Triangulation& T, const CurveSpec& c1, const CurveSpec& c2, const GeometricOverlap& o)
{
    if (o.dir == Direction::opposite) {
        const int d2 = static_cast<int>(c2.crossings.size());
        GeometricOverlap r{o.s, o.t, d2 + 1 - o.tp, d2 + 1 - o.sp, Direction::same};
        return geometric_crossing(T, c1, reversed(T, c2), r);
    }
    auto entry = [&](const CurveSpec& c, int s) {
        auto w = triangle_walk(T, c);
        int tau = c.crossings[s - 1];
        if (s == 1) return 0;
        int from = c.crossings[s - 2];
        return T.prev(w[s - 1], tau) == from ? 1 : -1;
    };
    auto exit = [&](const CurveSpec& c, int t) {
        auto w = triangle_walk(T, c);
        const int d = static_cast<int>(c.crossings.size());
        if (t == d) return 0;
        int tau = c.crossings[t - 1], to = c.crossings[t];
        return T.next(w[t], tau) == to ? 1 : -1;
    };
    int a = entry(c1, o.s) - entry(c2, o.sp), b = exit(c1, o.t) - exit(c2, o.tp);
    return (a > 0 && b < 0) || (a < 0 && b > 0);
}

// ---- polynomial expressions over named curves ----------------------------------------

// + - * ^ and parentheses over integers, x<i>, y<i> and curve names.
inline Laurent evaluate_expression(const std::string& text, const std::map<std::string, Laurent>& names)
{
    std::size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    auto fail = [&](const std::string& m) { throw std::invalid_argument(m + " at column " + std::to_string(p + 1)); };
    std::function<Laurent()> sum;
    auto number = [&] {
        std::size_t q = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (q == p) fail("expected a number");
        return std::stoi(text.substr(q, p - q));
    };
    auto atom = [&]() -> Laurent {
        skip();
        if (p >= text.size()) fail("unexpected end");
        char ch = text[p];
        if (ch == '(') {
            ++p;
            Laurent v = sum();
            skip();
            if (p >= text.size() || text[p] != ')') fail("expected ')'");
            ++p;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return Laurent(number());
        std::size_t q = p;
        while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_' || text[p] == '\''))
            ++p;
        std::string id = text.substr(q, p - q);
        if (id.empty()) fail("unexpected '" + std::string(1, ch) + "'");
        if (auto it = names.find(id); it != names.end()) return it->second;
        if (id.size() > 1 && (id[0] == 'x' || id[0] == 'y') && id.find_first_not_of("0123456789", 1) == std::string::npos)
            return id[0] == 'x' ? Laurent::x(std::stoi(id.substr(1))) : Laurent::y(std::stoi(id.substr(1)));
        fail("unknown name '" + id + "'");
        return {};
    };
    auto power = [&] {
        Laurent v = atom();
        skip();
        if (p < text.size() && text[p] == '^') {
            ++p;
            skip();
            int e = number();
            Laurent r = 1;
            for (int i = 0; i < e; ++i) r *= v;
            return r;
        }
        return v;
    };
    auto product = [&] {
        Laurent v = power();
        for (;;) {
            skip();
            if (p < text.size() && text[p] == '*') {
                ++p;
                v *= power();
            } else {
                return v;
            }
        }
    };
    sum = [&] {
        skip();
        bool neg = false;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) neg = text[p++] == '-';
        Laurent v = product();
        if (neg) v = -v;
        for (;;) {
            skip();
            if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
                bool minus = text[p++] == '-';
                Laurent w = product();
                v = minus ? v - w : v + w;
            } else {
                return v;
            }
        }
    };
    Laurent v = sum();
    skip();
    if (p != text.size()) fail("trailing input");
    return v;
}

// ---- skein check --------------------------------------------------------------------

struct SkeinTerm {
    std::string tag;
    Laurent y1, y2;  // coefficients of the two smoothings
    int sign = 1;    // sign of the second smoothing
    Laurent rhs;
    bool ok = false;
    std::string error;
};

struct SkeinReport {
    bool compatible = false;  // nothing to smooth
    Laurent lhs;
    std::vector<SkeinTerm> terms;
    bool ok() const
    {
        for (const auto& t : terms)
            if (!t.ok) return false;
        return true;
    }
};

inline SkeinReport report_of(const std::vector<Smoothing>& sms, Laurent lhs)
{
    SkeinReport rep;
    rep.lhs = std::move(lhs);
    rep.compatible = sms.empty();
    for (const auto& sm : sms) {
        auto c = check_smoothing(sm);
        SkeinTerm t;
        t.tag = sm.res.tag;
        t.y1 = c.rl.first_coef;
        t.y2 = c.rl.second_coef;
        t.sign = sm.res.second_sign;
        t.rhs = c.rl.total;
        t.ok = c.ok;
        t.error = c.error;
        rep.terms.push_back(t);
    }
    return rep;
}

inline SkeinReport skein_check(const Triangulation& T, const CurveSpec& c1, const CurveSpec& c2)
{
    auto sms = pair_smoothings(T, c1, c2);
    auto back = pair_smoothings(T, c2, c1);
    sms.insert(sms.end(), back.begin(), back.end());
    return report_of(sms, cluster_variable(T, c1) * cluster_variable(T, c2));
}

inline SkeinReport skein_check(const Triangulation& T, const CurveSpec& c)
{
    return report_of(self_smoothings(T, c), cluster_variable(T, c));
}

}  // namespace snakecalc

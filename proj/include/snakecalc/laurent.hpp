#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "matchings.hpp"
#include "resolutions.hpp"

namespace snakecalc {

using Int = boost::multiprecision::cpp_int;

// Monomial: sorted (variable, nonzero exponent) lists for x and y.
struct Mono {
    std::vector<std::pair<int, int>> x, y;
    friend bool operator==(const Mono&, const Mono&) = default;
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

inline void bump(std::vector<std::pair<int, int>>& v, int var, int e)
{
    if (e == 0) return;
    auto it = std::lower_bound(v.begin(), v.end(), std::pair{var, INT32_MIN});
    if (it != v.end() && it->first == var) {
        it->second += e;
        if (it->second == 0) v.erase(it);
    } else {
        v.insert(it, {var, e});
    }
}

inline Mono operator*(Mono a, const Mono& b)
{
    for (auto [v, e] : b.x) bump(a.x, v, e);
    for (auto [v, e] : b.y) bump(a.y, v, e);
    return a;
}

class Laurent {
  public:
    Laurent() = default;
    Laurent(long long c)  // NOLINT: constants convert implicitly
    {
        if (c) t_[Mono{}] = c;
    }
    Laurent(const Mono& m, Int c = 1)
    {
        if (c != 0) t_[m] = c;
    }

    static Laurent x(int i, int e = 1)
    {
        Mono m;
        bump(m.x, i, e);
        return {m};
    }
    static Laurent y(int i, int e = 1)
    {
        Mono m;
        bump(m.y, i, e);
        return {m};
    }

    const std::map<Mono, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }

    Laurent& operator+=(const Laurent& o)
    {
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o)
    {
        for (const auto& [m, c] : o.t_) add(m, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) { return Laurent() - a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b)
    {
        Laurent r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add(ma * mb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent&, const Laurent&) = default;

    // every x-variable set to 1
    Laurent f_polynomial() const
    {
        Laurent r;
        for (const auto& [m, c] : t_) r.add(Mono{{}, m.y}, c);
        return r;
    }
    Int at_ones() const
    {
        Int s = 0;
        for (const auto& [m, c] : t_) s += c;
        return s;
    }
    bool positive() const
    {
        for (const auto& [m, c] : t_)
            if (c <= 0) return false;
        return !t_.empty();
    }

    // "<coef> x<i>^<e> ... y<j>^<e>" terms joined by " + ", in monomial order
    std::string to_string() const
    {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (auto [v, e] : m.x) os << " x" << v << '^' << e;
            for (auto [v, e] : m.y) os << " y" << v << '^' << e;
        }
        return os.str();
    }

  private:
    void add(const Mono& m, const Int& c)
    {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    std::map<Mono, Int> t_;
};

inline Laurent parse_laurent(const std::string& s)
{
    Laurent r;
    if (s == "0") return r;
    std::istringstream all(s);
    std::string chunk, term;
    std::vector<std::string> parts;
    // split on " + "
    std::size_t pos = 0;
    while (true) {
        auto nxt = s.find(" + ", pos);
        parts.push_back(s.substr(pos, nxt == std::string::npos ? std::string::npos : nxt - pos));
        if (nxt == std::string::npos) break;
        pos = nxt + 3;
    }
    for (const auto& p : parts) {
        std::istringstream is(p);
        std::string tok;
        is >> tok;
        Int c(tok);
        Mono m;
        while (is >> tok) {
            auto caret = tok.find('^');
            if (caret == std::string::npos || (tok[0] != 'x' && tok[0] != 'y'))
                throw std::invalid_argument("bad monomial token '" + tok + "'");
            int v = std::stoi(tok.substr(1, caret - 1)), e = std::stoi(tok.substr(caret + 1));
            bump(tok[0] == 'x' ? m.x : m.y, v, e);
        }
        r += Laurent(m, c);
    }
    return r;
}

// ---- weights and heights --------------------------------------------------------

inline Laurent x_of_label(int l)
{
    if (l == kUnlabeled) throw std::invalid_argument("unlabeled edge");
    if (l == kBoundary) return 1;
    return Laurent::x(l);
}

inline Laurent y_of_tile(const Tile& t)
{
    if (t.label == kUnlabeled) throw std::invalid_argument("unlabeled tile");
    return Laurent::y(t.label);
}

inline Laurent weight(const Snake& g, const Matching& p)
{
    if (g.edge_only) return x_of_label(g.edge_label);
    Laurent w = 1;
    for (const auto& e : p) w *= x_of_label(edge_label(g, e));
    return w;
}

inline Laurent height_of_tiles(const Snake& g, const std::vector<int>& tiles)
{
    Laurent h = 1;
    for (int i : tiles) h *= y_of_tile(g.tile(i));
    return h;
}

inline Laurent height(const Snake& g, const Matching& p)
{
    if (g.edge_only) return 1;
    return height_of_tiles(g, enclosed_tiles(g, p, minimal_matching(g)));
}

inline Laurent crossing_monomial(const Snake& g)
{
    Laurent c = 1;
    for (const auto& t : g.tiles) c *= x_of_label(t.label);
    return c;
}

inline Laurent inverse_monomial(const Laurent& m)
{
    if (!m.is_monomial()) throw std::logic_error("inverse of a non-monomial");
    const auto& [mono, c] = *m.terms().begin();
    if (c != 1) throw std::logic_error("inverse of a non-unit monomial");
    Mono inv;
    for (auto [v, e] : mono.x) inv.x.push_back({v, -e});
    for (auto [v, e] : mono.y) inv.y.push_back({v, -e});
    return {inv};
}

// ---- band graphs -------------------------------------------------------------------

inline int band_edge_label(const Band& b, EdgeRef e)
{
    e = band_canonical(b, e);
    if (e == EdgeRef{1, b.first}) {
        int l1 = edge_label(b.base, {1, b.first}), l2 = edge_label(b.base, {b.d(), b.last});
        if (l1 != l2) throw std::logic_error("band glue edges carry different labels");
        return l1;
    }
    return edge_label(b.base, e);
}

// Height of a good matching through the cut at witness k; the tiles of the cut
// snake map back to band tiles.
inline Laurent band_height(const Band& b, const Matching& p, int k)
{
    Band cut = rotate_band(b, k);
    Host h = materialize(cut.base);
    auto lift = lift_to_cut(b, cut, k, h, p);
    if (!lift) throw std::logic_error("band_height: not a witness");
    Laurent y = 1;
    for (int j : enclosed_tiles(cut.base, *lift, minimal_matching(cut.base))) y *= y_of_tile(cut.base.tile(j));
    return y;
}

struct BandHeightCheck {
    long long matchings = 0, witness_pairs = 0, disagreements = 0;
};

inline Laurent band_matching_height(const Band& b, const GoodMatching& gm, BandHeightCheck* chk = nullptr)
{
    Laurent y0 = band_height(b, gm.edges, gm.witnesses.front());
    for (std::size_t i = 1; i < gm.witnesses.size(); ++i) {
        Laurent yi = band_height(b, gm.edges, gm.witnesses[i]);
        if (chk) {
            ++chk->witness_pairs;
            if (yi != y0) ++chk->disagreements;
        }
    }
    if (chk) ++chk->matchings;
    return y0;
}

// ---- the Laurent map ------------------------------------------------------------------

inline Laurent laurent_of(const Snake& g)
{
    if (g.edge_only) return x_of_label(g.edge_label);
    Laurent sum;
    for (const auto& p : enumerate_matchings(g)) sum += weight(g, p) * height(g, p);
    return sum * inverse_monomial(crossing_monomial(g));
}

inline Laurent laurent_of(const Band& b, BandHeightCheck* chk = nullptr)
{
    Laurent sum;
    for (const auto& gm : enumerate_good_matchings(b)) {
        Laurent w = 1;
        for (const auto& e : gm.edges) w *= x_of_label(band_edge_label(b, e));
        sum += w * band_matching_height(b, gm, chk);
    }
    return sum * inverse_monomial(crossing_monomial(b.base));
}

inline Laurent laurent_of(const Component& c)
{
    if (auto* g = std::get_if<Snake>(&c)) return laurent_of(*g);
    return laurent_of(std::get<Band>(c));
}

inline Laurent laurent_of(const std::vector<Component>& parts)
{
    Laurent r = 1;
    for (const auto& c : parts) r *= laurent_of(c);
    return r;
}

inline Laurent laurent_of(const RElement& r)
{
    Laurent sum;
    for (const auto& [k, t] : r.terms()) sum += Laurent(t.coef) * laurent_of(t.parts);
    return sum;
}

// ---- tile bookkeeping ---------------------------------------------------------------

inline std::vector<TileId> tile_ids(const Component& c)
{
    std::vector<TileId> out;
    const Snake& g = std::holds_alternative<Snake>(c) ? std::get<Snake>(c) : std::get<Band>(c).base;
    for (const auto& t : g.tiles) out.push_back(t.id());
    return out;
}

inline std::vector<TileId> tile_ids(const std::vector<Component>& parts)
{
    std::vector<TileId> out;
    for (const auto& c : parts) {
        auto v = tile_ids(c);
        out.insert(out.end(), v.begin(), v.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<TileId> tile_ids(const std::vector<Snake>& gs)
{
    std::vector<Component> parts(gs.begin(), gs.end());
    return tile_ids(parts);
}

// multiset difference a \ b
inline std::vector<TileId> missing_tiles(std::vector<TileId> a, std::vector<TileId> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<TileId> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline Laurent y_of_ids(const std::vector<Snake>& inputs, const std::vector<TileId>& ids)
{
    Laurent y = 1;
    for (auto id : ids) y *= y_of_tile(inputs.at(id.first - 1).tile(id.second));
    return y;
}

// ---- completion of a matching of the overlap-free part ------------------------------------

using EdgeName = std::pair<TileId, Side>;  // side in the tile's original frame

inline std::vector<EdgeName> names_of(const Snake& g, EdgeRef e)
{
    if (g.edge_only) return {{{g.edge_src, g.edge_orig}, g.edge_side}};
    std::vector<EdgeName> out;
    e = canonical(g, e);
    out.push_back({g.tile(e.tile).id(), g.tile(e.tile).org(e.side)});
    if (int i = interior_index(g, e)) {
        Side in = in_side(g.steps[i - 1]);
        out.push_back({g.tile(i + 1).id(), g.tile(i + 1).org(in)});
    }
    return out;
}

inline std::vector<EdgeName> band_names_of(const Band& b, EdgeRef e)
{
    e = band_canonical(b, e);
    auto out = names_of(b.base, e);
    if (e == EdgeRef{1, b.first}) {
        auto more = names_of(b.base, {b.d(), b.last});
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

struct Completion {
    Laurent coefficient = 1;         // y(G~_max)
    std::vector<TileId> tilde;       // G~
    std::vector<TileId> tilde_max;   // the component carrying the height
};

// A fixed matching of the overlap-free part: P_- on snakes, the first good
// matching on bands.
struct Reference {
    std::set<EdgeName> names;
    std::set<EdgeName> glue;  // names of edges that join pieces of different hosts
    Laurent x = 1, y = 1;
};

// consecutive tiles of one input graph
inline bool adjacent(TileId a, TileId b) { return a.first == b.first && std::abs(a.second - b.second) == 1; }

inline Reference reference_matching(const std::vector<Component>& parts)
{
    Reference ref;
    for (const auto& c : parts) {
        if (auto* g = std::get_if<Snake>(&c)) {
            if (g->edge_only) {
                for (auto& n : names_of(*g, {})) ref.names.insert(n);
                ref.x *= x_of_label(g->edge_label);
                continue;
            }
            auto pm = minimal_matching(*g);
            for (const auto& e : pm) {
                auto ns = names_of(*g, e);
                for (auto& n : ns) ref.names.insert(n);
                if (ns.size() == 2 && !adjacent(ns[0].first, ns[1].first))
                    for (auto& n : ns) ref.glue.insert(n);
            }
            ref.x *= weight(*g, pm);
        } else {
            const Band& b = std::get<Band>(c);
            auto gms = enumerate_good_matchings(b);
            if (gms.empty()) throw std::logic_error("band without good matchings");
            for (const auto& e : gms.front().edges) {
                auto ns = band_names_of(b, e);
                for (auto& n : ns) ref.names.insert(n);
                for (std::size_t i = 0; i + 1 < ns.size(); ++i)
                    for (std::size_t j = i + 1; j < ns.size(); ++j)
                        if (!adjacent(ns[i].first, ns[j].first)) {
                            ref.glue.insert(ns[i]);
                            ref.glue.insert(ns[j]);
                        }
                ref.x *= x_of_label(band_edge_label(b, e));
            }
            ref.y *= band_matching_height(b, gms.front());
        }
    }
    return ref;
}

inline const Snake& base_of(const Component& c)
{
    if (auto* g = std::get_if<Snake>(&c)) return *g;
    return std::get<Band>(c).base;
}

// Tiles of the band enclosed by a good matching, read on the cut at witness k.
inline std::vector<TileId> band_enclosed(const Band& b, const Matching& p, int k)
{
    Band cut = rotate_band(b, k);
    Host h = materialize(cut.base);
    auto lift = lift_to_cut(b, cut, k, h, p);
    if (!lift) throw std::logic_error("band_enclosed: not a witness");
    std::vector<TileId> out;
    for (int j : enclosed_tiles(cut.base, *lift, minimal_matching(cut.base))) out.push_back(cut.base.tile(j).id());
    return out;
}

// A matching of one host seen through names.
struct HostChoice {
    std::set<EdgeName> names;
    Laurent x = 1, y = 1;
    std::vector<TileId> enclosed;
};

inline std::vector<HostChoice> host_choices(const Component& c)
{
    std::vector<HostChoice> out;
    auto note = [&](HostChoice& hc, const std::vector<EdgeName>& ns) {
        for (auto& n : ns) hc.names.insert(n);
    };
    if (auto* g = std::get_if<Snake>(&c)) {
        auto pm = minimal_matching(*g);
        for (const auto& q : enumerate_matchings(*g)) {
            HostChoice hc;
            for (const auto& e : q) note(hc, names_of(*g, e));
            hc.x = weight(*g, q);
            for (int i : enclosed_tiles(*g, q, pm)) {
                hc.enclosed.push_back(g->tile(i).id());
                hc.y *= y_of_tile(g->tile(i));
            }
            out.push_back(std::move(hc));
        }
        return out;
    }
    const Band& b = std::get<Band>(c);
    for (const auto& gm : enumerate_good_matchings(b)) {
        HostChoice hc;
        for (const auto& e : gm.edges) {
            note(hc, band_names_of(b, e));
            hc.x *= x_of_label(band_edge_label(b, e));
        }
        hc.enclosed = band_enclosed(b, gm.edges, gm.witnesses.front());
        hc.y = band_matching_height(b, gm);
        out.push_back(std::move(hc));
    }
    return out;
}

// Complete the reference matching of `part` to the hosts: keep every named
// side of the reference (glued ones aside) and require x(completion) = x(G~) x(P).
// The height of the completion has to be the same for every such choice.
inline Completion complete(const std::vector<Component>& hosts, const std::vector<Component>& part)
{
    Reference ref = reference_matching(part);
    std::vector<TileId> host_ids;
    for (const auto& c : hosts) {
        auto ids = tile_ids(c);
        host_ids.insert(host_ids.end(), ids.begin(), ids.end());
    }
    auto tilde_v = missing_tiles(host_ids, tile_ids(part));
    std::set<TileId> tilde(tilde_v.begin(), tilde_v.end());

    auto label_of = [&](TileId id) -> const Tile* {
        for (const auto& c : hosts)
            if (int i = find_tile(base_of(c), id)) return &base_of(c).tile(i);
        return nullptr;
    };

    std::vector<std::vector<HostChoice>> found(hosts.size());
    for (std::size_t h = 0; h < hosts.size(); ++h)
        for (auto& hc : host_choices(hosts[h])) {
            bool ok = true;
            // every reference edge is kept, up to the glued ones
            for (const auto& n : ref.names)
                if (!ref.glue.count(n) && label_of(n.first) && find_tile(base_of(hosts[h]), n.first) && !hc.names.count(n))
                    ok = false;
            if (ok) found[h].push_back(std::move(hc));
        }
    Laurent xt = 1;
    for (auto id : tilde_v) xt *= x_of_label(label_of(id)->label);
    const Laurent want = xt * ref.x;

    std::vector<std::pair<Laurent, std::vector<TileId>>> hits;
    std::function<void(std::size_t, Laurent, Laurent, std::vector<TileId>)> rec = [&](std::size_t h, Laurent x, Laurent y,
                                                                                       std::vector<TileId> enc) {
        if (h == hosts.size()) {
            if (x == want) hits.push_back({y, enc});
            return;
        }
        for (const auto& hc : found[h]) {
            auto e2 = enc;
            e2.insert(e2.end(), hc.enclosed.begin(), hc.enclosed.end());
            rec(h + 1, x * hc.x, y * hc.y, e2);
        }
    };
    rec(0, 1, 1, {});
    if (hits.empty()) throw std::logic_error("no completion of the overlap-free matching");
    for (const auto& hcand : hits)
        if (hcand.first != hits.front().first) throw std::logic_error("completion is not unique");

    Completion c;
    c.tilde = tilde_v;
    c.coefficient = hits.front().first * inverse_monomial(ref.y);
    // The height must come from one connected run of G~ tiles, read either in a
    // host or in the input graphs. Enclosed tiles outside G~ cancel against ref.y.
    if (c.coefficient == Laurent(1)) return c;
    std::vector<std::vector<TileId>> lines;
    for (const auto& h : hosts) {
        auto ids = tile_ids(h);
        if (std::holds_alternative<Band>(h)) ids.insert(ids.end(), ids.begin(), ids.end());
        lines.push_back(ids);
    }
    std::vector<TileId> all(tilde.begin(), tilde.end());
    lines.push_back(all);
    for (const auto& line : lines)
        for (std::size_t i = 0; i < line.size(); ++i) {
            Laurent y = 1;
            std::vector<TileId> run;
            for (std::size_t j = i; j < line.size() && tilde.count(line[j]); ++j) {
                if (&line == &lines.back() && j > i && !adjacent(line[j - 1], line[j])) break;
                run.push_back(line[j]);
                y *= y_of_tile(*label_of(line[j]));
                if (y == c.coefficient) {
                    c.tilde_max = run;
                    std::sort(c.tilde_max.begin(), c.tilde_max.end());
                    return c;
                }
            }
        }
    throw std::logic_error("completion height is not carried by a connected part of G~");
}

// ---- Laurent polynomial of a resolution ---------------------------------------------------

struct ResolutionLaurent {
    Laurent first_coef = 1, second_coef = 1;
    Laurent first, second;  // unweighted L of the two parts (second already signed)
    Laurent total;
    std::vector<TileId> tilde_max;
};

inline bool in_matching(const Snake& g, const Matching& m, EdgeRef e)
{
    e = canonical(g, e);
    return std::binary_search(m.begin(), m.end(), e);
}

inline bool is_minimal_edge(const Snake& g, EdgeRef e) { return in_matching(g, minimal_matching(g), e); }

// In the same-direction case with s' <= t the band G4° is presented on the
// tiles t+1..t' (same band by periodicity) so that G3 and G4° together carry
// every tile of G1 exactly once.
inline Band relabel_periodic(const Band& b, int s, int sp, int t)
{
    Band r = b;
    int delta = sp - s;
    for (auto& tile : r.base.tiles) {
        int i = tile.orig;
        while (i <= t) i += delta;
        tile.orig = i;
    }
    return r;
}

// Grafting a single edge at G_s: the coefficient sits on G5 G6 when the sign
// of the south edge of G_s disagrees with the orientation of G_s.
inline bool graft3_on_second(const Resolution& r)
{
    const Snake& g = r.inputs[0];
    return sign_table(g)[r.s - 1][S] != g.tile(r.s).cur_rel();
}

// y56' y56'' for self-grafting at the last tile: G1 minus G56 splits into an
// initial run (holding delta3') and a final run (holding delta3).
inline Laurent self_graft2_coefficient(const Resolution& r)
{
    const Snake& g = r.inputs[0];
    const Snake& g56 = std::get<Snake>(r.second.at(0));
    int lo, hi;
    if (g56.edge_only) {
        lo = g56.edge_orig + 1;
        hi = g56.edge_orig;
    } else {
        lo = g56.tiles.front().orig;
        hi = g56.tiles.back().orig;
        if (lo > hi) std::swap(lo, hi);
    }
    const int d = g.d();
    EdgeRef d3 = locate(g, *r.delta3);
    Side d3p = (sign_table(g)[0][S] == sign_table(g)[d - 1][d3.side]) ? S : W;
    bool min3 = is_minimal_edge(g, d3), min3p = is_minimal_edge(g, {1, d3p});
    Laurent y = 1;
    if (min3p)
        for (int i = 1; i < lo; ++i) y *= y_of_tile(g.tile(i));
    if (min3)
        for (int i = hi + 1; i <= d; ++i) y *= y_of_tile(g.tile(i));
    return y;
}

inline ResolutionLaurent resolution_laurent(const Resolution& r, const Overlap* ov = nullptr)
{
    ResolutionLaurent out;
    out.first = laurent_of(r.first);
    if (!r.second_zero) out.second = Laurent(r.second_sign) * laurent_of(r.second);
    if (!r.crossing || r.second_zero) {
        out.total = out.first;
        return out;
    }

    auto y_missing = [&](const std::vector<Component>& part) {
        return y_of_ids(r.inputs, missing_tiles(tile_ids(r.inputs), tile_ids(part)));
    };

    switch (r.kind) {
    case Kind::pair: {
        auto c = complete(std::vector<Component>(r.inputs.begin(), r.inputs.end()), r.second);
        out.second_coef = c.coefficient;
        out.tilde_max = c.tilde_max;
        break;
    }
    case Kind::self: {
        bool into34 = r.tag.rfind("SELF-SAME-s'<=t", 0) == 0 || r.tag.rfind("SELF-SAME-s'=t+1", 0) == 0;
        if (r.second_sign < 0 && into34) {
            // the matchings of G56 complete into G3 and G4°
            if (!ov) throw std::invalid_argument("resolution_laurent: overlap needed for this case");
            Band b4 = relabel_periodic(std::get<Band>(r.first[1]), ov->s, ov->sp, ov->t);
            for (auto& t : b4.base.tiles) t.src = 1;
            auto c = complete({r.first[0], b4}, r.second);
            out.second_coef = c.coefficient;
            out.tilde_max = c.tilde_max;
        } else {
            auto c = complete(std::vector<Component>(r.inputs.begin(), r.inputs.end()), r.second);
            out.second_coef = c.coefficient;
            out.tilde_max = c.tilde_max;
        }
        break;
    }
    case Kind::graft: {
        const Snake& g1 = r.inputs[0];
        auto y_missing_from = [&](const std::vector<Component>& part, int src) {
            Laurent y = 1;
            for (auto id : missing_tiles(tile_ids(r.inputs), tile_ids(part)))
                if (id.first == src) y *= y_of_tile(r.inputs[src - 1].tile(id.second));
            return y;
        };
        if (!r.delta3) {
            if (graft3_on_second(r)) out.second_coef = y_missing(r.second);
            else out.first_coef = y_missing(r.first);
        } else if (r.tag == "GRAFT-2") {
            // G3 G4 keeps every tile; G5 loses tiles of G1 and G6 tiles of G2
            bool minimal = is_minimal_edge(g1, locate(g1, *r.delta3));
            out.second_coef = y_missing_from(r.second, minimal ? 1 : 2);
        } else if (is_minimal_edge(g1, locate(g1, *r.delta3))) {
            out.second_coef = y_missing(r.second);
        } else {
            out.first_coef = y_missing(r.first);
        }
        break;
    }
    case Kind::self_graft: {
        const Snake& g1 = r.inputs[0];
        EdgeRef d3 = locate(g1, *r.delta3);
        if (r.tag == "SELFGRAFT-1") {
            bool maximal = in_matching(g1, maximal_matching(g1), d3);
            if (maximal) out.first_coef = y_missing(r.first);
            else out.second_coef = y_missing(r.second);
        } else {
            out.second_coef = self_graft2_coefficient(r);
        }
        break;
    }
    }
    out.total = out.first_coef * out.first + out.second_coef * out.second;
    return out;
}

}  // namespace snakecalc

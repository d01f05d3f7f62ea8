#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace snakecalc {

enum class Dir : std::uint8_t { north, east };
enum Side : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline char side_char(Side s) { return "NESW"[s]; }
inline char dir_char(Dir d) { return d == Dir::north ? 'U' : 'R'; }

// Symmetries of a tile that keep the two sign classes {N,W} and {S,E} apart.
// The group is Klein four, so composition is xor.
using Xf = std::uint8_t;
constexpr Xf kId = 0, kSwap = 1, kRot = 2, kAnti = 3;

inline Side apply(Xf x, Side s)
{
    static constexpr Side tab[4][4] = {
        {N, E, S, W}, {E, N, W, S}, {S, W, N, E}, {W, S, E, N}};
    return tab[x & 3][s];
}

inline bool flips_orientation(Xf x) { return x == kSwap || x == kAnti; }

constexpr int kUnlabeled = -1;
constexpr int kBoundary = 0;

struct Tile {
    int src = 0;   // which input graph the tile came from
    int orig = 0;  // 1-based index of the tile there
    Xf xf = kId;   // original side -> current side
    int label = kUnlabeled;
    int rel = 1;  // relative orientation in the source embedding
    std::array<int, 4> side_label{kUnlabeled, kUnlabeled, kUnlabeled, kUnlabeled};  // by original side

    Side cur(Side original) const { return apply(xf, original); }
    Side org(Side current) const { return apply(xf, current); }
    int label_at(Side current) const { return side_label[org(current)]; }
    int cur_rel() const { return flips_orientation(xf) ? -rel : rel; }
    std::pair<int, int> id() const { return {src, orig}; }
};

struct EdgeRef {
    int tile = 1;
    Side side = N;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// A snake graph. With edge_only set it is the graph with one edge and two
// vertices; tiles and steps are then empty.
struct Snake {
    std::vector<Tile> tiles;
    std::vector<Dir> steps;
    bool edge_only = false;
    int edge_label = kUnlabeled;
    // where the single edge came from, if known
    int edge_src = -1, edge_orig = 0;
    Side edge_side = N;

    int d() const { return static_cast<int>(tiles.size()); }
    const Tile& tile(int i) const { return tiles.at(i - 1); }
    Tile& tile(int i) { return tiles.at(i - 1); }
    bool labeled() const
    {
        if (edge_only) return edge_label != kUnlabeled;
        for (const auto& t : tiles)
            if (t.label != kUnlabeled) return true;
        return false;
    }
};

inline Snake build_snake(const std::vector<Dir>& steps, int src = 0)
{
    Snake g;
    g.steps = steps;
    for (std::size_t i = 0; i <= steps.size(); ++i) {
        Tile t;
        t.src = src;
        t.orig = static_cast<int>(i) + 1;
        t.rel = (i % 2 == 0) ? 1 : -1;
        g.tiles.push_back(t);
    }
    return g;
}

inline Snake edge_graph(int label = kUnlabeled)
{
    Snake g;
    g.edge_only = true;
    g.edge_label = label;
    return g;
}

inline std::vector<Dir> parse_word(const std::string& w)
{
    std::vector<Dir> out;
    for (char c : w) {
        if (c == 'U') out.push_back(Dir::north);
        else if (c == 'R') out.push_back(Dir::east);
        else throw std::invalid_argument(std::string("bad step character '") + c + "'");
    }
    return out;
}

inline std::string word_string(const std::vector<Dir>& w)
{
    std::string s;
    for (Dir d : w) s += dir_char(d);
    return s;
}

inline std::vector<std::pair<int, int>> tile_positions(const Snake& g)
{
    std::vector<std::pair<int, int>> pos;
    if (g.edge_only) return pos;
    int x = 0, y = 0;
    pos.emplace_back(x, y);
    for (Dir d : g.steps) {
        if (d == Dir::north) ++y;
        else ++x;
        pos.emplace_back(x, y);
    }
    return pos;
}

inline bool is_straight(const std::vector<Dir>& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[0]) return false;
    return true;
}

inline bool is_zigzag(const std::vector<Dir>& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

// ---- edges -------------------------------------------------------------

inline Side out_side(Dir d) { return d == Dir::north ? N : E; }
inline Side in_side(Dir d) { return d == Dir::north ? S : W; }

inline EdgeRef interior(const Snake& g, int i)
{
    if (i < 1 || i >= g.d()) throw std::out_of_range("interior edge index");
    return {i, out_side(g.steps[i - 1])};
}

inline EdgeRef canonical(const Snake& g, EdgeRef e)
{
    if (e.tile > 1 && e.side == in_side(g.steps[e.tile - 2])) return {e.tile - 1, out_side(g.steps[e.tile - 2])};
    return e;
}

// index i if e is the interior edge e_i, else 0
inline int interior_index(const Snake& g, EdgeRef e)
{
    e = canonical(g, e);
    if (e.tile < g.d() && e.side == out_side(g.steps[e.tile - 1])) return e.tile;
    return 0;
}

inline bool in_sw(const Snake&, EdgeRef e) { return e.tile == 1 && (e.side == S || e.side == W); }
inline bool in_ne(const Snake& g, EdgeRef e) { return e.tile == g.d() && (e.side == N || e.side == E); }

inline int edge_label(const Snake& g, EdgeRef e) { return g.tile(e.tile).label_at(e.side); }

// ---- signs -------------------------------------------------------------

// sign of every current side of every tile; seed is the sign of S on G_1
inline std::vector<std::array<int, 4>> sign_table(const Snake& g, int seed = 1)
{
    if (g.edge_only) throw std::logic_error("sign function undefined on a single edge");
    std::vector<std::array<int, 4>> t(g.d());
    auto fill = [](std::array<int, 4>& a, int south) {
        a[S] = a[E] = south;
        a[N] = a[W] = -south;
    };
    fill(t[0], seed);
    for (int i = 1; i < g.d(); ++i) {
        int shared = t[i - 1][out_side(g.steps[i - 1])];
        // shared edge is S of the new tile when stepping north, W when stepping east
        fill(t[i], g.steps[i - 1] == Dir::north ? shared : -shared);
    }
    return t;
}

inline int sign_of(const std::vector<std::array<int, 4>>& t, EdgeRef e) { return t.at(e.tile - 1)[e.side]; }

// ---- sub-graphs and symmetries ------------------------------------------

inline Snake subgraph(const Snake& g, int i, int j)
{
    if (i < 1 || j > g.d() || i > j) throw std::out_of_range("subgraph window");
    Snake h;
    h.tiles.assign(g.tiles.begin() + (i - 1), g.tiles.begin() + j);
    h.steps.assign(g.steps.begin() + (i - 1), g.steps.begin() + (j - 1));
    return h;
}

// half-turn: reverses the tile order and keeps the step letters
inline Snake reflect(const Snake& g)
{
    if (g.edge_only) return g;
    Snake h = g;
    std::reverse(h.tiles.begin(), h.tiles.end());
    std::reverse(h.steps.begin(), h.steps.end());
    for (auto& t : h.tiles) t.xf ^= kRot;
    return h;
}

// reflection in the diagonal through the SW corner
inline Snake swap_frame(const Snake& g)
{
    if (g.edge_only) return g;
    Snake h = g;
    for (auto& d : h.steps) d = (d == Dir::north) ? Dir::east : Dir::north;
    for (auto& t : h.tiles) t.xf ^= kSwap;
    return h;
}

inline Snake transform(const Snake& g, Xf x)
{
    Snake h = g;
    if (x & kSwap) h = swap_frame(h);
    if (x & kRot) h = reflect(h);
    return h;
}

// Planar glue of the last tile of a (current side a, N or E) to the first
// tile of b (current side sb, S or W). b is re-framed when the sides do not
// face each other.
inline Snake join(const Snake& a, Side sa, const Snake& b, Side sb)
{
    if (a.edge_only || b.edge_only) throw std::logic_error("join needs tiles on both sides");
    if (sa != N && sa != E) throw std::logic_error("join: first side must be N or E");
    if (sb != S && sb != W) throw std::logic_error("join: second side must be S or W");
    const Snake& bb = ((sa == N) == (sb == S)) ? b : swap_frame(b);
    Snake out = a;
    out.steps.push_back(sa == N ? Dir::north : Dir::east);
    out.steps.insert(out.steps.end(), bb.steps.begin(), bb.steps.end());
    out.tiles.insert(out.tiles.end(), bb.tiles.begin(), bb.tiles.end());
    return out;
}

inline Snake single_edge_of(const Snake& g, EdgeRef e)
{
    e = canonical(g, e);
    Snake h = edge_graph(edge_label(g, e));
    const Tile& t = g.tile(e.tile);
    h.edge_src = t.src;
    h.edge_orig = t.orig;
    h.edge_side = t.org(e.side);
    return h;
}

inline Snake remove_pred(const Snake& g, EdgeRef e)
{
    if (int i = interior_index(g, e)) return subgraph(g, i + 1, g.d());
    if (in_ne(g, e)) return single_edge_of(g, e);
    throw std::invalid_argument("remove_pred: edge is neither interior nor in the NE pair");
}

inline Snake remove_succ(const Snake& g, EdgeRef e)
{
    if (int i = interior_index(g, e)) return subgraph(g, 1, i);
    if (in_sw(g, e)) return single_edge_of(g, e);
    throw std::invalid_argument("remove_succ: edge is neither interior nor in the SW pair");
}

// ---- band graphs ---------------------------------------------------------

// Band graph: base snake with the first-tile edge `first` (S or W) glued to
// the last-tile edge `last` (N or E) of the same sign. Sides are current.
struct Band {
    Snake base;
    Side first = S;
    Side last = N;
    int d() const { return base.d(); }
};

inline Band glue_band(const Snake& g, Side b)
{
    if (g.edge_only || (b != S && b != W)) throw std::invalid_argument("glue_band: b must be S or W of the first tile");
    auto t = sign_table(g);
    int sb = t[0][b];
    Side last = (t.back()[N] == sb) ? N : E;
    return {g, b, last};
}

inline Band glue_band_at_end(const Snake& g, Side b)
{
    if (g.edge_only || (b != N && b != E)) throw std::invalid_argument("band: end edge must be N or E of the last tile");
    auto t = sign_table(g);
    int sb = t.back()[b];
    Side first = (t[0][S] == sb) ? S : W;
    return {g, first, b};
}

inline void check_band(const Band& b)
{
    auto t = sign_table(b.base);
    if (t[0][b.first] != t.back()[b.last]) throw std::logic_error("band glue edges carry different signs");
}

// The same band graph presented with the cut moved to interior edge e_k
// (k = 0 keeps the glue edge).
inline Band rotate_band(const Band& b, int k)
{
    if (k == 0) return b;
    const Snake& g = b.base;
    if (k < 1 || k >= g.d()) throw std::out_of_range("band cut index");
    Side out_k = out_side(g.steps[k - 1]);
    Side orig_out = g.tile(k).org(out_k);
    Snake c = join(subgraph(g, k + 1, g.d()), b.last, subgraph(g, 1, k), b.first);
    Band r{c, in_side(g.steps[k - 1]), c.tiles.back().cur(orig_out)};
    check_band(r);
    return r;
}

inline Snake cut_band(const Band& b, int k) { return rotate_band(b, k).base; }

inline Band transform(const Band& b, Xf x)
{
    Band r = b;
    if (x & kSwap) {
        r.base = swap_frame(r.base);
        r.first = apply(kSwap, r.first);
        r.last = apply(kSwap, r.last);
    }
    if (x & kRot) {
        Side f = r.first;
        r.base = reflect(r.base);
        r.first = apply(kRot, r.last);
        r.last = apply(kRot, f);
    }
    return r;
}

// ---- canonical encodings ----------------------------------------------------

inline std::string label_string(int l)
{
    if (l == kUnlabeled) return "-";
    if (l == kBoundary) return "b";
    return std::to_string(l);
}

inline std::string encode_frame(const Snake& g)
{
    if (g.edge_only) return "edge:" + label_string(g.edge_label);
    std::string s = word_string(g.steps);
    if (g.labeled()) {
        s += '|';
        for (const auto& t : g.tiles) {
            s += label_string(t.label) + '(';
            for (Side sd : {N, E, S, W}) s += label_string(t.label_at(sd)) + (sd == W ? ")" : ",");
        }
    }
    return s;
}

inline std::string canonical_form(const Snake& g)
{
    if (g.edge_only) return encode_frame(g);
    std::string best;
    for (Xf x = 0; x < 4; ++x) {
        std::string s = encode_frame(transform(g, x));
        if (best.empty() || s < best) best = s;
    }
    return "snake:" + best;
}

inline std::string canonical_form(const Band& b)
{
    std::string best;
    for (int k = 0; k < b.d(); ++k) {
        Band r = rotate_band(b, k);
        for (Xf x = 0; x < 4; ++x) {
            Band q = transform(r, x);
            std::string s = encode_frame(q.base) + " glue=" + side_char(q.first);
            if (best.empty() || s < best) best = s;
        }
    }
    return "band:" + best;
}

using Component = std::variant<Snake, Band>;

inline std::string canonical_form(const Component& c)
{
    return std::visit([](const auto& v) { return canonical_form(v); }, c);
}

inline int tile_count(const Component& c)
{
    return std::visit([](const auto& v) { return v.d(); }, c);
}

// Text form, re-parseable by parse_component. Labeled graphs append the
// orientation of the first tile and the labels in the current frame:
//   snake: URU rel=+1 | 2(1,3,b,4) 1(...) ...
inline std::string labels_text(const Snake& g)
{
    std::string s = g.tile(1).cur_rel() > 0 ? " rel=+1 |" : " rel=-1 |";
    for (const auto& t : g.tiles) {
        s += ' ' + label_string(t.label) + '(';
        for (Side sd : {N, E, S, W}) s += label_string(t.label_at(sd)) + (sd == W ? ")" : ",");
    }
    return s;
}

inline std::string word_text(const std::vector<Dir>& w) { return w.empty() ? "-" : word_string(w); }

inline std::string to_text(const Component& c)
{
    if (auto* g = std::get_if<Snake>(&c)) {
        if (g->edge_only) return "edge-graph: " + label_string(g->edge_label);
        return "snake: " + word_text(g->steps) + (g->labeled() ? labels_text(*g) : "");
    }
    const Band& b = std::get<Band>(c);
    return "band: " + word_text(b.base.steps) + " glue=" + side_char(b.first) + (b.base.labeled() ? labels_text(b.base) : "");
}

inline int parse_label(const std::string& t)
{
    if (t == "-") return kUnlabeled;
    if (t == "b") return kBoundary;
    if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos || t == "0")
        throw std::invalid_argument("bad label '" + t + "'");
    return std::stoi(t);
}

inline std::string trim_ws(const std::string& s)
{
    auto a = s.find_first_not_of(" \t\r");
    auto z = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
}

// "<word> [glue=S|W] [rel=+1|-1] [| labels]"
inline Snake parse_snake_body(const std::string& body, std::optional<Side>* glue)
{
    auto bar = body.find('|');
    std::istringstream head(body.substr(0, bar));
    std::string word, tok;
    head >> word;
    if (word == "-") word.clear();
    Snake g = build_snake(parse_word(word));
    int rel = 1;
    bool has_rel = false;
    while (head >> tok) {
        if (tok == "glue=S" || tok == "glue=W") {
            if (!glue) throw std::invalid_argument("glue= only applies to bands");
            *glue = tok == "glue=S" ? S : W;
        } else if (tok == "rel=+1" || tok == "rel=1") {
            has_rel = true;
        } else if (tok == "rel=-1") {
            rel = -1;
            has_rel = true;
        } else {
            throw std::invalid_argument("unexpected '" + tok + "'");
        }
    }
    if (bar == std::string::npos) {
        if (has_rel) throw std::invalid_argument("rel= needs a label list");
        return g;
    }
    std::string rest = body.substr(bar + 1);
    std::vector<std::string> items;
    std::istringstream ls(rest);
    while (ls >> tok) items.push_back(tok);
    if (static_cast<int>(items.size()) != g.d())
        throw std::invalid_argument("expected " + std::to_string(g.d()) + " tile labels, got " + std::to_string(items.size()));
    for (int i = 1; i <= g.d(); ++i) {
        const std::string& it = items[i - 1];
        auto open = it.find('(');
        if (open == std::string::npos || it.back() != ')') throw std::invalid_argument("bad tile label '" + it + "'");
        Tile& t = g.tile(i);
        t.label = parse_label(it.substr(0, open));
        std::string inner = it.substr(open + 1, it.size() - open - 2);
        std::vector<std::string> sides;
        std::size_t p = 0;
        for (std::size_t q; (q = inner.find(',', p)) != std::string::npos; p = q + 1) sides.push_back(inner.substr(p, q - p));
        sides.push_back(inner.substr(p));
        if (sides.size() != 4) throw std::invalid_argument("tile label '" + it + "' needs four sides");
        for (Side sd : {N, E, S, W}) t.side_label[sd] = parse_label(sides[sd]);
        t.rel = (i % 2 == 1) ? rel : -rel;
    }
    return g;
}

inline Component parse_component(const std::string& line)
{
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    std::string kind = trim_ws(line.substr(0, colon));
    std::string rest = trim_ws(line.substr(colon + 1));
    if (kind == "snake") {
        if (rest.empty()) throw std::invalid_argument("snake needs a step word ('-' for one tile)");
        return parse_snake_body(rest, nullptr);
    }
    if (kind == "edge-graph") {
        if (rest.empty()) return edge_graph();
        return edge_graph(parse_label(rest));
    }
    if (kind == "band") {
        std::optional<Side> glue;
        Snake g = parse_snake_body(rest, &glue);
        if (!glue) throw std::invalid_argument("band needs glue=S or glue=W");
        return glue_band(g, *glue);
    }
    throw std::invalid_argument("unknown record kind '" + kind + "'");
}

// ---- the group R ------------------------------------------------------------

struct Term {
    long long coef = 0;
    std::vector<Component> parts;  // disjoint union
};

class RElement {
  public:
    using Key = std::vector<std::string>;

    RElement() = default;
    explicit RElement(std::vector<Component> parts, long long coef = 1) { add(std::move(parts), coef); }

    static Key key_of(const std::vector<Component>& parts)
    {
        Key k;
        for (const auto& c : parts) k.push_back(canonical_form(c));
        std::sort(k.begin(), k.end());
        return k;
    }

    void add(std::vector<Component> parts, long long coef)
    {
        if (coef == 0) return;
        Key k = key_of(parts);
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), Term{coef, std::move(parts)});
            return;
        }
        it->second.coef += coef;
        if (it->second.coef == 0) terms_.erase(it);
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Term>& terms() const { return terms_; }

    friend RElement operator+(RElement a, const RElement& b)
    {
        for (const auto& [k, t] : b.terms_) a.add(t.parts, t.coef);
        return a;
    }
    friend RElement operator-(const RElement& a)
    {
        RElement r;
        for (const auto& [k, t] : a.terms_) r.add(t.parts, -t.coef);
        return r;
    }
    friend RElement operator-(const RElement& a, const RElement& b) { return a + (-b); }
    // disjoint union, extended bilinearly
    friend RElement disjoint_union(const RElement& a, const RElement& b)
    {
        RElement r;
        for (const auto& [ka, ta] : a.terms_)
            for (const auto& [kb, tb] : b.terms_) {
                auto parts = ta.parts;
                parts.insert(parts.end(), tb.parts.begin(), tb.parts.end());
                r.add(std::move(parts), ta.coef * tb.coef);
            }
        return r;
    }
    friend bool operator==(const RElement& a, const RElement& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second.coef != ib->second.coef) return false;
        return true;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, t] : terms_) {
            s += (t.coef < 0 ? "- " : (s.empty() ? "" : "+ "));
            long long c = t.coef < 0 ? -t.coef : t.coef;
            if (c != 1) s += std::to_string(c) + " ";
            s += "[";
            for (std::size_t i = 0; i < k.size(); ++i) s += (i ? " | " : "") + k[i];
            s += "] ";
        }
        s.pop_back();
        return s;
    }

  private:
    std::map<Key, Term> terms_;
};

}  // namespace snakecalc

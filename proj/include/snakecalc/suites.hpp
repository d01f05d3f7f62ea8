#pragma once

#include <chrono>

#include "io.hpp"

namespace snakecalc {

struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;
    std::map<std::string, long> by_case;  // cases per resolution tag
    double seconds = 0;

    bool ok() const { return failures == 0 && cases > 0; }
    void record(bool good, const std::string& what)
    {
        ++cases;
        if (!good && failures++ == 0) first_failure = what;
    }
};

// Step words of every snake graph with 1..max_tiles tiles, shortest first.
inline std::vector<std::vector<Dir>> all_words(int max_tiles)
{
    std::vector<std::vector<Dir>> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (static_cast<int>(out[i].size()) + 1 < max_tiles)
            for (Dir d : {Dir::north, Dir::east}) {
                auto w = out[i];
                w.push_back(d);
                out.push_back(w);
            }
    return out;
}

namespace detail {

template <class F>
SuiteResult timed(const std::string& name, F&& body)
{
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    r.name = name;
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline long long m_of(const Snake& g) { return static_cast<long long>(enumerate_matchings(g).size()); }

inline std::string word_or_dash(const std::vector<Dir>& w) { return w.empty() ? "-" : word_string(w); }

// counting identity m(inputs) = m(resolution), signs included
inline void check_count(SuiteResult& r, const Resolution& res, long long lhs, const std::string& what)
{
    long long rhs = count(res.element());
    ++r.by_case[res.tag];
    r.record(rhs == lhs, what + " " + res.tag + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
}

}  // namespace detail

inline SuiteResult pair_counting_suite(int max_tiles)
{
    return detail::timed("pair counting", [&](SuiteResult& r) {
        auto W = all_words(max_tiles);
        for (const auto& a : W)
            for (const auto& b : W) {
                Snake g1 = build_snake(a), g2 = build_snake(b);
                long long lhs = detail::m_of(g1) * detail::m_of(g2);
                for (const auto& ov : find_pair_overlaps(g1, g2)) {
                    if (!is_crossing_pair(g1, g2, ov)) continue;
                    std::string what = detail::word_or_dash(a) + " x " + detail::word_or_dash(b) + " " + overlap_text(ov);
                    try {
                        detail::check_count(r, resolve_pair(g1, g2, ov), lhs, what);
                    } catch (const std::exception& e) {
                        r.record(false, what + ": " + e.what());
                    }
                }
            }
    });
}

inline SuiteResult self_counting_suite(int max_tiles)
{
    return detail::timed("self-crossing counting", [&](SuiteResult& r) {
        for (const auto& a : all_words(max_tiles)) {
            Snake g = build_snake(a);
            long long lhs = detail::m_of(g);
            for (const auto& ov : find_self_overlaps(g)) {
                if (!is_self_crossing(g, ov)) continue;
                std::string what = detail::word_or_dash(a) + " " + overlap_text(ov);
                try {
                    detail::check_count(r, resolve_self(g, ov), lhs, what);
                } catch (const std::exception& e) {
                    r.record(false, what + ": " + e.what());
                }
            }
        }
    });
}

// every position s, and both N and E grafting edges at s = d
inline SuiteResult graft_counting_suite(int max_tiles)
{
    return detail::timed("grafting counting", [&](SuiteResult& r) {
        auto W = all_words(max_tiles);
        auto run = [&](auto make, long long lhs, const std::string& what) {
            try {
                detail::check_count(r, make(), lhs, what);
            } catch (const std::exception& e) {
                r.record(false, what + ": " + e.what());
            }
        };
        for (const auto& a : W) {
            Snake g1 = build_snake(a);
            const int d = g1.d();
            long long m1 = detail::m_of(g1);
            std::string wa = detail::word_or_dash(a);
            for (int s = 1; s <= d; ++s) {
                std::string at = " s=" + std::to_string(s);
                run([&] { return graft_pair(g1, edge_graph(), s); }, m1, wa + " x edge" + at);
                if (s < d) {
                    run([&] { return self_graft(g1, s); }, m1, wa + " self" + at);
                } else {
                    for (Side e : {N, E})
                        run([&] { return self_graft(g1, s, e); }, m1, wa + " self" + at + " delta3=" + side_char(e));
                }
                for (const auto& b : W) {
                    Snake g2 = build_snake(b);
                    long long lhs = m1 * detail::m_of(g2);
                    std::string what = wa + " x " + detail::word_or_dash(b) + at;
                    if (s < d) {
                        run([&] { return graft_pair(g1, g2, s); }, lhs, what);
                    } else {
                        for (Side e : {N, E})
                            run([&] { return graft_pair(g1, g2, s, e); }, lhs, what + " delta3=" + side_char(e));
                    }
                }
            }
        }
    });
}

// enumerate-then-filter against the union over cuts
inline SuiteResult good_matching_suite(int max_tiles)
{
    return detail::timed("good matchings", [&](SuiteResult& r) {
        for (const auto& a : all_words(max_tiles))
            for (Side b : {S, W}) {
                Band band = glue_band(build_snake(a), b);
                std::vector<Matching> filtered;
                for (const auto& gm : enumerate_good_matchings(band)) filtered.push_back(gm.edges);
                std::sort(filtered.begin(), filtered.end());
                r.record(filtered == good_matchings_by_cuts(band), canonical_form(band));
            }
    });
}

inline SuiteResult seed_independence_suite(int max_tiles)
{
    return detail::timed("sign-seed independence", [&](SuiteResult& r) {
        auto W = all_words(max_tiles);
        for (const auto& a : W) {
            Snake g1 = build_snake(a);
            for (const auto& ov : find_self_overlaps(g1))
                r.record(is_self_crossing(g1, ov, 1) == is_self_crossing(g1, ov, -1),
                         detail::word_or_dash(a) + " " + overlap_text(ov));
            for (const auto& b : W) {
                Snake g2 = build_snake(b);
                for (const auto& ov : find_pair_overlaps(g1, g2))
                    r.record(is_crossing_pair(g1, g2, ov, 1) == is_crossing_pair(g1, g2, ov, -1),
                             detail::word_or_dash(a) + " x " + detail::word_or_dash(b) + " " + overlap_text(ov));
            }
        }
    });
}

// ---- labeled identities ---------------------------------------------------------------

inline void check_labeled(SuiteResult& r, const Resolution& res, const std::optional<Overlap>& ov, const Laurent& lhs,
                          const std::string& what)
{
    std::string tag = res.tag;
    if (res.kind == Kind::pair && ov) tag += ov->direction() == Direction::same ? " same" : " opposite";
    ++r.by_case[tag];
    try {
        auto rl = resolution_laurent(res, ov ? &*ov : nullptr);
        r.record(rl.total == lhs, what + " " + tag);
    } catch (const std::exception& e) {
        r.record(false, what + " " + tag + ": " + e.what());
    }
}

inline Laurent record_lhs(const GraphRecord& rec)
{
    Laurent l = 1;
    for (const auto& c : rec.parts) l *= laurent_of(c);
    return l;
}

inline void labeled_records(SuiteResult& r, const std::vector<GraphRecord>& recs, const std::string& file)
{
    for (const auto& rec : recs) {
        std::string what = file + ":" + std::to_string(rec.line);
        std::vector<RecordResolution> rs;
        try {
            rs = record_resolutions(rec);
        } catch (const std::exception& e) {
            r.record(false, what + ": " + e.what());
            continue;
        }
        if (rs.empty()) r.record(false, what + ": no crossing or grafting found");
        Laurent lhs = record_lhs(rec);
        bool named_seen = rec.name.empty();
        for (const auto& rr : rs) {
            check_labeled(r, rr.res, rr.overlap, lhs, what);
            std::string tag = rr.res.tag;
            if (rr.res.kind == Kind::pair && rr.overlap) tag += rr.overlap->direction() == Direction::same ? " same" : " opposite";
            if (tag == rec.name) named_seen = true;
        }
        if (!named_seen) r.record(false, what + ": expected case " + rec.name + " not produced");
    }
}

// Every smoothing of curves with at most max_len crossings on T, plus the
// named curves of the fixture.
inline void labeled_surface(SuiteResult& r, const SurfaceFile& f, const std::string& file, int self_len, int pair_len)
{
    const auto& T = f.T;
    auto run = [&](const std::vector<Smoothing>& sms, const std::string& what) {
        for (const auto& sm : sms) check_labeled(r, sm.res, sm.overlap, sm.lhs, what);
    };
    auto self_arcs = enumerate_arcs(T, self_len);
    for (const auto& c : self_arcs) {
        std::string what = file + " " + curve_text(T, c);
        run(self_smoothings(T, c), what);
        std::set<int> seen;
        for (int tau : c.crossings)
            if (seen.insert(tau).second) run(arc_smoothings(T, c, tau), what + " with arc " + T.name(tau));
    }
    auto pair_arcs = enumerate_arcs(T, pair_len);
    for (const auto& a : pair_arcs)
        for (const auto& b : pair_arcs) run(pair_smoothings(T, a, b), file + " " + curve_text(T, a) + " / " + curve_text(T, b));
    std::vector<CurveSpec> named;
    for (const auto& c : f.curves)
        if (!c.loop && !c.contractible) named.push_back(c);
    for (const auto& a : named) {
        run(self_smoothings(T, a), file + " " + curve_text(T, a));
        for (const auto& b : named)
            if (&a != &b) run(pair_smoothings(T, a, b), file + " " + curve_text(T, a) + " / " + curve_text(T, b));
    }
}

// ---- fixtures -----------------------------------------------------------------------

inline std::map<std::string, Laurent> named_values(const SurfaceFile& f)
{
    std::map<std::string, Laurent> v;
    for (const auto& c : f.curves)
        if (!c.name.empty()) v[c.name] = curve_laurent(f.T, c);
    return v;
}

// "identity: <lhs> = <rhs>" directives of a surface file
struct IdentityCheck {
    std::string text;
    Laurent lhs, rhs;
    bool ok() const { return lhs == rhs; }
};

inline std::vector<IdentityCheck> check_identities(const SurfaceFile& f)
{
    std::vector<IdentityCheck> out;
    auto vals = named_values(f);
    for (const auto& [k, v] : f.directives) {
        if (k != "identity") continue;
        auto eq = v.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("identity needs '='");
        out.push_back({v, evaluate_expression(v.substr(0, eq), vals), evaluate_expression(v.substr(eq + 1), vals)});
    }
    return out;
}

inline SuiteResult positivity_suite(const std::vector<std::pair<std::string, SurfaceFile>>& fixtures, int max_len)
{
    return detail::timed("positivity", [&](SuiteResult& r) {
        for (const auto& [file, f] : fixtures) {
            auto arcs = enumerate_arcs(f.T, max_len);
            for (const auto& c : f.curves)
                if (!c.loop && !c.contractible && c.kinks == 0) arcs.push_back(c);
            for (const auto& c : arcs) {
                Laurent v = cluster_variable(f.T, c);
                r.record(v.positive(), file + " " + curve_text(f.T, c) + " = " + v.to_string());
            }
        }
    });
}

}  // namespace snakecalc

// Command-line front end: matchings, resolutions, Laurent polynomials and
// skein checks on snake graphs and triangulated surfaces.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "snakecalc/suites.hpp"

using namespace snakecalc;
namespace fs = std::filesystem;

#ifndef SNAKECALC_FIXTURE_DIR
#define SNAKECALC_FIXTURE_DIR "fixtures"
#endif

namespace {

constexpr int kOk = 0, kFailed = 1, kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<GraphRecord> read_records(const std::string& path)
{
    try {
        return load_graph_file(path);
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

SurfaceFile read_surface(const std::string& path)
{
    try {
        return load_surface(path);
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string record_header(const std::vector<GraphRecord>& recs, const GraphRecord& r)
{
    if (recs.size() < 2) return "";
    return "record at line " + std::to_string(r.line) + (r.name.empty() ? "" : " (" + r.name + ")") + "\n";
}

// ---- matchings -----------------------------------------------------------------

int cmd_matchings(const std::string& path, bool list, std::ostream& out)
{
    auto recs = read_records(path);
    std::size_t total = 0;
    for (const auto& r : recs) total += r.parts.size();
    for (const auto& r : recs)
        for (const auto& c : r.parts) {
            if (total > 1) out << to_text(c) << "\n";
            std::vector<Matching> ms;
            if (auto* g = std::get_if<Snake>(&c)) {
                ms = enumerate_matchings(*g);
                out << ms.size() << " matchings\n";
            } else {
                for (const auto& gm : enumerate_good_matchings(std::get<Band>(c))) ms.push_back(gm.edges);
                out << ms.size() << " good matchings\n";
            }
            if (list)
                for (const auto& m : ms) out << "  " << matching_text(m) << "\n";
        }
    return kOk;
}

// ---- resolve / graft ---------------------------------------------------------------

void print_terms(const Resolution& res, std::ostream& out)
{
    out << "term +1\n";
    for (const auto& c : res.first) out << "  " << to_text(c) << "\n";
    if (res.second_zero) {
        out << "term 0\n";
        return;
    }
    out << (res.second_sign > 0 ? "term +1\n" : "term -1\n");
    for (const auto& c : res.second) out << "  " << to_text(c) << "\n";
}

// prints one resolution with its counting (and, when labeled, Laurent) check
bool print_resolution(const GraphRecord& rec, const RecordResolution& rr, std::ostream& out)
{
    const Resolution& res = rr.res;
    out << "case: " << res.tag << "\n";
    if (rr.overlap) out << "overlap: " << overlap_text(*rr.overlap) << "\n";
    if (res.delta3) {
        const Snake& g = res.inputs[0];
        out << "graft: s=" << res.s << " delta3=" << side_char(locate(g, *res.delta3).side) << "\n";
    }
    print_terms(res, out);
    bool ok = true;
    long long lhs = 1;
    for (const auto& c : rec.parts) lhs *= count_matchings(c);
    long long rhs = count(res.element());
    out << "count: " << lhs << (lhs == rhs ? " = " : " != ") << rhs << "\n";
    ok = lhs == rhs;
    bool labeled = std::all_of(rec.parts.begin(), rec.parts.end(), [](const Component& c) { return base_of(c).labeled(); });
    if (labeled) {
        try {
            auto rl = resolution_laurent(res, rr.overlap ? &*rr.overlap : nullptr);
            bool lok = rl.total == record_lhs(rec);
            out << "coefficients: " << rl.first_coef.to_string() << " ; " << rl.second_coef.to_string() << "\n";
            out << "laurent: " << (lok ? "equal" : "NOT equal") << "\n";
            ok = ok && lok;
        } catch (const std::exception& e) {
            out << "laurent: error: " << e.what() << "\n";
            ok = false;
        }
    }
    return ok;
}

int cmd_resolve(const std::string& path, bool both_seeds, std::ostream& out)
{
    auto recs = read_records(path);
    bool ok = true;
    for (const auto& r : recs) {
        out << record_header(recs, r);
        std::vector<RecordResolution> rs;
        try {
            rs = record_resolutions(r);
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ": line " + std::to_string(r.line) + ": " + e.what());
        }
        if (rs.empty()) out << "no crossing overlap; nothing to resolve\n";
        for (const auto& rr : rs) ok = print_resolution(r, rr, out) && ok;
        if (both_seeds && !r.graft && !r.self_graft) {
            auto other = record_resolutions(r, -1);
            bool same = other.size() == rs.size();
            for (std::size_t i = 0; same && i < rs.size(); ++i) same = *other[i].overlap == *rs[i].overlap;
            out << "sign seeds: " << (same ? "same crossings" : "DIFFERENT crossings") << "\n";
            ok = ok && same;
        }
    }
    return ok ? kOk : kFailed;
}

int cmd_graft(const std::string& path, int at, const std::string& d3, std::ostream& out)
{
    auto recs = read_records(path);
    bool ok = true;
    for (auto r : recs) {
        out << record_header(recs, r);
        if (at > 0) r.at = at;
        if (!d3.empty()) r.delta3 = d3 == "N" ? N : E;
        if (!r.graft && !r.self_graft) {
            if (r.at < 1) throw InputError(path + ": line " + std::to_string(r.line) + ": no grafting position (use --at)");
            r.graft = r.parts.size() == 2;
            r.self_graft = r.parts.size() == 1;
        }
        std::vector<RecordResolution> rs;
        try {
            rs = record_resolutions(r);
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ": line " + std::to_string(r.line) + ": " + e.what());
        }
        for (const auto& rr : rs) ok = print_resolution(r, rr, out) && ok;
    }
    return ok ? kOk : kFailed;
}

// ---- laurent / cluster-var ------------------------------------------------------------

int cmd_laurent(const std::string& path, std::ostream& out)
{
    auto recs = read_records(path);
    for (const auto& r : recs) {
        out << record_header(recs, r);
        for (const auto& c : r.parts) out << to_text(c) << "\n  = " << laurent_of(c).to_string() << "\n";
        if (r.parts.size() > 1) out << "product = " << record_lhs(r).to_string() << "\n";
    }
    return kOk;
}

int cmd_cluster_var(const std::string& path, std::ostream& out)
{
    auto f = read_surface(path);
    bool ok = true;
    for (const auto& c : f.curves) {
        Laurent v;
        try {
            v = curve_laurent(f.T, c);
        } catch (const std::exception& e) {
            throw InputError(path + ": " + curve_text(f.T, c) + ": " + e.what());
        }
        out << curve_text(f.T, c) << " = " << v.to_string() << "\n";
        if (!c.loop && c.kinks == 0 && !v.positive()) {
            out << "  not positive\n";
            ok = false;
        }
    }
    return ok ? kOk : kFailed;
}

// ---- skein ----------------------------------------------------------------------------

int skein_report(const std::string& path, const std::vector<std::string>& names, std::ostream& out)
{
    auto f = read_surface(path);
    const auto& T = f.T;
    std::vector<CurveSpec> chosen;
    if (names.empty()) {
        for (const auto& c : f.curves)
            if (!c.loop && chosen.size() < 2) chosen.push_back(c);
    } else {
        for (const auto& n : names) {
            auto it = std::find_if(f.curves.begin(), f.curves.end(), [&](const CurveSpec& c) { return c.name == n; });
            if (it == f.curves.end()) throw InputError(path + ": no curve named '" + n + "'");
            if (it->loop) throw InputError(path + ": '" + n + "' is a loop; skein takes arcs");
            chosen.push_back(*it);
        }
    }
    if (chosen.empty() || chosen.size() > 2) throw InputError(path + ": skein needs one or two arcs");
    bool ok = true;
    SkeinReport rep = chosen.size() == 2 ? skein_check(T, chosen[0], chosen[1]) : skein_check(T, chosen[0]);
    out << "curves:";
    for (const auto& c : chosen) out << " " << curve_text(T, c);
    out << "\n";
    if (rep.compatible) out << "compatible, nothing to smooth\n";
    for (const auto& t : rep.terms) {
        out << "smoothing " << t.tag << ": Y1 = " << t.y1.to_string() << ", Y2 = " << t.y2.to_string()
            << ", sign " << (t.sign > 0 ? "+" : "-") << ": " << (t.ok ? "ok" : "FAILED") << "\n";
        if (!t.error.empty()) out << "  error: " << t.error << "\n";
    }
    ok = rep.ok();
    std::vector<IdentityCheck> ids;
    try {
        ids = check_identities(f);
    } catch (const std::exception& e) {
        throw InputError(path + ": identity: " + e.what());
    }
    for (const auto& id : ids) {
        out << "identity: " << id.text << "\n";
        out << "  lhs = " << id.lhs.to_string() << "\n";
        out << "  rhs = " << id.rhs.to_string() << "\n";
        out << "  " << (id.ok() ? "equal" : "NOT equal") << "\n";
        ok = ok && id.ok();
    }
    return ok ? kOk : kFailed;
}

int compare_golden(const std::string& text, const fs::path& golden, std::ostream& err)
{
    std::ifstream in(golden);
    if (!in) {
        err << "missing golden file " << golden.string() << "\n";
        return kInputError;
    }
    std::string want{std::istreambuf_iterator<char>(in), {}};
    if (want == text) return kOk;
    err << "output differs from " << golden.string() << "\n";
    return kFailed;
}

int cmd_skein(const std::string& path, const std::vector<std::string>& names, const std::string& golden, std::ostream& out)
{
    std::ostringstream buf;
    int rc = skein_report(path, names, buf);
    out << buf.str();
    if (!golden.empty()) {
        int g = compare_golden(buf.str(), fs::path(golden) / (fs::path(path).stem().string() + ".skein.txt"), std::cerr);
        if (g == kInputError) return g;
        if (g != kOk) rc = kFailed;
        out << "golden: " << (g == kOk ? "match" : "MISMATCH") << "\n";
    }
    return rc;
}

// ---- selftest --------------------------------------------------------------------------

void print_suite(const SuiteResult& r, std::ostream& out)
{
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    if (r.failures) out << "  first failure: " << r.first_failure << "\n";
}

int cmd_selftest(int max_tiles, bool both_seeds, const std::string& golden, const std::string& dir, std::ostream& out)
{
    if (max_tiles < 1 || max_tiles > 9) throw InputError("--max-tiles must be between 1 and 9");
    bool ok = true;
    auto show = [&](const SuiteResult& r) {
        print_suite(r, out);
        ok = ok && r.ok();
    };
    show(pair_counting_suite(max_tiles));
    show(self_counting_suite(max_tiles));
    show(graft_counting_suite(max_tiles));
    show(good_matching_suite(max_tiles));
    if (both_seeds) show(seed_independence_suite(max_tiles));

    std::vector<std::pair<std::string, SurfaceFile>> surfaces;
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".txt") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    SuiteResult labeled;
    labeled.name = "labeled identities";
    for (const auto& p : files) {
        std::string stem = fs::path(p).stem().string();
        if (stem == "labeled") {
            labeled_records(labeled, read_records(p), stem);
            continue;
        }
        auto f = read_surface(p);
        labeled_surface(labeled, f, stem, std::min(max_tiles, 6), std::min(max_tiles, 3));
        surfaces.emplace_back(stem, f);
    }
    show(labeled);
    show(positivity_suite(surfaces, max_tiles));
    for (const auto& [stem, f] : surfaces) {
        if (std::none_of(f.curves.begin(), f.curves.end(), [](const CurveSpec& c) { return !c.loop; })) continue;
        std::ostringstream sink;
        int rc = skein_report(dir + "/" + stem + ".txt", {}, sink);
        SuiteResult r;
        r.name = "skein " + stem;
        r.record(rc == kOk, "see `snakecalc skein`");
        if (!golden.empty()) {
            fs::path g = fs::path(golden) / (stem + ".skein.txt");
            if (fs::exists(g)) {
                std::ostringstream err;
                r.record(compare_golden(sink.str(), g, err) == kOk, err.str());
            }
        }
        show(r);
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"snake graph calculus: matchings, resolutions, Laurent polynomials, skein checks"};
    app.require_subcommand(1);
    std::string file, golden, delta3, fixtures = SNAKECALC_FIXTURE_DIR;
    bool list = false, both_seeds = false;
    int max_tiles = 5, at = 0;
    std::vector<std::string> curves;

    auto* m = app.add_subcommand("matchings", "count (and list) perfect matchings; good matchings for bands");
    m->add_option("file", file, "graph file")->required();
    m->add_flag("--list", list, "print every matching as sorted (tile,side) edges");

    auto* r = app.add_subcommand("resolve", "resolve every crossing overlap of one or two snake graphs");
    r->add_option("file", file, "graph file")->required();
    r->add_flag("--both-seeds", both_seeds, "also compare crossing verdicts under the other sign function");

    auto* g = app.add_subcommand("graft", "grafting or self-grafting of the graphs in a file");
    g->add_option("file", file, "graph file")->required();
    g->add_option("--at", at, "grafting position s")->check(CLI::PositiveNumber);
    g->add_option("--delta3", delta3, "grafting edge at the last tile")->check(CLI::IsMember({"N", "E"}));

    auto* l = app.add_subcommand("laurent", "Laurent polynomial of every graph in a file");
    l->add_option("file", file, "graph file")->required();

    auto* cv = app.add_subcommand("cluster-var", "Laurent expansion of every arc and loop of a surface file");
    cv->add_option("file", file, "surface file")->required();

    auto* sk = app.add_subcommand("skein", "smooth the crossings of two arcs (or one) and check the identities");
    sk->add_option("file", file, "surface file")->required();
    sk->add_option("--curve", curves, "named arc to use (once or twice); default: the first two arcs");
    sk->add_option("--golden", golden, "directory with expected <stem>.skein.txt output");

    auto* st = app.add_subcommand("selftest", "exhaustive small-instance suites and the fixture checks");
    st->add_option("--max-tiles", max_tiles, "largest snake graph in the exhaustive suites");
    st->add_flag("--both-seeds", both_seeds, "include the sign-seed independence suite");
    st->add_option("--golden", golden, "directory with expected skein output");
    st->add_option("--fixtures", fixtures, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kInputError;
    }

    try {
        if (*m) return cmd_matchings(file, list, std::cout);
        if (*r) return cmd_resolve(file, both_seeds, std::cout);
        if (*g) return cmd_graft(file, at, delta3, std::cout);
        if (*l) return cmd_laurent(file, std::cout);
        if (*cv) return cmd_cluster_var(file, std::cout);
        if (*sk) return cmd_skein(file, curves, golden, std::cout);
        if (*st) return cmd_selftest(max_tiles, both_seeds, golden, fixtures, std::cout);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kInputError;
}

// One line per acceptance criterion; exit status 1 if any fails.
#include <filesystem>
#include <iomanip>
#include <iostream>

#include "snakecalc/suites.hpp"

using namespace snakecalc;
namespace fs = std::filesystem;

namespace {

bool report(int n, const std::string& what, const SuiteResult& r, double budget, const std::string& extra = "")
{
    bool in_time = r.seconds < budget;
    bool ok = r.ok() && in_time;
    std::cout << "criterion " << n << " " << (ok ? "PASS" : "FAIL") << " " << what << ": " << r.cases << " cases, "
              << r.failures << " failures, " << std::fixed << std::setprecision(2) << r.seconds << " s (budget " << budget
              << " s)" << extra << "\n";
    if (r.failures) std::cout << "  first failure: " << r.first_failure << "\n";
    if (!in_time) std::cout << "  over the time budget\n";
    return ok;
}

// cases a labeled fixture file must cover; s'=t+1(b) and s'>t+1(d) need
// s = 1 with t' = d, which no self-crossing satisfies
const std::vector<std::string> kCases = {
    "PAIR same",           "PAIR opposite",       "SELF-OPPOSITE",         "SELF-SAME-s'<=t",
    "SELF-SAME-s'=t+1(a)", "SELF-SAME-s'=t+1(c)+", "SELF-SAME-s'=t+1(c)-",  "SELF-SAME-s'=t+1(d)",
    "SELF-SAME-s'>t+1(a)", "SELF-SAME-s'>t+1(b)", "SELF-SAME-s'>t+1(c)",   "GRAFT-1",
    "GRAFT-2",             "GRAFT-3",             "SELFGRAFT-1",           "SELFGRAFT-2"};

}  // namespace

int main(int argc, char** argv)
{
    std::string dir = argc > 1 ? argv[1] : SNAKECALC_FIXTURE_DIR;
    std::vector<std::pair<std::string, SurfaceFile>> surfaces;
    std::vector<GraphRecord> labeled;
    try {
        for (std::string stem : {"torus", "annulus1", "annulus2"}) surfaces.emplace_back(stem, load_surface(dir + "/" + stem + ".txt"));
        labeled = load_graph_file(dir + "/labeled.txt");
    } catch (const std::exception& e) {
        std::cerr << "cannot load fixtures: " << e.what() << "\n";
        return 2;
    }
    bool all = true;

    all &= report(1, "pair counting identity, <= 5 tiles", pair_counting_suite(5), 60);
    all &= report(2, "self-crossing counting identities, <= 7 tiles", self_counting_suite(7), 120);
    all &= report(3, "grafting and self-grafting counting identities, <= 5 tiles", graft_counting_suite(5), 60);

    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult r;
        r.name = "labeled";
        for (const auto& [stem, f] : surfaces) labeled_surface(r, f, stem, 6, 3);
        SuiteResult abstract;
        labeled_records(abstract, labeled, "labeled");
        r.cases += abstract.cases;
        if (abstract.failures && !r.failures) r.first_failure = abstract.first_failure;
        r.failures += abstract.failures;
        std::set<std::string> covered;
        for (const auto& rec : labeled) covered.insert(rec.name);
        std::string missing;
        for (const auto& c : kCases)
            if (!covered.count(c)) missing += " " + c;
        bool enough = labeled.size() >= 50 && missing.empty();
        r.record(enough, "labeled fixtures: " + std::to_string(labeled.size()) + " records, missing cases:" + missing);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all &= report(4, "labeled identity on surface curves and abstract fixtures", r, 60,
                      ", " + std::to_string(labeled.size()) + " abstract fixtures covering " +
                          std::to_string(covered.size()) + " cases");
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult r;
        const SurfaceFile& torus = surfaces[0].second;
        auto ids = check_identities(torus);
        r.record(ids.size() == 1, "torus fixture has no identity line");
        for (const auto& id : ids) r.record(id.lhs.to_string() == id.rhs.to_string(), "torus identity differs");
        auto rep = skein_check(torus.T, torus.curves[0], torus.curves[1]);
        r.record(!rep.compatible && rep.ok(), "skein on gamma1, gamma2");
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all &= report(5, "torus golden identity", r, 5);
    }

    all &= report(6, "good matchings: filter equals union over cuts, <= 5 tiles", good_matching_suite(5), 30);
    all &= report(7, "sign-seed independence, <= 6 tiles", seed_independence_suite(6), 30);
    all &= report(8, "positivity of cluster variables on fixtures", positivity_suite(surfaces, 6), 10);

    return all ? 0 : 1;
}

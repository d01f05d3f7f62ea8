// Writes labeled snake-graph records taken from curves on the surface
// fixtures: the first few instances of every resolution case, in
// enumeration order. Usage: make_labeled_fixtures <surface.txt>... > labeled.txt
#include <iostream>

#include "snakecalc/io.hpp"

using namespace snakecalc;

namespace {

constexpr int kPerCase = 2;
constexpr int kSelfLen = 9;
constexpr int kPairLen = 4;

std::string with_dir(const Smoothing& sm)
{
    if (sm.res.kind != Kind::pair || !sm.overlap) return sm.res.tag;
    return sm.res.tag + (sm.overlap->direction() == Direction::same ? " same" : " opposite");
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: make_labeled_fixtures <surface.txt>...\n";
        return 2;
    }
    std::cout << "# labeled snake graphs read off curves on the surface fixtures\n"
                 "# generated by make_labeled_fixtures; one block per instance\n";
    for (int i = 1; i < argc; ++i) {
        std::string path = argv[i];
        SurfaceFile f;
        try {
            f = load_surface(path);
        } catch (const std::exception& e) {
            std::cerr << path << ": " << e.what() << "\n";
            return 2;
        }
        std::string stem = path.substr(path.find_last_of('/') + 1);
        const auto& T = f.T;
        std::map<std::string, int> taken;
        auto emit = [&](const std::string& tag, const std::string& origin, const std::vector<Component>& parts,
                        const std::string& graft_line) {
            if (taken[tag]++ >= kPerCase) return;
            std::cout << "\n# " << stem << ": " << origin << "\ncase: " << tag << "\n";
            for (const auto& c : parts) std::cout << to_text(c) << "\n";
            if (!graft_line.empty()) std::cout << graft_line << "\n";
        };
        auto graft_text = [](const Resolution& r, const char* key) {
            std::string s = std::string(key) + ": s=" + std::to_string(r.s);
            if (r.delta3 && r.s == r.inputs[0].d()) s += std::string(" delta3=") + side_char(locate(r.inputs[0], *r.delta3).side);
            return s;
        };
        for (const auto& c : enumerate_arcs(T, kSelfLen)) {
            Snake g = build_labeled_snake(T, c);
            for (const auto& sm : self_smoothings(T, c)) {
                const char* key = sm.res.kind == Kind::self_graft ? "self-graft" : nullptr;
                emit(with_dir(sm), curve_text(T, c), {g}, key ? graft_text(sm.res, key) : "");
            }
            std::set<int> seen;
            for (int tau : c.crossings)
                if (seen.insert(tau).second)
                    for (const auto& sm : arc_smoothings(T, c, tau))
                        emit(with_dir(sm), curve_text(T, c) + " with arc " + T.name(tau), {g, arc_graph(T, tau)},
                             graft_text(sm.res, "graft"));
        }
        auto arcs = enumerate_arcs(T, kPairLen);
        for (const auto& a : arcs)
            for (const auto& b : arcs)
                for (const auto& sm : pair_smoothings(T, a, b)) {
                    std::vector<Component> parts{build_labeled_snake(T, a), build_labeled_snake(T, b)};
                    emit(with_dir(sm), curve_text(T, a) + " / " + curve_text(T, b), parts,
                         sm.res.kind == Kind::graft ? graft_text(sm.res, "graft") : "");
                }
    }
    return 0;
}

// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.
//
// Usage: acceptance <path-to-cli> <golden-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nccdim/json_io.hpp"
#include "nccdim/nccdim.hpp"
#include "nccdim/table.hpp"
#include "support/generators.hpp"
#include "support/tree_catalogue.hpp"

namespace {

std::string g_cli;
std::string g_golden;
int g_failures = 0;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(elapsed < time_limit_s, "exceeded the time limit");
    std::printf("[%s] %d. %s (%.2fs, limit %.0fs)%s%s\n", check.ok ? "PASS" : "FAIL", number,
                name.c_str(), elapsed, time_limit_s, check.ok ? "" : " -- ",
                check.ok ? "" : check.detail.c_str());
    std::fflush(stdout);
    if (!check.ok) ++g_failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1. The table subcommand reproduces the golden five-row classification.
void figure_reproduction(Check& check) {
    int code = 0;
    const auto md = run_cli("table --format markdown", code);
    check.expect(code == 0, "table --format markdown exited " + std::to_string(code));
    check.expect(md == read_file(g_golden + "/table.md"), "markdown table deviates from golden");
    const auto js = run_cli("table --format json", code);
    check.expect(code == 0, "table --format json exited " + std::to_string(code));
    check.expect(js == read_file(g_golden + "/table.json"), "json table deviates from golden");
    check.expect(std::count(md.begin(), md.end(), '\n') == 7, "expected 5 rows plus header");
}

// 2. ddim = 1 exactly on negative canonical degree, and the negative
//    triples up to 50 are exactly the five families.
void theorem_b_trichotomy(Check& check) {
    auto verify = [&](const nccdim::CurveSignature& sig) {
        const bool negative = nccdim::omega_degree(sig) < nccdim::Rational(0);
        const auto report = nccdim::dimension_report(sig);
        check.expect((report.ddim == 1) == negative, "ddim does not follow the sign");
        check.expect(report.ddim == 1 || report.ddim == 2, "ddim out of range");
    };
    verify(nccdim::CurveSignature::make(0, {}));
    for (int a = 2; a <= 50; ++a) verify(nccdim::CurveSignature::make(0, {a}));
    for (int a = 2; a <= 50; ++a)
        for (int b = a; b <= 50; ++b) verify(nccdim::CurveSignature::make(0, {a, b}));
    for (int a = 2; a <= 50; ++a)
        for (int b = a; b <= 50; ++b)
            for (int c = b; c <= 50; ++c) verify(nccdim::CurveSignature::make(0, {a, b, c}));

    testgen::Rng rng(0xACCE0002);
    for (int i = 0; i < 200; ++i) verify(testgen::random_signature(rng, 5, 6, 50));

    std::set<std::array<int, 3>> families;
    for (int p = 1; p <= 50; ++p)
        for (int q = p; q <= 50; ++q) families.insert({1, p, q});
    for (int r = 2; r <= 50; ++r) families.insert({2, 2, r});
    families.insert({2, 3, 3});
    families.insert({2, 3, 4});
    families.insert({2, 3, 5});
    check.expect(nccdim::enumerate_negative_triples(50) == families,
                 "negative triples up to 50 are not exactly the five families");
}

// 3. Exact support-property verification on the stated signatures.
void support_property(Check& check) {
    const std::vector<nccdim::CurveSignature> sigs = {
        nccdim::CurveSignature::make(1, {}),       nccdim::CurveSignature::make(0, {2}),
        nccdim::CurveSignature::make(0, {2, 3}),   nccdim::CurveSignature::make(0, {2, 3, 5}),
        nccdim::CurveSignature::make(2, {2, 2}),
    };
    for (const auto& sig : sigs) {
        const auto rep = nccdim::check_support(sig, 4);
        check.expect(rep.ok, "support inequality failed");
        check.expect(rep.min_ratio >= nccdim::support_lower_bound(sig),
                     "min ratio below the support constant");
        double expected = 1.0;
        for (int t = 0; t < nccdim::cr_rank(sig); ++t) expected *= 5.0;
        check.expect(rep.checked == static_cast<std::uint64_t>(expected) - 1,
                     "unexpected enumeration count");
    }
}

// 4. The closed-form H is sufficient just above and tight just below.
void gldim_bound(Check& check) {
    using nccdim::Rational;
    const std::vector<Rational> degrees = {Rational(1, 42), Rational(1, 30), Rational(2),
                                           Rational(10)};
    const std::vector<Rational> epsilons = {Rational(1, 10), Rational(1, 4), Rational(1, 2)};
    for (const auto& d : degrees)
        for (const auto& eps : epsilons) {
            const double h = nccdim::min_h_for_omega(d, eps);
            const double above = nccdim::sampled_sup_phase_gap(d, h * (1.0 + 1e-6));
            const double below = nccdim::sampled_sup_phase_gap(d, h * (1.0 - 1e-2));
            check.expect(above < eps.to_double() - 1e-9, "sup not below eps above the bound");
            check.expect(below > eps.to_double() + 1e-9, "sup not above eps below the bound");
        }
}

// 5. Ring axioms, duality, character round trip, integrality closure.
void k_theory_ring(Check& check) {
    testgen::Rng rng(0xACCE0005);
    for (int i = 0; i < 10000; ++i) {
        const auto sig = testgen::random_signature(rng, 3, 3, 7);
        const auto a = testgen::random_kclass(rng, sig, 5);
        const auto b = testgen::random_kclass(rng, sig, 5);
        const auto c = testgen::random_kclass(rng, sig, 5);
        const auto one = nccdim::KClass::trivial(sig);
        check.expect(nccdim::add(a, b) == nccdim::add(b, a), "add not commutative");
        check.expect(nccdim::tensor(a, b) == nccdim::tensor(b, a), "tensor not commutative");
        check.expect(nccdim::tensor(nccdim::tensor(a, b), c) ==
                         nccdim::tensor(a, nccdim::tensor(b, c)),
                     "tensor not associative");
        check.expect(nccdim::tensor(a, nccdim::add(b, c)) ==
                         nccdim::add(nccdim::tensor(a, b), nccdim::tensor(a, c)),
                     "tensor does not distribute");
        check.expect(nccdim::tensor(a, one) == a, "unit fails");
        check.expect(nccdim::dual(nccdim::dual(a)) == a, "dual not an involution");
        check.expect(nccdim::ch_orb_inverse(nccdim::ch_orb(a, sig), sig) == a,
                     "character round trip fails");
        check.expect(nccdim::integrality_holds(nccdim::add(a, b)) &&
                         nccdim::integrality_holds(nccdim::tensor(a, b)) &&
                         nccdim::integrality_holds(nccdim::dual(a)),
                     "integrality not closed under the ring operations");
        if (!check.ok) return;
    }
}

// 6. HN normal form, duality, twisting and the inclusive split.
void hn_suite(Check& check) {
    testgen::Rng rng(0xACCE0006);
    for (int i = 0; i < 10000; ++i) {
        const auto sig = testgen::random_signature(rng, 2, 2, 5);
        auto pieces = testgen::random_pieces(rng, sig, 5);
        const auto f = nccdim::hn_normalize(pieces);
        check.expect(nccdim::hn_normalize(f.pieces) == f, "normalize not idempotent");

        auto shuffled = pieces;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        check.expect(nccdim::hn_normalize(shuffled) == f, "normalize depends on input order");

        nccdim::KClass before = nccdim::KClass::zero(sig);
        for (const auto& piece : pieces) before = nccdim::add(before, piece);
        check.expect(nccdim::total_class(f, sig) == before, "normalize loses the total class");

        // duality on the bundle part, against the per-piece oracle
        std::vector<nccdim::KClass> bundles;
        for (auto piece : pieces) {
            if (piece.rank == 0) piece.rank = 1;
            bundles.push_back(piece);
        }
        const auto fb = nccdim::hn_normalize(bundles);
        const auto fd = nccdim::dual_hn(fb);
        std::vector<nccdim::KClass> dual_pieces;
        for (const auto& piece : fb.pieces) dual_pieces.push_back(nccdim::dual(piece));
        check.expect(fd == nccdim::hn_normalize(dual_pieces), "dual disagrees with the oracle");
        check.expect(nccdim::dual_hn(fd) == fb, "dual not an involution");
        for (std::size_t k = 0; k < fb.pieces.size(); ++k) {
            const auto s = nccdim::slope(fb.pieces[k]).value;
            const auto sd = nccdim::slope(fd.pieces[fd.pieces.size() - 1 - k]).value;
            check.expect(sd == -s, "dual slopes are not reversed negations");
        }

        const auto line = testgen::random_line_class(rng, sig);
        const auto tw = nccdim::twist(f, line);
        for (std::size_t k = 0; k < f.pieces.size(); ++k) {
            const auto s = nccdim::slope(f.pieces[k]);
            const auto st = nccdim::slope(tw.pieces[k]);
            if (s.infinite)
                check.expect(st.infinite, "torsion did not stay torsion under twist");
            else
                check.expect(st.value == s.value + line.degree, "twist shift is not deg L");
        }

        const auto split = nccdim::orlov_split(f, sig);
        const nccdim::Slope threshold = nccdim::Slope::finite(nccdim::Rational(
            4 * static_cast<std::int64_t>(sig.genus()) + 2 * sig.stacky_count()));
        for (const auto& piece : split.top.pieces)
            check.expect(nccdim::slope(piece) >= threshold, "top piece below the threshold");
        for (const auto& piece : split.bottom.pieces)
            check.expect(nccdim::slope(piece) < threshold, "bottom piece reaches the threshold");
        check.expect(nccdim::add(nccdim::total_class(split.top, sig),
                                 nccdim::total_class(split.bottom, sig)) ==
                         nccdim::total_class(f, sig),
                     "split loses the total class");
        if (!check.ok) return;
    }
}

// 7. Quiver recognition against the exhaustive catalogue, root-system
//    Coxeter numbers, and the extended star family.
void quiver_recognition(Check& check) {
    const auto catalogue = treecat::shape_catalogue(9);
    for (int n = 1; n <= 9 && check.ok; ++n) {
        for (const auto& edges : treecat::all_trees(n)) {
            const auto it = catalogue.find(treecat::canonical_tree(n, edges));
            const unsigned orientations = edges.empty() ? 1u : (1u << edges.size());
            for (unsigned mask = 0; mask < orientations; ++mask) {
                nccdim::Quiver q;
                q.vertex_count = n;
                for (std::size_t k = 0; k < edges.size(); ++k) {
                    auto [a, b] = edges[k];
                    if (mask & (1u << k)) std::swap(a, b);
                    q.arrows.emplace_back(a, b);
                }
                const auto cls = nccdim::classify(q);
                if (it == catalogue.end()) {
                    check.expect(cls.kind == nccdim::QuiverKind::Wild,
                                 "uncatalogued tree not wild");
                } else if (it->second.first == treecat::Verdict::Dynkin) {
                    check.expect(cls.kind == nccdim::QuiverKind::Dynkin &&
                                     cls.type->name() == it->second.second,
                                 "Dynkin tree misclassified: " + it->second.second);
                } else {
                    check.expect(cls.kind == nccdim::QuiverKind::Extended,
                                 "extended tree misclassified: " + it->second.second);
                }
                if (!check.ok) return;
            }
        }
    }

    for (int n = 1; n <= 40; ++n)
        check.expect(nccdim::coxeter_number({nccdim::DynkinSeries::A, n}) == n + 1,
                     "Coxeter number of A" + std::to_string(n));
    for (int n = 4; n <= 40; ++n)
        check.expect(nccdim::coxeter_number({nccdim::DynkinSeries::D, n}) == 2 * n - 2,
                     "Coxeter number of D" + std::to_string(n));
    check.expect(nccdim::coxeter_number({nccdim::DynkinSeries::E, 6}) == 12, "E6");
    check.expect(nccdim::coxeter_number({nccdim::DynkinSeries::E, 7}) == 18, "E7");
    check.expect(nccdim::coxeter_number({nccdim::DynkinSeries::E, 8}) == 30, "E8");

    for (const auto& t : nccdim::enumerate_negative_triples(50)) {
        const auto star = nccdim::gl_star_quiver(t[0], t[1], t[2]);
        check.expect(star.classification.kind == nccdim::QuiverKind::Extended,
                     "star for a negative triple is not extended");
        check.expect(star.quiver.vertex_count == t[0] + t[1] + t[2] - 1,
                     "unexpected extended star size");
        if (!check.ok) return;
    }
}

// 8. Soundness of the vanishing oracle and the derived high-slope rule.
void vanishing_soundness(Check& check) {
    const auto g1 = nccdim::CurveSignature::make(1, {});
    const auto triv = nccdim::vanishing_oracle(nccdim::KClass::trivial(g1), g1);
    check.expect(triv.h0 == nccdim::Cohomology::Unknown,
                 "oracle claims h0 = 0 on the structure sheaf");

    testgen::Rng rng(0xACCE0008);
    for (int i = 0; i < 500; ++i) {
        const auto sig = testgen::random_signature(rng);
        check.expect(nccdim::omega_degree(sig) <
                         nccdim::Rational(2 * static_cast<std::int64_t>(sig.genus()) +
                                          sig.stacky_count() - 1),
                     "deg(omega) >= 2g + n - 1 for some signature");
        nccdim::KClass a = nccdim::KClass::trivial(sig);
        a.rank = testgen::uniform(rng, 1, 4);
        a.degree = nccdim::Rational(a.rank) *
                   (nccdim::Rational(2 * static_cast<std::int64_t>(sig.genus()) +
                                     sig.stacky_count()) +
                    nccdim::Rational(testgen::uniform(rng, 0, 12), 4));
        nccdim::WeilDivisor d;
        d.set(nccdim::PointId::smooth("q"), testgen::uniform(rng, -1, 8));
        check.expect(nccdim::h1_zero_after_twist(a, nccdim::line_bundle_class(d, sig), sig),
                     "high-slope twist rule failed");
        if (!check.ok) return;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: acceptance <cli-path> <golden-dir>\n");
        return 64;
    }
    g_cli = argv[1];
    g_golden = argv[2];

    criterion(1, "Figure reproduction: table matches the golden files", 1.0, figure_reproduction);
    criterion(2, "Trichotomy: ddim = 1 iff deg(omega) < 0, five families to 50", 5.0,
              theorem_b_trichotomy);
    criterion(3, "Support property holds exactly on the box to bound 4", 60.0, support_property);
    criterion(4, "Closed-form H is sufficient and tight", 10.0, gldim_bound);
    criterion(5, "K-theory ring axioms over 10^4 random classes", 60.0, k_theory_ring);
    criterion(6, "HN normal form laws over 10^4 random objects", 60.0, hn_suite);
    criterion(7, "Quiver recognition: catalogue, Coxeter numbers, stars", 30.0,
              quiver_recognition);
    criterion(8, "Vanishing oracle soundness", 10.0, vanishing_soundness);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}

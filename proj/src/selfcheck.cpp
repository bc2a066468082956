#include "wd/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "wd/coloring.hpp"
#include "wd/exact.hpp"
#include "wd/gen.hpp"
#include "wd/planar_witness.hpp"
#include "wd/rng.hpp"

namespace wd {

namespace {

struct CorpusEntry {
    std::string name;
    PlaneGraph g;
    Witness wit; // filled by criterion 1
    double seconds = 0;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 4; n <= 50; ++n) out.push_back({"wheel-" + std::to_string(n), gen_wheel(n), {}, 0});
    for (int n : {10, 50, 200, 500})
        for (uint64_t seed = 1; seed <= 5; ++seed)
            out.push_back({"apollonian-" + std::to_string(n) + "-s" + std::to_string(seed),
                           gen_apollonian(n, seed), {}, 0});
    out.push_back({"grid-10x10", gen_grid(10, 10), {}, 0});
    out.push_back({"icosahedron", gen_icosahedron(), {}, 0});
    for (int i = 0; i < 200; ++i) {
        int n = 4 + i % 9; // 4..12
        out.push_back({"tri-" + std::to_string(n) + "-s" + std::to_string(i),
                       gen_apollonian(n, 10000 + static_cast<uint64_t>(i)), {}, 0});
    }
    return out;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ChargeFn random_charge(const SimpleGraph& g, SplitMix64& rng, int max) {
    ChargeFn f(static_cast<size_t>(g.vertex_count()));
    for (auto& x : f) x = static_cast<int>(rng.below(static_cast<uint64_t>(max) + 1));
    return f;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
    std::vector<CriterionResult> results;
    auto report = [&](int id, const std::string& name, bool pass, const std::string& detail,
                      double secs) {
        results.push_back({id, name, pass, detail, secs});
        out << "criterion " << id << " [" << (pass ? "PASS" : "FAIL") << "] " << name << ": "
            << detail << " (" << static_cast<int>(secs * 1000) << " ms)\n";
        out.flush();
    };

    auto corpus = build_corpus();

    // 1. every corpus graph gets a witness that verifies under f = 4
    {
        auto t0 = Clock::now();
        int failures = 0;
        double worst_big = 0;
        std::string first_fail;
        for (auto& e : corpus) {
            auto g0 = Clock::now();
            try {
                e.wit = witness_planar_4(e.g);
                e.seconds = since(g0);
                if (!verify(e.g.graph, constant_charge(e.g.graph.vertex_count(), 4), e.wit,
                            false)) {
                    ++failures;
                    if (first_fail.empty()) first_fail = e.name;
                }
            } catch (const Error& err) {
                ++failures;
                e.seconds = since(g0);
                if (first_fail.empty()) first_fail = e.name + " (" + err.what() + ")";
            }
            if (e.g.graph.vertex_count() >= 500) worst_big = std::max(worst_big, e.seconds);
        }
        bool pass = failures == 0 && worst_big < 5.0;
        std::ostringstream d;
        d << corpus.size() << " graphs, " << failures << " failures, slowest n>=500 run "
          << static_cast<int>(worst_big * 1000) << " ms";
        if (!first_fail.empty()) d << ", first failure: " << first_fail;
        report(1, "planar graphs are weakly 4-degenerate on the corpus", pass, d.str(),
               since(t0));
    }

    // 2. saves are essential on the icosahedron
    {
        auto t0 = Clock::now();
        auto ico = gen_icosahedron();
        bool strong4 = is_strongly_degenerate(ico.graph, constant_charge(12, 4));
        int d = degeneracy(ico.graph);
        bool wit_ok = false;
        for (const auto& e : corpus)
            if (e.name == "icosahedron")
                wit_ok = static_cast<bool>(
                    verify(e.g.graph, constant_charge(12, 4), e.wit, false));
        bool pass = !strong4 && d == 5 && wit_ok;
        std::ostringstream ds;
        ds << "degeneracy=" << d << ", Delete-only under 4: " << (strong4 ? "yes" : "no")
           << ", DelSave witness verified: " << (wit_ok ? "yes" : "no");
        report(2, "saves are essential: wd(icosahedron) < degeneracy", pass, ds.str(), since(t0));
    }

    // 3. exact weak degeneracy values
    {
        auto t0 = Clock::now();
        bool pass = true;
        std::string bad;
        for (int n = 3; n <= 10 && pass; ++n)
            if (weak_degeneracy(gen_cycle(n).graph) != 2) {
                pass = false;
                bad = "C" + std::to_string(n);
            }
        for (int n = 2; n <= 6 && pass; ++n)
            if (weak_degeneracy(gen_clique(n)) != n - 1) {
                pass = false;
                bad = "K" + std::to_string(n);
            }
        if (pass && weak_degeneracy(gen_petersen()) != 2) {
            pass = false;
            bad = "Petersen";
        }
        report(3, "wd(C_n)=2, wd(K_n)=n-1, wd(Petersen)=2", pass,
               pass ? "all exact values match" : "mismatch at " + bad, since(t0));
    }

    // 4. false-lemma regression on K2
    {
        auto t0 = Clock::now();
        auto k2 = SimpleGraph::from_edges(2, {{0, 1}});
        Witness w{{0, 1}, {1, kBlank}};
        auto lo = verify(k2, {1, 0}, w);
        auto hi = verify(k2, {1, 1}, w);
        bool pass = lo && hi && lo.trace[1].charge_before == 0 && hi.trace[1].charge_before == 0;
        report(4, "K2 regression: w is deleted at charge 0 under both f and f'", pass,
               pass ? "both runs legal, both final charges 0" : "charge mismatch", since(t0));
    }

    // 5. property suites, 500 random instances each
    {
        auto t0 = Clock::now();
        SplitMix64 rng(5150);
        int bad_monotone = 0, bad_project = 0, bad_wd = 0, bad_chi = 0;
        int done_mono = 0;
        while (done_mono < 500) {
            int n = 3 + static_cast<int>(rng.below(6));
            auto g = gen_random_graph(n, rng.next(), 30 + static_cast<int>(rng.below(50)));
            auto f = random_charge(g, rng, 3);
            auto wit = find_weak_witness(g, f);
            if (!wit) continue;
            auto f_hi = f;
            for (auto& x : f_hi) x += static_cast<int>(rng.below(3));
            if (!verify(g, f_hi, *wit, false)) ++bad_monotone;
            ++done_mono;
        }
        int done_proj = 0;
        while (done_proj < 500) {
            int n = 3 + static_cast<int>(rng.below(5));
            auto g = gen_random_graph(n, rng.next(), 60);
            if (g.edge_count() == 0) continue;
            auto f = random_charge(g, rng, 3);
            auto wit = find_weak_witness(g, f);
            if (!wit) continue;
            auto es = g.edges();
            auto [eu, ev] = es[rng.below(es.size())];
            SimpleGraph sub(n);
            for (auto [a, b] : es)
                if (!(a == eu && b == ev)) sub.add_edge(a, b);
            auto pw = project(*wit, g, sub, f);
            auto rs = verify(sub, f, pw);
            auto rg = verify(g, f, *wit);
            if (!rs || !rg || !dominance_check(rs.trace, rg.trace)) ++bad_project;
            ++done_proj;
        }
        for (int t = 0; t < 500; ++t) {
            int n = 2 + static_cast<int>(rng.below(7));
            auto g = gen_random_graph(n, rng.next(), 30 + static_cast<int>(rng.below(50)));
            int wd_val = weak_degeneracy(g);
            if (wd_val > degeneracy(g)) ++bad_wd;
            if (chromatic_number(g) > wd_val + 1) ++bad_chi;
        }
        bool pass = bad_monotone + bad_project + bad_wd + bad_chi == 0;
        std::ostringstream ds;
        ds << "monotone " << bad_monotone << ", projection " << bad_project << ", wd<=d "
           << bad_wd << ", chi<=wd+1 " << bad_chi << " counterexamples over 500 each";
        report(5, "property suites on random instances", pass, ds.str(), since(t0));
    }

    // 6. list colorings from witnesses: 100 random 5-lists per corpus graph
    {
        auto t0 = Clock::now();
        SplitMix64 rng(6001);
        long runs = 0, failures = 0;
        std::string first_fail;
        for (const auto& e : corpus) {
            if (e.wit.empty() && e.g.graph.vertex_count() > 0) continue; // criterion 1 failed there
            const int n = e.g.graph.vertex_count();
            for (int round = 0; round < 100; ++round) {
                ListAssignment la;
                la.lists.assign(static_cast<size_t>(n), {});
                for (auto& l : la.lists)
                    while (l.size() < 5) {
                        int c = static_cast<int>(rng.below(10));
                        if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
                    }
                ++runs;
                try {
                    auto col = color_from_witness(e.g.graph, constant_charge(n, 4), e.wit, la,
                                                  random_chooser(rng.next()));
                    if (!validate_coloring(e.g.graph, col, &la)) {
                        ++failures;
                        if (first_fail.empty()) first_fail = e.name;
                    }
                } catch (const Error&) {
                    ++failures;
                    if (first_fail.empty()) first_fail = e.name;
                }
            }
        }
        bool pass = failures == 0;
        std::ostringstream ds;
        ds << runs << " colorings, " << failures << " failures";
        if (!first_fail.empty()) ds << ", first failure: " << first_fail;
        report(6, "witnesses yield proper colorings from random 5-lists", pass, ds.str(),
               since(t0));
    }

    // 7. engine and exact solver agree on sampled instances
    {
        auto t0 = Clock::now();
        SplitMix64 rng(7007);
        int disagreements = 0, engine_failures = 0;
        int done = 0;
        while (done < 200) {
            int n = 4 + static_cast<int>(rng.below(6)); // 4..9
            auto g = gen_apollonian(n, rng.next());
            std::vector<VertexId> s;
            switch (rng.below(8)) {
                case 0: break;
                case 1: s = {0}; break;
                case 2: s = {1}; break;
                case 3: s = {2}; break;
                case 4: s = {0, 1}; break;
                case 5: s = {1, 2}; break;
                case 6: s = {0, 2}; break;
                default: s = {0, 1, 2}; break;
            }
            std::vector<VertexId> i;
            for (VertexId v : {0, 1, 2})
                if (std::find(s.begin(), s.end(), v) == s.end() && rng.below(2) && i.empty())
                    i.push_back(v);
            Instance inst;
            try {
                inst = make_instance(g, s, i);
            } catch (const InstanceError&) {
                continue;
            }
            ++done;
            Residual res = residual_game(inst);
            bool engine_ok = false;
            try {
                auto r = witness(inst);
                engine_ok = static_cast<bool>(
                    verify(res.graph, res.f, map_witness(r.wit, res.from_parent), false));
            } catch (const Error&) {
            }
            if (!engine_ok) ++engine_failures;
            if (engine_ok != is_weakly_degenerate(res.graph, res.f)) ++disagreements;
        }
        bool pass = disagreements == 0 && engine_failures == 0;
        std::ostringstream ds;
        ds << done << " instances, " << engine_failures << " engine failures, " << disagreements
           << " oracle disagreements";
        report(7, "engine agrees with the exhaustive oracle on (G,S,I) samples", pass, ds.str(),
               since(t0));
    }

    // 8. memoization and save pruning do not change verdicts
    {
        auto t0 = Clock::now();
        SplitMix64 rng(8008);
        int mismatches = 0;
        for (int t = 0; t < 100; ++t) {
            int n = 2 + static_cast<int>(rng.below(6)); // 2..7
            auto g = gen_random_graph(n, rng.next(), 50);
            auto f = random_charge(g, rng, 3);
            bool base = is_weakly_degenerate(g, f, {true, true});
            if (is_weakly_degenerate(g, f, {false, true}) != base) ++mismatches;
            if (is_weakly_degenerate(g, f, {true, false}) != base) ++mismatches;
            if (is_weakly_degenerate(g, f, {false, false}) != base) ++mismatches;
        }
        report(8, "search verdicts are memoization- and pruning-independent", mismatches == 0,
               std::to_string(mismatches) + " mismatches over 100 graphs x 3 configurations",
               since(t0));
    }

    return results;
}

} // namespace wd

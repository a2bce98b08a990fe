#include "helly/hypergraph.hpp"

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace helly;

namespace {

Hypergraph complete_graph(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Hypergraph::from_indices(2, n, std::move(edges));
}

Hypergraph k33() {
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) edges.push_back({a, b});
    return Hypergraph::from_indices(2, 6, std::move(edges));
}

Hypergraph random_hypergraph(int n, int q, double density_pct, Rng& rng) {
    std::vector<std::vector<int>> edges;
    std::vector<int> comb(q);
    for (int i = 0; i < q; ++i) comb[i] = i;
    while (true) {
        if (rng.below(100) < static_cast<std::uint64_t>(density_pct)) edges.push_back(comb);
        int i = q - 1;
        while (i >= 0 && comb[i] == n - q + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
    }
    return Hypergraph::from_indices(q, n, std::move(edges));
}

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
    Hypergraph h(2, {"x", "y", "z"}, {{"z", "y"}, {"y", "z"}, {"x", "y"}});
    CHECK(h.num_edges() == 2);  // duplicate collapsed
    CHECK(h.edges()[0] == std::vector<int>{0, 1});
    CHECK(h.edges()[1] == std::vector<int>{1, 2});
    CHECK(h.has_edge(std::vector<int>{1, 2}));
    CHECK_FALSE(h.has_edge(std::vector<int>{0, 2}));

    CHECK_THROWS_AS(Hypergraph(2, {"a"}, {{"a", "a"}}), SchemaError);
    CHECK_THROWS_AS(Hypergraph(2, {"a", "b"}, {{"a", "c"}}), SchemaError);
    CHECK_THROWS_AS(Hypergraph(1, {"a"}, {}), SchemaError);
    CHECK_THROWS_AS(Hypergraph(2, {"a", "a"}, {}), SchemaError);
}

TEST_CASE("induced subhypergraph") {
    SUBCASE("complete graph restriction") {
        Hypergraph sub = induced_sub(complete_graph(4), std::vector<int>{0, 1, 2});
        CHECK(sub.num_vertices() == 3);
        CHECK(sub.num_edges() == 3);
    }
    SUBCASE("direct filtering") {
        Hypergraph h = Hypergraph::from_indices(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
        Hypergraph sub = induced_sub(h, std::vector<int>{0, 1, 2, 3});
        CHECK(sub.num_edges() == 2);
    }
    SUBCASE("identity case") {
        Hypergraph h = k33();
        std::vector<int> all{0, 1, 2, 3, 4, 5};
        Hypergraph sub = induced_sub(h, all);
        CHECK(sub.num_edges() == h.num_edges());
        CHECK(sub.vertex_labels() == h.vertex_labels());
    }
    SUBCASE("unknown vertex rejected") {
        CHECK_THROWS_AS(induced_sub(k33(), std::vector<int>{0, 7}), SchemaError);
        CHECK_THROWS_AS(induced_sub(k33(), std::vector<std::string>{"nope"}), SchemaError);
    }
    SUBCASE("composition: nested restriction equals direct restriction") {
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            Hypergraph h = random_hypergraph(8, 2 + static_cast<int>(rng.below(2)), 40, rng);
            std::vector<int> s, s2;
            for (int v = 0; v < 8; ++v)
                if (rng.below(2)) s.push_back(v);
            for (int v : s)
                if (rng.below(2)) s2.push_back(v);
            Hypergraph a = induced_sub(induced_sub(h, s), [&] {
                // remap s2 into the labels of the intermediate hypergraph
                std::vector<std::string> labels;
                for (int v : s2) labels.push_back(std::to_string(v));
                return labels;
            }());
            Hypergraph b = induced_sub(h, s2);
            CHECK(a.num_edges() == b.num_edges());
            CHECK(a.vertex_labels() == b.vertex_labels());
        }
    }
}

TEST_CASE("independence number") {
    SUBCASE("complement of perfect matching on 6 vertices") {
        Hypergraph h = gen_matching_complement(3);
        SetWitness w = independence_number(h);
        CHECK(w.value == 2);
        // witness spans no edge
        CHECK_FALSE(h.spans_edge(w.witness));
    }
    SUBCASE("no edges") {
        Hypergraph h = Hypergraph::from_indices(2, 7, {});
        CHECK(independence_number(h).value == 7);
    }
    SUBCASE("K_{3,3}") { CHECK(independence_number(k33()).value == 3); }
    SUBCASE("size limit error") {
        Hypergraph h = Hypergraph::from_indices(2, 45, {});
        CHECK_THROWS_AS(independence_number(h), LimitError);
    }
    SUBCASE("matches the all-subsets oracle") {
        Rng rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            int q = 2 + static_cast<int>(rng.below(2));
            int n = q + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(11 - q)));
            Hypergraph h = random_hypergraph(n, q, 35, rng);
            CHECK(independence_number(h).value == oracle::naive_independence(h));
        }
    }
}

TEST_CASE("clique number") {
    SUBCASE("complement of perfect matching, m = 5") {
        Hypergraph h = gen_matching_complement(5);
        SetWitness w = clique_number(h);
        CHECK(w.value == 5);
        CHECK(w.witness.size() == 5);
    }
    SUBCASE("complete hypergraph") {
        CHECK(clique_number(complete_graph(6)).value == 6);
        std::vector<std::vector<int>> edges;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) edges.push_back({a, b, c});
        Hypergraph h3 = Hypergraph::from_indices(3, 5, std::move(edges));
        CHECK(clique_number(h3).value == 5);
    }
    SUBCASE("K_{3,3}") { CHECK(clique_number(k33()).value == 2); }
    SUBCASE("matches the all-subsets oracle") {
        Rng rng(6);
        for (int trial = 0; trial < 30; ++trial) {
            int q = 2 + static_cast<int>(rng.below(2));
            int n = q + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(11 - q)));
            Hypergraph h = random_hypergraph(n, q, 60, rng);
            CHECK(clique_number(h).value == oracle::naive_clique(h));
        }
    }
    SUBCASE("complement identity at q = 2") {
        Rng rng(7);
        for (int trial = 0; trial < 15; ++trial) {
            Hypergraph h = random_hypergraph(9, 2, 45, rng);
            CHECK(independence_number(h.complement()).value == clique_number(h).value);
        }
    }
}

TEST_CASE("edge density") {
    CHECK(edge_density(k33()) == Rat(3, 5));
    CHECK(edge_density(complete_graph(5)) == Rat(1));
    CHECK(edge_density(Hypergraph::from_indices(2, 6, {})) == Rat(0));
    CHECK_THROWS_AS(edge_density(Hypergraph::from_indices(3, 2, {})), PreconditionError);
}

TEST_CASE("M-pattern detection") {
    SUBCASE("4-cycle hosts M_2(2)") {
        Hypergraph cycle = Hypergraph::from_indices(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        auto w = find_m_pattern(cycle, 2, 2);
        REQUIRE(w.has_value());
        CHECK(w->parts == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    }
    SUBCASE("path on 3 vertices hosts none") {
        Hypergraph path = Hypergraph::from_indices(2, 3, {{0, 1}, {1, 2}});
        CHECK_FALSE(find_m_pattern(path, 2, 2).has_value());
    }
    SUBCASE("transversal density of the pure pattern, q = 2, t = 3") {
        // t^q >= (q!/q^q) C(qt, q): 9 >= 15/2
        CHECK(Rat(9) >= Rat(1, 2) * Rat(binomial(6, 2)));
        std::vector<std::vector<int>> edges;
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) edges.push_back({a, b});
        Hypergraph pattern = Hypergraph::from_indices(2, 6, std::move(edges));
        auto w = find_m_pattern(pattern, 2, 3);
        REQUIRE(w.has_value());
        std::vector<int> span;
        for (const auto& part : w->parts) span.insert(span.end(), part.begin(), part.end());
        CHECK(edge_density(induced_sub(pattern, span)) >= Rat(2, 4));
    }
    SUBCASE("monotonicity in s and t") {
        Rng rng(8);
        for (int trial = 0; trial < 10; ++trial) {
            // random noise plus a planted M_2(3) on vertices 0..5
            Hypergraph noise = random_hypergraph(9, 2, 30, rng);
            std::vector<std::vector<int>> edges;
            for (const auto& e : noise.edges()) {
                bool intra = (e[0] < 3 && e[1] < 3) || (e[0] >= 3 && e[0] < 6 && e[1] >= 3 && e[1] < 6);
                if (!intra) edges.push_back(e);
            }
            for (int a = 0; a < 3; ++a)
                for (int b = 3; b < 6; ++b) edges.push_back({a, b});
            Hypergraph h = Hypergraph::from_indices(2, 9, std::move(edges));
            REQUIRE(find_m_pattern(h, 2, 3).has_value());
            CHECK(find_m_pattern(h, 2, 2).has_value());
        }
    }
    SUBCASE("witness invariants hold") {
        Rng rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            Hypergraph h = random_hypergraph(8 + static_cast<int>(rng.below(3)), 2, 50, rng);
            auto w = find_m_pattern(h, 2, 2);
            if (!w) continue;
            for (const auto& part : w->parts) {
                std::vector<int> sorted = part;
                std::sort(sorted.begin(), sorted.end());
                CHECK_FALSE(h.spans_edge(sorted));
            }
            for (int a : w->parts[0])
                for (int b : w->parts[1]) {
                    std::vector<int> e{std::min(a, b), std::max(a, b)};
                    CHECK(h.has_edge(e));
                }
        }
    }
    SUBCASE("preconditions and limits") {
        CHECK_THROWS_AS(find_m_pattern(k33(), 1, 2), PreconditionError);
        Hypergraph big = Hypergraph::from_indices(2, 30, {});
        CHECK_THROWS_AS(find_m_pattern(big, 5, 5), LimitError);
    }
}

TEST_CASE("heterochromatic condition") {
    SUBCASE("two singleton families joined by an edge") {
        Hypergraph h = Hypergraph::from_indices(2, 2, {{0, 1}});
        HeteroResult r = heterochromatic_check(h, {{0}, {1}}, 2);
        CHECK(r.ok);
    }
    SUBCASE("pairwise non-adjacent families fail at p = q") {
        Hypergraph h = Hypergraph::from_indices(2, 4, {});
        HeteroResult r = heterochromatic_check(h, {{0, 1}, {2}, {3}}, 2);
        CHECK_FALSE(r.ok);
        CHECK(r.violating_vertices.size() == 2);
    }
    SUBCASE("families must be disjoint") {
        Hypergraph h = complete_graph(4);
        CHECK_THROWS_AS(heterochromatic_check(h, {{0, 1}, {1, 2}}, 2), PreconditionError);
    }
    SUBCASE("one-per-family prefix vs full sequence on the counterexample shape") {
        // Host: outer intervals pairwise disjoint; inner families live inside
        // their outer interval. q = 2 nerve edges: outer_i with each inner of
        // family i.
        int n_outer = 4, n_inner = 3;
        std::vector<std::vector<int>> edges;
        std::vector<std::vector<int>> families;
        std::vector<int> outer;
        int next = n_outer;
        for (int i = 0; i < n_outer; ++i) outer.push_back(i);
        families.push_back(outer);
        for (int i = 0; i < n_outer; ++i) {
            std::vector<int> fam;
            for (int j = 0; j < n_inner; ++j) {
                edges.push_back({i, next});
                fam.push_back(next++);
            }
            families.push_back(fam);
        }
        Hypergraph h = Hypergraph::from_indices(2, next, std::move(edges));

        // Any strict prefix admits an escape: pick an outer interval whose
        // inner family is not among the chosen ones.
        for (int p = 1; p <= n_outer; ++p) {
            HeteroResult prefix =
                heterochromatic_check(h, families, p, HeteroMode::OnePerFamilyPrefix);
            CHECK_FALSE(prefix.ok);
        }
        // One vertex from every family always pairs an outer with its inner.
        HeteroResult full = heterochromatic_check(h, families, n_outer + 1,
                                                  HeteroMode::OnePerFamilyPrefix);
        CHECK(full.ok);
        // The subsequence form fails: inner families alone are independent.
        HeteroResult sub = heterochromatic_check(h, families, 3, HeteroMode::Subsequence);
        CHECK_FALSE(sub.ok);
    }
    SUBCASE("violating sequence spans no edge") {
        Rng rng(12);
        for (int trial = 0; trial < 10; ++trial) {
            Hypergraph h = random_hypergraph(9, 2, 50, rng);
            std::vector<std::vector<int>> families{{0, 1, 2}, {3, 4}, {5, 6}, {7, 8}};
            HeteroResult r = heterochromatic_check(h, families, 3);
            if (!r.ok) {
                std::vector<int> sorted = r.violating_vertices;
                std::sort(sorted.begin(), sorted.end());
                CHECK_FALSE(h.spans_edge(sorted));
                CHECK(std::is_sorted(r.violating_families.begin(), r.violating_families.end()));
            }
        }
    }
}

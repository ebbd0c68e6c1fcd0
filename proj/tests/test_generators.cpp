// Tests for graph sources: canonical codes and automorphism counts, the
// exhaustive per-order enumeration (validated two independent ways), the
// named constructions, the seeded in-class sampler, and the corpus reader.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "bk/generators.hpp"
#include "bk/graph.hpp"
#include "bk/recognizers.hpp"
#include "bk/solvers.hpp"

using namespace bk;

namespace {

Graph graph_from_mask(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) g.add_edge(i, j);
    return g;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) h.add_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    return h;
}

}  // namespace

TEST_CASE("canonical codes are permutation-invariant and separate the basic shapes") {
    CHECK(canonical_code(construct::empty(5)) == 0);
    CHECK(canonical_code(construct::complete(4)) == 63);  // all six pair bits set

    Graph p4 = construct::path(4);
    Graph claw = construct::complete_multipartite({1, 3});
    Graph c4 = construct::cycle(4);
    CHECK(canonical_code(p4) != canonical_code(claw));
    CHECK(canonical_code(p4) != canonical_code(c4));
    CHECK(canonical_code(claw) != canonical_code(c4));
    CHECK(canonical_code(c4) == canonical_code(construct::complete_multipartite({2, 2})));
    CHECK(canonical_code(construct::cycle(3)) == canonical_code(construct::complete(3)));

    std::vector<int> perm = {3, 1, 4, 0, 2, 5};
    for (unsigned mask : {0x3Fu, 0x155u, 0x7FFFu, 0x1234u, 0x0F0Fu}) {
        Graph g = graph_from_mask(6, mask);
        CHECK(canonical_code(g) == canonical_code(apply_permutation(g, perm)));
    }

    CHECK_THROWS_AS(canonical_code(Graph(9)), std::invalid_argument);
}

TEST_CASE("automorphism group orders of named graphs") {
    CHECK(automorphism_count(construct::complete(4)) == 24);
    CHECK(automorphism_count(construct::empty(4)) == 24);
    CHECK(automorphism_count(construct::cycle(4)) == 8);
    CHECK(automorphism_count(construct::cycle(5)) == 10);
    CHECK(automorphism_count(construct::cycle(6)) == 12);
    CHECK(automorphism_count(construct::path(4)) == 2);
    CHECK(automorphism_count(construct::complete_multipartite({1, 3})) == 6);
    CHECK(automorphism_count(construct::apple()) == 2);
    // the two pendant-side vertices are twins, and the cycle reflects: order 4
    CHECK(automorphism_count(construct::torch()) == 4);
    CHECK(automorphism_count(Graph(1)) == 1);
}

TEST_CASE("per-order enumeration hits the known class counts and stays duplicate-free") {
    const std::vector<std::size_t> counts = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        EnumerationStream s = enumerate_all(n);
        CHECK(s.n == n);
        CHECK(s.graphs.size() == counts[static_cast<size_t>(n) - 1]);
        std::set<std::uint64_t> codes;
        for (const Graph& g : s.graphs) {
            CHECK(g.n == n);
            codes.insert(canonical_code(g));
        }
        CHECK(codes.size() == s.graphs.size());
    }
    CHECK_THROWS_AS(enumerate_all(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_all(8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_all(9, true), std::invalid_argument);
}

TEST_CASE("enumeration is complete: every labeled graph maps to a listed representative") {
    for (int n = 1; n <= 6; ++n) {
        EnumerationStream s = enumerate_all(n);
        std::set<std::uint64_t> codes;
        for (const Graph& g : s.graphs) codes.insert(canonical_code(g));
        unsigned total = 1u << (n * (n - 1) / 2);
        int missing = 0;
        for (unsigned mask = 0; mask < total; ++mask) {
            if (!codes.count(canonical_code(graph_from_mask(n, mask)))) {
                ++missing;
                CAPTURE(n);
                CAPTURE(mask);
                CHECK(missing == 0);
            }
        }
        CHECK(missing == 0);
    }
}

TEST_CASE("enumeration is complete at seven vertices: orbit sizes add up to all labeled graphs") {
    EnumerationStream s = enumerate_all(7);
    long long labeled = 0;
    for (const Graph& g : s.graphs) labeled += 5040 / automorphism_count(g);
    CHECK(labeled == (1ll << 21));  // 2^binom(7,2) labeled graphs in total
}

TEST_CASE("the three-vertex stream contains exactly the four shapes") {
    EnumerationStream s = enumerate_all(3);
    REQUIRE(s.graphs.size() == 4);
    std::multiset<int> sizes;
    for (const Graph& g : s.graphs) sizes.insert(g.edge_count());
    CHECK(sizes == std::multiset<int>{0, 1, 2, 3});
    // two calls produce the identical stream, in the identical order
    EnumerationStream again = enumerate_all(3);
    REQUIRE(again.graphs.size() == s.graphs.size());
    for (size_t i = 0; i < s.graphs.size(); ++i) CHECK(s.graphs[i] == again.graphs[i]);
}

TEST_CASE("named constructions have the documented shapes") {
    SUBCASE("paths, cycles, complete graphs") {
        CHECK(construct::empty(4).edge_count() == 0);
        CHECK(construct::complete(5).edge_count() == 10);
        Graph p = construct::path(5);
        CHECK(p.edge_count() == 4);
        CHECK(p.degree(0) == 1);
        CHECK(p.degree(2) == 2);
        Graph c = construct::cycle(5);
        CHECK(c.edge_count() == 5);
        for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
        CHECK_THROWS_AS(construct::cycle(2), std::invalid_argument);
    }

    SUBCASE("complete multipartite blocks") {
        Graph g = construct::complete_multipartite({2, 3});
        CHECK(g.n == 5);
        CHECK(g.edge_count() == 6);
        CHECK_FALSE(g.has_edge(0, 1));  // inside the first block
        CHECK_FALSE(g.has_edge(2, 3));  // inside the second block
        CHECK(g.has_edge(0, 2));
        CHECK(g.has_edge(1, 4));
    }

    SUBCASE("pendant-marked shapes") {
        Graph a = construct::apple();
        CHECK(a.n == 6);
        CHECK(a.edge_count() == 6);
        CHECK(a.has_edge(5, 0));
        CHECK(a.degree(5) == 1);
        Graph t = construct::torch();
        CHECK(t.n == 6);
        CHECK(t.edge_count() == 7);
        CHECK(t.has_edge(5, 0));
        CHECK(t.has_edge(5, 2));
        Graph k = construct::k9_plus_pendant();
        CHECK(k.n == 10);
        CHECK(k.edge_count() == 37);
        CHECK(k.degree(9) == 1);
        CHECK(k.degree(0) == 9);
        CHECK(k.has_edge(9, 0));
    }

    SUBCASE("join and disjoint union") {
        Graph j = construct::join(construct::complete(8), construct::empty(2));
        CHECK(j.n == 10);
        CHECK(j.edge_count() == 28 + 16);
        CHECK(j.max_degree() == 9);
        CHECK_FALSE(j.has_edge(8, 9));
        CHECK(j.has_edge(0, 8));

        Graph d = construct::disjoint_union(construct::cycle(5), construct::cycle(5));
        CHECK(d.n == 10);
        CHECK(d.edge_count() == 10);
        CHECK_FALSE(is_connected(d));
        CHECK_FALSE(d.has_edge(0, 5));
        CHECK(d.has_edge(5, 6));
        CHECK(d.max_degree() == 2);
        CHECK(chromatic_number(d).chi == 3);
    }
}

TEST_CASE("the seeded sampler is deterministic and certifies its own output") {
    SamplerConfig cfg;
    cfg.n = 14;
    cfg.delta_lo = 5;
    cfg.delta_hi = 9;
    cfg.seed = 20260822;
    SampleResult a = sample_class_member(cfg);
    SampleResult b = sample_class_member(cfg);
    CHECK(a.g == b.g);
    CHECK(a.proposals_used == b.proposals_used);
    CHECK(a.target_met == b.target_met);

    CHECK(a.g.n == 14);
    CHECK(is_class_member(a.g).member());
    CHECK(a.g.max_degree() <= 9);
    if (a.target_met) CHECK(a.g.max_degree() >= 5);

    cfg.seed = 20260823;
    SampleResult c = sample_class_member(cfg);
    CHECK_FALSE(a.g == c.g);  // different seed, different walk
}

TEST_CASE("sampled graphs stay inside the class across a seed range") {
    int met = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SamplerConfig cfg;
        cfg.n = 16;
        cfg.delta_lo = 6;
        cfg.delta_hi = 12;
        cfg.seed = seed;
        SampleResult r = sample_class_member(cfg);
        CHECK(is_class_member(r.g).member());
        CHECK(r.g.max_degree() <= 12);
        CHECK(r.proposals_used >= 1);
        if (r.target_met) {
            ++met;
            CHECK(r.g.max_degree() >= 6);
        }
    }
    CHECK(met == 20);  // this window is comfortably reachable at n = 16
}

TEST_CASE("the unfiltered walk is still deterministic and degree-capped") {
    SamplerConfig cfg;
    cfg.n = 12;
    cfg.delta_lo = 4;
    cfg.delta_hi = 7;
    cfg.seed = 99;
    cfg.filter = false;
    SampleResult a = sample_class_member(cfg);
    SampleResult b = sample_class_member(cfg);
    CHECK(a.g == b.g);
    CHECK(a.g.max_degree() <= 7);
}

TEST_CASE("sampler knobs are validated and exhaustion is reported honestly") {
    SamplerConfig bad;
    bad.n = 0;
    CHECK_THROWS_AS(sample_class_member(bad), std::invalid_argument);

    bad = SamplerConfig{};
    bad.n = 10;
    bad.delta_lo = 10;  // a ten-vertex graph cannot reach max degree ten
    bad.delta_hi = 12;
    CHECK_THROWS_AS(sample_class_member(bad), std::invalid_argument);

    bad = SamplerConfig{};
    bad.delta_lo = 5;
    bad.delta_hi = 4;
    CHECK_THROWS_AS(sample_class_member(bad), std::invalid_argument);

    bad = SamplerConfig{};
    bad.max_proposals = 0;
    CHECK_THROWS_AS(sample_class_member(bad), std::invalid_argument);

    bad = SamplerConfig{};
    bad.stride = 0;
    CHECK_THROWS_AS(sample_class_member(bad), std::invalid_argument);

    bad = SamplerConfig{};
    bad.burn_in = -1;
    CHECK_THROWS_AS(sample_class_member(bad), std::invalid_argument);

    SUBCASE("too few proposals: best effort, target not met, output still in class") {
        SamplerConfig tight;
        tight.n = 20;
        tight.delta_lo = 12;
        tight.delta_hi = 15;
        tight.seed = 7;
        tight.max_proposals = 10;  // nowhere near enough to build degree twelve
        SampleResult r = sample_class_member(tight);
        CHECK_FALSE(r.target_met);
        CHECK(r.proposals_used == 10);
        CHECK(is_class_member(r.g).member());
    }

    SUBCASE("a single vertex is returned untouched") {
        SamplerConfig one;
        one.n = 1;
        one.delta_lo = 0;
        one.delta_hi = 0;
        SampleResult r = sample_class_member(one);
        CHECK(r.g.n == 1);
        CHECK(r.g.edge_count() == 0);
        CHECK(r.target_met);
        CHECK(r.proposals_used == 0);
    }
}

TEST_CASE("corpus reading skips blanks and comments and keeps line numbers") {
    std::istringstream in(
        "# sample corpus\n"
        "Dhc\n"
        "\n"
        "   C~  \r\n"
        "# trailing comment\n"
        "@\n");
    auto entries = read_corpus_lines(in);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].line == 2);
    CHECK(entries[0].text == "Dhc");
    CHECK(entries[1].line == 4);
    CHECK(entries[1].text == "C~");
    CHECK(entries[2].line == 6);
    CHECK(entries[2].text == "@");

    std::istringstream empty("");
    CHECK(read_corpus_lines(empty).empty());
}

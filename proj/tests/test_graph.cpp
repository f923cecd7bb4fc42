#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "tokens/enumerate.hpp"
#include "tokens/families.hpp"
#include "tokens/graph.hpp"
#include "tokens/graph6.hpp"

using namespace tokens;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    const auto e = g.edges();
    return {e.begin(), e.end()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents)
        : path("/tmp/tokens_test_" + name) {
        std::ofstream out(path, std::ios::trunc | std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph edge bookkeeping") {
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(1, 3);
    g.add_edge(3, 1);  // idempotent either way round
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.neighbors(3) == std::vector<int>{1, 2});
    CHECK(g.degree(3) == 2);
    CHECK(g.degree(4) == 0);
    CHECK(g.max_degree() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("connectivity and trees") {
    CHECK(Graph(1).is_connected());
    CHECK_FALSE(Graph(3).is_connected());
    CHECK(build_family(FamilyKind::path, 4).is_connected());
    CHECK(build_family(FamilyKind::path, 4).is_tree());
    CHECK_FALSE(build_family(FamilyKind::cycle, 4).is_tree());
    CHECK(Graph(1).is_tree());
    Graph two_edges(4);
    two_edges.add_edge(1, 2);
    two_edges.add_edge(3, 4);
    CHECK_FALSE(two_edges.is_connected());
    CHECK_FALSE(two_edges.is_tree());
    CHECK(build_family(FamilyKind::star, 6).is_tree());
}

TEST_CASE("complement") {
    const Graph p3 = build_family(FamilyKind::path, 3);
    const Graph c = complement(p3);
    CHECK(c.edge_count() == 1);
    CHECK(c.has_edge(1, 3));
    CHECK(complement(build_family(FamilyKind::complete, 4)).edge_count() == 0);
    // C_5 is self-complementary.
    const Graph c5 = build_family(FamilyKind::cycle, 5);
    const Graph cc5 = complement(c5);
    CHECK(cc5.edge_count() == 5);
    for (int v = 1; v <= 5; ++v) CHECK(cc5.degree(v) == 2);
    CHECK(cc5.is_connected());
    // Complementing twice is the identity.
    CHECK(complement(cc5) == c5);
}

TEST_CASE("delete_vertex relabels compactly") {
    const Graph p4 = build_family(FamilyKind::path, 4);
    const Graph mid = delete_vertex(p4, 2);
    CHECK(mid.vertex_count() == 3);
    CHECK(edge_set(mid) == std::set<std::pair<int, int>>{{2, 3}});
    const Graph end = delete_vertex(p4, 4);
    CHECK(end == build_family(FamilyKind::path, 3));
    CHECK_THROWS_AS(delete_vertex(p4, 5), std::invalid_argument);
}

TEST_CASE("collapse_edge merges endpoints") {
    const Graph w5 = build_family(FamilyKind::wheel, 5);
    REQUIRE(w5.edge_count() == 8);
    const Graph c = collapse_edge(w5, 1, 2);
    CHECK(c.vertex_count() == 4);
    CHECK(c.edge_count() == 5);
    CHECK(c.degree(1) == 3);
    CHECK(edge_set(c) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
    // Collapsing a path edge gives the shorter path.
    CHECK(collapse_edge(build_family(FamilyKind::path, 4), 2, 3) ==
          build_family(FamilyKind::path, 3));
    CHECK_THROWS_AS(collapse_edge(w5, 2, 4), std::invalid_argument);
}

TEST_CASE("graph6 short form frozen strings") {
    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK(parse_graph6("@").vertex_count() == 1);
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(1, 2));
    CHECK(parse_graph6("A?").edge_count() == 0);
    CHECK(parse_graph6("Bw") == build_family(FamilyKind::complete, 3));
    CHECK(parse_graph6("Bg") == build_family(FamilyKind::path, 3));
    CHECK(emit_graph6(build_family(FamilyKind::path, 5)) == "DhC");
    CHECK(emit_graph6(build_family(FamilyKind::complete, 3)) == "Bw");
}

TEST_CASE("graph6 accepts header and line endings") {
    CHECK(parse_graph6(">>graph6<<Bw") == build_family(FamilyKind::complete, 3));
    CHECK(parse_graph6("Bw\r\n") == build_family(FamilyKind::complete, 3));
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);     // missing body
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);   // body too long
    CHECK_THROWS_AS(parse_graph6("Ag"), std::invalid_argument);    // nonzero padding
    CHECK_THROWS_AS(parse_graph6("!!"), std::invalid_argument);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("~~????"), std::invalid_argument);  // 36-bit order
    CHECK_THROWS_AS(parse_graph6("~?"), std::invalid_argument);    // truncated order
}

TEST_CASE("graph6 roundtrip across forms") {
    std::vector<Graph> samples;
    samples.push_back(Graph(0));
    samples.push_back(Graph(1));
    for (int n : {2, 5, 7}) {
        samples.push_back(build_family(FamilyKind::complete, n));
        samples.push_back(build_family(FamilyKind::path, n));
        if (n >= 3) samples.push_back(build_family(FamilyKind::cycle, n));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        samples.push_back(sample_graph(9, seed));
    samples.push_back(Graph(62));
    samples.push_back(Graph(63));  // first order that needs the long form
    samples.push_back(build_family(FamilyKind::cycle, 70));
    for (const auto& g : samples) CHECK(parse_graph6(emit_graph6(g)) == g);
    CHECK(emit_graph6(Graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 file reading skips comments and headers") {
    TempFile f("corpus.g6", ">>graph6<<\n# a comment\nBw\n\nBg\r\n");
    const auto lines = read_graph6_lines(f.path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "Bw");
    const auto graphs = read_graph6_file(f.path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == build_family(FamilyKind::complete, 3));
    CHECK(graphs[1] == build_family(FamilyKind::path, 3));
    CHECK_THROWS(read_graph6_lines("/tmp/tokens_test_no_such_file.g6"));
}

TEST_CASE("named families") {
    const Graph k4 = build_family(FamilyKind::complete, 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.max_degree() == 3);

    const Graph s5 = build_family(FamilyKind::star, 5);
    CHECK(s5.edge_count() == 4);
    CHECK(s5.degree(1) == 4);
    CHECK(s5.degree(5) == 1);

    const Graph p4 = build_family(FamilyKind::path, 4);
    CHECK(edge_set(p4) == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

    const Graph c4 = build_family(FamilyKind::cycle, 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(4, 1));

    FamilySpec mp;
    mp.kind = FamilyKind::complete_multipartite;
    mp.parts = {2, 3};
    const Graph k23 = build_family(mp);
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK_FALSE(k23.has_edge(1, 2));
    CHECK_FALSE(k23.has_edge(3, 4));
    CHECK(k23.has_edge(1, 3));

    const Graph w6 = build_family(FamilyKind::wheel, 6);
    CHECK(w6.degree(1) == 5);
    CHECK(w6.edge_count() == 10);

    const Graph cp6 = build_family(FamilyKind::cocktail_party, 6);
    CHECK(cp6.edge_count() == 12);
    for (int v = 1; v <= 6; ++v) CHECK(cp6.degree(v) == 4);
    CHECK_FALSE(cp6.has_edge(1, 2));
    CHECK_FALSE(cp6.has_edge(5, 6));

    const Graph cc6 = build_family(FamilyKind::cycle_complement, 6);
    CHECK(cc6 == complement(build_family(FamilyKind::cycle, 6)));
    CHECK(cc6.has_edge(1, 3));
    CHECK(cc6.has_edge(3, 5));
    CHECK(cc6.has_edge(1, 5));  // triangle on the odd vertices

    CHECK(build_family(FamilyKind::johnson_base, 5) ==
          build_family(FamilyKind::complete, 5));
}

TEST_CASE("family validity limits") {
    CHECK_THROWS_AS(build_family(FamilyKind::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyKind::wheel, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyKind::cocktail_party, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilyKind::path, 0), std::invalid_argument);
    FamilySpec mp;
    mp.kind = FamilyKind::complete_multipartite;
    CHECK_THROWS_AS(build_family(mp), std::invalid_argument);  // no parts
}

TEST_CASE("family names round-trip") {
    for (const auto& name : family_names()) {
        CHECK(to_string(family_kind_from_string(name)) == name);
    }
    CHECK_THROWS_AS(family_kind_from_string("moebius"), std::invalid_argument);
}

TEST_CASE("attach_trees hangs rooted trees off base vertices") {
    TreeAttachment spec;
    spec.base = build_family(FamilyKind::path, 3);
    // A 2-vertex path hanging off vertex 2: 4 attaches to 2, 5 to 4.
    spec.trees.push_back({2, {0, 1}});
    const Graph g = attach_trees(spec);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.is_tree());
    CHECK(g.degree(2) == 3);
    CHECK(g.has_edge(2, 4));
    CHECK(g.has_edge(4, 5));

    TreeAttachment dup = spec;
    dup.trees.push_back({2, {0}});
    CHECK_THROWS_AS(attach_trees(dup), std::invalid_argument);

    TreeAttachment bad = spec;
    bad.trees[0].second = {0, 5};  // parent pointing forwards
    CHECK_THROWS_AS(attach_trees(bad), std::invalid_argument);
}

TEST_CASE("labeled graph enumeration") {
    CHECK(labeled_graph_count(1) == 1);
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(7) == 2097152);
    CHECK_THROWS_AS(labeled_graph_count(8), std::invalid_argument);

    const auto all = all_labeled_graphs(3);
    REQUIRE(all.size() == 8);
    CHECK(all[0].edge_count() == 0);
    CHECK(all[7] == build_family(FamilyKind::complete, 3));
    std::set<std::string> seen;
    int total_edges = 0;
    for (const auto& g : all) {
        seen.insert(emit_graph6(g));
        total_edges += g.edge_count();
    }
    CHECK(seen.size() == 8);
    CHECK(total_edges == 12);  // each of the 3 edges appears in half the graphs

    // Index bits line up with graph6 body bits.
    CHECK(labeled_graph(3, 5) == parse_graph6(emit_graph6(labeled_graph(3, 5))));
    CHECK_THROWS_AS(labeled_graph(3, 8), std::invalid_argument);
}

TEST_CASE("labeled tree enumeration") {
    CHECK(labeled_tree_count(2) == 1);
    CHECK(labeled_tree_count(3) == 3);
    CHECK(labeled_tree_count(4) == 16);
    CHECK(labeled_tree_count(8) == 262144);

    CHECK(labeled_tree(2, 0).has_edge(1, 2));

    // n=3: index r encodes the one-term sequence (r+1).
    CHECK(edge_set(labeled_tree(3, 0)) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});
    CHECK(edge_set(labeled_tree(3, 1)) == std::set<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(edge_set(labeled_tree(3, 2)) == std::set<std::pair<int, int>>{{1, 3}, {2, 3}});

    const auto trees = all_labeled_trees(4);
    REQUIRE(trees.size() == 16);
    std::set<std::string> seen;
    int stars = 0;
    for (const auto& t : trees) {
        CHECK(t.is_tree());
        seen.insert(emit_graph6(t));
        if (t.max_degree() == 3) ++stars;
    }
    CHECK(seen.size() == 16);
    CHECK(stars == 4);  // one star per choice of center
}

TEST_CASE("pruefer decoding") {
    CHECK(decode_pruefer({}, 2).has_edge(1, 2));
    // Sequence (4,4): star-ish tree with 4 adjacent to 1,2,3.
    const Graph t = decode_pruefer({4, 4}, 4);
    CHECK(t.is_tree());
    CHECK(t.degree(4) == 3);
    CHECK_THROWS_AS(decode_pruefer({5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(decode_pruefer({1, 2}, 3), std::invalid_argument);
}

TEST_CASE("sample_graph is deterministic and in range") {
    const Graph a = sample_graph(6, 42);
    const Graph b = sample_graph(6, 42);
    CHECK(a == b);
    CHECK(a.vertex_count() == 6);
    bool any_different = false;
    for (std::uint64_t seed = 0; seed < 50 && !any_different; ++seed)
        any_different = !(sample_graph(6, seed) == sample_graph(6, seed + 1));
    CHECK(any_different);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        CHECK(sample_graph(5, seed).edge_count() <= 10);
}

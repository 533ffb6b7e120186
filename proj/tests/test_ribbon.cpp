#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "rootpoly/ribbon.hpp"

using namespace rootpoly;
using fixtures::make_graph;

TEST_CASE("tour of the pinwheel example") {
    auto f = fixtures::tour_example();
    SpanningTree t = make_spanning_tree(f.graph, {0, 2, 4});
    Tour w = tour(f.graph, f.ribbon, f.basis, t);
    // arcs: 0=e1 v1v2, 1=e2 v2v3, 2=e3 v3v4, 3=e4 v4v1, 4=e5 v2v4
    std::vector<std::pair<int, int>> expect{{0, 0}, {1, 1}, {1, 4}, {3, 2}, {2, 1},
                                            {2, 2}, {3, 3}, {3, 4}, {1, 0}, {0, 3}};
    REQUIRE(w.steps.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
        CHECK(w.steps[i].vertex == expect[i].first);
        CHECK(w.steps[i].arc == expect[i].second);
    }
    CHECK(is_jaeger(f.graph, f.ribbon, f.basis, t));
}

TEST_CASE("tours visit every incidence exactly once") {
    for (const auto& f : fixtures::semi_balanced_corpus()) {
        auto trees = enumerate_spanning_trees(f.graph);
        // sample a few trees to keep runtime sane
        for (size_t i = 0; i < trees.size(); i += std::max<size_t>(1, trees.size() / 5)) {
            Tour w = tour(f.graph, f.ribbon, f.basis, trees[i]);
            CHECK(w.steps.size() == 2u * f.graph.arc_count());
            std::set<std::pair<int, int>> seen;
            for (const TourStep& s : w.steps) CHECK(seen.insert({s.vertex, s.arc}).second);
        }
    }
}

TEST_CASE("two-vertex tree tour") {
    auto g = make_graph(2, {{0, 1}});
    auto r = canonical_ribbon(g);
    SpanningTree t = make_spanning_tree(g, {0});
    Tour w = tour(g, r, Basis{0, 0}, t);
    REQUIRE(w.steps.size() == 2);
    CHECK(w.steps[0].traversed);
    CHECK(w.steps[1].traversed);
}

TEST_CASE("star tour is all traversals") {
    auto k13 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 4; ++trial) {
        RibbonStructure r = trial ? random_ribbon(k13, rng) : canonical_ribbon(k13);
        SpanningTree t = make_spanning_tree(k13, {0, 1, 2});
        Tour w = tour(k13, r, Basis{0, 0}, t);
        CHECK(w.steps.size() == 6);
        for (const TourStep& s : w.steps) CHECK(s.traversed);
    }
    auto f = fixtures::star4();
    SpanningTree t = make_spanning_tree(f.graph, {0, 1, 2, 3});
    Tour w = tour(f.graph, f.ribbon, f.basis, t);
    CHECK(w.steps.size() == 8);
    for (const TourStep& s : w.steps) CHECK(s.traversed);
    CHECK(is_jaeger(f.graph, f.ribbon, f.basis, t));  // vacuous: no non-edges
}

TEST_CASE("the octahedron K23 has exactly four Jaeger trees") {
    auto f = fixtures::k23_octahedron();
    // arcs: 0=pa 1=pb 2=pc 3=aq 4=bq 5=cq
    auto trees = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis);
    REQUIRE(trees.size() == 4);
    CHECK(trees[0].arcs == std::vector<int>{0, 3, 4, 5});
    CHECK(trees[1].arcs == std::vector<int>{0, 1, 3, 5});
    CHECK(trees[2].arcs == std::vector<int>{0, 2, 3, 4});
    CHECK(trees[3].arcs == std::vector<int>{0, 1, 2, 3});
    SUBCASE("semi-passivity counts along the shelling are 0,1,1,2") {
        std::vector<size_t> counts;
        for (const auto& t : trees)
            counts.push_back(semi_passive_arcs(f.graph, f.ribbon, f.basis, t).size());
        CHECK(counts == std::vector<size_t>{0, 1, 1, 2});
    }
    SUBCASE("enumeration order agrees with pairwise comparison") {
        for (size_t i = 0; i < trees.size(); ++i)
            for (size_t j = 0; j < trees.size(); ++j) {
                Ordering o = compare_prec(f.graph, f.ribbon, f.basis, trees[i], trees[j]);
                if (i < j) CHECK(o == Ordering::Less);
                if (i == j) CHECK(o == Ordering::Equal);
                if (i > j) CHECK(o == Ordering::Greater);
            }
    }
}

TEST_CASE("enumeration equals filtering all spanning trees, in order") {
    std::mt19937_64 rng(23);
    for (const auto& f : fixtures::semi_balanced_corpus()) {
        if (f.graph.arc_count() > 12) continue;
        auto all = enumerate_spanning_trees(f.graph);
        for (int trial = 0; trial < 3; ++trial) {
            RibbonStructure r = trial == 0 ? f.ribbon : random_ribbon(f.graph, rng);
            auto fast = enumerate_jaeger_trees(f.graph, r, f.basis);
            std::vector<SpanningTree> brute;
            for (const auto& t : all)
                if (is_jaeger(f.graph, r, f.basis, t)) brute.push_back(t);
            std::sort(brute.begin(), brute.end(), [&](const auto& a, const auto& b) {
                return compare_prec(f.graph, r, f.basis, a, b) == Ordering::Less;
            });
            REQUIRE(fast.size() == brute.size());
            for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == brute[i]);
        }
    }
}

TEST_CASE("a directed tree is its own single Jaeger tree") {
    auto f = fixtures::path4();
    auto trees = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].arcs == std::vector<int>{0, 1, 2});
}

TEST_CASE("torus example: four Jaeger trees with the expected complements") {
    auto f = fixtures::torus_example();
    auto trees = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis);
    REQUIRE(trees.size() == 4);
    std::set<std::vector<int>> complements;
    for (const auto& t : trees) {
        std::vector<int> comp;
        for (int a = 0; a < f.graph.arc_count(); ++a)
            if (!t.contains(a)) comp.push_back(a);
        complements.insert(comp);
    }
    // alpha=3 (4->2), beta=0 (1->0), gamma=2 (3->2), delta=5 (5->6),
    // epsilon=6 (3->0), zeta=1 (1->2)
    std::set<std::vector<int>> expect{{0, 3}, {2, 3}, {5, 6}, {1, 5}};
    CHECK(complements == expect);
}

TEST_CASE("Jaeger-tree count is ribbon- and basis-independent when semi-balanced") {
    std::mt19937_64 rng(99);
    for (const auto& f : fixtures::semi_balanced_corpus()) {
        if (f.graph.arc_count() > 12) continue;
        size_t expect = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis).size();
        for (int trial = 0; trial < 20; ++trial) {
            RibbonStructure r = random_ribbon(f.graph, rng);
            Basis b = all_bases(f.graph)[rng() % (2 * f.graph.arc_count())];
            CHECK(enumerate_jaeger_trees(f.graph, r, b).size() == expect);
        }
    }
}

TEST_CASE("invariance fails without semi-balancedness: the directed cycle") {
    auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto r = canonical_ribbon(g);
    // base node = tail of the base arc: every spanning tree is Jaeger
    CHECK(enumerate_jaeger_trees(g, r, Basis{0, 0}).size() == 4);
    // base node = head of the base arc: no Jaeger tree at all
    CHECK(enumerate_jaeger_trees(g, r, Basis{1, 0}).empty());
}

TEST_CASE("tree order is total and transitive on all K23 spanning trees") {
    auto f = fixtures::k23_standard();
    auto trees = enumerate_spanning_trees(f.graph);
    REQUIRE(trees.size() == 12);
    auto ord = [&](const SpanningTree& a, const SpanningTree& b) {
        return compare_prec(f.graph, f.ribbon, f.basis, a, b);
    };
    for (const auto& a : trees)
        for (const auto& b : trees) {
            Ordering ab = ord(a, b);
            Ordering ba = ord(b, a);
            if (a == b) {
                CHECK(ab == Ordering::Equal);
            } else {
                CHECK(ab != Ordering::Equal);
                CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
            }
            for (const auto& c : trees) {
                if (ab == Ordering::Less && ord(b, c) == Ordering::Less)
                    CHECK(ord(a, c) == Ordering::Less);
            }
        }
}

TEST_CASE("semi-passivity: the two characterizations agree on every Jaeger tree") {
    for (const auto& f : fixtures::semi_balanced_corpus()) {
        for (const auto& t : enumerate_jaeger_trees(f.graph, f.ribbon, f.basis)) {
            CHECK(semi_passive_arcs(f.graph, f.ribbon, f.basis, t) ==
                  detail::semi_passive_arcs_by_cut_order(f.graph, f.ribbon, f.basis, t));
        }
    }
    SUBCASE("non-Jaeger input is a precondition error") {
        auto f = fixtures::k23_octahedron();
        bool threw = false;
        for (const auto& t : enumerate_spanning_trees(f.graph)) {
            if (is_jaeger(f.graph, f.ribbon, f.basis, t)) continue;
            CHECK_THROWS_AS(semi_passive_arcs(f.graph, f.ribbon, f.basis, t), domain_error);
            threw = true;
            break;
        }
        CHECK(threw);
    }
    SUBCASE("tree graphs have no semi-passive arcs") {
        auto f = fixtures::star4();
        auto trees = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis);
        REQUIRE(trees.size() == 1);
        CHECK(semi_passive_arcs(f.graph, f.ribbon, f.basis, trees[0]).empty());
    }
    SUBCASE("the first Jaeger tree always has none") {
        for (const auto& f : fixtures::semi_balanced_corpus()) {
            auto trees = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis);
            REQUIRE(!trees.empty());
            CHECK(semi_passive_arcs(f.graph, f.ribbon, f.basis, trees[0]).empty());
        }
    }
}

TEST_CASE("fundamental-cut order property of Jaeger trees") {
    // tail-in-base cut arcs precede head-in-base ones, and precede the pivot
    // when the pivot's tail is in the base component
    for (const auto& f : {fixtures::k23_octahedron(), fixtures::duality_example(),
                          fixtures::k34_orientation(1)}) {
        for (const auto& t : enumerate_jaeger_trees(f.graph, f.ribbon, f.basis)) {
            TOrder ord = t_order(f.graph, tour(f.graph, f.ribbon, f.basis, t));
            for (int pivot : t.arcs) {
                FundamentalCut cut = fundamental_cut(f.graph, t, pivot, f.basis.node);
                for (int a1 : cut.arcs)
                    for (int a2 : cut.arcs) {
                        if (!cut.tail_in_base(f.graph, a1) || cut.tail_in_base(f.graph, a2))
                            continue;
                        CHECK(ord.rank[a1] < ord.rank[a2]);
                        if (cut.tail_in_base(f.graph, pivot) && a2 != pivot)
                            CHECK(ord.rank[pivot] < ord.rank[a2]);
                    }
            }
        }
    }
}

TEST_CASE("basis slide keeps the Jaeger trees") {
    SUBCASE("two-vertex graph") {
        auto g = make_graph(2, {{0, 1}});
        auto r = canonical_ribbon(g);
        Basis at_head{1, 0};
        Basis slid = jaeger_basis_slide(g, r, at_head);
        CHECK(slid.node == 0);
        CHECK(enumerate_jaeger_trees(g, r, at_head) == enumerate_jaeger_trees(g, r, slid));
    }
    SUBCASE("octahedron K23 with a head-side basis") {
        auto f = fixtures::k23_octahedron();
        Basis at_head{4, 3};  // q is the head of aq
        Basis slid = jaeger_basis_slide(f.graph, f.ribbon, at_head);
        CHECK(slid.node == 1);
        auto a = enumerate_jaeger_trees(f.graph, f.ribbon, at_head);
        auto b = enumerate_jaeger_trees(f.graph, f.ribbon, slid);
        CHECK(std::set<SpanningTree>(a.begin(), a.end()) ==
              std::set<SpanningTree>(b.begin(), b.end()));
    }
    SUBCASE("standard K23, every head-side basis") {
        auto f = fixtures::k23_standard();
        for (const Basis& b : all_bases(f.graph)) {
            if (f.graph.arc(b.arc).head != b.node) continue;
            Basis slid = jaeger_basis_slide(f.graph, f.ribbon, b);
            auto x = enumerate_jaeger_trees(f.graph, f.ribbon, b);
            auto y = enumerate_jaeger_trees(f.graph, f.ribbon, slid);
            CHECK(std::set<SpanningTree>(x.begin(), x.end()) ==
                  std::set<SpanningTree>(y.begin(), y.end()));
        }
    }
    SUBCASE("tail-side basis is rejected") {
        auto f = fixtures::k23_standard();
        CHECK_THROWS_AS(jaeger_basis_slide(f.graph, f.ribbon, Basis{0, 0}), domain_error);
    }
}

TEST_CASE("reverse symmetry of Jaeger trees") {
    // Jaeger trees of -G under the inverted ribbon with basis (b, predecessor
    // of the base arc) coincide with those of G.
    for (const auto& f : {fixtures::k23_octahedron(), fixtures::k23_standard(),
                          fixtures::duality_example()}) {
        DirectedGraph neg = reverse(f.graph);
        RibbonStructure inv = reversed_ribbon(f.ribbon);
        Basis nb{f.basis.node, rotation_predecessor(f.ribbon, f.basis.node, f.basis.arc)};
        auto a = enumerate_jaeger_trees(f.graph, f.ribbon, f.basis);
        auto b = enumerate_jaeger_trees(neg, inv, nb);
        CHECK(std::set<SpanningTree>(a.begin(), a.end()) ==
              std::set<SpanningTree>(b.begin(), b.end()));
    }
}

TEST_CASE("ribbon validation is strict") {
    auto f = fixtures::cycle4();
    RibbonStructure bad = f.ribbon;
    bad.rotation[0].pop_back();
    CHECK_THROWS_AS(validate_ribbon(f.graph, bad), domain_error);
    RibbonStructure swapped = f.ribbon;
    swapped.rotation[0][0] = 99;
    CHECK_THROWS_AS(validate_ribbon(f.graph, swapped), domain_error);
    CHECK_THROWS_AS(tour(f.graph, bad, f.basis, make_spanning_tree(f.graph, {0, 1, 2})),
                    domain_error);
}

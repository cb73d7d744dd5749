#include "oracle.hpp"

#include "weylgpd/bruhat.hpp"
#include "weylgpd/errors.hpp"

#include <doctest.h>

using namespace weylgpd;

namespace {

std::shared_ptr<const Groupoid> groupoid(const SemiCartanGraph &g) {
    return Groupoid::enumerate(std::make_shared<const RootSystem>(generate_real_roots(g)));
}

oracle::Key key_of(const Groupoid &g, ElementId w) {
    const auto &m = g.element(w);
    oracle::Mat mat(g.rank(), std::vector<long>(g.rank()));
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            mat[i][j] = m.matrix(i, j);
    return {m.target, m.source, mat};
}

} // namespace

TEST_CASE("theta sets agree with the loop-deletion oracle on every reduced word") {
    for (const auto &name : builtin_names()) {
        CAPTURE(name);
        const auto g = groupoid(builtin(name));
        const oracle::Data d(g->graph());
        const oracle::Enumeration e(d, 8);
        for (ElementId w = 0; w < g->size(); ++w)
            for (const auto &word : g->reduced_words(w)) {
                std::set<oracle::Key> got;
                for (ElementId u : theta_set(*g, word))
                    got.insert(key_of(*g, u));
                CHECK(got == oracle::subword_ideal(e, word.start, {word.letters.begin(), word.letters.end()}, true));
            }
    }
}

TEST_CASE("good subsequences only drop loop letters") {
    const auto g = groupoid(builtin("A2-std-3pt"));
    const Word w{0, {0, 1, 0}}; // loops: position 0 at x1
    const auto subs = good_subsequences(*g, w);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].kept == std::vector<std::size_t>{0, 1, 2});
    CHECK(subs[1].kept == std::vector<std::size_t>{1, 2});
    CHECK(subs[1].subword().letters == std::vector<Generator>{1, 0});
    CHECK_THROWS_AS(good_subsequences(*g, Word{0, {0, 0}}), NotReduced);
}

TEST_CASE("one-point posets equal the classical subword order") {
    for (const char *name : {"A1xA1-1pt", "A2-1pt", "B2-1pt", "G2-1pt"}) {
        CAPTURE(name);
        const auto g = groupoid(builtin(name));
        const oracle::Data d(g->graph());
        const oracle::Enumeration e(d, 8);
        const auto p = bruhat_poset(*g, 0, 0);
        CHECK(p.certified);
        for (ElementId w : p.elements)
            for (ElementId u : p.elements) {
                bool classical = false;
                for (const auto &word : e.reduced.at(key_of(*g, w)))
                    classical = classical || oracle::subword_ideal(e, 0, word, false).count(key_of(*g, u));
                CHECK(p.leq(u, w) == classical);
                CHECK(bruhat_leq(*g, u, w) == classical);
            }
    }
}

TEST_CASE("A2 one-point poset") {
    const auto g = groupoid(builtin("A2-1pt"));
    const auto p = bruhat_poset(*g, 0, 0);
    CHECK(p.elements.size() == 6);
    CHECK(p.relation.size() == 19);
    CHECK(p.hasse.size() == 8);
    CHECK(export_dot(*g, p) == "digraph bruhat {\n"
                               "  \"1\";\n  \"1,2\";\n  \"1,2,1\";\n  \"2\";\n  \"2,1\";\n  \"e\";\n"
                               "  \"1\" -> \"1,2\";\n  \"1\" -> \"2,1\";\n  \"1,2\" -> \"1,2,1\";\n"
                               "  \"2\" -> \"1,2\";\n  \"2\" -> \"2,1\";\n  \"2,1\" -> \"1,2,1\";\n"
                               "  \"e\" -> \"1\";\n  \"e\" -> \"2\";\n}\n");
}

TEST_CASE("multi-point hom-sets are thin") {
    // In the standard A2 groupoid the only loop letter at x1 is 1, so from the
    // longest element into x1 only one deletion is possible.
    const auto g = groupoid(builtin("A2-std-3pt"));
    const auto x1 = g->graph().index("x1");
    const auto w0 = g->longest_element(x1);
    const auto y = g->source(w0);
    const auto p = bruhat_poset(*g, y, x1);
    CHECK(p.elements.size() == 2);
    CHECK(p.hasse.size() == 1);
    CHECK(p.certified);
    CHECK_THROWS_AS(bruhat_leq(*g, g->identity(0), g->identity(1)), DifferentHomSet);
}

TEST_CASE("independence of the reduced word") {
    for (const auto &name : builtin_names()) {
        CAPTURE(name);
        const auto g = groupoid(builtin(name));
        for (ElementId w = 0; w < g->size(); ++w)
            CHECK(verify_bruhat_independence(g, w));
    }
}

TEST_CASE("empty hom-sets are reported") {
    const auto g = groupoid(parse_cartan_graph(R"({"rank": 1, "objects": ["a", "b"], "edges": [],
        "cartan": {"a": [[2]], "b": [[2]]}})"));
    CHECK_THROWS_AS(bruhat_poset(*g, 0, 1), EmptyHomSet);
}

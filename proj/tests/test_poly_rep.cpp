#include "oracle.hpp"

#include "weylgpd/errors.hpp"
#include "weylgpd/poly_rep.hpp"

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

const Polynomial t1 = Polynomial::variable(0);
const Polynomial t2 = Polynomial::variable(1);

} // namespace

TEST_CASE("psi expansion agrees with the distributed oracle on every reduced word") {
    for (const auto &name : builtin_names()) {
        CAPTURE(name);
        const auto g = groupoid(builtin(name));
        const oracle::Data d(g->graph());
        const oracle::Enumeration e(d, 8);
        for (ElementId w = 0; w < g->size(); ++w)
            for (const auto &word : g->reduced_words(w)) {
                const auto expected = oracle::psi(e, word.start, {word.letters.begin(), word.letters.end()});
                const auto got = psi_expand(g, word);
                REQUIRE(got.size() == expected.size());
                for (const auto &[u, c] : got.terms()) {
                    REQUIRE(expected.count(key_of(*g, u)) == 1);
                    CHECK(c == oracle::to_library(expected.at(key_of(*g, u))));
                }
            }
    }
}

TEST_CASE("beta sequences") {
    const auto g = builtin("row10");
    const auto rs = generate_real_roots(g);
    auto betas = [&](ObjectId x) {
        std::vector<std::vector<Int>> out;
        for (const auto &b : beta_sequence(rs, Word{x, {0, 1, 0, 1, 0, 1}}))
            out.push_back(b.coords);
        return out;
    };
    using V = std::vector<std::vector<Int>>;
    CHECK(betas(0) == V{{1, 0}, {2, 1}, {1, 1}, {2, 3}, {1, 2}, {0, 1}});
    CHECK(betas(1) == V{{1, 0}, {2, 1}, {3, 2}, {4, 3}, {1, 1}, {0, 1}});
    CHECK(betas(2) == V{{1, 0}, {4, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 1}});
    CHECK_THROWS_AS(beta_sequence(rs, Word{0, {0, 0}}), NotReduced);
}

TEST_CASE("h factors") {
    const auto g = groupoid(builtin("A2-std-3pt"));
    const auto x1 = g->graph().index("x1"), x2 = g->graph().index("x2");
    // 1 is a loop at x1, 2 is not
    CHECK(h(g, x1, 0, t1).size() == 2);
    CHECK(h(g, x1, 0, t1).coefficient(g->identity(x1)) == Polynomial(1));
    CHECK(h(g, x1, 1, t2) == PolyElement::basis(g, g->generator(x1, 1), t2));
    CHECK(h(g, x2, 0, t1).size() == 1);
}

TEST_CASE("psi_apply acts on the coefficient by the word's matrix") {
    const auto g = groupoid(builtin("A2-1pt"));
    const Word w{0, {0}};
    const auto got = psi_apply(g, w, t1, g->identity(0));
    // s_1 . t1 = -t1; h_1(t1) * (-t1) T_e
    const auto expected = psi_expand(g, w) * PolyElement::basis(g, g->identity(0), -t1);
    CHECK(got == expected);
    CHECK(got.coefficient(g->generator(0, 0)) == -(t1 * t1));
}

TEST_CASE("P_+ products") {
    const auto rs = generate_real_roots(builtin("B2-1pt"));
    CHECK(p_plus(rs, 0) == t1 * t2 * (t1 + t2) * (t1 * 2 + t2));
    CHECK(p_plus_excl(rs, 0, RootVector{{2, 1}}) == t1 * t2 * (t1 + t2));
    CHECK_THROWS_AS(p_plus_excl(rs, 0, RootVector{{1, 2}}), RootNotPresent);
    const auto a3 = generate_real_roots(parse_cartan_graph(R"({"rank": 3, "objects": ["x"], "edges": [],
        "cartan": {"x": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]}})"));
    CHECK_THROWS_AS(p_plus(a3, 0), RankNotTwo);
}

TEST_CASE("rank-two identity holds at every object of every rank-two builtin") {
    for (const auto &name : builtin_names()) {
        CAPTURE(name);
        const auto g = groupoid(builtin(name));
        for (ObjectId x = 0; x < g->graph().size(); ++x) {
            const auto r = check_rank2_identity(g, x);
            CHECK(r.ok());
            CHECK(r.word_1.size() == r.m);
        }
    }
    const auto g = groupoid(builtin("A2-std-3pt"));
    CHECK(check_rank2_identity(g, 0).shape == Rank2Shape::SeveralPoints);
    CHECK(check_rank2_identity(groupoid(builtin("A2-1pt")), 0).shape == Rank2Shape::OnePoint);
}

TEST_CASE("printed expansion") {
    const auto g = groupoid(builtin("A1xA1-1pt"));
    CHECK(format_psi(psi_expand(g, Word{0, {0, 1}})) ==
          "1 * T[e]\n1*t1 * T[1]\n1*t2 * T[2]\n1*t1*t2 * T[1,2]\n");
    CHECK(format_psi(PolyElement(g)) == "0\n");
}

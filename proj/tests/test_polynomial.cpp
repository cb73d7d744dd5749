#include "weylgpd/polynomial.hpp"

#include <doctest.h>

#include <limits>
#include <stdexcept>

using namespace weylgpd;

namespace {

const Polynomial t1 = Polynomial::variable(0);
const Polynomial t2 = Polynomial::variable(1);

} // namespace

TEST_CASE("printing uses grlex order and explicit coefficients") {
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial(-2).to_string() == "-2");
    CHECK(((t1 + t2) * (t1 + t2)).to_string() == "1*t1^2 + 2*t1*t2 + 1*t2^2");
    CHECK((t2 - t1 * t1 + Polynomial(3)).to_string() == "-1*t1^2 + 1*t2 + 3");
    CHECK((t1 * t2 * t2 - t1 * t1).to_string() == "1*t1*t2^2 - 1*t1^2");
}

TEST_CASE("ring axioms on samples") {
    const Polynomial a = t1 * 3 + t2, b = t1 * t2 - Polynomial(4), c = t2 * t2 * 2 - t1;
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Polynomial());
    CHECK((a * Polynomial(0)).is_zero());
    CHECK(-(-a) == a);
}

TEST_CASE("queries") {
    const Polynomial p = t1 * t1 * t2 * 5 + t2 - Polynomial(7);
    CHECK(p.degree() == 3);
    CHECK(p.num_vars() == 2);
    CHECK(p.coefficient({2, 1}) == 5);
    CHECK(p.coefficient({0, 1}) == 1);
    CHECK(p.coefficient({}) == -7);
    CHECK(p.coefficient({1}) == 0);
    CHECK(p.evaluate({2, 3}) == 5 * 4 * 3 + 3 - 7);
    CHECK_FALSE(p.has_nonnegative_coefficients());
    CHECK((t1 * t2 + t1).has_nonnegative_coefficients());
    CHECK(Polynomial::monomial({1, 0, 0}, 2) == t1 * 2);
    CHECK(Polynomial::linear_form({2, 0, -1}) == t1 * 2 - Polynomial::variable(2));
}

TEST_CASE("act substitutes the columns of the matrix") {
    const IntMatrix s{{-1, 2}, {0, 1}}; // B2 s_1: a1 -> -a1, a2 -> 2a1 + a2
    CHECK(act(s, t1) == -t1);
    CHECK(act(s, t2) == t1 * 2 + t2);
    CHECK(act(s, act(s, t1 * t2 + t2 * t2)) == t1 * t2 + t2 * t2);
    const IntMatrix u{{1, 0}, {1, -1}};
    const Polynomial p = t1 * t1 * t2 - t2 * 3;
    CHECK(act(s * u, p) == act(s, act(u, p)));
}

TEST_CASE("overflow is detected") {
    const Int big = std::numeric_limits<Int>::max() / 2 + 1;
    CHECK_THROWS_AS(Polynomial(big) + Polynomial(big), std::overflow_error);
    CHECK_THROWS_AS(Polynomial(big) * Polynomial(2), std::overflow_error);
}

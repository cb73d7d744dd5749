#pragma once

#include "weylgpd/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weylgpd {

/// Exponent vector with trailing zeros trimmed, so t_1 and t_1*t_2^0 agree.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial &m);

/// Graded lexicographic, largest first, with t_1 > t_2 > ...
struct GrlexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Sparse polynomial in Z[t_1, t_2, ...]. The number of variables is not
/// fixed; coefficients are checked for overflow.
class Polynomial {
  public:
    using Terms = std::map<Monomial, Int, GrlexGreater>;

    Polynomial() = default;
    Polynomial(Int constant); // NOLINT: integers embed as constants

    /// t_{i+1} for zero-based i.
    static Polynomial variable(std::size_t i);
    static Polynomial monomial(Monomial m, Int coeff);
    /// sum_k coeffs[k] * t_{k+1}.
    static Polynomial linear_form(const std::vector<Int> &coeffs);

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Int coefficient(const Monomial &m) const;
    std::uint64_t degree() const;
    /// Highest variable index in use plus one.
    std::size_t num_vars() const;
    bool has_nonnegative_coefficients() const;
    Int evaluate(const std::vector<Int> &point) const;

    Polynomial &operator+=(const Polynomial &rhs);
    Polynomial &operator-=(const Polynomial &rhs);
    Polynomial &operator*=(const Polynomial &rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial operator-() const;

    bool operator==(const Polynomial &) const = default;

    /// Expanded, grlex order, explicit coefficients: "1*t1^2 + 3*t1*t2 - 2".
    std::string to_string() const;

  private:
    void add_term(const Monomial &m, Int c);
    Terms terms_;
};

/// Algebra map f_s on Z[t]: t_i -> sum_k s(k,i) t_k, the image of alpha_i.
Polynomial act(const IntMatrix &s, const Polynomial &p);

} // namespace weylgpd

#pragma once

#include "weylgpd/cartan_graph.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace weylgpd {

/// Coordinates of an element of Z^I in the basis alpha_1..alpha_rank.
struct RootVector {
    std::vector<Int> coords;

    static RootVector simple(std::size_t rank, Generator i);

    std::size_t rank() const noexcept { return coords.size(); }
    Int height() const;
    bool is_zero() const;
    bool is_positive() const; // nonzero, all coordinates >= 0
    bool is_negative() const;
    RootVector operator-() const;

    bool operator==(const RootVector &) const = default;
    auto operator<=>(const RootVector &) const = default;

    /// "n1*a1 + n2*a2 + ..." with every coordinate printed.
    std::string to_string() const;
};

/// Height first, then coordinates in descending lexicographic order
/// (alpha_1 before alpha_2).
struct GradedLexLess {
    bool operator()(const RootVector &a, const RootVector &b) const;
};

/// Matrix of s_i^x: alpha_j -> alpha_j - c^x_ij alpha_i.
IntMatrix simple_reflection(const SemiCartanGraph &g, ObjectId x, Generator i);

/// A bundle of finite root sets Delta^x over a semi-Cartan graph.
class RootSystem {
  public:
    /// Wraps externally supplied root sets without checking any axiom.
    RootSystem(SemiCartanGraph graph, std::vector<std::set<RootVector>> roots);

    const SemiCartanGraph &graph() const noexcept { return graph_; }
    std::size_t rank() const noexcept { return graph_.rank(); }

    const std::set<RootVector> &roots(ObjectId x) const { return roots_.at(x); }
    /// Positive roots at x in graded-lex order.
    const std::vector<RootVector> &positive(ObjectId x) const { return positive_.at(x); }
    bool contains(ObjectId x, const RootVector &r) const { return roots_.at(x).count(r) != 0; }

    /// s_i^x, cached.
    const IntMatrix &reflection(ObjectId x, Generator i) const { return reflections_[x][i]; }

  private:
    SemiCartanGraph graph_;
    std::vector<std::set<RootVector>> roots_;
    std::vector<std::vector<RootVector>> positive_;
    std::vector<std::vector<IntMatrix>> reflections_;
};

inline constexpr std::size_t kDefaultRootBudget = 10000;

/// Real roots by closure of {+-alpha_j} under the simple reflections.
/// Throws BudgetExceeded when some Delta^x grows past max_roots.
RootSystem generate_real_roots(const SemiCartanGraph &g, std::size_t max_roots = kDefaultRootBudget);

/// One entry per violated axiom per object; empty iff rs is a finite GRS.
ValidationReport check_grs_axioms(const RootSystem &rs);

/// |Delta^x intersected with N0 alpha_i + N0 alpha_j|, for i != j.
std::size_t m_entry(const RootSystem &rs, ObjectId x, Generator i, Generator j);

} // namespace weylgpd

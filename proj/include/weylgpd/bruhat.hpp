#pragma once

#include "weylgpd/weyl_groupoid.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace weylgpd {

/// Kept positions (zero-based, increasing) of a reduced word; every dropped
/// position is a loop letter of the word's object path.
struct GoodSubsequence {
    Word word;
    std::vector<std::size_t> kept;

    Word subword() const;
};

/// All good subsequences of a reduced word, kept-lists in lexicographic order.
/// Throws NotReduced.
std::vector<GoodSubsequence> good_subsequences(const Groupoid &g, const Word &w);

/// Elements given by good subsequences whose subword is reduced. Throws NotReduced.
std::set<ElementId> theta_set(const Groupoid &g, const Word &w);

/// u <= w in the Bruhat order of Hom(y, x), using the lexicographically first
/// reduced word of w. Throws DifferentHomSet.
bool bruhat_leq(const Groupoid &g, ElementId u, ElementId w);

struct BruhatPoset {
    ObjectId source = 0;
    ObjectId target = 0;
    std::vector<ElementId> elements; // index order: by length, then word
    /// All pairs (u, w) with u <= w, reflexive pairs included.
    std::vector<std::pair<ElementId, ElementId>> relation;
    /// Covering pairs (lower, higher).
    std::vector<std::pair<ElementId, ElementId>> hasse;
    bool certified = false; // order axioms and strict length monotonicity were checked

    bool leq(ElementId u, ElementId w) const;
};

/// Throws EmptyHomSet.
BruhatPoset bruhat_poset(const Groupoid &g, ObjectId y, ObjectId x);

/// Theta sets agree over all reduced words of w and match the support of
/// each Psi expansion.
bool verify_bruhat_independence(const std::shared_ptr<const Groupoid> &g, ElementId w);

/// `digraph bruhat { ... }` with one node per element and one edge per cover.
std::string export_dot(const Groupoid &g, const BruhatPoset &p);

} // namespace weylgpd

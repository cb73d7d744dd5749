#pragma once

#include "weylgpd/cartan_graph.hpp"
#include "weylgpd/errors.hpp"
#include "weylgpd/weyl_groupoid.hpp"

#include <concepts>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace weylgpd {

/// Commutative ring with unit; integers embed via R(0) and R(1).
template <class R>
concept CoefficientRing = std::regular<R> && requires(R a, const R b) {
    R(0);
    R(1);
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    a += b;
};

/// Finite linear combination of groupoid elements with no zero coefficients.
/// Shared by the nil-Hecke algebra N (keys read as T_w) and the groupoid
/// algebra K W (keys read as w).
template <CoefficientRing R, class Derived>
class LinearCombination {
  public:
    using Terms = std::map<ElementId, R>;

    explicit LinearCombination(std::shared_ptr<const Groupoid> g) : groupoid_(std::move(g)) {}

    const Groupoid &groupoid() const noexcept { return *groupoid_; }
    const std::shared_ptr<const Groupoid> &groupoid_ptr() const noexcept { return groupoid_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    R coefficient(ElementId w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(ElementId w, const R &c) {
        if (c == R(0))
            return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (fresh)
            return;
        it->second += c;
        if (it->second == R(0))
            terms_.erase(it);
    }

    Derived &operator+=(const Derived &rhs) {
        check_same(rhs);
        for (const auto &[w, c] : rhs.terms_)
            add_term(w, c);
        return self();
    }
    friend Derived operator+(Derived a, const Derived &b) { return a += b; }

    friend Derived operator*(const R &c, const Derived &a) {
        Derived out(a.groupoid_);
        for (const auto &[w, d] : a.terms_)
            out.add_term(w, c * d);
        return out;
    }

    bool operator==(const LinearCombination &rhs) const {
        return groupoid_ == rhs.groupoid_ && terms_ == rhs.terms_;
    }

  protected:
    void check_same(const LinearCombination &rhs) const {
        if (groupoid_ != rhs.groupoid_)
            throw GroupoidMismatch("elements belong to different Weyl groupoids");
    }

  private:
    Derived &self() { return static_cast<Derived &>(*this); }

    std::shared_ptr<const Groupoid> groupoid_;
    Terms terms_;
};

/// Element of the nil-Hecke algebra N in the T_w basis.
template <CoefficientRing R>
class NilHeckeElement : public LinearCombination<R, NilHeckeElement<R>> {
    using Base = LinearCombination<R, NilHeckeElement<R>>;

  public:
    using Base::Base;

    static NilHeckeElement basis(std::shared_ptr<const Groupoid> g, ElementId w, const R &c = R(1)) {
        NilHeckeElement out(std::move(g));
        out.add_term(w, c);
        return out;
    }

    /// T_u T_v = T_{u o v} when composable with lengths adding up; 0 otherwise.
    friend NilHeckeElement operator*(const NilHeckeElement &a, const NilHeckeElement &b) {
        a.check_same(b);
        const Groupoid &g = a.groupoid();
        NilHeckeElement out(a.groupoid_ptr());
        for (const auto &[u, cu] : a.terms())
            for (const auto &[v, cv] : b.terms()) {
                const auto uv = g.compose(u, v);
                if (uv && g.length(*uv) == g.length(u) + g.length(v))
                    out.add_term(*uv, cu * cv);
            }
        return out;
    }
};

/// Element of the groupoid algebra K W.
template <CoefficientRing R>
class GroupoidSum : public LinearCombination<R, GroupoidSum<R>> {
    using Base = LinearCombination<R, GroupoidSum<R>>;

  public:
    using Base::Base;

    static GroupoidSum basis(std::shared_ptr<const Groupoid> g, ElementId w, const R &c = R(1)) {
        GroupoidSum out(std::move(g));
        out.add_term(w, c);
        return out;
    }
    /// sum_x id_x
    static GroupoidSum unit(std::shared_ptr<const Groupoid> g) {
        GroupoidSum out(g);
        for (ObjectId x = 0; x < g->graph().size(); ++x)
            out.add_term(g->identity(x), R(1));
        return out;
    }
};

/// e^x = T_{id_x}
template <CoefficientRing R = Int>
NilHeckeElement<R> idempotent(const std::shared_ptr<const Groupoid> &g, ObjectId x) {
    return NilHeckeElement<R>::basis(g, g->identity(x));
}

/// n_i^x = T_{sigma_i^x}
template <CoefficientRing R = Int>
NilHeckeElement<R> generator(const std::shared_ptr<const Groupoid> &g, ObjectId x, Generator i) {
    return NilHeckeElement<R>::basis(g, g->generator(x, i));
}

/// sum_x e^x
template <CoefficientRing R = Int>
NilHeckeElement<R> unit(const std::shared_ptr<const Groupoid> &g) {
    NilHeckeElement<R> out(g);
    for (ObjectId x = 0; x < g->graph().size(); ++x)
        out.add_term(g->identity(x), R(1));
    return out;
}

/// Lambda(T_u)(w) computed by applying E^x and the operators L_i^x along a
/// reduced word of u, right to left. nullopt stands for 0.
std::optional<ElementId> lambda_on_basis(const Groupoid &g, ElementId u, ElementId w);

template <CoefficientRing R>
GroupoidSum<R> lambda_action(const NilHeckeElement<R> &n, const GroupoidSum<R> &v) {
    if (n.groupoid_ptr() != v.groupoid_ptr())
        throw GroupoidMismatch("elements belong to different Weyl groupoids");
    GroupoidSum<R> out(n.groupoid_ptr());
    for (const auto &[u, cu] : n.terms())
        for (const auto &[w, cw] : v.terms())
            if (auto r = lambda_on_basis(n.groupoid(), u, w))
                out.add_term(*r, cu * cw);
    return out;
}

/// Phi(n) = Lambda(n)(sum_x id_x).
template <CoefficientRing R>
GroupoidSum<R> phi(const NilHeckeElement<R> &n) {
    return lambda_action(n, GroupoidSum<R>::unit(n.groupoid_ptr()));
}

/// The algebra map N -> N' induced by a covering: e^x and n_i^x go to the
/// sums over the fiber of x. `covering_groupoid` is the groupoid of c.source_graph.
/// Throws InvalidCovering or GroupoidMismatch.
template <CoefficientRing R>
NilHeckeElement<R> covering_embed(const Covering &c, const std::shared_ptr<const Groupoid> &covering_groupoid,
                                  const NilHeckeElement<R> &n) {
    const auto report = verify_covering(c);
    if (!report.ok())
        throw InvalidCovering(report.violations.front().invariant + ": " +
                              report.violations.front().detail);
    const Groupoid &base = n.groupoid();
    if (!(base.graph() == c.target_graph) || !(covering_groupoid->graph() == c.source_graph))
        throw GroupoidMismatch("covering does not match the groupoids of its graphs");

    std::vector<std::vector<ObjectId>> fibers(c.target_graph.size());
    for (ObjectId x = 0; x < fibers.size(); ++x)
        fibers[x] = c.fiber(x);

    NilHeckeElement<R> out(covering_groupoid);
    for (const auto &[w, cw] : n.terms()) {
        const Word &word = base.first_reduced_word(w);
        NilHeckeElement<R> image(covering_groupoid);
        for (ObjectId y : fibers[base.target(w)])
            image.add_term(covering_groupoid->identity(y), R(1));
        const auto path = word.object_path(base.graph());
        for (std::size_t k = 0; k < word.size(); ++k) {
            NilHeckeElement<R> gen(covering_groupoid);
            for (ObjectId y : fibers[path[k]])
                gen.add_term(covering_groupoid->generator(y, word.letters[k]), R(1));
            image = image * gen;
        }
        out += cw * image;
    }
    return out;
}

} // namespace weylgpd

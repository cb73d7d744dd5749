#include "weylgpd/poly_rep.hpp"

#include "weylgpd/errors.hpp"

#include <algorithm>
#include <sstream>

namespace weylgpd {

Polynomial linear_form(const RootVector &r) { return Polynomial::linear_form(r.coords); }

PolyElement h(const std::shared_ptr<const Groupoid> &g, ObjectId x, Generator i, const Polynomial &t) {
    PolyElement out = PolyElement::basis(g, g->generator(x, i), t);
    if (g->graph().is_loop(i, x))
        out.add_term(g->identity(x), Polynomial(1));
    return out;
}

std::vector<RootVector> beta_sequence(const RootSystem &rs, const Word &w) {
    const auto &g = rs.graph();
    const auto path = w.object_path(g);
    IntMatrix prefix = IntMatrix::identity(g.rank());
    std::vector<RootVector> betas;
    betas.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        RootVector beta{prefix.column(w.letters[k])};
        if (!beta.is_positive())
            throw NotReduced("word " + format_letters(w.letters) + " at '" + g.name(w.start) +
                             "' is not reduced (beta_" + std::to_string(k + 1) + " = " +
                             beta.to_string() + ")");
        betas.push_back(std::move(beta));
        prefix = prefix * rs.reflection(path[k], w.letters[k]);
    }
    return betas;
}

PolyElement psi_expand(const std::shared_ptr<const Groupoid> &g, const Word &w) {
    const auto betas = beta_sequence(g->root_system(), w);
    const auto path = w.object_path(g->graph());
    PolyElement out = PolyElement::basis(g, g->identity(w.start));
    for (std::size_t k = 0; k < w.size(); ++k)
        out = out * h(g, path[k], w.letters[k], linear_form(betas[k]));
    return out;
}

PolyElement psi_apply(const std::shared_ptr<const Groupoid> &g, const Word &w, const Polynomial &f,
                      ElementId u) {
    const Morphism m = evaluate_word(g->root_system(), w);
    return psi_expand(g, w) * PolyElement::basis(g, u, act(m.matrix, f));
}

Polynomial p_plus(const RootSystem &rs, ObjectId x) {
    if (rs.rank() != 2)
        throw RankNotTwo("P_+ is defined for rank two only");
    Polynomial out(1);
    for (const auto &r : rs.positive(x))
        out *= linear_form(r);
    return out;
}

Polynomial p_plus_excl(const RootSystem &rs, ObjectId x, const RootVector &alpha) {
    if (rs.rank() != 2)
        throw RankNotTwo("P_+ is defined for rank two only");
    const auto &pos = rs.positive(x);
    if (std::find(pos.begin(), pos.end(), alpha) == pos.end())
        throw RootNotPresent(alpha.to_string() + " is not a positive root at '" +
                             rs.graph().name(x) + "'");
    Polynomial out(1);
    for (const auto &r : pos)
        if (r != alpha)
            out *= linear_form(r);
    return out;
}

namespace {

Word alternating(ObjectId x, Generator first, std::size_t m) {
    Word w{x, {}};
    for (std::size_t k = 0; k < m; ++k)
        w.letters.push_back(k % 2 == 0 ? first : 1 - first);
    return w;
}

// P_+^x T_w plus one term per reduced single loop deletion.
PolyElement several_point_form(const std::shared_ptr<const Groupoid> &g, const Word &w) {
    const auto &rs = g->root_system();
    const auto path = w.object_path(g->graph());
    const auto betas = beta_sequence(rs, w);
    PolyElement out = PolyElement::basis(g, g->evaluate(w), p_plus(rs, w.start));
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!g->graph().is_loop(w.letters[k], path[k]))
            continue;
        Word shorter = w;
        shorter.letters.erase(shorter.letters.begin() + static_cast<std::ptrdiff_t>(k));
        if (g->is_reduced(shorter))
            out.add_term(g->evaluate(shorter), p_plus_excl(rs, w.start, betas[k]));
    }
    return out;
}

} // namespace

Rank2Check check_rank2_identity(const std::shared_ptr<const Groupoid> &g, ObjectId x) {
    const auto &rs = g->root_system();
    const auto &graph = g->graph();
    if (rs.rank() != 2)
        throw RankNotTwo("rank-two identity needs a rank-two graph");

    Rank2Check out;
    out.m = m_entry(rs, x, 0, 1);
    out.word_1 = alternating(x, 0, out.m);
    out.word_2 = alternating(x, 1, out.m);
    out.shape = graph.is_loop(0, x) && graph.is_loop(1, x) ? Rank2Shape::OnePoint
                                                            : Rank2Shape::SeveralPoints;

    const PolyElement e1 = psi_expand(g, out.word_1);
    const PolyElement e2 = psi_expand(g, out.word_2);
    out.braid_equal = e1 == e2;
    if (!out.braid_equal)
        out.failures.push_back("alternating products differ at '" + graph.name(x) + "'");

    const ElementId w0 = g->evaluate(out.word_1);
    out.top_term = g->evaluate(out.word_2) == w0 && e1.coefficient(w0) == p_plus(rs, x);
    if (!out.top_term)
        out.failures.push_back("coefficient of T_w0 is not P_+ at '" + graph.name(x) + "'");

    if (out.shape == Rank2Shape::OnePoint) {
        const auto homset = g->hom(x, x);
        bool all = e1.size() == homset.size() && e1.coefficient(g->identity(x)) == Polynomial(1);
        for (ElementId u : homset)
            all = all && e1.coefficient(u).has_nonnegative_coefficients() && !e1.coefficient(u).is_zero();
        out.closed_form = all;
    } else {
        out.closed_form =
            e1 == several_point_form(g, out.word_1) && e2 == several_point_form(g, out.word_2);
    }
    if (!out.closed_form)
        out.failures.push_back("expansion does not have the closed form at '" + graph.name(x) + "'");
    return out;
}

bool verify_rank2_identity(const std::shared_ptr<const Groupoid> &g, ObjectId x) {
    return check_rank2_identity(g, x).ok();
}

std::string format_psi(const PolyElement &e) {
    if (e.is_zero())
        return "0\n";
    std::ostringstream os;
    for (const auto &[u, c] : e.terms())
        os << c.to_string() << " * T[" << format_letters(e.groupoid().first_reduced_word(u).letters)
           << "]\n";
    return os.str();
}

} // namespace weylgpd

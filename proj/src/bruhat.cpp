#include "weylgpd/bruhat.hpp"

#include "weylgpd/errors.hpp"
#include "weylgpd/poly_rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylgpd {

Word GoodSubsequence::subword() const {
    Word out{word.start, {}};
    for (auto k : kept)
        out.letters.push_back(word.letters[k]);
    return out;
}

namespace {

void require_reduced(const Groupoid &g, const Word &w) {
    if (!g.is_reduced(w))
        throw NotReduced("word " + format_letters(w.letters) + " at '" + g.graph().name(w.start) +
                         "' is not reduced");
}

} // namespace

std::vector<GoodSubsequence> good_subsequences(const Groupoid &g, const Word &w) {
    require_reduced(g, w);
    const auto path = w.object_path(g.graph());
    std::vector<std::size_t> loops;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (g.graph().is_loop(w.letters[k], path[k]))
            loops.push_back(k);
    if (loops.size() >= 8 * sizeof(std::size_t))
        throw BudgetExceeded("too many loop letters to enumerate good subsequences");

    std::vector<GoodSubsequence> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << loops.size()); ++mask) {
        std::vector<bool> dropped(w.size(), false);
        for (std::size_t b = 0; b < loops.size(); ++b)
            if (mask >> b & 1)
                dropped[loops[b]] = true;
        GoodSubsequence s{w, {}};
        for (std::size_t k = 0; k < w.size(); ++k)
            if (!dropped[k])
                s.kept.push_back(k);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const GoodSubsequence &a, const GoodSubsequence &b) { return a.kept < b.kept; });
    return out;
}

std::set<ElementId> theta_set(const Groupoid &g, const Word &w) {
    std::set<ElementId> out;
    for (const auto &s : good_subsequences(g, w)) {
        const Word sub = s.subword();
        const ElementId u = g.evaluate(sub);
        if (g.length(u) == sub.size())
            out.insert(u);
    }
    return out;
}

bool bruhat_leq(const Groupoid &g, ElementId u, ElementId w) {
    if (g.source(u) != g.source(w) || g.target(u) != g.target(w))
        throw DifferentHomSet("Bruhat order compares elements of one hom-set only");
    if (u == w)
        return true;
    if (g.length(u) >= g.length(w))
        return false;
    return theta_set(g, g.first_reduced_word(w)).count(u) != 0;
}

bool BruhatPoset::leq(ElementId u, ElementId w) const {
    return std::binary_search(relation.begin(), relation.end(), std::make_pair(u, w));
}

BruhatPoset bruhat_poset(const Groupoid &g, ObjectId y, ObjectId x) {
    BruhatPoset p;
    p.source = y;
    p.target = x;
    p.elements = g.hom(y, x);
    if (p.elements.empty())
        throw EmptyHomSet("Hom('" + g.graph().name(y) + "', '" + g.graph().name(x) + "') is empty");

    std::map<ElementId, std::set<ElementId>> below;
    for (ElementId w : p.elements) {
        below[w] = theta_set(g, g.first_reduced_word(w));
        below[w].insert(w);
    }
    for (ElementId w : p.elements)
        for (ElementId u : below[w])
            p.relation.emplace_back(u, w);
    std::sort(p.relation.begin(), p.relation.end());

    bool ok = true;
    for (const auto &[u, w] : p.relation) {
        if (u != w && (g.length(u) >= g.length(w) || p.leq(w, u)))
            ok = false;
        for (ElementId v : below[u])
            if (!below[w].count(v))
                ok = false;
    }
    for (const auto &[u, w] : p.relation) {
        if (u == w)
            continue;
        bool cover = true;
        for (ElementId v : below[w])
            if (v != u && v != w && below[v].count(u))
                cover = false;
        if (cover)
            p.hasse.emplace_back(u, w);
    }
    p.certified = ok;
    return p;
}

bool verify_bruhat_independence(const std::shared_ptr<const Groupoid> &g, ElementId w) {
    const auto words = g->reduced_words(w);
    const auto reference = theta_set(*g, words.front());
    for (const auto &word : words) {
        if (theta_set(*g, word) != reference)
            return false;
        std::set<ElementId> support;
        const auto expansion = psi_expand(g, word);
        for (const auto &[u, c] : expansion.terms())
            support.insert(u);
        if (support != reference)
            return false;
    }
    return true;
}

std::string export_dot(const Groupoid &g, const BruhatPoset &p) {
    auto label = [&](ElementId w) {
        return "\"" + format_letters(g.first_reduced_word(w).letters) + "\"";
    };
    std::vector<std::string> nodes, edges;
    for (ElementId w : p.elements)
        nodes.push_back("  " + label(w) + ";");
    for (const auto &[u, w] : p.hasse)
        edges.push_back("  " + label(u) + " -> " + label(w) + ";");
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "digraph bruhat {\n";
    for (const auto &l : nodes)
        os << l << '\n';
    for (const auto &l : edges)
        os << l << '\n';
    os << "}\n";
    return os.str();
}

} // namespace weylgpd

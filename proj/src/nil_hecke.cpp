#include "weylgpd/nil_hecke.hpp"

namespace weylgpd {

std::optional<ElementId> lambda_on_basis(const Groupoid &g, ElementId u, ElementId w) {
    // E^{source(u)} first: the rightmost factor of T_u is an idempotent there.
    if (g.target(w) != g.source(u))
        return std::nullopt;
    const Word &word = g.first_reduced_word(u);
    ElementId cur = w;
    for (std::size_t k = word.size(); k-- > 0;) {
        const ElementId next = g.left(cur, word.letters[k]);
        if (g.length(next) <= g.length(cur))
            return std::nullopt;
        cur = next;
    }
    return cur;
}

} // namespace weylgpd

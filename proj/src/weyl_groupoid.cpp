#include "weylgpd/weyl_groupoid.hpp"

#include "weylgpd/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace weylgpd {

std::vector<ObjectId> Word::object_path(const SemiCartanGraph &g) const {
    std::vector<ObjectId> path{start};
    path.reserve(letters.size() + 1);
    for (auto i : letters)
        path.push_back(g.rho(i, path.back()));
    return path;
}

std::string format_letters(const std::vector<Generator> &letters) {
    if (letters.empty())
        return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k)
        os << (k ? "," : "") << letters[k] + 1;
    return os.str();
}

std::vector<Generator> parse_letters(const std::string &text, std::size_t rank) {
    std::vector<Generator> out;
    if (text.empty() || text == "e")
        return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception &) {
            throw SyntaxError("word letter '" + tok + "' is not an integer");
        }
        if (used != tok.size())
            throw SyntaxError("word letter '" + tok + "' is not an integer");
        if (v < 1 || static_cast<std::size_t>(v) > rank)
            throw SyntaxError("word letter " + tok + " out of range 1.." + std::to_string(rank));
        out.push_back(static_cast<Generator>(v - 1));
    }
    return out;
}

Morphism evaluate_word(const RootSystem &rs, const Word &w) {
    const auto &g = rs.graph();
    const auto path = w.object_path(g);
    IntMatrix m = IntMatrix::identity(g.rank());
    for (std::size_t k = 0; k < w.size(); ++k)
        m = m * rs.reflection(path[k], w.letters[k]);
    return {path.back(), w.start, std::move(m)};
}

std::size_t length(const RootSystem &rs, const Morphism &m) {
    std::size_t count = 0;
    for (const auto &a : rs.positive(m.source))
        if (RootVector{m.matrix * a.coords}.is_negative())
            ++count;
    return count;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Groupoid> Groupoid::enumerate(std::shared_ptr<const RootSystem> rs,
                                                    std::size_t max_elements) {
    const auto &g = rs->graph();
    const auto n = g.rank();

    std::vector<Morphism> elems;
    std::vector<std::size_t> depth;
    std::vector<std::vector<ElementId>> left;
    std::map<Key, ElementId> index;

    auto insert = [&](Morphism m, std::size_t d) -> ElementId {
        Key key{m.target, m.source, m.matrix.data()};
        auto [it, fresh] = index.emplace(std::move(key), elems.size());
        if (fresh) {
            if (elems.size() >= max_elements)
                throw BudgetExceeded("Weyl groupoid has more than " + std::to_string(max_elements) +
                                     " elements");
            elems.push_back(std::move(m));
            depth.push_back(d);
            left.emplace_back(n);
        }
        return it->second;
    };

    for (ObjectId x = 0; x < g.size(); ++x)
        insert({x, x, IntMatrix::identity(n)}, 0);
    for (ElementId w = 0; w < elems.size(); ++w) { // elems grows: BFS in insertion order
        for (Generator i = 0; i < n; ++i) {
            const ObjectId t = g.rho(i, elems[w].target);
            Morphism next{elems[w].source, t, rs->reflection(t, i) * elems[w].matrix};
            const ElementId v = insert(std::move(next), depth[w] + 1);
            left[w][i] = v;
        }
    }

    // Lexicographically first reduced words, in BFS order so shorter words exist.
    std::vector<Word> words(elems.size());
    for (ElementId w = 0; w < elems.size(); ++w) {
        words[w].start = elems[w].target;
        if (depth[w] == 0)
            continue;
        for (Generator i = 0; i < n; ++i) {
            const ElementId v = left[w][i];
            if (depth[v] + 1 == depth[w]) {
                words[w].letters.push_back(i);
                const auto &tail = words[v].letters;
                words[w].letters.insert(words[w].letters.end(), tail.begin(), tail.end());
                break;
            }
        }
    }

    std::vector<ElementId> order(elems.size());
    std::iota(order.begin(), order.end(), ElementId{0});
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
        return std::tie(depth[a], words[a].letters, elems[a].target, elems[a].source) <
               std::tie(depth[b], words[b].letters, elems[b].target, elems[b].source);
    });
    std::vector<ElementId> rank_of(elems.size());
    for (ElementId k = 0; k < order.size(); ++k)
        rank_of[order[k]] = k;

    std::shared_ptr<Groupoid> out(new Groupoid(std::move(rs)));
    out->elements_.reserve(elems.size());
    for (ElementId k = 0; k < order.size(); ++k) {
        const ElementId old = order[k];
        out->elements_.push_back(elems[old]);
        out->lengths_.push_back(depth[old]);
        out->first_words_.push_back(words[old]);
        std::vector<ElementId> row(n);
        for (Generator i = 0; i < n; ++i)
            row[i] = rank_of[left[old][i]];
        out->left_.push_back(std::move(row));
    }
    for (const auto &[key, old] : index)
        out->index_.emplace(key, rank_of[old]);
    out->identities_.resize(g.size());
    for (ObjectId x = 0; x < g.size(); ++x)
        out->identities_[x] = out->index_.at(Key{x, x, IntMatrix::identity(n).data()});
    return out;
}

std::optional<ElementId> Groupoid::find(const Morphism &m) const {
    auto it = index_.find(Key{m.target, m.source, m.matrix.data()});
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

ElementId Groupoid::id(const Morphism &m) const {
    if (auto k = find(m))
        return *k;
    throw GroupoidMismatch("morphism is not an element of this Weyl groupoid");
}

ElementId Groupoid::generator(ObjectId x, Generator i) const {
    return left_[identities_.at(graph().rho(i, x))].at(i);
}

std::optional<ElementId> Groupoid::compose(ElementId u, ElementId v) const {
    const auto &a = elements_.at(u);
    const auto &b = elements_.at(v);
    if (a.source != b.target)
        return std::nullopt;
    return id(Morphism{b.source, a.target, a.matrix * b.matrix});
}

ElementId Groupoid::evaluate(const Word &w) const {
    const auto path = w.object_path(graph());
    ElementId cur = identities_.at(path.back());
    for (std::size_t k = w.size(); k-- > 0;)
        cur = left_[cur][w.letters[k]];
    return cur;
}

bool Groupoid::is_reduced(const Word &w) const { return lengths_[evaluate(w)] == w.size(); }

std::vector<Word> Groupoid::reduced_words(ElementId id) const {
    const ObjectId x = target(id);
    if (lengths_.at(id) == 0)
        return {Word{x, {}}};
    std::vector<Word> out;
    for (Generator i = 0; i < rank(); ++i) {
        const ElementId v = left_[id][i];
        if (lengths_[v] + 1 != lengths_[id])
            continue;
        for (auto &tail : reduced_words(v)) {
            Word w{x, {i}};
            w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

ElementId Groupoid::longest_element(ObjectId target) const {
    std::optional<ElementId> best;
    for (ElementId w = 0; w < size(); ++w)
        if (elements_[w].target == target && (!best || lengths_[w] > lengths_[*best]))
            best = w;
    if (!best)
        throw UnknownName("object index out of range");
    return *best;
}

std::vector<ElementId> Groupoid::hom(ObjectId y, ObjectId x) const {
    std::vector<ElementId> out;
    for (ElementId w = 0; w < size(); ++w)
        if (elements_[w].source == y && elements_[w].target == x)
            out.push_back(w);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// m_ij^x for every object, i != j.
std::vector<std::vector<std::vector<std::size_t>>> coxeter_table(const RootSystem &rs) {
    const auto &g = rs.graph();
    std::vector<std::vector<std::vector<std::size_t>>> m(
        g.size(), std::vector<std::vector<std::size_t>>(g.rank(), std::vector<std::size_t>(g.rank(), 1)));
    for (ObjectId x = 0; x < g.size(); ++x)
        for (Generator i = 0; i < g.rank(); ++i)
            for (Generator j = 0; j < g.rank(); ++j)
                if (i != j)
                    m[x][i][j] = m_entry(rs, x, i, j);
    return m;
}

} // namespace

std::vector<Word> braid_class(const RootSystem &rs, const Word &w, std::size_t max_words) {
    const auto &g = rs.graph();
    const auto m = coxeter_table(rs);
    std::set<Word> seen{w};
    std::deque<Word> work{w};
    while (!work.empty()) {
        Word cur = std::move(work.front());
        work.pop_front();
        const auto path = cur.object_path(g);
        for (std::size_t p = 0; p < cur.size(); ++p) {
            const Generator i = cur.letters[p];
            for (Generator j = 0; j < g.rank(); ++j) {
                if (j == i)
                    continue;
                const std::size_t len = m[path[p]][i][j];
                if (p + len > cur.size())
                    continue;
                bool alternating = true;
                for (std::size_t k = 0; k < len && alternating; ++k)
                    alternating = cur.letters[p + k] == (k % 2 == 0 ? i : j);
                if (!alternating)
                    continue;
                Word next = cur;
                for (std::size_t k = 0; k < len; ++k)
                    next.letters[p + k] = (k % 2 == 0 ? j : i);
                if (seen.insert(next).second) {
                    if (seen.size() > max_words)
                        throw BudgetExceeded("braid class exceeded " + std::to_string(max_words) +
                                             " words");
                    work.push_back(std::move(next));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool braid_equivalent(const RootSystem &rs, const Word &w1, const Word &w2) {
    if (w1.start != w2.start || w1.size() != w2.size())
        return false;
    const auto cls = braid_class(rs, w1);
    return std::binary_search(cls.begin(), cls.end(), w2);
}

} // namespace weylgpd

#include "weylgpd/root_system.hpp"

#include "weylgpd/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace weylgpd {

RootVector RootVector::simple(std::size_t rank, Generator i) {
    RootVector r{std::vector<Int>(rank, 0)};
    r.coords.at(i) = 1;
    return r;
}

Int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), Int{0}); }

bool RootVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
}

bool RootVector::is_positive() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; });
}

bool RootVector::is_negative() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](Int c) { return c <= 0; });
}

RootVector RootVector::operator-() const {
    RootVector r = *this;
    for (auto &c : r.coords)
        c = -c;
    return r;
}

std::string RootVector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? " + " : "") << coords[i] << "*a" << i + 1;
    return os.str();
}

bool GradedLexLess::operator()(const RootVector &a, const RootVector &b) const {
    const Int ha = a.height(), hb = b.height();
    if (ha != hb)
        return ha < hb;
    return a.coords > b.coords;
}

IntMatrix simple_reflection(const SemiCartanGraph &g, ObjectId x, Generator i) {
    const auto n = g.rank();
    IntMatrix s = IntMatrix::identity(n);
    // column j is the image of alpha_j
    for (Generator j = 0; j < n; ++j)
        s(i, j) -= g.c(x, i, j);
    return s;
}

RootSystem::RootSystem(SemiCartanGraph graph, std::vector<std::set<RootVector>> roots)
    : graph_(std::move(graph)), roots_(std::move(roots)) {
    if (roots_.size() != graph_.size())
        throw ValidationError("shape", "expected one root set per object");
    positive_.resize(roots_.size());
    for (ObjectId x = 0; x < roots_.size(); ++x) {
        for (const auto &r : roots_[x]) {
            if (r.rank() != graph_.rank())
                throw ValidationError("shape", "root has wrong number of coordinates");
            if (r.is_positive())
                positive_[x].push_back(r);
        }
        std::sort(positive_[x].begin(), positive_[x].end(), GradedLexLess{});
    }
    reflections_.resize(graph_.size());
    for (ObjectId x = 0; x < graph_.size(); ++x)
        for (Generator i = 0; i < graph_.rank(); ++i)
            reflections_[x].push_back(simple_reflection(graph_, x, i));
}

RootSystem generate_real_roots(const SemiCartanGraph &g, std::size_t max_roots) {
    const auto n = g.rank();
    std::vector<std::set<RootVector>> roots(g.size());
    std::deque<std::pair<ObjectId, RootVector>> work;
    auto push = [&](ObjectId x, RootVector r) {
        if (roots[x].insert(r).second) {
            if (roots[x].size() > max_roots)
                throw BudgetExceeded("root closure at '" + g.name(x) + "' exceeded " +
                                     std::to_string(max_roots) + " roots");
            work.emplace_back(x, std::move(r));
        }
    };
    for (ObjectId x = 0; x < g.size(); ++x)
        for (Generator j = 0; j < n; ++j) {
            auto a = RootVector::simple(n, j);
            push(x, -a);
            push(x, std::move(a));
        }
    std::vector<std::vector<IntMatrix>> refl(g.size());
    for (ObjectId x = 0; x < g.size(); ++x)
        for (Generator i = 0; i < n; ++i)
            refl[x].push_back(simple_reflection(g, x, i));
    while (!work.empty()) {
        auto [x, r] = std::move(work.front());
        work.pop_front();
        for (Generator i = 0; i < n; ++i)
            push(g.rho(i, x), RootVector{refl[x][i] * r.coords});
    }
    return RootSystem(g, std::move(roots));
}

ValidationReport check_grs_axioms(const RootSystem &rs) {
    ValidationReport rep;
    const auto &g = rs.graph();
    const auto n = g.rank();
    for (ObjectId x = 0; x < g.size(); ++x) {
        const auto &delta = rs.roots(x);
        const std::string at = " at '" + g.name(x) + "'";
        for (const auto &r : delta) {
            if (!r.is_positive() && !r.is_negative())
                rep.add("sign", "root " + r.to_string() + " is neither positive nor negative" + at);
            else if (!delta.count(-r))
                rep.add("sign", "root " + r.to_string() + " has no negative in the set" + at);
        }
        for (Generator i = 0; i < n; ++i) {
            std::set<RootVector> on_line;
            for (const auto &r : delta) {
                bool only_i = true;
                for (Generator j = 0; j < n; ++j)
                    if (j != i && r.coords[j] != 0)
                        only_i = false;
                if (only_i && !r.is_zero())
                    on_line.insert(r);
            }
            const auto a = RootVector::simple(n, i);
            if (on_line != std::set<RootVector>{a, -a})
                rep.add("simple-multiples",
                        "Delta intersected with Z alpha_" + std::to_string(i + 1) + " is not {+-alpha}" + at);
        }
        for (Generator i = 0; i < n; ++i) {
            std::set<RootVector> image;
            for (const auto &r : delta)
                image.insert(RootVector{rs.reflection(x, i) * r.coords});
            if (image != rs.roots(g.rho(i, x)))
                rep.add("reflection", "s_" + std::to_string(i + 1) + " does not map Delta" + at +
                                          " onto Delta at '" + g.name(g.rho(i, x)) + "'");
        }
        for (Generator i = 0; i < n; ++i)
            for (Generator j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                const auto m = m_entry(rs, x, i, j);
                ObjectId y = x;
                for (std::size_t k = 0; k < m; ++k)
                    y = g.rho(i, g.rho(j, y));
                if (y != x)
                    rep.add("coxeter-period", "(rho_" + std::to_string(i + 1) + " rho_" +
                                                  std::to_string(j + 1) + ")^" + std::to_string(m) +
                                                  " does not fix" + at);
            }
    }
    return rep;
}

std::size_t m_entry(const RootSystem &rs, ObjectId x, Generator i, Generator j) {
    std::size_t count = 0;
    for (const auto &r : rs.positive(x)) {
        bool support = true;
        for (Generator k = 0; k < r.rank(); ++k)
            if (k != i && k != j && r.coords[k] != 0)
                support = false;
        if (support)
            ++count;
    }
    return count;
}

} // namespace weylgpd

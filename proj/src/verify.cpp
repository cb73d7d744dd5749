#include "weylgpd/verify.hpp"

#include "weylgpd/bruhat.hpp"
#include "weylgpd/errors.hpp"
#include "weylgpd/nil_hecke.hpp"
#include "weylgpd/poly_rep.hpp"

#include <deque>
#include <random>
#include <set>

namespace weylgpd {

namespace {

class Suite {
  public:
    Suite(std::vector<CheckResult> &out, std::string suite) : out_(out), suite_(std::move(suite)) {}

    // Runs body; body returns an empty string on success or a counterexample.
    template <class F>
    void check(const std::string &name, F &&body) {
        CheckResult r{suite_, name, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

  private:
    std::vector<CheckResult> &out_;
    std::string suite_;
};

std::string word_at(const Groupoid &g, const Word &w) {
    return format_letters(w.letters) + " at '" + g.graph().name(w.start) + "'";
}

// Every word of each length up to max_len from every object.
template <class F>
void for_each_word(const SemiCartanGraph &g, std::size_t max_len, F &&f) {
    for (ObjectId x = 0; x < g.size(); ++x)
        for (std::size_t len = 0; len <= max_len; ++len) {
            std::vector<Generator> letters(len, 0);
            while (true) {
                f(Word{x, letters});
                std::size_t k = len;
                while (k > 0 && letters[k - 1] + 1 == g.rank())
                    letters[--k] = 0;
                if (k == 0)
                    break;
                ++letters[k - 1];
            }
        }
}

// Moves: braid substitutions and deletion of adjacent (i,i). Searches for a
// word of length `target_len` and checks each visited word against `m`.
std::string reduce_by_moves(const RootSystem &rs, const Word &w, const Morphism &m, std::size_t target_len) {
    std::set<Word> seen{w};
    std::deque<Word> work{w};
    while (!work.empty()) {
        Word cur = std::move(work.front());
        work.pop_front();
        if (!(evaluate_word(rs, cur) == m))
            return "move changed the morphism of " + format_letters(w.letters);
        if (cur.size() == target_len)
            return {};
        std::vector<Word> next = braid_class(rs, cur);
        for (std::size_t k = 0; k + 1 < cur.size(); ++k)
            if (cur.letters[k] == cur.letters[k + 1]) {
                Word shorter = cur;
                shorter.letters.erase(shorter.letters.begin() + static_cast<std::ptrdiff_t>(k),
                                      shorter.letters.begin() + static_cast<std::ptrdiff_t>(k + 2));
                next.push_back(std::move(shorter));
            }
        for (auto &n : next)
            if (seen.insert(n).second)
                work.push_back(std::move(n));
    }
    return "no chain of moves reduces " + format_letters(w.letters);
}

Int random_coeff(std::mt19937_64 &rng) { return std::uniform_int_distribution<Int>(-3, 3)(rng); }

NilHeckeElement<Int> random_element(const std::shared_ptr<const Groupoid> &g, std::mt19937_64 &rng) {
    NilHeckeElement<Int> e(g);
    std::uniform_int_distribution<std::size_t> pick(0, g->size() - 1);
    const std::size_t terms = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    for (std::size_t k = 0; k < terms; ++k)
        e.add_term(pick(rng), random_coeff(rng));
    return e;
}

Polynomial random_polynomial(std::size_t rank, std::mt19937_64 &rng) {
    Polynomial p;
    for (int k = 0; k < 3; ++k) {
        Monomial m(rank);
        for (auto &e : m)
            e = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(0, 2)(rng));
        p += Polynomial::monomial(m, random_coeff(rng));
    }
    return p;
}

// Distributes the e-versus-tn choice of every h factor independently.
PolyElement psi_by_distribution(const std::shared_ptr<const Groupoid> &g, const Word &w) {
    const auto betas = beta_sequence(g->root_system(), w);
    const auto path = w.object_path(g->graph());
    PolyElement sum(g);
    for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
        PolyElement term = PolyElement::basis(g, g->identity(w.start));
        Polynomial coeff(1);
        bool vanishes = false;
        for (std::size_t k = 0; k < w.size() && !vanishes; ++k) {
            if (mask >> k & 1) {
                term = term * generator<Polynomial>(g, path[k], w.letters[k]);
                coeff *= linear_form(betas[k]);
            } else if (!g->graph().is_loop(w.letters[k], path[k])) {
                vanishes = true;
            } else {
                term = term * idempotent<Polynomial>(g, path[k]);
            }
        }
        if (!vanishes)
            sum += coeff * term;
    }
    return sum;
}

} // namespace

std::vector<CheckResult> run_verification(const SemiCartanGraph &g, const VerifyOptions &opts) {
    std::vector<CheckResult> out;
    const auto rs = std::make_shared<const RootSystem>(generate_real_roots(g));
    const auto G = Groupoid::enumerate(rs);
    const auto n = g.rank();
    std::mt19937_64 rng(opts.seed);

    std::vector<std::vector<Word>> words(G->size());
    for (ElementId w = 0; w < G->size(); ++w)
        words[w] = G->reduced_words(w);

    // -- cartan-graph
    {
        Suite s(out, "cartan-graph");
        s.check("round-trip", [&]() -> std::string {
            return parse_cartan_graph(serialize_cartan_graph(g)) == g ? "" : "parse(serialize(g)) != g";
        });
        s.check("quiver-consistency", [&]() -> std::string {
            for (ObjectId x = 0; x < g.size(); ++x)
                for (Generator i = 0; i < n; ++i) {
                    if (g.rho(i, g.rho(i, x)) != x)
                        return "rho_" + std::to_string(i + 1) + " not involutive at '" + g.name(x) + "'";
                    const auto loop = G->compose(G->generator(x, i), G->generator(g.rho(i, x), i));
                    if (!loop || *loop != G->identity(x))
                        return "sigma_i^x sigma_i^rho(x) is not id at '" + g.name(x) + "'";
                }
            return {};
        });
        s.check("compatibility", [&]() -> std::string {
            auto r = check_compatibility(g.datum(), g.cartan_matrices());
            return r.ok() ? "" : r.violations[0].detail;
        });
    }

    // -- root-system
    {
        Suite s(out, "root-system");
        s.check("grs-axioms", [&]() -> std::string {
            auto r = check_grs_axioms(*rs);
            return r.ok() ? "" : r.violations[0].invariant + ": " + r.violations[0].detail;
        });
        s.check("reflection-involution", [&]() -> std::string {
            for (ObjectId x = 0; x < g.size(); ++x)
                for (Generator i = 0; i < n; ++i)
                    if (!(rs->reflection(x, i) * rs->reflection(g.rho(i, x), i) == IntMatrix::identity(n)))
                        return "s_i^x s_i^rho(x) != 1 at '" + g.name(x) + "'";
            return {};
        });
        s.check("root-transport", [&]() -> std::string {
            for (ObjectId x = 0; x < g.size(); ++x)
                for (Generator i = 0; i < n; ++i) {
                    std::set<RootVector> image;
                    for (const auto &r : rs->roots(x))
                        image.insert(RootVector{rs->reflection(x, i) * r.coords});
                    if (image != rs->roots(g.rho(i, x)))
                        return "s_i(Delta^x) != Delta^rho_i(x) at '" + g.name(x) + "'";
                }
            return {};
        });
        s.check("sign-dichotomy", [&]() -> std::string {
            for (ObjectId x = 0; x < g.size(); ++x)
                for (const auto &r : rs->roots(x))
                    if (!r.is_positive() && !r.is_negative())
                        return r.to_string() + " at '" + g.name(x) + "'";
            return {};
        });
        s.check("coxeter-symmetry", [&]() -> std::string {
            for (ObjectId x = 0; x < g.size(); ++x)
                for (Generator i = 0; i < n; ++i)
                    for (Generator j = 0; j < n; ++j) {
                        if (i == j)
                            continue;
                        const auto m = m_entry(*rs, x, i, j);
                        if (m != m_entry(*rs, x, j, i))
                            return "m_ij != m_ji at '" + g.name(x) + "'";
                        ObjectId y = x;
                        for (std::size_t k = 0; k < m; ++k)
                            y = g.rho(i, g.rho(j, y));
                        if (y != x)
                            return "(rho_i rho_j)^m does not fix '" + g.name(x) + "'";
                    }
            return {};
        });
    }

    // -- weyl-groupoid
    {
        Suite s(out, "weyl-groupoid");
        s.check("length-consistency", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                if (length(*rs, G->element(w)) != G->length(w))
                    return "inversion count != BFS depth for " + word_at(*G, G->first_reduced_word(w));
            return {};
        });
        s.check("exchange", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (Generator i = 0; i < n; ++i) {
                    const auto a = G->length(G->left(w, i)), b = G->length(w);
                    if (a != b + 1 && a + 1 != b)
                        return "l(sigma_i w) - l(w) != +-1 for " + word_at(*G, G->first_reduced_word(w));
                }
            return {};
        });
        s.check("matsumoto", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w) {
                const auto cls = braid_class(*rs, words[w].front());
                for (const auto &v : words[w])
                    if (!std::binary_search(cls.begin(), cls.end(), v))
                        return word_at(*G, v) + " not braid-equivalent to " + word_at(*G, words[w].front());
            }
            return {};
        });
        s.check("faithfulness", [&]() -> std::string {
            std::size_t max_len = opts.faithfulness_max_length;
            if (max_len == 0)
                for (ElementId w = 0; w < G->size(); ++w)
                    max_len = std::max(max_len, G->length(w));
            std::string err;
            for_each_word(g, max_len, [&](const Word &w) {
                if (!err.empty())
                    return;
                const Morphism m = evaluate_word(*rs, w);
                const auto id = G->find(m);
                if (!id) {
                    err = "word " + word_at(*G, w) + " evaluates outside the enumeration";
                    return;
                }
                err = reduce_by_moves(*rs, w, m, G->length(*id));
            });
            return err;
        });
    }

    // -- nil-hecke
    {
        Suite s(out, "nil-hecke");
        s.check("defining-relations", [&]() -> std::string {
            const auto one = unit(G);
            for (ObjectId x = 0; x < g.size(); ++x) {
                const auto ex = idempotent(G, x);
                for (ObjectId y = 0; y < g.size(); ++y) {
                    const auto prod = ex * idempotent(G, y);
                    if (!(x == y ? prod == ex : prod.is_zero()))
                        return "e^x e^y != delta e^x";
                }
                if (!(one * ex == ex && ex * one == ex))
                    return "sum of idempotents is not the unit";
                for (Generator i = 0; i < n; ++i) {
                    const auto nx = generator(G, x, i);
                    if (!(nx * idempotent(G, g.rho(i, x)) == nx && ex * nx == nx))
                        return "n_i^x e^rho_i(x) = e^x n_i^x = n_i^x fails at '" + g.name(x) + "'";
                    if (!(generator(G, g.rho(i, x), i) * nx).is_zero())
                        return "n_i^rho_i(x) n_i^x != 0 at '" + g.name(x) + "'";
                    for (Generator j = 0; j < n; ++j) {
                        if (i == j)
                            continue;
                        const auto m = m_entry(*rs, x, i, j);
                        auto alt = [&](Generator a, Generator b) {
                            Word w{x, {}};
                            for (std::size_t k = 0; k < m; ++k)
                                w.letters.push_back(k % 2 ? b : a);
                            const auto path = w.object_path(g);
                            auto p = idempotent(G, x);
                            for (std::size_t k = 0; k < m; ++k)
                                p = p * generator(G, path[k], w.letters[k]);
                            return p;
                        };
                        if (!(alt(i, j) == alt(j, i)))
                            return "braid relation fails at '" + g.name(x) + "'";
                    }
                }
            }
            return {};
        });
        s.check("basis-theorem", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (const auto &word : words[w]) {
                    const auto path = word.object_path(g);
                    auto p = idempotent(G, word.start);
                    for (std::size_t k = 0; k < word.size(); ++k)
                        p = p * generator(G, path[k], word.letters[k]);
                    if (!(p == NilHeckeElement<Int>::basis(G, w)))
                        return "generator product along " + word_at(*G, word) + " is not T_w";
                }
            return {};
        });
        s.check("lambda-algebra-map", [&]() -> std::string {
            for (ElementId u = 0; u < G->size(); ++u)
                for (ElementId v = 0; v < G->size(); ++v) {
                    const auto prod = NilHeckeElement<Int>::basis(G, u) * NilHeckeElement<Int>::basis(G, v);
                    for (ElementId w = 0; w < G->size(); ++w) {
                        const auto basis_w = GroupoidSum<Int>::basis(G, w);
                        const auto lhs = lambda_action(prod, basis_w);
                        const auto rhs = lambda_action(NilHeckeElement<Int>::basis(G, u),
                                                       lambda_action(NilHeckeElement<Int>::basis(G, v), basis_w));
                        if (!(lhs == rhs))
                            return "Lambda(T_u T_v) != Lambda(T_u) Lambda(T_v) for u = " +
                                   word_at(*G, G->first_reduced_word(u)) + ", v = " +
                                   word_at(*G, G->first_reduced_word(v));
                    }
                }
            return {};
        });
        s.check("lambda-faithful", [&]() -> std::string {
            std::set<ElementId> image;
            for (ElementId w = 0; w < G->size(); ++w) {
                const auto p = phi(NilHeckeElement<Int>::basis(G, w));
                if (!(p == GroupoidSum<Int>::basis(G, w)))
                    return "Phi(T_w) != w for " + word_at(*G, G->first_reduced_word(w));
                image.insert(p.terms().begin()->first);
            }
            return image.size() == G->size() ? "" : "Phi is not injective on the basis";
        });
        s.check("associativity", [&]() -> std::string {
            for (std::size_t k = 0; k < opts.random_triples; ++k) {
                const auto a = random_element(G, rng), b = random_element(G, rng), c = random_element(G, rng);
                if (!((a * b) * c == a * (b * c)))
                    return "(ab)c != a(bc) on random triple " + std::to_string(k);
            }
            return {};
        });
    }

    // -- poly-rep
    {
        Suite s(out, "poly-rep");
        std::vector<std::vector<PolyElement>> psi(G->size());
        for (ElementId w = 0; w < G->size(); ++w)
            for (const auto &word : words[w])
                psi[w].push_back(psi_expand(G, word));

        s.check("psi-braid-invariance", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (std::size_t k = 1; k < psi[w].size(); ++k)
                    if (!(psi[w][k] == psi[w][0]))
                        return "Psi differs between " + word_at(*G, words[w][0]) + " and " +
                               word_at(*G, words[w][k]);
            return {};
        });
        s.check("psi-nonnegative", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (std::size_t k = 0; k < psi[w].size(); ++k)
                    for (const auto &[u, c] : psi[w][k].terms())
                        if (!c.has_nonnegative_coefficients())
                            return "negative coefficient in Psi(" + word_at(*G, words[w][k]) + ")";
            return {};
        });
        s.check("psi-top-term", [&]() -> std::string {
            bool no_loops = n == 2;
            for (ObjectId x = 0; x < g.size(); ++x)
                for (Generator i = 0; i < n; ++i)
                    no_loops = no_loops && !g.is_loop(i, x);
            for (ElementId w = 0; w < G->size(); ++w)
                for (std::size_t k = 0; k < psi[w].size(); ++k) {
                    Polynomial top(1);
                    for (const auto &b : beta_sequence(*rs, words[w][k]))
                        top *= linear_form(b);
                    if (!(psi[w][k].coefficient(w) == top))
                        return "top coefficient of Psi(" + word_at(*G, words[w][k]) + ") is not the beta product";
                    if (no_loops && psi[w][k].size() != 1)
                        return "loop-free rank-two expansion has more than one term";
                }
            return {};
        });
        s.check("psi-subword-semantics", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (std::size_t k = 0; k < psi[w].size(); ++k)
                    if (!(psi_by_distribution(G, words[w][k]) == psi[w][k]))
                        return "distributed h-product differs for " + word_at(*G, words[w][k]);
            return {};
        });
        s.check("act-homomorphism", [&]() -> std::string {
            for (ObjectId x = 0; x < g.size(); ++x)
                for (Generator i = 0; i < n; ++i)
                    for (Generator j = 0; j < n; ++j) {
                        const auto p = random_polynomial(n, rng), q = random_polynomial(n, rng);
                        const auto &s1 = rs->reflection(x, i);
                        const auto &s2 = rs->reflection(g.rho(i, x), j);
                        if (!(act(s1, p * q) == act(s1, p) * act(s1, q)) ||
                            !(act(s1, p + q) == act(s1, p) + act(s1, q)))
                            return "act is not a ring map";
                        if (!(act(s1 * s2, p) == act(s1, act(s2, p))))
                            return "act is not a group action";
                    }
            return {};
        });
        if (n == 2)
            s.check("rank2-identity", [&]() -> std::string {
                for (ObjectId x = 0; x < g.size(); ++x) {
                    const auto r = check_rank2_identity(G, x);
                    if (!r.ok())
                        return r.failures.front();
                }
                return {};
            });
    }

    // -- bruhat
    {
        Suite s(out, "bruhat");
        s.check("psi-support", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (const auto &word : words[w]) {
                    std::set<ElementId> support;
                    const auto expansion = psi_expand(G, word);
                    for (const auto &[u, c] : expansion.terms())
                        support.insert(u);
                    if (support != theta_set(*G, word))
                        return "Theta != Psi-support for " + word_at(*G, word);
                }
            return {};
        });
        s.check("independence", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                if (!verify_bruhat_independence(G, w))
                    return "Theta depends on the reduced word of " + word_at(*G, words[w][0]);
            return {};
        });
        s.check("order-axioms", [&]() -> std::string {
            for (ObjectId y = 0; y < g.size(); ++y)
                for (ObjectId x = 0; x < g.size(); ++x) {
                    if (G->hom(y, x).empty())
                        continue;
                    if (!bruhat_poset(*G, y, x).certified)
                        return "Hom('" + g.name(y) + "', '" + g.name(x) + "') is not a certified partial order";
                }
            return {};
        });
        s.check("loop-only-subwords", [&]() -> std::string {
            for (ElementId w = 0; w < G->size(); ++w)
                for (const auto &word : words[w]) {
                    const auto path = word.object_path(g);
                    for (const auto &sub : good_subsequences(*G, word)) {
                        std::vector<bool> kept(word.size(), false);
                        for (auto k : sub.kept)
                            kept[k] = true;
                        for (std::size_t k = 0; k < word.size(); ++k)
                            if (!kept[k] && path[k + 1] != path[k])
                                return "non-loop letter dropped from " + word_at(*G, word);
                        if (sub.subword().end(g) != word.end(g))
                            return "subword of " + word_at(*G, word) + " changes the source";
                    }
                }
            return {};
        });
        if (g.size() == 1)
            s.check("classical-specialization", [&]() -> std::string {
                const auto p = bruhat_poset(*G, 0, 0);
                for (ElementId w : p.elements)
                    for (ElementId u : p.elements) {
                        bool classical = u == w;
                        for (const auto &word : words[w]) {
                            if (classical)
                                break;
                            for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()) && !classical; ++mask) {
                                Word sub{0, {}};
                                for (std::size_t k = 0; k < word.size(); ++k)
                                    if (mask >> k & 1)
                                        sub.letters.push_back(word.letters[k]);
                                classical = G->evaluate(sub) == u && G->is_reduced(sub);
                            }
                        }
                        if (classical != p.leq(u, w))
                            return "Bruhat order differs from the subword order";
                    }
                return {};
            });
    }
    return out;
}

} // namespace weylgpd

#pragma once
// Brute-force reference computations used as test oracles. Only the raw
// graph data (rank, involutions, Cartan entries) is read from the library;
// words, matrices, lengths and polynomials are recomputed here from the
// definitions by exhaustive enumeration of words.

#include "weylgpd/cartan_graph.hpp"
#include "weylgpd/polynomial.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long>>;
using Letters = std::vector<std::size_t>;

struct Data {
    std::size_t rank = 0;
    std::size_t objects = 0;
    std::vector<std::vector<std::size_t>> rho; // rho[i][x]
    std::vector<Mat> cartan;                   // cartan[x][i][j]

    explicit Data(const weylgpd::SemiCartanGraph &g) : rank(g.rank()), objects(g.size()) {
        rho.assign(rank, std::vector<std::size_t>(objects));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t x = 0; x < objects; ++x)
                rho[i][x] = g.rho(i, x);
        for (std::size_t x = 0; x < objects; ++x) {
            Mat c(rank, std::vector<long>(rank));
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = 0; j < rank; ++j)
                    c[i][j] = g.c(x, i, j);
            cartan.push_back(c);
        }
    }

    Mat identity() const {
        Mat m(rank, std::vector<long>(rank, 0));
        for (std::size_t i = 0; i < rank; ++i)
            m[i][i] = 1;
        return m;
    }

    // alpha_j -> alpha_j - c_ij alpha_i, stored column by column.
    Mat reflection(std::size_t x, std::size_t i) const {
        Mat m = identity();
        for (std::size_t j = 0; j < rank; ++j)
            m[i][j] -= cartan[x][i][j];
        return m;
    }

    Mat mul(const Mat &a, const Mat &b) const {
        Mat m(rank, std::vector<long>(rank, 0));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t k = 0; k < rank; ++k)
                for (std::size_t j = 0; j < rank; ++j)
                    m[i][j] += a[i][k] * b[k][j];
        return m;
    }

    std::size_t end(std::size_t start, const Letters &w) const {
        std::size_t x = start;
        for (auto i : w)
            x = rho[i][x];
        return x;
    }

    Mat matrix(std::size_t start, const Letters &w) const {
        Mat m = identity();
        std::size_t x = start;
        for (auto i : w) {
            m = mul(m, reflection(x, i));
            x = rho[i][x];
        }
        return m;
    }
};

/// A morphism: (start object = target, end object = source, matrix).
using Key = std::tuple<std::size_t, std::size_t, Mat>;

/// Every morphism with its shortest length and all words of that length,
/// found by listing all words of length <= max_len from every object.
struct Enumeration {
    const Data *data = nullptr;
    std::map<Key, std::size_t> length;
    std::map<Key, std::vector<Letters>> reduced;

    Enumeration(const Data &d, std::size_t max_len) : data(&d) {
        for (std::size_t x = 0; x < d.objects; ++x)
            for (std::size_t len = 0; len <= max_len; ++len) {
                Letters w(len, 0);
                while (true) {
                    const Key k{x, d.end(x, w), d.matrix(x, w)};
                    auto it = length.find(k);
                    if (it == length.end()) {
                        length.emplace(k, len);
                        reduced[k].push_back(w);
                    } else if (it->second == len) {
                        reduced[k].push_back(w);
                    }
                    std::size_t p = len;
                    while (p > 0 && w[p - 1] + 1 == d.rank)
                        w[--p] = 0;
                    if (p == 0)
                        break;
                    ++w[p - 1];
                }
            }
    }

    Key key(std::size_t start, const Letters &w) const { return {start, data->end(start, w), data->matrix(start, w)}; }

    bool is_reduced(std::size_t start, const Letters &w) const {
        auto it = length.find(key(start, w));
        if (it == length.end())
            throw std::logic_error("oracle enumeration too short");
        return it->second == w.size();
    }

    std::size_t count() const { return length.size(); }
};

/// Positive roots at x: images of simple roots under morphisms into x.
inline std::set<std::vector<long>> positive_roots(const Enumeration &e, std::size_t x) {
    std::set<std::vector<long>> out;
    for (const auto &[k, len] : e.length) {
        if (std::get<0>(k) != x)
            continue;
        const Mat &m = std::get<2>(k);
        for (std::size_t j = 0; j < e.data->rank; ++j) {
            std::vector<long> col(e.data->rank);
            bool positive = true;
            for (std::size_t i = 0; i < e.data->rank; ++i) {
                col[i] = m[i][j];
                positive = positive && col[i] >= 0;
            }
            if (positive)
                out.insert(col);
        }
    }
    return out;
}

/// Polynomials as maps from exponent vectors to coefficients.
using Poly = std::map<std::vector<unsigned>, long>;

inline Poly linear(const std::vector<long> &c) {
    Poly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) {
            std::vector<unsigned> e(c.size(), 0);
            e[i] = 1;
            p[e] += c[i];
        }
    return p;
}

inline Poly times(const Poly &a, const Poly &b) {
    Poly p;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) {
            std::vector<unsigned> e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i)
                e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i)
                e[i] += eb[i];
            p[e] += ca * cb;
        }
    std::erase_if(p, [](const auto &kv) { return kv.second == 0; });
    return p;
}

inline weylgpd::Polynomial to_library(const Poly &p) {
    weylgpd::Polynomial out;
    for (const auto &[e, c] : p)
        out += weylgpd::Polynomial::monomial(weylgpd::Monomial(e.begin(), e.end()), c);
    return out;
}

/// Product of linear forms, e.g. {{1,1},{0,1}} for (t1+t2)t2, scaled by c.
inline weylgpd::Polynomial product(long c, const std::vector<std::vector<long>> &forms) {
    Poly p;
    p[{}] = c;
    for (const auto &f : forms)
        p = times(p, linear(f));
    return to_library(p);
}

/// Psi expansion by distributing every h-factor: the sum over kept position
/// sets (dropped positions must be loops) of the beta product, keeping only
/// subsets whose subword is reduced. Result keyed by morphism.
inline std::map<Key, Poly> psi(const Enumeration &e, std::size_t start, const Letters &w) {
    const Data &d = *e.data;
    std::vector<std::size_t> path{start};
    for (auto i : w)
        path.push_back(d.rho[i][path.back()]);
    std::vector<std::vector<long>> betas;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const Mat prefix = d.matrix(start, Letters(w.begin(), w.begin() + static_cast<long>(k)));
        std::vector<long> b(d.rank);
        for (std::size_t i = 0; i < d.rank; ++i)
            b[i] = prefix[i][w[k]];
        betas.push_back(b);
    }
    std::map<Key, Poly> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
        Letters sub;
        Poly coeff;
        coeff[{}] = 1;
        bool good = true;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (mask >> k & 1) {
                sub.push_back(w[k]);
                coeff = times(coeff, linear(betas[k]));
            } else if (path[k + 1] != path[k]) {
                good = false;
            }
        }
        if (!good || !e.is_reduced(start, sub))
            continue;
        Poly &slot = out[e.key(start, sub)];
        for (const auto &[exp, c] : coeff)
            slot[exp] += c;
        std::erase_if(slot, [](const auto &kv) { return kv.second == 0; });
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.empty(); });
    return out;
}

/// Elements u with u <= w, given by reduced subwords of a reduced word of w.
/// With loops_only, dropped positions must be loop letters.
inline std::set<Key> subword_ideal(const Enumeration &e, std::size_t start, const Letters &w, bool loops_only) {
    const Data &d = *e.data;
    std::vector<std::size_t> path{start};
    for (auto i : w)
        path.push_back(d.rho[i][path.back()]);
    std::set<Key> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
        Letters sub;
        bool good = true;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (mask >> k & 1)
                sub.push_back(w[k]);
            else if (loops_only && path[k + 1] != path[k])
                good = false;
        }
        if (good && e.is_reduced(start, sub) && d.end(start, sub) == d.end(start, w))
            out.insert(e.key(start, sub));
    }
    return out;
}

} // namespace oracle

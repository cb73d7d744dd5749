#include "weylgpd/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylgpd {

namespace {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

void trim(Monomial &m) {
    while (!m.empty() && m.back() == 0)
        m.pop_back();
}

Monomial multiply(const Monomial &a, const Monomial &b) {
    Monomial out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k)
        out[k] += b[k];
    return out;
}

} // namespace

std::uint64_t total_degree(const Monomial &m) {
    std::uint64_t d = 0;
    for (auto e : m)
        d += e;
    return d;
}

bool GrlexGreater::operator()(const Monomial &a, const Monomial &b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    const auto n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto ea = k < a.size() ? a[k] : 0u;
        const auto eb = k < b.size() ? b[k] : 0u;
        if (ea != eb)
            return ea > eb;
    }
    return false;
}

Polynomial::Polynomial(Int constant) {
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t i) {
    Monomial m(i + 1, 0);
    m[i] = 1;
    return monomial(std::move(m), 1);
}

Polynomial Polynomial::monomial(Monomial m, Int coeff) {
    Polynomial p;
    trim(m);
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<Int> &coeffs) {
    Polynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) {
            Monomial m(k + 1, 0);
            m[k] = 1;
            p.add_term(m, coeffs[k]);
        }
    return p;
}

void Polynomial::add_term(const Monomial &m, Int c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh)
        return;
    it->second = checked_add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

Int Polynomial::coefficient(const Monomial &m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

std::uint64_t Polynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

std::size_t Polynomial::num_vars() const {
    std::size_t n = 0;
    for (const auto &[m, c] : terms_)
        n = std::max(n, m.size());
    return n;
}

bool Polynomial::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.second >= 0; });
}

Int Polynomial::evaluate(const std::vector<Int> &point) const {
    Int sum = 0;
    for (const auto &[m, c] : terms_) {
        Int v = c;
        for (std::size_t k = 0; k < m.size(); ++k) {
            const Int x = k < point.size() ? point[k] : 0;
            for (std::uint32_t e = 0; e < m[k]; ++e)
                v = checked_mul(v, x);
        }
        sum = checked_add(sum, v);
    }
    return sum;
}

Polynomial &Polynomial::operator+=(const Polynomial &rhs) {
    for (const auto &[m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &rhs) {
    for (const auto &[m, c] : rhs.terms_)
        add_term(m, checked_mul(c, -1));
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial out;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            out.add_term(multiply(ma, mb), checked_mul(ca, cb));
    return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &rhs) { return *this = *this * rhs; }

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto &[m, c] : terms_)
        out.add_term(m, checked_mul(c, -1));
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        os << (c < 0 ? -c : c);
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0)
                continue;
            os << "*t" << k + 1;
            if (m[k] > 1)
                os << '^' << m[k];
        }
    }
    return os.str();
}

Polynomial act(const IntMatrix &s, const Polynomial &p) {
    std::vector<Polynomial> images;
    images.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        images.push_back(Polynomial::linear_form(s.column(i)));
    Polynomial out;
    for (const auto &[m, c] : p.terms()) {
        if (m.size() > s.dim())
            throw std::invalid_argument("act: polynomial uses more variables than the matrix rank");
        Polynomial term(c);
        for (std::size_t k = 0; k < m.size(); ++k)
            for (std::uint32_t e = 0; e < m[k]; ++e)
                term *= images[k];
        out += term;
    }
    return out;
}

} // namespace weylgpd

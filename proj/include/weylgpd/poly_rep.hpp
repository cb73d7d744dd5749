#pragma once

#include "weylgpd/nil_hecke.hpp"
#include "weylgpd/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace weylgpd {

using PolyElement = NilHeckeElement<Polynomial>;

/// alpha_i -> t_i
Polynomial linear_form(const RootVector &r);

/// h_i^x(t) = e^x + t n_i^x at a loop (rho_i(x) = x), t n_i^x otherwise.
PolyElement h(const std::shared_ptr<const Groupoid> &g, ObjectId x, Generator i, const Polynomial &t);

/// beta_j = s_{i_1}^{x_1} ... s_{i_{j-1}}^{x_{j-1}} (alpha_{i_j}).
/// Throws NotReduced when some beta_j is not a positive root.
std::vector<RootVector> beta_sequence(const RootSystem &rs, const Word &w);

/// h_{i_1}^{x_1}(beta_1) ... h_{i_m}^{x_m}(beta_m), i.e. Psi(word) applied to 1.
/// Throws NotReduced.
PolyElement psi_expand(const std::shared_ptr<const Groupoid> &g, const Word &w);

/// Psi(word)(f T_u) = psi_expand(word) * (s . f) T_u, s the matrix of the word.
PolyElement psi_apply(const std::shared_ptr<const Groupoid> &g, const Word &w, const Polynomial &f,
                      ElementId u);

/// Product of the linear forms of Delta_+^x. Rank two only.
Polynomial p_plus(const RootSystem &rs, ObjectId x);
/// Same product with the factor of alpha left out. Throws RootNotPresent.
Polynomial p_plus_excl(const RootSystem &rs, ObjectId x, const RootVector &alpha);

enum class Rank2Shape { OnePoint, SeveralPoints };

struct Rank2Check {
    Rank2Shape shape = Rank2Shape::OnePoint;
    std::size_t m = 0;           // m_12^x
    Word word_1;                 // (1,2,1,...) of length m
    Word word_2;                 // (2,1,2,...) of length m
    bool braid_equal = false;    // both expansions agree
    bool top_term = false;       // T_{w_0} has coefficient P_+^x
    bool closed_form = false;    // term structure of the rank-two lemmas
    std::vector<std::string> failures;

    bool ok() const noexcept { return braid_equal && top_term && closed_form; }
};

/// Compares the two alternating h-products of length m_12^x at x and checks
/// the closed forms: at a one-point vertex every element of the dihedral
/// hom-set appears with identity coefficient 1; otherwise the expansion is
/// P_+^x T_{w_0} plus P_+^x(beta_k) T_{w_0 without k} for each loop letter
/// k whose deletion stays reduced. Throws RankNotTwo.
Rank2Check check_rank2_identity(const std::shared_ptr<const Groupoid> &g, ObjectId x);

bool verify_rank2_identity(const std::shared_ptr<const Groupoid> &g, ObjectId x);

/// "<poly> * T[<word>]" per line, terms sorted by (length, word).
std::string format_psi(const PolyElement &e);

} // namespace weylgpd

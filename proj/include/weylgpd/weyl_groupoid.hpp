#pragma once

#include "weylgpd/root_system.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace weylgpd {

/// sigma_{i_1}^x sigma_{i_2} ... sigma_{i_r}; `start` is the target x of the
/// leftmost letter, and letter k is attached to object_path()[k].
struct Word {
    ObjectId start = 0;
    std::vector<Generator> letters;

    std::size_t size() const noexcept { return letters.size(); }
    /// x_1 = start, x_{k+1} = rho_{i_k}(x_k); has size() + 1 entries.
    std::vector<ObjectId> object_path(const SemiCartanGraph &g) const;
    ObjectId end(const SemiCartanGraph &g) const { return object_path(g).back(); }

    bool operator==(const Word &) const = default;
    auto operator<=>(const Word &) const = default;
};

/// One-based, comma separated; the empty word prints as "e".
std::string format_letters(const std::vector<Generator> &letters);
/// Parses "1,2,1" (one-based) into zero-based letters. Throws SyntaxError.
std::vector<Generator> parse_letters(const std::string &text, std::size_t rank);

/// A Weyl-groupoid arrow in canonical form: an element of Hom(source, target).
struct Morphism {
    ObjectId source = 0;
    ObjectId target = 0;
    IntMatrix matrix;

    bool operator==(const Morphism &) const = default;
    auto operator<=>(const Morphism &) const = default;
};

Morphism evaluate_word(const RootSystem &rs, const Word &w);

/// Number of positive roots at the source sent to negative roots.
std::size_t length(const RootSystem &rs, const Morphism &m);

using ElementId = std::size_t;

/// The enumerated (finite) Weyl groupoid.
///
/// Elements are indexed in the order (length, lexicographically first
/// reduced word, target, source).
class Groupoid {
  public:
    /// BFS closure of the identities under left multiplication by generators.
    /// Throws BudgetExceeded past max_elements.
    static std::shared_ptr<const Groupoid> enumerate(std::shared_ptr<const RootSystem> rs,
                                                     std::size_t max_elements = 1'000'000);

    const RootSystem &root_system() const noexcept { return *rs_; }
    const std::shared_ptr<const RootSystem> &root_system_ptr() const noexcept { return rs_; }
    const SemiCartanGraph &graph() const noexcept { return rs_->graph(); }
    std::size_t rank() const noexcept { return rs_->rank(); }

    std::size_t size() const noexcept { return elements_.size(); }
    const Morphism &element(ElementId id) const { return elements_.at(id); }
    ObjectId source(ElementId id) const { return elements_[id].source; }
    ObjectId target(ElementId id) const { return elements_[id].target; }
    /// BFS depth.
    std::size_t length(ElementId id) const { return lengths_.at(id); }

    std::optional<ElementId> find(const Morphism &m) const;
    /// Throws GroupoidMismatch if m is not an element.
    ElementId id(const Morphism &m) const;

    ElementId identity(ObjectId x) const { return identities_.at(x); }
    /// sigma_i^x, with target x and source rho_i(x).
    ElementId generator(ObjectId x, Generator i) const;
    /// sigma_i^{rho_i(t(w))} o w; always defined.
    ElementId left(ElementId w, Generator i) const { return left_[w][i]; }

    /// u o v by matrix product; nullopt when source(u) != target(v).
    std::optional<ElementId> compose(ElementId u, ElementId v) const;

    ElementId evaluate(const Word &w) const;
    bool is_reduced(const Word &w) const;

    const Word &first_reduced_word(ElementId id) const { return first_words_.at(id); }
    /// All reduced words of the element, lexicographic.
    std::vector<Word> reduced_words(ElementId id) const;
    ElementId longest_element(ObjectId target) const;

    /// Elements of Hom(y, x) in index order.
    std::vector<ElementId> hom(ObjectId y, ObjectId x) const;

  private:
    explicit Groupoid(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}

    using Key = std::tuple<ObjectId, ObjectId, std::vector<Int>>;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<Morphism> elements_;
    std::vector<std::size_t> lengths_;
    std::vector<std::vector<ElementId>> left_;
    std::vector<ElementId> identities_;
    std::vector<Word> first_words_;
    std::map<Key, ElementId> index_;
};

/// True iff w2 is reachable from w1 by braid moves (i,j,i,...) <-> (j,i,j,...)
/// of length m_ij at the object where the move starts.
bool braid_equivalent(const RootSystem &rs, const Word &w1, const Word &w2);

/// All words reachable from w by braid moves, w included.
std::vector<Word> braid_class(const RootSystem &rs, const Word &w, std::size_t max_words = 1'000'000);

} // namespace weylgpd

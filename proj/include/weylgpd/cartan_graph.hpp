#pragma once

#include "weylgpd/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylgpd {

/// Index of an object in declaration order.
using ObjectId = std::size_t;
/// Zero-based generator index; printed and parsed one-based.
using Generator = std::size_t;

struct Violation {
    std::string invariant;
    std::string detail;
    bool operator==(const Violation &) const = default;
};

/// Collected invariant violations; empty means everything checked holds.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(std::string invariant, std::string detail) {
        violations.push_back({std::move(invariant), std::move(detail)});
    }
    void append(const ValidationReport &other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

/// Objects X with one involution rho_i per generator.
///
/// The quiver arrow sigma_i^x has target x and source rho_i(x).
class BasicDatum {
  public:
    BasicDatum() = default;
    /// rho[i][x] is rho_i(x). Throws ValidationError if some rho_i is not an
    /// involution or the object names are empty or repeated.
    BasicDatum(std::size_t rank, std::vector<std::string> objects,
               std::vector<std::vector<ObjectId>> rho);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return objects_.size(); }
    const std::vector<std::string> &objects() const noexcept { return objects_; }
    const std::string &name(ObjectId x) const { return objects_.at(x); }
    std::optional<ObjectId> find(std::string_view name) const;
    /// Throws UnknownName.
    ObjectId index(std::string_view name) const;

    ObjectId rho(Generator i, ObjectId x) const { return rho_[i][x]; }
    bool is_loop(Generator i, ObjectId x) const { return rho_[i][x] == x; }
    const std::vector<std::vector<ObjectId>> &rho_maps() const noexcept { return rho_; }

    bool operator==(const BasicDatum &) const = default;

  private:
    std::size_t rank_ = 0;
    std::vector<std::string> objects_;
    std::vector<std::vector<ObjectId>> rho_;
};

class SemiCartanGraph {
  public:
    SemiCartanGraph() = default;
    /// Throws ValidationError naming the first violated invariant
    /// ("gcm", "compatibility", "shape").
    SemiCartanGraph(BasicDatum datum, std::vector<IntMatrix> cartan);

    const BasicDatum &datum() const noexcept { return datum_; }
    std::size_t rank() const noexcept { return datum_.rank(); }
    std::size_t size() const noexcept { return datum_.size(); }
    ObjectId rho(Generator i, ObjectId x) const { return datum_.rho(i, x); }
    bool is_loop(Generator i, ObjectId x) const { return datum_.is_loop(i, x); }
    const std::string &name(ObjectId x) const { return datum_.name(x); }
    ObjectId index(std::string_view name) const { return datum_.index(name); }

    const IntMatrix &cartan(ObjectId x) const { return cartan_.at(x); }
    Int c(ObjectId x, Generator i, Generator j) const { return cartan_[x](i, j); }
    const std::vector<IntMatrix> &cartan_matrices() const noexcept { return cartan_; }

    bool operator==(const SemiCartanGraph &) const = default;

  private:
    BasicDatum datum_;
    std::vector<IntMatrix> cartan_;
};

/// Checks the generalized Cartan matrix axioms on a single matrix.
ValidationReport check_gcm(const IntMatrix &c);
/// Per (x, i, j) check of c^x_ij == c^{rho_i(x)}_ij.
ValidationReport check_compatibility(const BasicDatum &datum, const std::vector<IntMatrix> &cartan);

/// A surjection F from the objects of source_graph onto those of target_graph.
struct Covering {
    SemiCartanGraph source_graph;
    SemiCartanGraph target_graph;
    std::vector<ObjectId> fiber_map;

    std::vector<ObjectId> fiber(ObjectId x) const;
};

ValidationReport verify_covering(const Covering &c);

/// The identity covering of g.
Covering identity_covering(const SemiCartanGraph &g);
/// n disjoint copies of g folded onto g. Copy k of object "x" is named "x#k" (k from 1).
Covering copies_covering(const SemiCartanGraph &g, std::size_t n);
/// Collapse every object of g onto the single object of `point`.
Covering collapse_covering(const SemiCartanGraph &g, const SemiCartanGraph &point);

/// Parses the JSON input document. Throws SyntaxError or ValidationError.
SemiCartanGraph parse_cartan_graph(std::string_view text);
/// Emits the canonical JSON document accepted by parse_cartan_graph.
std::string serialize_cartan_graph(const SemiCartanGraph &g);

const std::vector<std::string> &builtin_names();
/// Throws UnknownName.
SemiCartanGraph builtin(std::string_view name);

} // namespace weylgpd

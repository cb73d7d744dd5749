#include "weylgpd/cartan_graph.hpp"

#include "weylgpd/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

namespace weylgpd {

using nlohmann::json;

BasicDatum::BasicDatum(std::size_t rank, std::vector<std::string> objects,
                       std::vector<std::vector<ObjectId>> rho)
    : rank_(rank), objects_(std::move(objects)), rho_(std::move(rho)) {
    if (rank_ == 0)
        throw ValidationError("shape", "rank must be positive");
    if (objects_.empty())
        throw ValidationError("objects", "object set is empty");
    std::set<std::string> seen;
    for (const auto &o : objects_) {
        if (o.empty())
            throw ValidationError("objects", "empty object identifier");
        if (!seen.insert(o).second)
            throw ValidationError("objects", "duplicate object identifier '" + o + "'");
    }
    if (rho_.size() != rank_)
        throw ValidationError("shape", "expected one rho map per generator");
    for (std::size_t i = 0; i < rank_; ++i) {
        if (rho_[i].size() != objects_.size())
            throw ValidationError("shape", "rho map has wrong length");
        for (ObjectId x = 0; x < objects_.size(); ++x) {
            const ObjectId y = rho_[i][x];
            if (y >= objects_.size())
                throw ValidationError("shape", "rho map leaves the object set");
            if (rho_[i][y] != x)
                throw ValidationError("involution", "rho_" + std::to_string(i + 1) +
                                                        " is not an involution at '" +
                                                        objects_[x] + "'");
        }
    }
}

std::optional<ObjectId> BasicDatum::find(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end())
        return std::nullopt;
    return static_cast<ObjectId>(it - objects_.begin());
}

ObjectId BasicDatum::index(std::string_view name) const {
    if (auto x = find(name))
        return *x;
    throw UnknownName("unknown object '" + std::string(name) + "'");
}

ValidationReport check_gcm(const IntMatrix &c) {
    ValidationReport r;
    const auto n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (c(i, i) != 2)
            r.add("gcm", "diagonal entry (" + std::to_string(i + 1) + "," +
                             std::to_string(i + 1) + ") is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (c(i, j) > 0)
                r.add("gcm", "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") is positive");
            if ((c(i, j) == 0) != (c(j, i) == 0) && i < j)
                r.add("gcm", "zero pattern of (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") is not symmetric");
        }
    }
    return r;
}

ValidationReport check_compatibility(const BasicDatum &datum, const std::vector<IntMatrix> &cartan) {
    ValidationReport r;
    const auto n = datum.rank();
    for (ObjectId x = 0; x < datum.size(); ++x)
        for (Generator i = 0; i < n; ++i) {
            const ObjectId y = datum.rho(i, x);
            for (Generator j = 0; j < n; ++j)
                if (cartan[x](i, j) != cartan[y](i, j))
                    r.add("compatibility",
                          "c^" + datum.name(x) + "_" + std::to_string(i + 1) + std::to_string(j + 1) +
                              " = " + std::to_string(cartan[x](i, j)) + " but c^" + datum.name(y) +
                              "_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                              std::to_string(cartan[y](i, j)));
        }
    return r;
}

SemiCartanGraph::SemiCartanGraph(BasicDatum datum, std::vector<IntMatrix> cartan)
    : datum_(std::move(datum)), cartan_(std::move(cartan)) {
    if (cartan_.size() != datum_.size())
        throw ValidationError("shape", "expected one Cartan matrix per object");
    for (ObjectId x = 0; x < cartan_.size(); ++x) {
        if (cartan_[x].dim() != datum_.rank())
            throw ValidationError("shape", "Cartan matrix at '" + datum_.name(x) +
                                               "' is not rank x rank");
        auto gcm = check_gcm(cartan_[x]);
        if (!gcm.ok())
            throw ValidationError("gcm", "at '" + datum_.name(x) + "': " + gcm.violations[0].detail);
    }
    auto compat = check_compatibility(datum_, cartan_);
    if (!compat.ok())
        throw ValidationError("compatibility", compat.violations[0].detail);
}

std::vector<ObjectId> Covering::fiber(ObjectId x) const {
    std::vector<ObjectId> out;
    for (ObjectId y = 0; y < fiber_map.size(); ++y)
        if (fiber_map[y] == x)
            out.push_back(y);
    return out;
}

ValidationReport verify_covering(const Covering &c) {
    ValidationReport r;
    const auto &src = c.source_graph;
    const auto &dst = c.target_graph;
    if (src.rank() != dst.rank()) {
        r.add("rank", "source and target graphs have different rank");
        return r;
    }
    if (c.fiber_map.size() != src.size()) {
        r.add("fiber-map", "fiber map must be defined on every source object");
        return r;
    }
    std::vector<bool> hit(dst.size(), false);
    for (ObjectId y = 0; y < src.size(); ++y) {
        if (c.fiber_map[y] >= dst.size()) {
            r.add("fiber-map", "image of '" + src.name(y) + "' is not an object");
            return r;
        }
        hit[c.fiber_map[y]] = true;
    }
    for (ObjectId x = 0; x < dst.size(); ++x)
        if (!hit[x])
            r.add("surjective", "'" + dst.name(x) + "' has empty fiber");
    for (ObjectId y = 0; y < src.size(); ++y) {
        const ObjectId fy = c.fiber_map[y];
        for (Generator i = 0; i < src.rank(); ++i)
            if (dst.rho(i, fy) != c.fiber_map[src.rho(i, y)])
                r.add("equivariance", "rho_" + std::to_string(i + 1) + " o F != F o rho~_" +
                                          std::to_string(i + 1) + " at '" + src.name(y) + "'");
        if (dst.cartan(fy) != src.cartan(y))
            r.add("cartan-match", "C^F(" + src.name(y) + ") != C^" + src.name(y));
    }
    return r;
}

Covering identity_covering(const SemiCartanGraph &g) {
    std::vector<ObjectId> f(g.size());
    for (ObjectId x = 0; x < g.size(); ++x)
        f[x] = x;
    return {g, g, std::move(f)};
}

Covering copies_covering(const SemiCartanGraph &g, std::size_t n) {
    const auto m = g.size();
    std::vector<std::string> names;
    std::vector<std::vector<ObjectId>> rho(g.rank(), std::vector<ObjectId>(n * m));
    std::vector<IntMatrix> cartan;
    std::vector<ObjectId> f;
    for (std::size_t k = 0; k < n; ++k)
        for (ObjectId x = 0; x < m; ++x) {
            names.push_back(g.name(x) + "#" + std::to_string(k + 1));
            for (Generator i = 0; i < g.rank(); ++i)
                rho[i][k * m + x] = k * m + g.rho(i, x);
            cartan.push_back(g.cartan(x));
            f.push_back(x);
        }
    SemiCartanGraph src(BasicDatum(g.rank(), std::move(names), std::move(rho)), std::move(cartan));
    return {std::move(src), g, std::move(f)};
}

Covering collapse_covering(const SemiCartanGraph &g, const SemiCartanGraph &point) {
    return {g, point, std::vector<ObjectId>(g.size(), 0)};
}

// ---------------------------------------------------------------------------
// Input document

namespace {

Int as_int(const json &v, const std::string &what) {
    if (!v.is_number_integer())
        throw SyntaxError(what + " must be an integer");
    return v.get<Int>();
}

const json &require(const json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw SyntaxError(std::string("missing key '") + key + "'");
    return *it;
}

} // namespace

SemiCartanGraph parse_cartan_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SyntaxError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw SyntaxError("document must be a JSON object");

    const Int rank = as_int(require(doc, "rank"), "rank");
    if (rank <= 0)
        throw ValidationError("shape", "rank must be positive");
    const auto theta = static_cast<std::size_t>(rank);

    const json &objs = require(doc, "objects");
    if (!objs.is_array())
        throw SyntaxError("'objects' must be an array");
    std::vector<std::string> names;
    for (const auto &o : objs) {
        if (!o.is_string())
            throw SyntaxError("object identifiers must be strings");
        names.push_back(o.get<std::string>());
    }
    std::map<std::string, ObjectId> index;
    for (ObjectId x = 0; x < names.size(); ++x)
        index.emplace(names[x], x);
    auto lookup = [&](const json &v) {
        if (!v.is_string())
            throw SyntaxError("edge endpoints must be strings");
        auto it = index.find(v.get<std::string>());
        if (it == index.end())
            throw ValidationError("objects", "edge mentions undeclared object '" +
                                                 v.get<std::string>() + "'");
        return it->second;
    };

    // Unlisted objects are fixed points of rho_i.
    std::vector<std::vector<ObjectId>> rho(theta, std::vector<ObjectId>(names.size()));
    for (auto &r : rho)
        for (ObjectId x = 0; x < r.size(); ++x)
            r[x] = x;
    const json &edges = doc.contains("edges") ? doc["edges"] : json::array();
    if (!edges.is_array())
        throw SyntaxError("'edges' must be an array");
    for (const auto &e : edges) {
        if (!e.is_object())
            throw SyntaxError("each edge must be an object");
        const Int i = as_int(require(e, "i"), "edge generator index");
        if (i < 1 || i > rank)
            throw ValidationError("shape", "edge generator index " + std::to_string(i) +
                                               " out of range");
        const json &pair = require(e, "pair");
        if (!pair.is_array() || pair.size() != 2)
            throw SyntaxError("edge 'pair' must be an array of two identifiers");
        const ObjectId a = lookup(pair[0]);
        const ObjectId b = lookup(pair[1]);
        auto &r = rho[static_cast<std::size_t>(i - 1)];
        if (a == b)
            throw ValidationError("involution", "edge pair must join distinct objects");
        if (r[a] != a || r[b] != b)
            throw ValidationError("involution", "rho_" + std::to_string(i) +
                                                    " is not an involution: object has two " +
                                                    "edges with label " + std::to_string(i));
        r[a] = b;
        r[b] = a;
    }

    BasicDatum datum(theta, names, std::move(rho));

    const json &cartan = require(doc, "cartan");
    if (!cartan.is_object())
        throw SyntaxError("'cartan' must be an object keyed by object identifier");
    std::vector<IntMatrix> mats;
    for (const auto &name : names) {
        auto it = cartan.find(name);
        if (it == cartan.end())
            throw ValidationError("shape", "missing Cartan matrix for '" + name + "'");
        if (!it->is_array() || it->size() != theta)
            throw ValidationError("shape", "Cartan matrix for '" + name + "' must have rank rows");
        IntMatrix m(theta);
        for (std::size_t r = 0; r < theta; ++r) {
            const json &row = (*it)[r];
            if (!row.is_array() || row.size() != theta)
                throw ValidationError("shape", "Cartan matrix for '" + name + "' is not square");
            for (std::size_t c = 0; c < theta; ++c)
                m(r, c) = as_int(row[c], "Cartan entry");
        }
        mats.push_back(std::move(m));
    }
    for (const auto &[key, _] : cartan.items())
        if (!index.count(key))
            throw ValidationError("objects", "Cartan matrix given for undeclared object '" + key + "'");

    return SemiCartanGraph(std::move(datum), std::move(mats));
}

std::string serialize_cartan_graph(const SemiCartanGraph &g) {
    json doc;
    doc["rank"] = g.rank();
    doc["objects"] = g.datum().objects();
    std::vector<std::tuple<Generator, ObjectId, ObjectId>> edges;
    for (Generator i = 0; i < g.rank(); ++i)
        for (ObjectId x = 0; x < g.size(); ++x)
            if (g.rho(i, x) > x)
                edges.emplace_back(i, x, g.rho(i, x));
    std::sort(edges.begin(), edges.end());
    json e = json::array();
    for (const auto &[i, a, b] : edges)
        e.push_back({{"i", i + 1}, {"pair", {g.name(a), g.name(b)}}});
    doc["edges"] = std::move(e);
    json cartan = json::object();
    for (ObjectId x = 0; x < g.size(); ++x) {
        json rows = json::array();
        for (std::size_t r = 0; r < g.rank(); ++r)
            rows.push_back(g.cartan(x).row(r));
        cartan[g.name(x)] = std::move(rows);
    }
    doc["cartan"] = std::move(cartan);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Built-in graphs

namespace {

SemiCartanGraph one_point(IntMatrix c) {
    const auto n = c.dim();
    std::vector<std::vector<ObjectId>> rho(n, std::vector<ObjectId>{0});
    return {BasicDatum(n, {"x"}, std::move(rho)), {std::move(c)}};
}

// Rank-2 chain of objects x1..xk; labels[e] is the one-based generator on edge x_e -- x_{e+1}.
SemiCartanGraph chain(const std::vector<Generator> &labels, std::vector<IntMatrix> cartan) {
    const std::size_t k = labels.size() + 1;
    std::vector<std::string> names;
    for (std::size_t x = 0; x < k; ++x)
        names.push_back("x" + std::to_string(x + 1));
    std::vector<std::vector<ObjectId>> rho(2, std::vector<ObjectId>(k));
    for (auto &r : rho)
        for (ObjectId x = 0; x < k; ++x)
            r[x] = x;
    for (std::size_t e = 0; e < labels.size(); ++e) {
        rho[labels[e] - 1][e] = e + 1;
        rho[labels[e] - 1][e + 1] = e;
    }
    return {BasicDatum(2, std::move(names), std::move(rho)), std::move(cartan)};
}

const IntMatrix kA1xA1{{2, 0}, {0, 2}};
const IntMatrix kA2{{2, -1}, {-1, 2}};
const IntMatrix kB2{{2, -2}, {-1, 2}};
const IntMatrix kG2{{2, -3}, {-1, 2}};

} // namespace

const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names{"A1xA1-1pt",  "A2-1pt",     "B2-1pt", "G2-1pt",
                                                "A2-std-3pt", "B2-std-2pt", "row10"};
    return names;
}

SemiCartanGraph builtin(std::string_view name) {
    if (name == "A1xA1-1pt")
        return one_point(kA1xA1);
    if (name == "A2-1pt")
        return one_point(kA2);
    if (name == "B2-1pt")
        return one_point(kB2);
    if (name == "G2-1pt")
        return one_point(kG2);
    if (name == "A2-std-3pt")
        return chain({2, 1}, {kA2, kA2, kA2});
    if (name == "B2-std-2pt")
        return chain({2}, {kB2, kB2});
    if (name == "row10")
        return chain({1, 2}, {IntMatrix{{2, -2}, {-2, 2}}, IntMatrix{{2, -2}, {-1, 2}},
                              IntMatrix{{2, -4}, {-1, 2}}});
    throw UnknownName("unknown builtin graph '" + std::string(name) + "'");
}

} // namespace weylgpd

#include "weylgpd/bruhat.hpp"
#include "weylgpd/cli.hpp"
#include "weylgpd/errors.hpp"
#include "weylgpd/nil_hecke.hpp"
#include "weylgpd/poly_rep.hpp"
#include "weylgpd/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace weylgpd;

namespace {

std::vector<Generator> to_letters(const std::vector<std::size_t> &one_based, std::size_t rank) {
    std::vector<Generator> out;
    for (auto i : one_based) {
        if (i < 1 || i > rank)
            throw SyntaxError("letter " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
        out.push_back(i - 1);
    }
    return out;
}

std::vector<std::size_t> to_one_based(const std::vector<Generator> &letters) {
    std::vector<std::size_t> out;
    for (auto i : letters)
        out.push_back(i + 1);
    return out;
}

// Enumerated groupoid of one graph, addressed by object names and 1-based words.
class PyGroupoid {
  public:
    explicit PyGroupoid(SemiCartanGraph g)
        : groupoid_(Groupoid::enumerate(std::make_shared<const RootSystem>(generate_real_roots(g)))) {}

    const SemiCartanGraph &graph() const { return groupoid_->graph(); }
    std::size_t size() const { return groupoid_->size(); }

    std::vector<std::vector<Int>> positive_roots(const std::string &x) const {
        std::vector<std::vector<Int>> out;
        for (const auto &r : groupoid_->root_system().positive(graph().index(x)))
            out.push_back(r.coords);
        return out;
    }

    std::size_t m(const std::string &x, std::size_t i, std::size_t j) const {
        const auto n = graph().rank();
        return m_entry(groupoid_->root_system(), graph().index(x), to_letters({i}, n)[0], to_letters({j}, n)[0]);
    }

    py::list elements() const {
        py::list out;
        for (ElementId w = 0; w < size(); ++w)
            out.append(describe(w));
        return out;
    }

    std::vector<std::vector<std::size_t>> reduced_words(const std::string &start,
                                                        const std::optional<std::vector<std::size_t>> &word) const {
        const ObjectId x = graph().index(start);
        const ElementId w = word ? groupoid_->evaluate(make_word(start, *word)) : groupoid_->longest_element(x);
        std::vector<std::vector<std::size_t>> out;
        for (const auto &r : groupoid_->reduced_words(w))
            out.push_back(to_one_based(r.letters));
        return out;
    }

    bool is_reduced(const std::string &start, const std::vector<std::size_t> &word) const {
        return groupoid_->is_reduced(make_word(start, word));
    }

    /// Nil-Hecke product of the generators along the word: list of (coefficient, element).
    py::list nilhecke(const std::string &start, const std::vector<std::size_t> &word) const {
        const Word w = make_word(start, word);
        const auto path = w.object_path(graph());
        auto p = idempotent(groupoid_, w.start);
        for (std::size_t k = 0; k < w.size(); ++k)
            p = p * generator(groupoid_, path[k], w.letters[k]);
        py::list out;
        for (const auto &[u, c] : p.terms())
            out.append(py::make_tuple(c, describe(u)));
        return out;
    }

    /// Psi expansion: list of (polynomial text, 1-based word).
    py::list psi(const std::string &start, const std::vector<std::size_t> &word) const {
        py::list out;
        const auto e = psi_expand(groupoid_, make_word(start, word));
        for (const auto &[u, c] : e.terms())
            out.append(py::make_tuple(c.to_string(), to_one_based(groupoid_->first_reduced_word(u).letters)));
        return out;
    }

    std::string psi_text(const std::string &start, const std::vector<std::size_t> &word) const {
        return format_psi(psi_expand(groupoid_, make_word(start, word)));
    }

    py::dict bruhat(const std::string &from, const std::string &to) const {
        const auto p = poset(from, to);
        auto word = [&](ElementId w) { return to_one_based(groupoid_->first_reduced_word(w).letters); };
        py::list elements, relation, covers;
        for (auto w : p.elements)
            elements.append(word(w));
        for (const auto &[u, w] : p.relation)
            relation.append(py::make_tuple(word(u), word(w)));
        for (const auto &[u, w] : p.hasse)
            covers.append(py::make_tuple(word(u), word(w)));
        py::dict d;
        d["elements"] = elements;
        d["relation"] = relation;
        d["covers"] = covers;
        d["certified"] = p.certified;
        return d;
    }

    std::string dot(const std::string &from, const std::string &to) const {
        return export_dot(*groupoid_, poset(from, to));
    }

  private:
    Word make_word(const std::string &start, const std::vector<std::size_t> &word) const {
        return Word{graph().index(start), to_letters(word, graph().rank())};
    }

    BruhatPoset poset(const std::string &from, const std::string &to) const {
        return bruhat_poset(*groupoid_, graph().index(from), graph().index(to));
    }

    py::dict describe(ElementId w) const {
        py::dict d;
        d["source"] = graph().name(groupoid_->source(w));
        d["target"] = graph().name(groupoid_->target(w));
        d["length"] = groupoid_->length(w);
        d["word"] = to_one_based(groupoid_->first_reduced_word(w).letters);
        return d;
    }

    std::shared_ptr<const Groupoid> groupoid_;
};

} // namespace

PYBIND11_MODULE(_weylgpd, m) {
    m.doc() = "Weyl groupoids of semi-Cartan graphs";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<NotReduced>(m, "NotReduced", base.ptr());
    py::register_exception<UnknownName>(m, "UnknownName", base.ptr());

    py::class_<SemiCartanGraph>(m, "Graph")
        .def_property_readonly("rank", &SemiCartanGraph::rank)
        .def_property_readonly("objects", [](const SemiCartanGraph &g) { return g.datum().objects(); })
        .def("rho", [](const SemiCartanGraph &g, std::size_t i, const std::string &x) {
            return g.name(g.rho(to_letters({i}, g.rank())[0], g.index(x)));
        })
        .def("cartan", [](const SemiCartanGraph &g, const std::string &x) {
            const auto &c = g.cartan(g.index(x));
            std::vector<std::vector<Int>> out(c.dim(), std::vector<Int>(c.dim()));
            for (std::size_t i = 0; i < c.dim(); ++i)
                for (std::size_t j = 0; j < c.dim(); ++j)
                    out[i][j] = c(i, j);
            return out;
        })
        .def("to_json", &serialize_cartan_graph)
        .def("__eq__", [](const SemiCartanGraph &a, const SemiCartanGraph &b) { return a == b; });

    m.def("builtin_names", &builtin_names);
    m.def("builtin", [](const std::string &name) { return builtin(name); });
    m.def("parse_graph", [](const std::string &text) { return parse_cartan_graph(text); });

    py::class_<PyGroupoid>(m, "WeylGroupoid")
        .def(py::init<SemiCartanGraph>())
        .def_property_readonly("graph", &PyGroupoid::graph)
        .def("__len__", &PyGroupoid::size)
        .def("positive_roots", &PyGroupoid::positive_roots)
        .def("m", &PyGroupoid::m, py::arg("x"), py::arg("i"), py::arg("j"))
        .def("elements", &PyGroupoid::elements)
        .def("reduced_words", &PyGroupoid::reduced_words, py::arg("start"), py::arg("word") = py::none())
        .def("is_reduced", &PyGroupoid::is_reduced)
        .def("nilhecke", &PyGroupoid::nilhecke)
        .def("psi", &PyGroupoid::psi)
        .def("psi_text", &PyGroupoid::psi_text)
        .def("bruhat", &PyGroupoid::bruhat, py::arg("source"), py::arg("target"))
        .def("dot", &PyGroupoid::dot, py::arg("source"), py::arg("target"));

    m.def("verify", [](const SemiCartanGraph &g) {
        py::list out;
        for (const auto &r : run_verification(g))
            out.append(py::make_tuple(r.suite, r.name, r.passed, r.detail));
        return out;
    });

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}

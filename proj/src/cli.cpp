#include "weylgpd/cli.hpp"

#include "weylgpd/bruhat.hpp"
#include "weylgpd/errors.hpp"
#include "weylgpd/nil_hecke.hpp"
#include "weylgpd/poly_rep.hpp"
#include "weylgpd/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace weylgpd::cli {

namespace {

using nlohmann::json;

// Thrown for problems with the arguments themselves (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::string_view kBuiltinPrefix = "builtin:";

// "builtin:NAME" is always a builtin; otherwise an existing file wins over a
// builtin of the same name.
SemiCartanGraph resolve_graph(const std::string &source) {
    if (source.rfind(kBuiltinPrefix, 0) == 0) {
        try {
            return builtin(source.substr(kBuiltinPrefix.size()));
        } catch (const UnknownName &e) {
            throw UsageError(e.what());
        }
    }
    if (std::filesystem::is_regular_file(source)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_cartan_graph(buf.str());
    }
    const auto &names = builtin_names();
    if (std::find(names.begin(), names.end(), source) != names.end())
        return builtin(source);
    throw UsageError("'" + source + "' is neither a readable file nor a builtin graph");
}

ObjectId object(const SemiCartanGraph &g, const std::string &name) {
    try {
        return g.index(name);
    } catch (const UnknownName &e) {
        throw UsageError(e.what());
    }
}

std::vector<Generator> letters(const SemiCartanGraph &g, const std::string &text) {
    try {
        return parse_letters(text, g.rank());
    } catch (const SyntaxError &e) {
        throw UsageError(e.what());
    }
}

struct Context {
    SemiCartanGraph graph;
    std::shared_ptr<const RootSystem> rs;
    std::shared_ptr<const Groupoid> groupoid;

    explicit Context(SemiCartanGraph g)
        : graph(std::move(g)), rs(std::make_shared<const RootSystem>(generate_real_roots(graph))),
          groupoid(Groupoid::enumerate(rs)) {}

    const std::string &name(ObjectId x) const { return graph.name(x); }
    std::string word(ElementId w) const { return format_letters(groupoid->first_reduced_word(w).letters); }
};

struct Options {
    std::string graph;
    std::string start;
    std::string from;
    std::string to;
    std::string word;
    std::string dot;
    bool json = false;
};

void emit(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

int cmd_validate(const Options &o, std::ostream &out) {
    const auto g = resolve_graph(o.graph);
    const auto rs = generate_real_roots(g);
    const auto report = check_grs_axioms(rs);
    if (!report.ok())
        throw ValidationError(report.violations.front().invariant, report.violations.front().detail);
    if (o.json)
        emit(out, {{"valid", true}, {"rank", g.rank()}, {"objects", g.datum().objects()}});
    else
        out << "valid: rank " << g.rank() << ", " << g.size() << " objects\n";
    return 0;
}

int cmd_roots(const Options &o, std::ostream &out) {
    const auto g = resolve_graph(o.graph);
    const auto rs = generate_real_roots(g);
    json j = json::object();
    for (ObjectId x = 0; x < g.size(); ++x)
        for (const auto &r : rs.positive(x)) {
            if (o.json)
                j[g.name(x)].push_back(r.coords);
            else
                out << g.name(x) << ": " << r.to_string() << '\n';
        }
    if (o.json)
        emit(out, j);
    return 0;
}

int cmd_elements(const Options &o, std::ostream &out) {
    const Context c(resolve_graph(o.graph));
    std::optional<ObjectId> from, to;
    if (!o.from.empty())
        from = object(c.graph, o.from);
    if (!o.to.empty())
        to = object(c.graph, o.to);
    json j = json::array();
    for (ElementId w = 0; w < c.groupoid->size(); ++w) {
        const auto s = c.groupoid->source(w), t = c.groupoid->target(w);
        if ((from && *from != s) || (to && *to != t))
            continue;
        if (o.json)
            j.push_back({{"source", c.name(s)}, {"target", c.name(t)}, {"length", c.groupoid->length(w)},
                         {"word", c.word(w)}});
        else
            out << c.name(s) << " -> " << c.name(t) << " : " << c.groupoid->length(w) << " : " << c.word(w)
                << '\n';
    }
    if (o.json)
        emit(out, j);
    return 0;
}

Word word_option(const Context &c, const Options &o) {
    if (o.start.empty())
        throw UsageError("--start is required");
    return Word{object(c.graph, o.start), letters(c.graph, o.word)};
}

int cmd_reduced(const Options &o, std::ostream &out) {
    const Context c(resolve_graph(o.graph));
    if (o.start.empty())
        throw UsageError("--start is required");
    const ObjectId x = object(c.graph, o.start);
    const ElementId w = o.word.empty() ? c.groupoid->longest_element(x)
                                       : c.groupoid->evaluate(Word{x, letters(c.graph, o.word)});
    json j = json::array();
    for (const auto &word : c.groupoid->reduced_words(w)) {
        if (o.json)
            j.push_back(format_letters(word.letters));
        else
            out << format_letters(word.letters) << '\n';
    }
    if (o.json)
        emit(out, j);
    return 0;
}

int cmd_nilhecke(const Options &o, std::ostream &out) {
    const Context c(resolve_graph(o.graph));
    const Word w = word_option(c, o);
    const auto path = w.object_path(c.graph);
    auto p = idempotent(c.groupoid, w.start);
    for (std::size_t k = 0; k < w.size(); ++k)
        p = p * generator(c.groupoid, path[k], w.letters[k]);
    json j = json::array();
    for (const auto &[u, coeff] : p.terms()) {
        const auto label = c.name(c.groupoid->source(u)) + "->" + c.name(c.groupoid->target(u));
        if (o.json)
            j.push_back({{"coefficient", coeff}, {"source", c.name(c.groupoid->source(u))},
                         {"target", c.name(c.groupoid->target(u))}, {"word", c.word(u)}});
        else
            out << coeff << " * T[" << label << ": " << c.word(u) << "]\n";
    }
    if (o.json)
        emit(out, j);
    else if (p.is_zero())
        out << "0\n";
    return 0;
}

int cmd_psi(const Options &o, std::ostream &out) {
    const Context c(resolve_graph(o.graph));
    const auto e = psi_expand(c.groupoid, word_option(c, o));
    if (!o.json) {
        out << format_psi(e);
        return 0;
    }
    json j = json::array();
    for (const auto &[u, coeff] : e.terms())
        j.push_back({{"coefficient", coeff.to_string()}, {"word", c.word(u)}});
    emit(out, j);
    return 0;
}

int cmd_bruhat(const Options &o, std::ostream &out) {
    const Context c(resolve_graph(o.graph));
    if (o.from.empty() || o.to.empty())
        throw UsageError("--from and --to are required");
    const auto p = bruhat_poset(*c.groupoid, object(c.graph, o.from), object(c.graph, o.to));
    if (!o.dot.empty()) {
        std::ofstream f(o.dot);
        if (!f)
            throw UsageError("cannot write '" + o.dot + "'");
        f << export_dot(*c.groupoid, p);
    }
    if (o.json) {
        json elements = json::array(), covers = json::array();
        for (ElementId w : p.elements)
            elements.push_back(c.word(w));
        for (const auto &[u, w] : p.hasse)
            covers.push_back({c.word(u), c.word(w)});
        emit(out, {{"elements", elements}, {"covers", covers}, {"certified", p.certified}});
        return 0;
    }
    for (ElementId w : p.elements)
        out << "element " << c.word(w) << " : " << c.groupoid->length(w) << '\n';
    for (const auto &[u, w] : p.hasse)
        out << "cover " << c.word(u) << " < " << c.word(w) << '\n';
    return 0;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    const auto results = run_verification(resolve_graph(o.graph));
    const CheckResult *first_failure = nullptr;
    json j = json::array();
    for (const auto &r : results) {
        if (!r.passed && !first_failure)
            first_failure = &r;
        if (o.json)
            j.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
            out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name
                << (r.passed ? "" : ": " + r.detail) << '\n';
    }
    if (o.json)
        emit(out, j);
    if (first_failure) {
        err << "verification failed: " << first_failure->suite << '/' << first_failure->name << '\n';
        return 1;
    }
    return 0;
}

int cmd_builtins(const Options &o, std::ostream &out) {
    if (o.json) {
        emit(out, builtin_names());
        return 0;
    }
    for (const auto &n : builtin_names())
        out << n << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Weyl groupoids, nil-Hecke algebras and Bruhat orders", "weylgpd"};
    app.require_subcommand(1);
    Options o;

    auto graph_sub = [&](const std::string &name, const std::string &description) {
        auto *sub = app.add_subcommand(name, description);
        sub->add_option("--graph", o.graph, "graph file, builtin name, or builtin:NAME")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        return sub;
    };
    graph_sub("validate", "check the graph and its root system");
    graph_sub("roots", "list the positive roots at every object");
    auto *elements = graph_sub("elements", "list the morphisms of the Weyl groupoid");
    elements->add_option("--from", o.from, "source object");
    elements->add_option("--to", o.to, "target object");
    auto *reduced = graph_sub("reduced", "list all reduced words of a morphism");
    reduced->add_option("--start", o.start, "target object of the leftmost letter")->required();
    reduced->add_option("--word", o.word, "comma-separated letters; default: the longest element");
    auto *nilhecke = graph_sub("nilhecke", "multiply the nil-Hecke generators along a word");
    nilhecke->add_option("--start", o.start, "target object of the leftmost letter")->required();
    nilhecke->add_option("--word", o.word, "comma-separated letters")->required();
    auto *psi = graph_sub("psi", "expand the h-product of a reduced word");
    psi->add_option("--start", o.start, "target object of the leftmost letter")->required();
    psi->add_option("--word", o.word, "comma-separated letters")->required();
    auto *bruhat = graph_sub("bruhat", "Bruhat order of a hom-set");
    bruhat->add_option("--from", o.from, "source object")->required();
    bruhat->add_option("--to", o.to, "target object")->required();
    bruhat->add_option("--dot", o.dot, "write the Hasse diagram in DOT format");
    graph_sub("verify", "run every invariant check on the graph");
    app.add_subcommand("builtins", "list the builtin graphs")->add_flag("--json", o.json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    std::ostringstream buffer; // nothing is printed on failure paths
    try {
        int code = 0;
        if (cmd == "validate")
            code = cmd_validate(o, buffer);
        else if (cmd == "roots")
            code = cmd_roots(o, buffer);
        else if (cmd == "elements")
            code = cmd_elements(o, buffer);
        else if (cmd == "reduced")
            code = cmd_reduced(o, buffer);
        else if (cmd == "nilhecke")
            code = cmd_nilhecke(o, buffer);
        else if (cmd == "psi")
            code = cmd_psi(o, buffer);
        else if (cmd == "bruhat")
            code = cmd_bruhat(o, buffer);
        else if (cmd == "verify")
            code = cmd_verify(o, buffer, err);
        else
            code = cmd_builtins(o, buffer);
        out << buffer.str();
        return code;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError &e) {
        err << "invalid (" << e.invariant() << "): " << e.what() << '\n';
        return 1;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace weylgpd::cli

// plgb: enumerate trees, sort them, reduce modulo J, J' or I, and build
// pre-Lie and Lie monomial bases from the command line.

#include "plgb/enumerate.hpp"
#include "plgb/error.hpp"
#include "plgb/ideal.hpp"
#include "plgb/lie.hpp"
#include "plgb/magma.hpp"
#include "plgb/order.hpp"
#include "plgb/prelie_basis.hpp"
#include "plgb/tree_algebra.hpp"
#include "plgb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace plgb;
using nlohmann::json;

namespace {

constexpr int schema_version = 1;

enum Exit { ok = 0, failure = 1, usage = 2, resource = 3, defect = 4 };

/// PLGB_LOG=0|1|2 (or quiet|info|debug) controls stderr chatter.
int log_level()
{
    const char* v = std::getenv("PLGB_LOG");
    if (v == nullptr)
        return 0;
    std::string s(v);
    if (s == "debug" || s == "2")
        return 2;
    if (s == "info" || s == "1")
        return 1;
    return 0;
}

void log(int level, const std::string& what)
{
    if (log_level() >= level)
        std::cerr << "plgb: " << what << '\n';
}

struct Options {
    std::string alphabet_path;
    std::string format = "text";
    std::string caps_text;
    std::uint64_t seed = 1;
    int degree = 0;
    int max_degree = 0;
    std::string ideal = "I";
    std::string kind;
    std::string input;
    std::string tree;
    int samples = 200;
};

Alphabet load_alphabet(const Options& o)
{
    if (o.alphabet_path.empty())
        return Alphabet::single();
    return Alphabet::load(o.alphabet_path);
}

Caps parse_caps(const std::string& text)
{
    Caps caps;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("cap '" + item + "' must look like key=value", 0);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("cap '" + item + "' needs an integer value", eq + 1);
        }
        if (value <= 0)
            throw ParseError("cap '" + item + "' must be positive", eq + 1);
        if (key == "terms")
            caps.max_terms = static_cast<std::size_t>(value);
        else if (key == "seeds")
            caps.max_seeds = static_cast<std::size_t>(value);
        else if (key == "degree")
            caps.max_degree = static_cast<int>(value);
        else
            throw ParseError("unknown cap '" + key + "' (expected terms, seeds or degree)", 0);
    }
    return caps;
}

void require_degree(int n, const char* flag)
{
    if (n < 1)
        throw DegreeError(std::string(flag) + " must be >= 1");
}

void emit(const Options& o, const json& doc, const std::vector<std::string>& lines)
{
    if (o.format == "json") {
        json out = doc;
        out["schema_version"] = schema_version;
        std::cout << out.dump(2) << '\n';
        return;
    }
    for (const auto& l : lines)
        std::cout << l << '\n';
}

std::vector<std::string> split_inputs(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    std::stringstream in(text);
    while (std::getline(in, cur, ';')) {
        auto b = cur.find_first_not_of(" \t\r\n");
        if (b == std::string::npos)
            continue;
        out.push_back(cur.substr(b, cur.find_last_not_of(" \t\r\n") - b + 1));
    }
    return out;
}

/// --input, or stdin lines when --input is absent.
std::vector<std::string> read_items(const Options& o)
{
    if (!o.input.empty())
        return split_inputs(o.input);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        auto items = split_inputs(line);
        out.insert(out.end(), items.begin(), items.end());
    }
    return out;
}

std::string read_expression(const Options& o)
{
    if (!o.input.empty())
        return o.input;
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

int cmd_enumerate(const Options& o)
{
    require_degree(o.degree, "--degree");
    Alphabet a = load_alphabet(o);
    std::string kind = o.kind.empty() ? "nonplanar" : o.kind;
    std::vector<std::string> lines;
    if (kind == "planar")
        for (const auto& t : enumerate_planar(a, o.degree))
            lines.push_back(format_tree(a, t));
    else if (kind == "nonplanar")
        for (const auto& t : enumerate_nonplanar(a, o.degree))
            lines.push_back(format_tree(a, t));
    else if (kind == "binary")
        for (const auto& t : enumerate_binary_by_degree(a, o.degree))
            lines.push_back(format_binary(a, t));
    else
        throw ParseError("enumerate: --kind must be planar, nonplanar or binary", 0);
    json doc{{"command", "enumerate"}, {"kind", kind}, {"degree", o.degree}, {"count", lines.size()},
             {"items", lines}};
    emit(o, doc, lines);
    return ok;
}

int cmd_order(const Options& o)
{
    Alphabet a = load_alphabet(o);
    std::string kind = o.kind.empty() ? "planar" : o.kind;
    auto items = read_items(o);
    std::vector<std::string> lines;
    if (kind == "planar") {
        std::vector<PlanarTree> ts;
        for (const auto& s : items)
            ts.push_back(parse_tree(a, s));
        std::stable_sort(ts.begin(), ts.end(), Ascending<PlanarTree>{});
        for (const auto& t : ts)
            lines.push_back(format_tree(a, t));
    } else if (kind == "nonplanar") {
        std::vector<Tree> ts;
        for (const auto& s : items)
            ts.push_back(parse_nonplanar(a, s));
        std::stable_sort(ts.begin(), ts.end(), Ascending<Tree>{});
        for (const auto& t : ts)
            lines.push_back(format_tree(a, t));
    } else if (kind == "binary") {
        std::vector<BinaryTree> ts;
        for (const auto& s : items)
            ts.push_back(parse_binary(a, s));
        std::stable_sort(ts.begin(), ts.end(), Ascending<BinaryTree>{});
        for (const auto& t : ts)
            lines.push_back(format_binary(a, t));
    } else {
        throw ParseError("order: --kind must be planar, nonplanar or binary", 0);
    }
    json doc{{"command", "order"}, {"kind", kind}, {"sorted", lines}};
    emit(o, doc, lines);
    return ok;
}

template <class M>
int max_degree_of(const LinearCombination<M>& f)
{
    int d = 1;
    for (const auto& [m, c] : f)
        d = std::max(d, degree(m));
    return d;
}

template <class M, class Format>
json rows_json(const HomogeneousIdealBasis<M>& basis, Format&& fmt)
{
    json rows = json::array();
    for (const auto& r : basis.rows())
        rows.push_back(fmt(r));
    return rows;
}

int cmd_reduce(const Options& o, const Caps& caps)
{
    Alphabet a = load_alphabet(o);
    IdealKind kind = parse_ideal_kind(o.ideal);
    std::string text = read_expression(o);
    std::string in_text, out_text;
    if (kind == IdealKind::I) {
        TreePoly f = parse_tree_poly(a, text);
        int n = std::max(o.max_degree, max_degree_of(f));
        auto bases = span_ideal(nonplanar_ideal_I(a), n, caps);
        in_text = format_poly(a, f);
        out_text = format_poly(a, can(f, bases));
    } else {
        PlanarPoly f = parse_planar_poly(a, text);
        int n = std::max(o.max_degree, max_degree_of(f));
        auto pres = kind == IdealKind::J ? planar_ideal_J(a) : planar_ideal_J_prime(a);
        auto bases = span_ideal(pres, n, caps);
        in_text = format_poly(a, f);
        out_text = format_poly(a, can(f, bases));
    }
    json doc{{"command", "reduce"}, {"ideal", std::string(to_string(kind))}, {"input", in_text},
             {"canonical_form", out_text}};
    emit(o, doc, {out_text});
    return ok;
}

template <class M, class FormatTerm, class FormatPoly>
void describe_ideal(const IdealBases<M>& bases, int n, FormatTerm&& term, FormatPoly&& poly, bool normal_set_only,
                    json& doc, std::vector<std::string>& lines)
{
    json normal = json::array();
    for (const auto& m : complement(bases, n))
        normal.push_back(term(m));
    doc["normal_set"] = normal;
    doc["normal_count"] = normal.size();
    if (normal_set_only) {
        for (const auto& s : normal)
            lines.push_back(s.get<std::string>());
        return;
    }
    json leading = json::array();
    for (const auto& m : leading_terms(bases[n]))
        leading.push_back(term(m));
    doc["leading_terms"] = leading;
    doc["rank"] = bases[n].rank();
    doc["rows"] = rows_json(bases[n], poly);
    for (const auto& r : bases[n].rows())
        lines.push_back(poly(r));
}

int cmd_ideal(const Options& o, const Caps& caps, bool normal_set_only)
{
    require_degree(o.degree, "--degree");
    Alphabet a = load_alphabet(o);
    IdealKind kind = parse_ideal_kind(o.ideal);
    json doc{{"command", normal_set_only ? "oset" : "ideal-basis"}, {"ideal", std::string(to_string(kind))},
             {"degree", o.degree}};
    std::vector<std::string> lines;
    if (kind == IdealKind::I) {
        auto bases = span_ideal(nonplanar_ideal_I(a), o.degree, caps);
        describe_ideal(
            bases, o.degree, [&](const Tree& t) { return format_tree(a, t); },
            [&](const TreePoly& f) { return format_poly(a, f); }, normal_set_only, doc, lines);
    } else {
        auto pres = kind == IdealKind::J ? planar_ideal_J(a) : planar_ideal_J_prime(a);
        auto bases = span_ideal(pres, o.degree, caps);
        describe_ideal(
            bases, o.degree, [&](const PlanarTree& t) { return format_tree(a, t); },
            [&](const PlanarPoly& f) { return format_poly(a, f); }, normal_set_only, doc, lines);
    }
    emit(o, doc, lines);
    return ok;
}

int cmd_psi(const Options& o)
{
    Alphabet a = load_alphabet(o);
    std::string text = o.tree.empty() ? read_expression(o) : o.tree;
    Tree t = parse_nonplanar(a, text);
    TreePoly p = psi(t);
    json terms = json::array();
    for (const auto& [s, c] : p)
        terms.push_back({{"tree", format_tree(a, s)}, {"coefficient", format_rational(c)}});
    json doc{{"command", "psi"}, {"tree", format_tree(a, t)}, {"terms", terms}};
    emit(o, doc, {format_poly(a, p)});
    return ok;
}

json words_json(const Alphabet& a, const NcPoly& f)
{
    json out = json::object();
    for (const auto& [w, c] : f)
        out[format_words(a, NcPoly(w))] = format_rational(c);
    return out;
}

int cmd_basis(const Options& o, const Caps& caps, std::string kind)
{
    require_degree(o.degree, "--degree");
    Alphabet a = load_alphabet(o);
    json doc{{"command", "basis"}, {"kind", kind}, {"degree", o.degree}};
    std::vector<std::string> lines;
    json elements = json::array();
    if (kind == "prelie") {
        for (const auto& t : enumerate_nonplanar(a, o.degree)) {
            TreePoly p = psi(t);
            lines.push_back(format_tree(a, t) + "\t" + format_poly(a, p));
            elements.push_back({{"tree", format_tree(a, t)}, {"element", format_poly(a, p)}});
        }
    } else if (kind == "lie") {
        auto bases = span_ideal(nonplanar_ideal_I(a), o.degree, caps);
        for (const auto& e : lie_monomial_basis(a, o.degree, bases)) {
            auto lb = ladder_bracket(a, e.tree);
            std::string bracket;
            if (lb) {
                bracket = lb->second;
                if (lb->first != 1)
                    bracket = format_rational(lb->first) + "*" + bracket;
            }
            std::string words = format_words(a, monic(e.element));
            json item{{"tree", format_tree(a, e.tree)}, {"words", words_json(a, e.element)},
                      {"monic_words", words_json(a, monic(e.element))}};
            if (lb) {
                item["bracket"] = lb->second;
                item["bracket_coefficient"] = format_rational(lb->first);
            }
            elements.push_back(item);
            if (o.format == "brackets")
                lines.push_back(lb ? bracket : words);
            else if (o.format == "words")
                lines.push_back(words);
            else
                lines.push_back(format_tree(a, e.tree) + "\t" + (lb ? bracket : "-") + "\t" + words);
        }
    } else {
        throw ParseError("basis: --kind must be prelie or lie", 0);
    }
    doc["count"] = elements.size();
    doc["elements"] = elements;
    emit(o, doc, lines);
    return ok;
}

int cmd_verify(const Options& o, const Caps& caps)
{
    Alphabet a = load_alphabet(o);
    VerifyConfig config;
    config.max_degree = o.max_degree > 0 ? o.max_degree : 4;
    config.seed = o.seed;
    config.samples = o.samples;
    config.caps = caps;
    auto results = run_invariant_suite(a, config);
    std::size_t passed = 0;
    json checks = json::array();
    std::vector<std::string> lines;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures},
                          {"detail", r.detail}});
        lines.push_back(std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) +
                        " cases)" + (r.passed ? "" : ": " + r.detail));
    }
    lines.push_back(std::to_string(passed) + " passed, " + std::to_string(results.size() - passed) + " failed");
    json doc{{"command", "verify"}, {"max_degree", config.max_degree}, {"seed", config.seed}, {"checks", checks},
             {"passed", passed}, {"failed", results.size() - passed}};
    emit(o, doc, lines);
    return passed == results.size() ? ok : defect;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monomial bases for free pre-Lie and Lie algebras via tree rewriting"};
    app.require_subcommand(1);
    Options o;

    auto add_kind = [&](CLI::App* c) { c->add_option("--kind", o.kind, "Tree kind or basis kind"); };
    auto add_degree = [&](CLI::App* c, bool required) {
        auto opt = c->add_option("--degree", o.degree, "Homogeneous degree");
        if (required)
            opt->required();
    };
    auto add_ideal = [&](CLI::App* c) {
        c->add_option("--ideal", o.ideal, "Ideal: J, J' or I")->check(CLI::IsMember({"J", "J'", "I"}));
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--alphabet", o.alphabet_path, "JSON alphabet file (default: one generator 'a')");
        c->add_option("--format", o.format, "text, json, brackets or words")
            ->check(CLI::IsMember({"text", "json", "brackets", "words"}));
        c->add_option("--caps", o.caps_text, "Resource caps, e.g. terms=100000,seeds=1000000,degree=8");
        c->add_option("--seed", o.seed, "Random seed for sampled checks");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List all trees of a degree in ascending order");
    add_common(enumerate);
    add_kind(enumerate);
    add_degree(enumerate, true);

    auto* order = app.add_subcommand("order", "Sort trees by the monomial order");
    order->alias("sort");
    add_common(order);
    add_kind(order);
    order->add_option("--input", o.input, "Trees separated by ';' (default: stdin)");

    auto* reduce = app.add_subcommand("reduce", "Canonical form modulo an ideal");
    add_common(reduce);
    add_ideal(reduce);
    reduce->add_option("--input", o.input, "Linear combination of trees (default: stdin)");
    reduce->add_option("--max-degree", o.max_degree, "Build the ideal up to this degree");

    auto* ideal_basis = app.add_subcommand("ideal-basis", "Reduced echelon basis of an ideal component");
    add_common(ideal_basis);
    add_ideal(ideal_basis);
    add_degree(ideal_basis, true);

    auto* oset = app.add_subcommand("oset", "Normal trees O(I) of an ideal component");
    add_common(oset);
    add_ideal(oset);
    add_degree(oset, true);

    auto* psi_cmd = app.add_subcommand("psi", "Expand the monomial pre-Lie basis element of a tree");
    add_common(psi_cmd);
    psi_cmd->add_option("--tree", o.tree, "Tree (default: stdin)");

    auto* basis = app.add_subcommand("basis", "Pre-Lie or Lie monomial basis in one degree");
    add_common(basis);
    add_kind(basis);
    add_degree(basis, true);

    auto* lie_basis = app.add_subcommand("lie-basis", "Lie monomial basis in one degree");
    add_common(lie_basis);
    add_degree(lie_basis, true);

    auto* prelie_basis = app.add_subcommand("prelie-basis", "Pre-Lie monomial basis in one degree");
    add_common(prelie_basis);
    add_degree(prelie_basis, true);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    add_common(verify);
    verify->add_option("--max-degree", o.max_degree, "Largest degree to check (default 4)");
    verify->add_option("--samples", o.samples, "Random samples per sampled check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        Caps caps = parse_caps(o.caps_text);
        if (o.max_degree < 0)
            throw DegreeError("--max-degree must be >= 1");
        log(1, "alphabet " + (o.alphabet_path.empty() ? std::string("<default a>") : o.alphabet_path));
        int rc = ok;
        if (*enumerate)
            rc = cmd_enumerate(o);
        else if (*order)
            rc = cmd_order(o);
        else if (*reduce)
            rc = cmd_reduce(o, caps);
        else if (*ideal_basis)
            rc = cmd_ideal(o, caps, false);
        else if (*oset)
            rc = cmd_ideal(o, caps, true);
        else if (*psi_cmd)
            rc = cmd_psi(o);
        else if (*basis)
            rc = cmd_basis(o, caps, o.kind.empty() ? "lie" : o.kind);
        else if (*lie_basis)
            rc = cmd_basis(o, caps, "lie");
        else if (*prelie_basis)
            rc = cmd_basis(o, caps, "prelie");
        else if (*verify)
            rc = cmd_verify(o, caps);
        log(1, "done in " +
                   std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()) +
                   "s");
        return rc;
    } catch (const ParseError& e) {
        std::cerr << "plgb: parse error: " << e.what() << '\n';
        return usage;
    } catch (const DegreeError& e) {
        std::cerr << "plgb: degree error: " << e.what() << '\n';
        return usage;
    } catch (const ResourceLimit& e) {
        std::cerr << "plgb: resource limit: " << e.what() << '\n';
        return resource;
    } catch (const RankDefect& e) {
        std::cerr << "plgb: rank defect: " << e.what() << '\n';
        return defect;
    } catch (const Error& e) {
        std::cerr << "plgb: error: " << e.what() << '\n';
        return failure;
    }
}

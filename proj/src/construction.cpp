#include "eip/construction.hpp"

#include <cctype>
#include <filesystem>
#include <map>

#include "eip/catalog.hpp"
#include "eip/errors.hpp"

namespace eip {

namespace {

// name -> number of integer parameters
const std::map<std::string, int, std::less<>> kAtoms = {
    {"K", 1},     {"C", 1},      {"path", 1}, {"Q", 1},     {"Kpp", 1},
    {"KppmM", 2}, {"KmM", 2},    {"KmC", 1},  {"Km2C", 1},  {"Kmulti", 2},
    {"petersen", 0}, {"sKi", 2}, {"hspi", 3},
};

// name -> minimum arity (prod/join/union are variadic)
const std::map<std::string, int, std::less<>> kCombinators = {
    {"prod", 2}, {"join", 2}, {"union", 2}, {"complement", 1},
};

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        throw input_error("parse error at byte " + std::to_string(pos) + ": expected " +
                          expected);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("a name");
        return std::string(text.substr(start, pos - start));
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("an integer");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    ConstructionExpr expr() {
        ConstructionExpr node;
        node.head = identifier();
        auto atom = kAtoms.find(node.head);
        auto comb = kCombinators.find(node.head);
        if (atom == kAtoms.end() && comb == kCombinators.end())
            throw input_error("parse error at byte " + std::to_string(pos) + ": unknown name '" +
                              node.head + "'");
        if (atom != kAtoms.end()) {
            if (atom->second == 0) {
                // bare atom; optional empty parens
                if (eat('(') && !eat(')')) fail("')'");
                return node;
            }
            if (!eat('(')) fail("'('");
            for (int k = 0; k < atom->second; ++k) {
                if (k && !eat(',')) fail("','");
                node.params.push_back(integer());
            }
            if (!eat(')')) fail("')'");
            return node;
        }
        if (!eat('(')) fail("'('");
        node.args.push_back(expr());
        while (eat(',')) node.args.push_back(expr());
        if (!eat(')')) fail("')'");
        if (static_cast<int>(node.args.size()) < comb->second)
            throw input_error(node.head + " takes at least " + std::to_string(comb->second) +
                              " arguments");
        if (node.head == "complement" && node.args.size() != 1)
            throw input_error("complement takes exactly one argument");
        return node;
    }
};

} // namespace

ConstructionExpr parse_construction(std::string_view text) {
    Parser parser{text};
    ConstructionExpr result = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw input_error("parse error at byte " + std::to_string(parser.pos) +
                          ": trailing input");
    return result;
}

std::string to_string(const ConstructionExpr& expr) {
    std::string out = expr.head;
    if (!expr.params.empty()) {
        out += '(';
        for (std::size_t k = 0; k < expr.params.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(expr.params[k]);
        }
        out += ')';
    } else if (!expr.args.empty()) {
        out += '(';
        for (std::size_t k = 0; k < expr.args.size(); ++k) {
            if (k) out += ',';
            out += to_string(expr.args[k]);
        }
        out += ')';
    }
    return out;
}

namespace {

std::size_t as_size(long long v, const char* what) {
    if (v < 0) throw input_error(std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
}

} // namespace

Graph build_graph(const ConstructionExpr& e) {
    const auto& p = e.params;
    if (e.head == "K") return make_complete(as_size(p[0], "p"));
    if (e.head == "C") return make_cycle(as_size(p[0], "p"));
    if (e.head == "path") return make_path(as_size(p[0], "p"));
    if (e.head == "Q") return make_hypercube(as_size(p[0], "d"));
    if (e.head == "Kpp") return make_complete_bipartite(as_size(p[0], "p"));
    if (e.head == "KppmM")
        return make_complete_bipartite_minus_matchings(as_size(p[0], "p"), as_size(p[1], "s"));
    if (e.head == "KmM") return make_clique_minus_matchings(as_size(p[0], "p"), as_size(p[1], "s"));
    if (e.head == "KmC") return make_clique_minus_cycle(as_size(p[0], "p"));
    if (e.head == "Km2C") return make_clique_minus_two_cycles(as_size(p[0], "p"));
    if (e.head == "Kmulti")
        return make_complete_multipartite(as_size(p[0], "t"), as_size(p[1], "p"));
    if (e.head == "petersen") return make_petersen();
    if (e.head == "sKi") return make_clique_union(as_size(p[0], "s"), as_size(p[1], "i"));
    if (e.head == "hspi")
        return make_hspi_graph(as_size(p[0], "s"), as_size(p[1], "p"), as_size(p[2], "i"));

    std::vector<Graph> built;
    built.reserve(e.args.size());
    for (const auto& arg : e.args) built.push_back(build_graph(arg));
    if (e.head == "complement") return complement(built[0]);
    Graph acc = built[0];
    for (std::size_t k = 1; k < built.size(); ++k) {
        if (e.head == "prod") acc = cartesian_product(acc, built[k]);
        else if (e.head == "join") acc = join(acc, built[k]);
        else if (e.head == "union") acc = disjoint_union(acc, built[k]);
        else throw input_error("unknown construction '" + e.head + "'");
    }
    return acc;
}

Graph graph_from_file_or_expr(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return read_graph_json_file(spec);
    return build_graph(parse_construction(spec));
}

} // namespace eip

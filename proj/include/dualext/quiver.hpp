#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualext/rational.hpp"

namespace dualext {

/// A path in a quiver. Arrows are stored in application order: arrows[0] is
/// applied first. The displayed label reverses this, matching the product
/// convention p = an...a1 (rightmost applied first). A trivial path has an
/// empty arrow sequence and remembers its base vertex.
struct Path {
    std::vector<std::string> arrows;
    std::string base_vertex;  // meaningful only when arrows is empty

    bool trivial() const { return arrows.empty(); }
    std::size_t length() const { return arrows.size(); }

    std::string label() const {
        if (trivial()) return "e_" + base_vertex;
        std::string s;
        for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
            if (!s.empty()) s += ".";
            s += *it;
        }
        return s;
    }

    /// Label tuple in display order (last-applied first), used for canonical
    /// ordering of same-length paths.
    std::vector<std::string> display_tuple() const {
        return {arrows.rbegin(), arrows.rend()};
    }

    bool operator==(const Path& o) const {
        if (arrows != o.arrows) return false;
        return !trivial() || base_vertex == o.base_vertex;
    }
};

/// One relation: a linear combination of parallel paths of equal length >= 2.
struct Relation {
    std::vector<std::pair<Rat, Path>> terms;
};

struct Arrow {
    std::string name;
    std::string source;
    std::string target;
};

struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error with source position.
struct DslParseError : QuiverError {
    int line, column;
    DslParseError(const std::string& msg, int l, int c)
        : QuiverError("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), column(c) {}
};

class Quiver {
public:
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    bool has_vertex(const std::string& v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    const Arrow* find_arrow(const std::string& name) const {
        for (const auto& a : arrows)
            if (a.name == name) return &a;
        return nullptr;
    }

    std::string path_source(const Path& p) const {
        if (p.trivial()) return p.base_vertex;
        return find_arrow(p.arrows.front())->source;
    }

    std::string path_target(const Path& p) const {
        if (p.trivial()) return p.base_vertex;
        return find_arrow(p.arrows.back())->target;
    }

    /// True iff consecutive arrows compose (target of each equals source of the next).
    bool path_composable(const Path& p) const {
        for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
            const Arrow* a = find_arrow(p.arrows[i]);
            const Arrow* b = find_arrow(p.arrows[i + 1]);
            if (!a || !b || a->target != b->source) return false;
        }
        return !p.arrows.empty() || has_vertex(p.base_vertex);
    }

    /// Structural validation of every invariant the DSL promises.
    void validate() const {
        std::set<std::string> vs(vertices.begin(), vertices.end());
        if (vs.size() != vertices.size())
            throw QuiverError("duplicate vertex identifier");
        std::set<std::string> as;
        for (const auto& a : arrows) {
            if (!as.insert(a.name).second)
                throw QuiverError("duplicate arrow name: " + a.name);
            if (!a.name.empty() && a.name.back() == '*')
                throw QuiverError("arrow name may not end with '*': " + a.name);
            if (!has_vertex(a.source))
                throw QuiverError("unknown vertex '" + a.source + "' in arrow " + a.name);
            if (!has_vertex(a.target))
                throw QuiverError("unknown vertex '" + a.target + "' in arrow " + a.name);
        }
        for (const auto& r : relations) validate_relation(r);
    }

    void validate_relation(const Relation& r) const {
        if (r.terms.empty()) throw QuiverError("empty relation");
        std::optional<std::string> s, e;
        std::optional<std::size_t> len;
        for (const auto& [coeff, p] : r.terms) {
            (void)coeff;
            for (const auto& name : p.arrows)
                if (!find_arrow(name))
                    throw QuiverError("unknown arrow '" + name + "' in relation");
            if (!path_composable(p))
                throw QuiverError("non-composable path in relation: " + p.label());
            if (p.length() < 2)
                throw QuiverError("relation path shorter than 2: " + p.label());
            if (len && p.length() != *len)
                throw QuiverError("relation mixes path lengths (relations must be homogeneous)");
            len = p.length();
            if (s && (path_source(p) != *s || path_target(p) != *e))
                throw QuiverError("relation paths are not parallel");
            s = path_source(p);
            e = path_target(p);
        }
    }
};

// ---------------------------------------------------------------------------
// DSL parser
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_' || src_[pos_] == '*')) {
                s += get();
            }
            tok_ = {Token::Ident, s, tok_.line, tok_.column};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                s += get();
            tok_ = {Token::Number, s, tok_.line, tok_.column};
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            get();
            get();
            tok_ = {Token::Punct, "->", tok_.line, tok_.column};
        } else {
            tok_ = {Token::Punct, std::string(1, get()), tok_.line, tok_.column};
        }
    }

    void skip_ws() {
        for (;;) {
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
                get();
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') get();
                continue;
            }
            break;
        }
    }

    char get() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    std::string src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Quiver parse() {
        expect_ident("quiver");
        expect_punct("{");
        Quiver q;
        parse_vertices(q);
        if (peek_is_ident("arrows")) parse_arrows(q);
        if (peek_is_ident("relations")) parse_relations(q);
        expect_punct("}");
        if (lex_.peek().kind != Token::End) fail("trailing input after quiver block");
        q.validate();
        return q;
    }

private:
    void parse_vertices(Quiver& q) {
        expect_ident("vertices");
        expect_punct(":");
        q.vertices.push_back(name());
        while (peek_is_punct(",")) {
            lex_.next();
            q.vertices.push_back(name());
        }
        expect_punct(";");
    }

    void parse_arrows(Quiver& q) {
        expect_ident("arrows");
        expect_punct(":");
        while (lex_.peek().kind == Token::Ident && lex_.peek().text != "relations") {
            Arrow a;
            a.name = lex_.next().text;
            expect_punct(":");
            a.source = name();
            expect_punct("->");
            a.target = name();
            expect_punct(";");
            q.arrows.push_back(a);
        }
    }

    void parse_relations(Quiver& q) {
        expect_ident("relations");
        expect_punct(":");
        while (lex_.peek().kind == Token::Ident || lex_.peek().kind == Token::Number ||
               peek_is_punct("-")) {
            q.relations.push_back(parse_relexpr());
            expect_punct(";");
        }
    }

    Relation parse_relexpr() {
        Relation r;
        Rat sign = 1;
        if (peek_is_punct("-")) {
            lex_.next();
            sign = -1;
        }
        r.terms.push_back(parse_term(sign));
        while (peek_is_punct("+") || peek_is_punct("-")) {
            sign = lex_.next().text == "+" ? 1 : -1;
            r.terms.push_back(parse_term(sign));
        }
        return r;
    }

    std::pair<Rat, Path> parse_term(const Rat& sign) {
        Rat coeff = 1;
        if (lex_.peek().kind == Token::Number) {
            coeff = parse_rational();
            expect_punct("*");
        }
        Path p;
        p.arrows.push_back(ident());
        while (peek_is_punct(".")) {
            lex_.next();
            p.arrows.push_back(ident());
        }
        // pathexpr lists arrows last-applied first; storage is application order
        std::reverse(p.arrows.begin(), p.arrows.end());
        return {sign * coeff, p};
    }

    Rat parse_rational() {
        std::string num = lex_.next().text;
        if (peek_is_punct("/")) {
            lex_.next();
            if (lex_.peek().kind != Token::Number) fail("expected denominator");
            return rat_from_string(num + "/" + lex_.next().text);
        }
        return rat_from_string(num);
    }

    std::string name() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Ident && t.kind != Token::Number)
            fail("expected identifier");
        return lex_.next().text;
    }

    std::string ident() {
        if (lex_.peek().kind != Token::Ident) fail("expected arrow name");
        return lex_.next().text;
    }

    bool peek_is_punct(const std::string& s) const {
        return lex_.peek().kind == Token::Punct && lex_.peek().text == s;
    }
    bool peek_is_ident(const std::string& s) const {
        return lex_.peek().kind == Token::Ident && lex_.peek().text == s;
    }
    void expect_punct(const std::string& s) {
        if (!peek_is_punct(s)) fail("expected '" + s + "'");
        lex_.next();
    }
    void expect_ident(const std::string& s) {
        if (!peek_is_ident(s)) fail("expected keyword '" + s + "'");
        lex_.next();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = lex_.peek();
        std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
        throw DslParseError(msg + ", got " + got, t.line, t.column);
    }

    Lexer lex_;
};

}  // namespace detail

inline Quiver parse_quiver(const std::string& text) {
    return detail::Parser(text).parse();
}

/// Emit canonical DSL text; parse(print(q)) reproduces q.
inline std::string print_quiver(const Quiver& q) {
    std::ostringstream os;
    os << "quiver {\n  vertices: ";
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        os << (i ? ", " : "") << q.vertices[i];
    os << ";\n  arrows:\n";
    for (const auto& a : q.arrows)
        os << "    " << a.name << ": " << a.source << " -> " << a.target << ";\n";
    if (!q.relations.empty()) {
        os << "  relations:\n";
        for (const auto& r : q.relations) {
            os << "    ";
            bool first = true;
            for (const auto& [c, p] : r.terms) {
                Rat a = c < 0 ? Rat(-c) : c;
                if (c < 0)
                    os << (first ? "-" : " - ");
                else if (!first)
                    os << " + ";
                if (a != 1) os << rat_to_string(a) << " * ";
                os << p.label();
                first = false;
            }
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

/// True iff the arrow digraph has no directed cycle.
inline bool validate_acyclic(const Quiver& q) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& a : q.arrows) adj[a.source].push_back(a.target);
    std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
    // iterative DFS
    for (const auto& v : q.vertices) {
        if (state[v]) continue;
        std::vector<std::pair<std::string, std::size_t>> stack{{v, 0}};
        state[v] = 1;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            auto& out = adj[u];
            if (idx < out.size()) {
                const std::string& w = out[idx++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

/// Doubled quiver: original arrows plus a reverse starred partner for each.
/// Relations are not copied; the algebra builders attach their own sets.
inline Quiver double_quiver(const Quiver& q) {
    if (!validate_acyclic(q))
        throw QuiverError("double_quiver requires an acyclic quiver");
    Quiver d;
    d.vertices = q.vertices;
    d.arrows = q.arrows;
    for (const auto& a : q.arrows)
        d.arrows.push_back({a.name + "*", a.target, a.source});
    return d;
}

/// All paths of length <= max_len in canonical order: graded by length,
/// trivial paths in vertex declaration order, then lexicographic by the
/// displayed arrow-name tuple.
inline std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
    std::vector<Path> result;
    std::vector<Path> current;
    for (const auto& v : q.vertices) {
        Path p;
        p.base_vertex = v;
        current.push_back(p);
        result.push_back(p);
    }
    for (std::size_t len = 1; len <= max_len && !current.empty(); ++len) {
        std::vector<Path> next;
        for (const auto& p : current) {
            const std::string end = q.path_target(p);
            for (const auto& a : q.arrows) {
                if (a.source != end) continue;
                Path e = p;
                e.arrows.push_back(a.name);
                next.push_back(std::move(e));
            }
        }
        std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) {
            return x.display_tuple() < y.display_tuple();
        });
        result.insert(result.end(), next.begin(), next.end());
        current = std::move(next);
    }
    return result;
}

/// Length of the longest path; quiver must be acyclic.
inline std::size_t longest_path_length(const Quiver& q) {
    if (!validate_acyclic(q)) throw QuiverError("longest path undefined on cyclic quiver");
    std::size_t best = 0;
    std::map<std::string, std::size_t> depth;
    // relax |V| times; acyclic so this converges
    for (std::size_t round = 0; round <= q.vertices.size(); ++round)
        for (const auto& a : q.arrows)
            depth[a.target] = std::max(depth[a.target], depth[a.source] + 1);
    for (const auto& [v, d] : depth) {
        (void)v;
        best = std::max(best, d);
    }
    return best;
}

/// Connectivity of the underlying undirected graph.
inline bool is_connected(const Quiver& q) {
    if (q.vertices.empty()) return true;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& a : q.arrows) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::set<std::string> seen{q.vertices.front()};
    std::vector<std::string> stack{q.vertices.front()};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == q.vertices.size();
}

/// Vertices with no incoming arrow.
inline std::vector<std::string> source_vertices(const Quiver& q) {
    std::vector<std::string> out;
    for (const auto& v : q.vertices) {
        bool incoming = false;
        for (const auto& a : q.arrows)
            if (a.target == v) incoming = true;
        if (!incoming) out.push_back(v);
    }
    return out;
}

}  // namespace dualext

#include "gradal/dsl.hpp"

#include "gradal/error.hpp"

#include <cctype>

namespace gradal::dsl {

std::string Span::to_string() const { return std::to_string(line) + ":" + std::to_string(col); }

namespace {

Span advance(Span s, char c)
{
    if (c == '\n') {
        ++s.line;
        s.col = 1;
    } else {
        ++s.col;
    }
    return s;
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void type_error(const Span &a, const Span &b, const std::string &what)
{
    fail(ErrorKind::TypeError, "type error at " + a.to_string() + " and " + b.to_string() + ": " + what);
}

[[noreturn]] void type_error(const Span &a, const std::string &what)
{
    fail(ErrorKind::TypeError, a.to_string() + ": " + what);
}

class Cursor {
  public:
    explicit Cursor(std::string_view text, Span start = {}) : text_(text), span_(start) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && is_space(text_[pos_]))
            step();
    }

    Span here()
    {
        skip_ws();
        return span_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool looking_at(std::string_view tok)
    {
        skip_ws();
        return text_.substr(pos_, tok.size()) == tok;
    }

    bool accept(std::string_view tok)
    {
        if (!looking_at(tok))
            return false;
        for (std::size_t i = 0; i < tok.size(); ++i)
            step();
        return true;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            error("expected '" + std::string(tok) + "'" + found());
    }

    std::string identifier()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_]))
            step();
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
            error("expected a name" + found());
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Peeks the identifier at the cursor without consuming it.
    std::string peek_identifier()
    {
        skip_ws();
        std::size_t end = pos_;
        while (end < text_.size() && is_ident_char(text_[end]))
            ++end;
        return std::string(text_.substr(pos_, end - pos_));
    }

    Int natural()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            step();
        if (start == pos_)
            error("expected a number" + found());
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    Int integer()
    {
        if (accept("-"))
            return -natural();
        accept("+");
        return natural();
    }

    void expect_end()
    {
        if (!at_end())
            error("unexpected trailing input" + found());
    }

    std::string_view rest()
    {
        skip_ws();
        return text_.substr(pos_);
    }

    [[noreturn]] void error(const std::string &what)
    {
        fail(ErrorKind::ParseError, span_.to_string() + ": " + what);
    }

  private:
    void step()
    {
        span_ = advance(span_, text_[pos_]);
        ++pos_;
    }

    std::string found()
    {
        if (pos_ >= text_.size())
            return " but reached end of input";
        return std::string(" but found '") + text_[pos_] + "'";
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Span span_;
};

GroupAst group_of(Cursor &c)
{
    GroupAst g;
    g.span = c.here();
    do {
        if (c.accept("0"))
            continue;
        if (!c.accept("Z"))
            c.error("expected a group factor 'Z', 'Z^r', 'Z/d' or '0'");
        if (c.accept("/")) {
            const Int d = c.natural();
            if (d < 1)
                c.error("cyclic order must be positive");
            g.factors.push_back(GroupFactor{false, d});
        } else if (c.accept("^")) {
            g.factors.push_back(GroupFactor{true, c.natural()});
        } else {
            g.factors.push_back(GroupFactor{true, Int(1)});
        }
    } while (c.accept("x"));
    return g;
}

HomAst hom_of(Cursor &c)
{
    HomAst h;
    h.span = c.here();
    c.expect("[");
    if (!c.accept("]")) {
        do {
            std::vector<Int> row;
            c.expect("[");
            if (!c.accept("]")) {
                do
                    row.push_back(c.integer());
                while (c.accept(","));
                c.expect("]");
            }
            if (!h.rows.empty() && row.size() != h.rows.front().size())
                c.error("matrix rows have different lengths");
            h.rows.push_back(std::move(row));
        } while (c.accept(","));
        c.expect("]");
    }
    if (c.accept(":")) {
        h.domain = group_of(c);
        c.expect("->");
        h.codomain = group_of(c);
    }
    return h;
}

RingAstPtr ring_of(Cursor &c);

RingAstPtr primary_of(Cursor &c)
{
    const Span span = c.here();
    auto make = [&](auto n) { return std::make_shared<const RingAst>(RingAst{std::move(n), span}); };
    if (c.accept("(")) {
        RingAstPtr r = ring_of(c);
        c.expect(")");
        return r;
    }
    const std::string id = c.identifier();
    if (id == "Z")
        return make(node::BaseRing{Base::Z});
    if (id == "Q")
        return make(node::BaseRing{Base::Q});
    if (id == "Frac") {
        c.expect("(");
        RingAstPtr inner = ring_of(c);
        c.expect(")");
        return make(node::Frac{std::move(inner)});
    }
    if (id == "coarsen" || id == "restrict" || id == "extend") {
        c.expect("(");
        RingAstPtr inner = ring_of(c);
        c.expect(",");
        HomAst h = hom_of(c);
        c.expect(")");
        if (id == "coarsen")
            return make(node::Coarsen{std::move(inner), std::move(h)});
        if (id == "restrict")
            return make(node::Restrict{std::move(inner), std::move(h)});
        return make(node::Extend{std::move(inner), std::move(h)});
    }
    if (c.peek() == '(')
        fail(ErrorKind::ParseError, span.to_string() + ": unknown ring constructor '" + id + "'");
    return make(node::Name{id});
}

RingAstPtr ring_of(Cursor &c)
{
    RingAstPtr r = primary_of(c);
    while (c.accept("[")) {
        GroupAst g = group_of(c);
        c.expect("]");
        const std::string mode = c.peek_identifier();
        if (mode != "fine" && mode != "coarse")
            c.error("expected 'fine' or 'coarse' after a group algebra");
        c.identifier();
        const Span span = r->span;
        r = std::make_shared<const RingAst>(
            RingAst{node::GroupAlgebra{std::move(r), std::move(g), mode == "fine"}, span});
    }
    return r;
}

IntVec tuple_of(Cursor &c)
{
    IntVec v;
    c.expect("(");
    if (!c.accept(")")) {
        do
            v.push_back(c.integer());
        while (c.accept(","));
        c.expect(")");
    }
    return v;
}

TermAst term_of(Cursor &c)
{
    TermAst t{Rat(1), std::nullopt};
    if (c.accept("e")) {
        t.exponent = tuple_of(c);
        return t;
    }
    Int num = c.natural();
    Int den(1);
    if (c.accept("/")) {
        den = c.natural();
        if (den == 0)
            c.error("zero denominator");
    }
    t.coefficient = make_rat(num, den);
    if (c.accept("*")) {
        c.expect("e");
        t.exponent = tuple_of(c);
    }
    return t;
}

ElemAst elem_of(Cursor &c)
{
    ElemAst e;
    e.span = c.here();
    bool negative = c.accept("-");
    if (!negative)
        c.accept("+");
    for (;;) {
        TermAst t = term_of(c);
        if (negative)
            t.coefficient = -t.coefficient;
        e.terms.push_back(std::move(t));
        if (c.accept("+"))
            negative = false;
        else if (c.accept("-"))
            negative = true;
        else
            break;
    }
    return e;
}

bool starts_elem(Cursor &c)
{
    const char ch = c.peek();
    return ch == '+' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch)) ||
           c.looking_at("e(");
}

Value value_of(Cursor &c)
{
    if (c.peek() == '[')
        return hom_of(c);
    if (starts_elem(c))
        return elem_of(c);
    return ring_of(c);
}

template <typename F> auto parse_all(std::string_view text, Span start, F &&f)
{
    Cursor c(text, start);
    auto result = f(c);
    c.expect_end();
    return result;
}

struct Piece {
    std::string text;
    Span span;
};

// Splits a script into statements at newlines and ';' outside quotes, dropping
// '#' comments.
std::vector<Piece> split_statements(std::string_view text)
{
    std::vector<Piece> pieces;
    Piece cur;
    Span pos;
    bool started = false, quoted = false, comment = false;
    auto flush = [&] {
        if (started)
            pieces.push_back(cur);
        cur = Piece{};
        started = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        const Span at = pos;
        pos = advance(pos, ch);
        if (comment) {
            if (ch == '\n') {
                comment = false;
                if (quoted)
                    fail(ErrorKind::ParseError, at.to_string() + ": unterminated string");
                flush();
            }
            continue;
        }
        if (!quoted && (ch == '\n' || ch == ';')) {
            flush();
            continue;
        }
        if (!quoted && ch == '#') {
            comment = true;
            continue;
        }
        if (ch == '\n')
            fail(ErrorKind::ParseError, at.to_string() + ": unterminated string");
        if (!started) {
            if (is_space(ch))
                continue;
            started = true;
            cur.span = at;
        }
        cur.text += ch;
        if (quoted && ch == '\\' && i + 1 < text.size()) {
            cur.text += text[++i];
            pos = advance(pos, text[i]);
        } else if (ch == '"') {
            quoted = !quoted;
        }
    }
    if (quoted)
        fail(ErrorKind::ParseError, pos.to_string() + ": unterminated string");
    flush();
    return pieces;
}

struct Token {
    std::string text;
    bool quoted = false;
};

std::vector<Token> tokenize(const Piece &piece)
{
    std::vector<Token> tokens;
    Token cur;
    bool in_token = false, quoted = false;
    int depth = 0;
    Span pos = piece.span;
    const std::string &s = piece.text;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        const Span at = pos;
        pos = advance(pos, ch);
        if (quoted) {
            if (ch == '\\' && i + 1 < s.size()) {
                cur.text += s[++i];
                pos = advance(pos, s[i]);
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur.text += ch;
            }
            continue;
        }
        if (is_space(ch) && depth == 0) {
            if (in_token)
                tokens.push_back(std::move(cur));
            cur = Token{};
            in_token = false;
            continue;
        }
        if (ch == '"') {
            if (!in_token)
                cur.quoted = true;
            quoted = true;
        } else {
            if (ch == '[' || ch == '(')
                ++depth;
            else if (ch == ']' || ch == ')') {
                if (--depth < 0)
                    fail(ErrorKind::ParseError, at.to_string() + ": unbalanced '" + ch + "'");
            }
            cur.text += ch;
        }
        in_token = true;
    }
    if (depth != 0)
        fail(ErrorKind::ParseError, pos.to_string() + ": unbalanced brackets");
    if (in_token)
        tokens.push_back(std::move(cur));
    return tokens;
}

bool is_flag(const Token &t) { return !t.quoted && t.text.size() > 2 && t.text.starts_with("--"); }

CommandStmt command_of(const Piece &piece)
{
    const std::vector<Token> tokens = tokenize(piece);
    CommandStmt cmd;
    cmd.span = piece.span;
    cmd.name = tokens.front().text;
    if (tokens.front().quoted || is_flag(tokens.front()))
        fail(ErrorKind::ParseError, piece.span.to_string() + ": expected a command name");
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!is_flag(tokens[i])) {
            cmd.args.push_back(tokens[i].text);
            continue;
        }
        std::string key = tokens[i].text.substr(2), value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.resize(eq);
        } else if (i + 1 < tokens.size() && !is_flag(tokens[i + 1])) {
            value = tokens[++i].text;
        }
        cmd.flags.emplace_back(std::move(key), std::move(value));
    }
    return cmd;
}

Statement statement_of(const Piece &piece)
{
    Cursor c(piece.text, piece.span);
    if (c.peek_identifier() == "let") {
        c.identifier();
        LetStmt let;
        let.span = piece.span;
        let.name = c.identifier();
        c.expect("=");
        let.value = value_of(c);
        c.expect_end();
        return let;
    }
    return command_of(piece);
}

std::string quote_if_needed(const std::string &s)
{
    bool plain = !s.empty() && !s.starts_with("--");
    for (const char ch : s)
        if (is_space(ch) || ch == '"' || ch == ';' || ch == '#' || ch == '\\')
            plain = false;
    if (plain)
        return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

template <typename T, typename... Ts>
bool same_alternative(const std::variant<Ts...> &a, const std::variant<Ts...> &b, const T &cmp)
{
    if (a.index() != b.index())
        return false;
    return std::visit(
        [&](const auto &x) {
            using X = std::decay_t<decltype(x)>;
            return cmp(x, std::get<X>(b));
        },
        a);
}

} // namespace

bool operator==(const RingAst &a, const RingAst &b)
{
    return same_alternative(a.node, b.node, [](const auto &x, const auto &y) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, node::BaseRing> || std::is_same_v<X, node::Name>)
            return x == y;
        else if constexpr (std::is_same_v<X, node::GroupAlgebra>)
            return *x.inner == *y.inner && x.group == y.group && x.fine == y.fine;
        else if constexpr (std::is_same_v<X, node::Coarsen>)
            return *x.inner == *y.inner && x.psi == y.psi;
        else if constexpr (std::is_same_v<X, node::Frac>)
            return *x.inner == *y.inner;
        else
            return *x.inner == *y.inner && x.inclusion == y.inclusion;
    });
}

bool operator==(const Value &a, const Value &b)
{
    return same_alternative(a, b, [](const auto &x, const auto &y) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, RingAstPtr>)
            return *x == *y;
        else
            return x == y;
    });
}

bool operator==(const LetStmt &a, const LetStmt &b) { return a.name == b.name && a.value == b.value; }

bool operator==(const Script &a, const Script &b)
{
    if (a.statements.size() != b.statements.size())
        return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!same_alternative(a.statements[i], b.statements[i],
                              [](const auto &x, const auto &y) { return x == y; }))
            return false;
    return true;
}

GroupAst parse_group(std::string_view text) { return parse_all(text, {}, group_of); }
HomAst parse_hom(std::string_view text) { return parse_all(text, {}, hom_of); }
RingAstPtr parse_ring(std::string_view text) { return parse_all(text, {}, ring_of); }
ElemAst parse_elem(std::string_view text) { return parse_all(text, {}, elem_of); }
Value parse_value(std::string_view text) { return parse_all(text, {}, value_of); }

Script parse(std::string_view text)
{
    Script s;
    for (const Piece &p : split_statements(text))
        s.statements.push_back(statement_of(p));
    return s;
}

std::string print(const GroupAst &g)
{
    if (g.factors.empty())
        return "0";
    std::string out;
    for (const auto &f : g.factors) {
        if (!out.empty())
            out += " x ";
        if (!f.free)
            out += "Z/" + to_string(f.n);
        else if (f.n == 1)
            out += "Z";
        else
            out += "Z^" + to_string(f.n);
    }
    return out;
}

std::string print(const HomAst &h)
{
    std::string out = "[";
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < h.rows[i].size(); ++j)
            out += (j ? "," : "") + to_string(h.rows[i][j]);
        out += "]";
    }
    out += "]";
    if (h.domain)
        out += " : " + print(*h.domain) + " -> " + print(*h.codomain);
    return out;
}

std::string print(const RingAst &r)
{
    return std::visit(
        [](const auto &n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, node::BaseRing>)
                return n.base == Base::Z ? "Z" : "Q";
            else if constexpr (std::is_same_v<N, node::GroupAlgebra>)
                return print(*n.inner) + "[" + print(n.group) + "]" + (n.fine ? "fine" : "coarse");
            else if constexpr (std::is_same_v<N, node::Coarsen>)
                return "coarsen(" + print(*n.inner) + ", " + print(n.psi) + ")";
            else if constexpr (std::is_same_v<N, node::Restrict>)
                return "restrict(" + print(*n.inner) + ", " + print(n.inclusion) + ")";
            else if constexpr (std::is_same_v<N, node::Extend>)
                return "extend(" + print(*n.inner) + ", " + print(n.inclusion) + ")";
            else if constexpr (std::is_same_v<N, node::Frac>)
                return "Frac(" + print(*n.inner) + ")";
            else
                return n.name;
        },
        r.node);
}

std::string print(const ElemAst &e)
{
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const TermAst &t = e.terms[i];
        const bool negative = t.coefficient < 0;
        const Rat a = abs(t.coefficient);
        out += negative ? "-" : (i ? "+" : "");
        if (!t.exponent) {
            out += to_string(a);
            continue;
        }
        if (a != 1)
            out += to_string(a) + "*";
        out += "e(";
        for (std::size_t j = 0; j < t.exponent->size(); ++j)
            out += (j ? "," : "") + to_string((*t.exponent)[j]);
        out += ")";
    }
    return out;
}

std::string print(const Value &v)
{
    return std::visit(
        [](const auto &x) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, RingAstPtr>)
                return print(*x);
            else
                return print(x);
        },
        v);
}

std::string print(const Script &s)
{
    std::string out;
    for (const auto &st : s.statements) {
        if (const auto *let = std::get_if<LetStmt>(&st)) {
            out += "let " + let->name + " = " + print(let->value) + "\n";
            continue;
        }
        const auto &cmd = std::get<CommandStmt>(st);
        out += cmd.name;
        for (const auto &a : cmd.args)
            out += " " + quote_if_needed(a);
        for (const auto &[k, v] : cmd.flags)
            out += " --" + k + (v.empty() ? "" : "=" + quote_if_needed(v));
        out += "\n";
    }
    return out;
}

const Environment::Binding *Environment::find(const std::string &name) const
{
    const auto it = values_.find(name);
    return it == values_.end() ? nullptr : &it->second;
}

FgGroup eval_group(const GroupAst &g)
{
    std::vector<Int> orders;
    for (const auto &f : g.factors) {
        if (!f.free) {
            orders.push_back(f.n);
            continue;
        }
        if (f.n > 64)
            type_error(g.span, "rank " + to_string(f.n) + " is too large");
        for (unsigned long i = 0; i < f.n.get_ui(); ++i)
            orders.push_back(Int(0));
    }
    return present_cyclic(orders).group;
}

namespace {

struct Expected {
    std::optional<FgGroup> group;
    Span span;
};

FgGroup side(const std::optional<GroupAst> &annotation, const Expected &expected,
             std::size_t fallback, const char *role)
{
    if (annotation) {
        FgGroup g = eval_group(*annotation);
        if (expected.group && g != *expected.group)
            type_error(annotation->span, expected.span,
                       std::string("hom ") + role + " " + g.to_string() + " does not match " +
                           expected.group->to_string());
        return g;
    }
    return expected.group ? *expected.group : FgGroup::free(fallback);
}

GroupHom hom_value(const HomAst &h, const Expected &dom, const Expected &cod)
{
    const std::size_t rows = h.rows.size();
    const std::size_t cols = rows ? h.rows.front().size() : 0;
    const FgGroup D = side(h.domain, dom, cols, "domain");
    const FgGroup C = side(h.codomain, cod, rows, "codomain");
    if (rows != C.dim() || (rows > 0 && cols != D.dim())) {
        const Span other = h.domain ? h.domain->span : (dom.group ? dom.span : cod.span);
        type_error(h.span, other,
                   std::to_string(rows) + "x" + std::to_string(cols) +
                       " matrix does not fit a hom " + D.to_string() + " -> " + C.to_string());
    }
    IntMatrix M(C.dim(), D.dim());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            M(i, j) = h.rows[i][j];
    return GroupHom(D, C, M);
}

const Environment::Binding &lookup(const std::string &name, const Span &span, const Environment &env)
{
    const auto *b = env.find(name);
    if (!b)
        type_error(span, "unbound name '" + name + "'");
    return *b;
}

} // namespace

GroupHom eval_hom(const HomAst &h, const std::optional<FgGroup> &domain,
                  const std::optional<FgGroup> &codomain)
{
    return hom_value(h, {domain, h.span}, {codomain, h.span});
}

EvaluatedRing eval_ring(const RingAst &r, const Environment &env)
{
    return std::visit(
        [&](const auto &n) -> EvaluatedRing {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, node::BaseRing>) {
                return {make_expr(expr::BaseRing{n.base}), NormalForm::base_ring(n.base)};
            } else if constexpr (std::is_same_v<N, node::GroupAlgebra>) {
                const EvaluatedRing in = eval_ring(*n.inner, env);
                const FgGroup F = eval_group(n.group);
                if (n.fine)
                    return {make_expr(expr::FineGroupAlgebra{in.expr, F}),
                            group_algebra(in.nf, F, GroupAlgebraMode::Fine)};
                return {make_expr(expr::CoarseGroupAlgebra{in.expr, F}),
                        group_algebra(in.nf, F, GroupAlgebraMode::Coarse)};
            } else if constexpr (std::is_same_v<N, node::Coarsen>) {
                const EvaluatedRing in = eval_ring(*n.inner, env);
                const GroupHom psi = hom_value(n.psi, {in.nf.G(), n.inner->span}, {std::nullopt, n.psi.span});
                return {make_expr(expr::Coarsen{in.expr, psi}), coarsen(in.nf, psi)};
            } else if constexpr (std::is_same_v<N, node::Restrict>) {
                const EvaluatedRing in = eval_ring(*n.inner, env);
                const FgGroup &G = in.nf.G();
                const GroupHom inc = hom_value(n.inclusion, {std::nullopt, n.inclusion.span},
                                               {G, n.inner->span});
                std::vector<GroupElem> gens;
                for (std::size_t j = 0; j < inc.domain().dim(); ++j)
                    gens.push_back(inc(inc.domain().generator(j)));
                return {make_expr(expr::Restrict{in.expr, gens}),
                        restrict(in.nf, subgroup_generated_by(G, gens))};
            } else if constexpr (std::is_same_v<N, node::Extend>) {
                const EvaluatedRing in = eval_ring(*n.inner, env);
                const GroupHom inc = hom_value(n.inclusion, {in.nf.G(), n.inner->span},
                                               {std::nullopt, n.inclusion.span});
                return {make_expr(expr::Extend{in.expr, inc}), extend(in.nf, inc)};
            } else if constexpr (std::is_same_v<N, node::Frac>) {
                const EvaluatedRing in = eval_ring(*n.inner, env);
                return {make_expr(expr::FractionField{in.expr}), fraction_field(in.nf)};
            } else {
                const auto &b = lookup(n.name, r.span, env);
                if (!b.ring)
                    type_error(r.span, "'" + n.name + "' is not a ring");
                return *b.ring;
            }
        },
        r.node);
}

Element eval_elem(const ElemAst &e, const RingPtr &R)
{
    Element x(R);
    for (const auto &t : e.terms) {
        if (!t.exponent) {
            x = x + Element::constant(R, t.coefficient);
            continue;
        }
        if (t.exponent->size() != R->E().dim())
            type_error(e.span, "exponent " + to_string(*t.exponent) + " is not an element of " +
                                   R->E().to_string());
        x = x + Element::monomial(R, R->E().element(*t.exponent), t.coefficient);
    }
    return x;
}

namespace {

bool is_name(std::string_view text)
{
    Cursor c(text);
    const std::string id = c.peek_identifier();
    return !id.empty() && !std::isdigit(static_cast<unsigned char>(id.front())) &&
           c.identifier() == id && c.at_end();
}

std::string trimmed(std::string_view text)
{
    Cursor c(text);
    std::string s(c.rest());
    while (!s.empty() && is_space(s.back()))
        s.pop_back();
    return s;
}

} // namespace

EvaluatedRing ring_argument(std::string_view text, const Environment &env)
{
    return eval_ring(*parse_ring(text), env);
}

Element elem_argument(std::string_view text, const Environment &env, const RingPtr &R)
{
    if (is_name(text)) {
        const std::string name = trimmed(text);
        const auto &b = lookup(name, Span{}, env);
        const auto *e = std::get_if<ElemAst>(&b.value);
        if (!e)
            type_error(Span{}, "'" + name + "' is not an element");
        return eval_elem(*e, R);
    }
    return eval_elem(parse_elem(text), R);
}

HomAst hom_argument(std::string_view text, const Environment &env)
{
    if (is_name(text)) {
        const std::string name = trimmed(text);
        const auto &b = lookup(name, Span{}, env);
        const auto *h = std::get_if<HomAst>(&b.value);
        if (!h)
            type_error(Span{}, "'" + name + "' is not a hom");
        return *h;
    }
    return parse_hom(text);
}

} // namespace gradal::dsl

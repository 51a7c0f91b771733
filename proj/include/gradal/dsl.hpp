#pragma once

#include "gradal/element.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gradal::dsl {

/// 1-based source position.
struct Span {
    unsigned line = 1;
    unsigned col = 1;

    std::string to_string() const;
};

/// `Z^r`, `Z` or `Z/d`; the zero group `0` has no factors.
struct GroupFactor {
    bool free = true;
    Int n; // rank for free factors, order otherwise

    friend bool operator==(const GroupFactor &, const GroupFactor &) = default;
};

struct GroupAst {
    std::vector<GroupFactor> factors;
    Span span;

    friend bool operator==(const GroupAst &a, const GroupAst &b) { return a.factors == b.factors; }
};

/// Matrix literal `[[a,b],[c,d]]`, optionally annotated `: G -> H`.
struct HomAst {
    std::vector<std::vector<Int>> rows;
    std::optional<GroupAst> domain, codomain;
    Span span;

    friend bool operator==(const HomAst &a, const HomAst &b)
    {
        return a.rows == b.rows && a.domain == b.domain && a.codomain == b.codomain;
    }
};

struct RingAst;
using RingAstPtr = std::shared_ptr<const RingAst>;

namespace node {
struct BaseRing {
    Base base;
    friend bool operator==(const BaseRing &, const BaseRing &) = default;
};
struct GroupAlgebra {
    RingAstPtr inner;
    GroupAst group;
    bool fine = true;
};
struct Coarsen {
    RingAstPtr inner;
    HomAst psi;
};
/// Restriction to the image of an injective hom into the grading group.
struct Restrict {
    RingAstPtr inner;
    HomAst inclusion;
};
struct Extend {
    RingAstPtr inner;
    HomAst inclusion;
};
struct Frac {
    RingAstPtr inner;
};
struct Name {
    std::string name;
    friend bool operator==(const Name &, const Name &) = default;
};
} // namespace node

struct RingAst {
    std::variant<node::BaseRing, node::GroupAlgebra, node::Coarsen, node::Restrict, node::Extend,
                 node::Frac, node::Name>
        node;
    Span span;
};

bool operator==(const RingAst &a, const RingAst &b);

/// `c*e(f)`; a bare rational is a constant and has no exponent.
struct TermAst {
    Rat coefficient;
    std::optional<IntVec> exponent;

    friend bool operator==(const TermAst &, const TermAst &) = default;
};

struct ElemAst {
    std::vector<TermAst> terms;
    Span span;

    friend bool operator==(const ElemAst &a, const ElemAst &b) { return a.terms == b.terms; }
};

using Value = std::variant<RingAstPtr, ElemAst, HomAst>;

bool operator==(const Value &a, const Value &b);

struct LetStmt {
    std::string name;
    Value value;
    Span span;
};

struct CommandStmt {
    std::string name;
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> flags;
    Span span;

    friend bool operator==(const CommandStmt &a, const CommandStmt &b)
    {
        return a.name == b.name && a.args == b.args && a.flags == b.flags;
    }
};

using Statement = std::variant<LetStmt, CommandStmt>;

struct Script {
    std::vector<Statement> statements;
};

bool operator==(const LetStmt &a, const LetStmt &b);
bool operator==(const Script &a, const Script &b);

// Parsers throw ParseError with "line:col" positions.
GroupAst parse_group(std::string_view text);
HomAst parse_hom(std::string_view text);
RingAstPtr parse_ring(std::string_view text);
ElemAst parse_elem(std::string_view text);
/// Let-bound value: a hom starts with '[', an element with a sign, digit or
/// `e(`; anything else is a ring.
Value parse_value(std::string_view text);
/// Statements are separated by newlines or ';'; '#' starts a comment.
Script parse(std::string_view text);

std::string print(const GroupAst &g);
std::string print(const HomAst &h);
std::string print(const RingAst &r);
std::string print(const ElemAst &e);
std::string print(const Value &v);
std::string print(const Script &s);

struct EvaluatedRing {
    RingExprPtr expr;
    NormalForm nf;
};

/// Let-bindings of a script. Rings are evaluated when bound, so a binding
/// never refers to a later one.
class Environment {
  public:
    struct Binding {
        Value value;
        std::optional<EvaluatedRing> ring;
    };

    void bind(const std::string &name, Value v, std::optional<EvaluatedRing> ring = std::nullopt)
    {
        values_[name] = Binding{std::move(v), std::move(ring)};
    }
    const Binding *find(const std::string &name) const;

  private:
    std::map<std::string, Binding> values_;
};

FgGroup eval_group(const GroupAst &g);
/// Missing annotations are filled from `domain` / `codomain` when given and
/// otherwise default to free groups of the matrix size. Throws TypeError.
GroupHom eval_hom(const HomAst &h, const std::optional<FgGroup> &domain = std::nullopt,
                  const std::optional<FgGroup> &codomain = std::nullopt);
EvaluatedRing eval_ring(const RingAst &r, const Environment &env);
/// Exponent tuples must match the element group of R. Throws TypeError.
Element eval_elem(const ElemAst &e, const RingPtr &R);

/// Ring argument: a bound name or a ring expression.
EvaluatedRing ring_argument(std::string_view text, const Environment &env);
/// Element argument in R: a bound name or an element expression.
Element elem_argument(std::string_view text, const Environment &env, const RingPtr &R);
/// Hom argument: a bound name or a matrix literal.
HomAst hom_argument(std::string_view text, const Environment &env);

} // namespace gradal::dsl

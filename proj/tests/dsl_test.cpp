#include "gradal/closure.hpp"
#include "gradal/dsl.hpp"
#include "gradal/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gradal;
using namespace gradal::dsl;

namespace {

ErrorKind kind_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

std::string message_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.what();
    }
    return {};
}

GroupAst random_group_ast(std::mt19937_64 &rng)
{
    GroupAst g;
    for (int i = static_cast<int>(rng() % 3); i > 0; --i)
        g.factors.push_back(GroupFactor{rng() % 2 == 0, Int(static_cast<long>(rng() % 4) + 1)});
    return g;
}

HomAst random_hom_ast(std::mt19937_64 &rng)
{
    HomAst h;
    const std::size_t rows = rng() % 3, cols = 1 + rng() % 3;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Int> row;
        for (std::size_t j = 0; j < cols; ++j)
            row.push_back(Int(static_cast<long>(rng() % 7) - 3));
        h.rows.push_back(row);
    }
    if (rng() % 2) {
        h.domain = random_group_ast(rng);
        h.codomain = random_group_ast(rng);
    }
    return h;
}

RingAstPtr random_ring_ast(std::mt19937_64 &rng, int depth)
{
    auto make = [](auto n) { return std::make_shared<const RingAst>(RingAst{std::move(n), {}}); };
    if (depth == 0) {
        switch (rng() % 3) {
        case 0:
            return make(node::BaseRing{Base::Z});
        case 1:
            return make(node::BaseRing{Base::Q});
        default:
            return make(node::Name{"R" + std::to_string(rng() % 10)});
        }
    }
    RingAstPtr inner = random_ring_ast(rng, depth - 1);
    switch (rng() % 5) {
    case 0:
        return make(node::GroupAlgebra{inner, random_group_ast(rng), rng() % 2 == 0});
    case 1:
        return make(node::Coarsen{inner, random_hom_ast(rng)});
    case 2:
        return make(node::Restrict{inner, random_hom_ast(rng)});
    case 3:
        return make(node::Extend{inner, random_hom_ast(rng)});
    default:
        return make(node::Frac{inner});
    }
}

ElemAst random_elem_ast(std::mt19937_64 &rng)
{
    ElemAst e;
    for (int i = 1 + static_cast<int>(rng() % 4); i > 0; --i) {
        TermAst t{make_rat(Int(static_cast<long>(rng() % 9) - 4), Int(static_cast<long>(1 + rng() % 3))),
                  std::nullopt};
        if (rng() % 4) {
            IntVec v;
            for (int j = static_cast<int>(rng() % 3); j > 0; --j)
                v.push_back(Int(static_cast<long>(rng() % 7) - 3));
            t.exponent = v;
        }
        e.terms.push_back(t);
    }
    return e;
}

} // namespace

TEST(Parse, Examples)
{
    const RingAstPtr r = parse_ring("Q[Z/3]coarse");
    const auto *ga = std::get_if<node::GroupAlgebra>(&r->node);
    ASSERT_NE(ga, nullptr);
    EXPECT_FALSE(ga->fine);
    EXPECT_EQ(std::get<node::BaseRing>(ga->inner->node).base, Base::Q);
    EXPECT_EQ(ga->group.factors, (std::vector<GroupFactor>{{false, Int(3)}}));

    const RingAstPtr c = parse_ring("coarsen(Q[Z^2]fine, [[1,1]])");
    const auto &co = std::get<node::Coarsen>(c->node);
    EXPECT_EQ(co.psi.rows, (std::vector<std::vector<Int>>{{1, 1}}));
    const EvaluatedRing ev = eval_ring(*c, Environment{});
    EXPECT_EQ(ev.nf.delta().matrix(), (IntMatrix{{1, 1}}));
    EXPECT_EQ(ev.nf, normalize(*ev.expr));

    const TorsionIdempotent t = torsion_idempotent(3);
    EXPECT_EQ(eval_elem(parse_elem("1/3*e(0)+1/3*e(1)+1/3*e(2)"), t.S), t.f);
}

TEST(Parse, Groups)
{
    EXPECT_EQ(eval_group(parse_group("Z^2 x Z/2")), FgGroup::invariant_factors(2, {Int(2)}));
    EXPECT_EQ(eval_group(parse_group("Z/2 x Z/3")), FgGroup::invariant_factors(0, {Int(6)}));
    EXPECT_TRUE(eval_group(parse_group("0")).is_trivial());
    EXPECT_EQ(print(parse_group("Z x Z^1 x Z/4")), "Z x Z x Z/4");
}

TEST(Parse, Elements)
{
    const ElemAst e = parse_elem("e(1)-1*e(0) + 3 - 2/4*e(2)");
    ASSERT_EQ(e.terms.size(), 4u);
    EXPECT_EQ(e.terms[1].coefficient, Rat(-1));
    EXPECT_FALSE(e.terms[2].exponent.has_value());
    EXPECT_EQ(e.terms[3].coefficient, make_rat(-1, 2));
    EXPECT_EQ(print(e), "e(1)-e(0)+3-1/2*e(2)");
}

TEST(Parse, ErrorPositions)
{
    EXPECT_EQ(kind_of([] { parse_ring("Q[Z/3]corse"); }), ErrorKind::ParseError);
    EXPECT_EQ(message_of([] { parse_ring("Q[Z/3]corse"); }).substr(0, 4), "1:7:");
    EXPECT_EQ(message_of([] { parse_ring("Q[Z/0]fine"); }).substr(0, 4), "1:6:");
    EXPECT_EQ(kind_of([] { parse_hom("[[1,2],[3]]"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_elem("e(1)+"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_ring("foo(Q)"); }), ErrorKind::ParseError);
    EXPECT_EQ(message_of([] { parse("classify Q\nlet = Q"); }).substr(0, 4), "2:5:");
    EXPECT_EQ(kind_of([] { parse("classify \"Q"); }), ErrorKind::ParseError);
}

TEST(Eval, TypeErrorsNameBothSpans)
{
    const std::string m =
        message_of([] { eval_ring(*parse_ring("coarsen(Q[Z]fine, [[1,1]])"), Environment{}); });
    EXPECT_NE(m.find("1:19"), std::string::npos) << m;
    EXPECT_NE(m.find("1:9"), std::string::npos) << m;
    EXPECT_EQ(kind_of([] {
                  eval_ring(*parse_ring("coarsen(Q[Z]fine, [[1]] : Z/2 -> Z)"), Environment{});
              }),
              ErrorKind::TypeError);
    EXPECT_EQ(kind_of([] { eval_ring(*parse_ring("R[Z]fine"), Environment{}); }), ErrorKind::TypeError);
    const RingPtr R = make_ring(eval_ring(*parse_ring("Q[Z]fine"), Environment{}).nf);
    EXPECT_EQ(kind_of([&] { eval_elem(parse_elem("e(1,2)"), R); }), ErrorKind::TypeError);
}

TEST(Eval, RegradingConstructors)
{
    const Environment env;
    const EvaluatedRing r = eval_ring(*parse_ring("restrict(Q[Z]fine, [[2]])"), env);
    EXPECT_EQ(r.nf, restrict(group_algebra(NormalForm::base_ring(Base::Q), FgGroup::free(1),
                                           GroupAlgebraMode::Fine),
                             subgroup_generated_by(FgGroup::free(1), {FgGroup::free(1).element({2})})));
    const EvaluatedRing x = eval_ring(*parse_ring("extend(Q[Z]fine, [[1],[0]])"), env);
    EXPECT_EQ(x.nf.G(), FgGroup::free(2));
    EXPECT_EQ(x.nf, normalize(*x.expr));
    const EvaluatedRing c = eval_ring(*parse_ring("coarsen(Z[Z/2]fine, [] : Z/2 -> 0)"), env);
    EXPECT_TRUE(c.nf.G().is_trivial());
}

TEST(Script, Bindings)
{
    const Script s = parse("let R = Z[Z/2]coarse # ring\nlet x = 1/2*e(0) ; let p = [[1,1]]\n"
                           "integrality R \"Q[Z/2]coarse\" x --max-deg 2 --box=1 --pretty");
    ASSERT_EQ(s.statements.size(), 4u);
    const auto &cmd = std::get<CommandStmt>(s.statements[3]);
    EXPECT_EQ(cmd.name, "integrality");
    EXPECT_EQ(cmd.args, (std::vector<std::string>{"R", "Q[Z/2]coarse", "x"}));
    EXPECT_EQ(cmd.flags.size(), 3u);
    EXPECT_EQ(cmd.flags[0], (std::pair<std::string, std::string>{"max-deg", "2"}));
    EXPECT_EQ(cmd.flags[2], (std::pair<std::string, std::string>{"pretty", ""}));
    EXPECT_TRUE(std::holds_alternative<HomAst>(std::get<LetStmt>(s.statements[2]).value));
    EXPECT_TRUE(std::holds_alternative<ElemAst>(std::get<LetStmt>(s.statements[1]).value));
}

TEST(RoundTrip, PrintThenParseIsIdentity)
{
    std::mt19937_64 rng(211);
    for (int t = 0; t < 300; ++t) {
        const RingAstPtr r = random_ring_ast(rng, static_cast<int>(rng() % 4));
        ASSERT_EQ(*parse_ring(print(*r)), *r) << print(*r);
        const ElemAst e = random_elem_ast(rng);
        ASSERT_EQ(parse_elem(print(e)), e) << print(e);
        const HomAst h = random_hom_ast(rng);
        ASSERT_EQ(parse_hom(print(h)), h) << print(h);
    }
}

TEST(RoundTrip, Scripts)
{
    std::mt19937_64 rng(223);
    for (int t = 0; t < 100; ++t) {
        Script s;
        for (int i = 1 + static_cast<int>(rng() % 5); i > 0; --i) {
            switch (rng() % 4) {
            case 0:
                s.statements.push_back(LetStmt{"a" + std::to_string(i), random_ring_ast(rng, 2), {}});
                break;
            case 1:
                s.statements.push_back(LetStmt{"b", random_elem_ast(rng), {}});
                break;
            case 2:
                s.statements.push_back(LetStmt{"c", random_hom_ast(rng), {}});
                break;
            default: {
                CommandStmt c;
                c.name = "classify";
                c.args = {print(*random_ring_ast(rng, 2)), "x y", "--odd", "q\"uote", ""};
                c.flags = {{"seed", std::to_string(rng() % 100)}, {"pretty", ""}, {"in", "Q[Z]fine"}};
                s.statements.push_back(c);
            }
            }
        }
        const std::string text = print(s);
        ASSERT_EQ(parse(text), s) << text;
        ASSERT_EQ(print(parse(text)), text);
    }
}

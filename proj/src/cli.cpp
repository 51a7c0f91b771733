#include "gradal/cli.hpp"

#include "gradal/closure.hpp"
#include "gradal/dsl.hpp"
#include "gradal/error.hpp"
#include "gradal/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace gradal::cli {

namespace {

using json = nlohmann::ordered_json;

struct Context {
    dsl::Environment env;
    std::ostream &out;
    bool pretty = false;
    bool in_script = false;
};

void emit(Context &ctx, const json &j) { ctx.out << (ctx.pretty ? j.dump(2) : j.dump()) << "\n"; }

struct RingArg {
    std::string text;
    dsl::EvaluatedRing value;
    RingPtr ring;
};

RingArg ring_arg(const std::string &text, const Context &ctx)
{
    const dsl::RingAstPtr ast = dsl::parse_ring(text);
    dsl::EvaluatedRing value = dsl::eval_ring(*ast, ctx.env);
    RingPtr ring = make_ring(value.nf);
    return {dsl::print(*ast), std::move(value), std::move(ring)};
}

json ring_json(const RingArg &r) { return {{"expr", r.text}, {"normal_form", r.ring->to_string()}}; }

json elems_json(const std::vector<GroupElem> &xs)
{
    json a = json::array();
    for (const auto &x : xs)
        a.push_back(x.to_string());
    return a;
}

json elems_json(const std::vector<Element> &xs)
{
    json a = json::array();
    for (const auto &x : xs)
        a.push_back(x.to_string());
    return a;
}

json bounds_json(const SearchBounds &b) { return {{"max_degree", b.max_degree}, {"box", b.box}}; }

Candidate candidate(const std::string &num, const std::string &den, const Context &ctx, const RingPtr &S)
{
    const Element x = dsl::elem_argument(num, ctx.env, S);
    if (den.empty())
        return Candidate(x);
    return Candidate(x, dsl::elem_argument(den, ctx.env, S));
}

std::vector<GroupElem> columns(const dsl::HomAst &h, const FgGroup &G)
{
    const GroupHom inc = dsl::eval_hom(h, std::nullopt, G);
    std::vector<GroupElem> gens;
    for (std::size_t j = 0; j < inc.domain().dim(); ++j)
        gens.push_back(inc(inc.domain().generator(j)));
    return gens;
}

bool integral_coefficients(const Element &x)
{
    for (const auto &[m, c] : x.terms())
        if (!is_integer(c))
            return false;
    return true;
}

void demo_a90(Context &ctx, unsigned n)
{
    const TorsionIdempotent t = torsion_idempotent(n);
    const Candidate f(t.f);
    const IntegralSearch search = find_integral_equation(t.R, f, SearchBounds{2, 1});
    json j;
    j["demo"] = "a90";
    j["n"] = n;
    j["R"] = t.R->to_string();
    j["S"] = t.S->to_string();
    j["f"] = t.f.to_string();
    j["c"] = t.c.to_string();
    j["d"] = t.d.to_string();
    j["f_squared_is_f"] = t.f * t.f == t.f;
    j["witness"] = t.witness.to_string();
    j["witness_verified"] = verify_integral_witness(t.R, f, t.witness);
    j["f_in_R"] = integral_coefficients(t.f);
    j["found_by_search"] = search.found();
    j["search_witness"] = search.found() ? json(search.witness->to_string()) : json(nullptr);
    j["verdict"] = "NOT integrally closed";
    emit(ctx, j);
}

void demo_a140(Context &ctx)
{
    for (const long n : {2L, 3L, 4L}) {
        const FgGroup G = FgGroup::invariant_factors(1, {Int(n)});
        const std::vector<GroupElem> F{G.element({Int(n), Int(1)})};
        json j;
        j["demo"] = "a140";
        j["G"] = G.to_string();
        j["F"] = elems_json(F);
        j["F_torsionfree"] = subgroup_generated_by(G, F).group.is_torsionfree();
        j["in_torsionfree_summand"] = is_in_torsionfree_summand(G, F);
        emit(ctx, j);
    }
    const FgGroup G = FgGroup::free(2);
    const std::vector<GroupElem> F{G.element({Int(2), Int(4)})};
    json j;
    j["demo"] = "a140";
    j["G"] = G.to_string();
    j["F"] = elems_json(F);
    j["F_torsionfree"] = true;
    j["in_torsionfree_summand"] = is_in_torsionfree_summand(G, F);
    emit(ctx, j);
}

void demo_p90(Context &ctx)
{
    const std::vector<std::pair<std::string, std::string>> cases{
        {"Q[Z/2]coarse", "1-e(1)"},
        {"Z[Z/3]coarse", "1-e(1)"},
        {"Q[Z]coarse", "1-e(1)"},
        {"coarsen(Q[Z^2]fine, [[1,1]])", "1-e(1,-1)"},
    };
    for (const auto &[ring_text, x_text] : cases) {
        const RingArg R = ring_arg(ring_text, ctx);
        const Element x = dsl::elem_argument(x_text, ctx.env, R.ring);
        const NzdResult nzd = nzd_test(x);
        json j;
        j["demo"] = "p90";
        j["ring"] = R.text;
        j["kernel"] = hom_kernel(R.ring->delta()).group.to_string();
        j["entire"] = classify(*R.ring).entire;
        j["element"] = x.to_string();
        j["zero_divisor"] = nzd.verdict == NzdVerdict::ZeroDivisor;
        j["annihilator"] = nzd.witness ? json(nzd.witness->to_string()) : json(nullptr);
        emit(ctx, j);
    }
}

int execute(std::vector<std::string> args, Context &ctx);

int run_script(Context &ctx, const std::string &path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const dsl::Script script = dsl::parse(text);
    int code = Ok;
    for (const auto &st : script.statements) {
        if (const auto *let = std::get_if<dsl::LetStmt>(&st)) {
            std::optional<dsl::EvaluatedRing> ring;
            if (const auto *r = std::get_if<dsl::RingAstPtr>(&let->value))
                ring = dsl::eval_ring(**r, ctx.env);
            ctx.env.bind(let->name, let->value, std::move(ring));
            continue;
        }
        const auto &cmd = std::get<dsl::CommandStmt>(st);
        require(cmd.name != "run", ErrorKind::InvalidArgument,
                cmd.span.to_string() + ": scripts cannot run other scripts");
        std::vector<std::string> argv{cmd.name};
        argv.insert(argv.end(), cmd.args.begin(), cmd.args.end());
        for (const auto &[k, v] : cmd.flags)
            argv.push_back("--" + k + (v.empty() ? "" : "=" + v));
        code = std::max(code, execute(std::move(argv), ctx));
    }
    return code;
}

int execute(std::vector<std::string> args, Context &ctx)
{
    CLI::App app{"Exact computations with graded group-algebra rings", "gradal"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_flag("--pretty", ctx.pretty, "Indent JSON output");

    std::vector<std::pair<CLI::App *, std::function<int()>>> commands;
    auto command = [&](const std::string &name, const std::string &desc, std::function<int()> fn) {
        CLI::App *sub = app.add_subcommand(name, desc);
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };

    std::string ring, other, elem, den, second;
    SearchBounds bounds;
    unsigned n = 2;

    CLI::App *classify_cmd = command("classify", "Normal form and ring-theoretic properties", [&] {
        const RingArg R = ring_arg(ring, ctx);
        const Classification c = classify(*R.ring);
        json j;
        j["command"] = "classify";
        j["ring"] = ring_json(R);
        j["entire"] = c.entire;
        j["simple"] = c.simple;
        j["noetherian"] = c.noetherian;
        j["support"] = elems_json(c.support.generators());
        j["full_support"] = c.full_support;
        emit(ctx, j);
        return Ok;
    });
    classify_cmd->add_option("ring", ring, "Ring expression")->required();

    CLI::App *components_cmd = command("components", "Integrality of x against its fine components", [&] {
        const RingArg C = ring_arg(ring, ctx);
        const auto *co = std::get_if<expr::Coarsen>(&C.value.expr->node);
        require(co != nullptr, ErrorKind::TypeError, "components needs a ring of the form coarsen(R, psi)");
        const RingPtr R = make_ring(normalize(*co->inner));
        const RingPtr S = other.empty() ? make_ring(NormalForm(Base::Q, R->delta())) : ring_arg(other, ctx).ring;
        const Candidate x = candidate(elem, den, ctx, S);
        const ComponentsReport rep = components_integral_check(R, co->psi, x, bounds);
        json parts = json::array();
        for (const auto &[g, s] : rep.components)
            parts.push_back({{"degree", g.to_string()}, {"found", s.found()}});
        json j;
        j["command"] = "components";
        j["ring"] = ring_json(C);
        j["x"] = x.to_string();
        j["bounds"] = bounds_json(bounds);
        j["coarse_found"] = rep.coarse.found();
        j["components"] = parts;
        j["outcome"] = to_string(rep.outcome);
        emit(ctx, j);
        return Ok;
    });
    components_cmd->add_option("ring", ring, "coarsen(R, psi)")->required();
    components_cmd->add_option("elem", elem, "Element of the ambient ring")->required();
    components_cmd->add_option("--in", other, "Ambient ring (default: R over Q)");
    components_cmd->add_option("--den", den, "Homogeneous denominator of x");
    components_cmd->add_option("--max-deg", bounds.max_degree, "Largest equation degree")->capture_default_str();
    components_cmd->add_option("--box", bounds.box, "Slack around the support window")->capture_default_str();

    CLI::App *integrality_cmd = command("integrality", "Search for a monic equation of x over R", [&] {
        const RingArg R = ring_arg(ring, ctx), S = ring_arg(other, ctx);
        const Candidate x = candidate(elem, den, ctx, S.ring);
        const IntegralSearch s = find_integral_equation(R.ring, x, bounds);
        json j;
        j["command"] = "integrality";
        j["R"] = ring_json(R);
        j["S"] = ring_json(S);
        j["x"] = x.to_string();
        j["bounds"] = bounds_json(bounds);
        j["found"] = s.found();
        j["witness"] = s.found() ? json(s.witness->to_string()) : json(nullptr);
        j["verified"] = s.found() ? json(verify_integral_witness(R.ring, x, *s.witness)) : json(nullptr);
        emit(ctx, j);
        return Ok;
    });
    integrality_cmd->add_option("R", ring, "Subring")->required();
    integrality_cmd->add_option("S", other, "Ambient ring")->required();
    integrality_cmd->add_option("elem", elem, "Element of S")->required();
    integrality_cmd->add_option("--den", den, "Homogeneous denominator of x");
    integrality_cmd->add_option("--max-deg", bounds.max_degree, "Largest equation degree")->capture_default_str();
    integrality_cmd->add_option("--box", bounds.box, "Slack around the support window")->capture_default_str();

    CLI::App *almost_cmd = command("almost", "Search for x^(k+1) in the R-span of 1, ..., x^k", [&] {
        const RingArg R = ring_arg(ring, ctx), S = ring_arg(other, ctx);
        const Candidate x = candidate(elem, den, ctx, S.ring);
        const AlmostIntegralSearch s = find_almost_integral_witness(R.ring, x, bounds);
        json j;
        j["command"] = "almost";
        j["R"] = ring_json(R);
        j["S"] = ring_json(S);
        j["x"] = x.to_string();
        j["bounds"] = bounds_json(bounds);
        j["found"] = s.found();
        if (s.found()) {
            j["k"] = s.witness->k;
            j["coefficients"] = elems_json(s.witness->coefficients);
            j["verified"] = verify_almost_integral_witness(R.ring, x, *s.witness);
        }
        emit(ctx, j);
        return Ok;
    });
    almost_cmd->add_option("R", ring, "Subring")->required();
    almost_cmd->add_option("S", other, "Ambient ring")->required();
    almost_cmd->add_option("elem", elem, "Element of S")->required();
    almost_cmd->add_option("--den", den, "Homogeneous denominator of x");
    almost_cmd->add_option("--kmax", bounds.max_degree, "Number of powers tried")->capture_default_str();
    almost_cmd->add_option("--box", bounds.box, "Slack around the support window")->capture_default_str();

    CLI::App *divide_cmd = command("divide", "Graded euclidean division g = u f + v", [&] {
        const RingArg S = ring_arg(ring, ctx);
        const Element f = dsl::elem_argument(elem, ctx.env, S.ring);
        const Element g = dsl::elem_argument(second, ctx.env, S.ring);
        const DivisionResult d = graded_euclidean_division(f, g);
        json j;
        j["command"] = "divide";
        j["ring"] = ring_json(S);
        j["f"] = f.to_string();
        j["g"] = g.to_string();
        j["u"] = d.u.to_string();
        j["v"] = d.v.to_string();
        emit(ctx, j);
        return Ok;
    });
    divide_cmd->add_option("S", ring, "Coarse group algebra over Z")->required();
    divide_cmd->add_option("f", elem, "Divisor")->required();
    divide_cmd->add_option("g", second, "Dividend")->required();

    CLI::App *idempotent_cmd = command("idempotent", "Torsion idempotent of Q[Z/n] and its equation", [&] {
        const TorsionIdempotent t = torsion_idempotent(n);
        json j;
        j["command"] = "idempotent";
        j["n"] = n;
        j["f"] = t.f.to_string();
        j["c"] = t.c.to_string();
        j["d"] = t.d.to_string();
        j["witness"] = t.witness.to_string();
        j["verified"] = verify_integral_witness(t.R, Candidate(t.f), t.witness);
        emit(ctx, j);
        return Ok;
    });
    idempotent_cmd->add_option("--n", n, "Group order")->capture_default_str();

    CLI::App *lem50_cmd = command("iso-lem50", "Isomorphism for a free summand F of the grading group", [&] {
        const RingArg R = ring_arg(ring, ctx);
        const FgGroup &G = R.ring->G();
        const std::vector<GroupElem> F = columns(dsl::hom_argument(elem, ctx.env), G);
        std::optional<std::vector<GroupElem>> H;
        if (!other.empty())
            H = columns(dsl::hom_argument(other, ctx.env), G);
        const Lem50Iso iso = lem50_iso(R.ring, F, H);
        bool inverse = true;
        for (std::size_t i = 0; i < iso.source->E().dim(); ++i) {
            const Element e = Element::monomial(iso.source, iso.source->E().generator(i));
            inverse = inverse && iso.p(iso.q(e)) == e;
        }
        for (std::size_t i = 0; i < iso.target->E().dim(); ++i) {
            const Element e = Element::monomial(iso.target, iso.target->E().generator(i));
            inverse = inverse && iso.q(iso.p(e)) == e;
        }
        json j;
        j["command"] = "iso-lem50";
        j["ring"] = ring_json(R);
        j["F"] = elems_json(F);
        j["source"] = iso.source->to_string();
        j["target"] = iso.target->to_string();
        j["p"] = iso.p.on_elements.to_string();
        j["q"] = iso.q.on_elements.to_string();
        j["inverse_on_generators"] = inverse;
        emit(ctx, j);
        return Ok;
    });
    lem50_cmd->add_option("R", ring, "Simple graded ring")->required();
    lem50_cmd->add_option("F", elem, "Matrix whose columns generate F")->required();
    lem50_cmd->add_option("--complement", other, "Matrix whose columns generate a complement H");

    CheckConfig cfg;
    CLI::App *check_cmd = command("check", "Run a seeded property check", [&] {
        const CheckReport rep = run_check(cfg);
        emit(ctx, rep.to_json());
        return rep.ok() ? Ok : CheckFailed;
    });
    check_cmd->add_option("id", cfg.check_id, "Check id")->required();
    check_cmd->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str();
    check_cmd->add_option("--seed", cfg.seed, "Master seed")->envname("GRADAL_SEED")->capture_default_str();

    std::string which;
    CLI::App *demo_cmd = command("demo", "Worked examples", [&] {
        if (which == "a90")
            demo_a90(ctx, n);
        else if (which == "a140")
            demo_a140(ctx);
        else
            demo_p90(ctx);
        return Ok;
    });
    demo_cmd->add_option("name", which, "a90, a140 or p90")->required()->check(CLI::IsMember({"a90", "a140", "p90"}));
    demo_cmd->add_option("--n", n, "Group order for a90")->capture_default_str();

    std::string path = "-";
    CLI::App *run_cmd = command("run", "Execute a script of let-bindings and commands", [&] {
        require(!ctx.in_script, ErrorKind::InvalidArgument, "scripts cannot run other scripts");
        ctx.in_script = true;
        const int code = run_script(ctx, path);
        ctx.in_script = false;
        return code;
    });
    run_cmd->add_option("file", path, "Script file, '-' for stdin")->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream ignored;
            return app.exit(e, ctx.out, ignored);
        }
        fail(ErrorKind::InvalidArgument, e.what());
    }
    for (const auto &[sub, fn] : commands)
        if (sub->parsed())
            return fn();
    return Ok;
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::TypeError:
    case ErrorKind::UnknownCheckId:
    case ErrorKind::InvalidArgument:
        return UsageError;
    default:
        return HypothesisError;
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Context ctx{{}, out};
    try {
        return execute(args, ctx);
    } catch (const Error &e) {
        err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace gradal::cli

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "bigraft/bigraft.hpp"
#include "bigraft/errors.hpp"
#include "bigraft/expression.hpp"
#include "bigraft/homology.hpp"
#include "bigraft/hopf.hpp"
#include "bigraft/koszul.hpp"
#include "bigraft/operad.hpp"
#include "bigraft/serialize.hpp"
#include "bigraft/series.hpp"

using namespace bigraft;

namespace {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, bound = 3, violation = 4 };

struct Options {
    bool json = false;
    std::string expr;
    std::string other;
    std::vector<std::string> arguments;
    bool ass = false;
    bool reduced = false;
    std::size_t degree = 0;
    std::size_t gram_bound = default_gram_bound;
    std::string which = "bt";
    std::size_t upto = 10;
    std::size_t order = 10;
    std::string system = "bgdual";
    std::string orientation = "printed";
    std::size_t arity = 1;
    std::size_t weight = 1;
    bool dual = false;
};

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::string join(const std::vector<Scalar>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : " ") + x.get_str();
    return out;
}

Json to_json_array(const std::vector<Scalar>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

Orientation orientation_of(const Options& o) {
    return o.orientation == "confluent" ? Orientation::Confluent : Orientation::Printed;
}

RewriteSystem system_of(const Options& o) {
    return o.system == "bg" ? bg_system(orientation_of(o)) : bg_dual_system(orientation_of(o));
}

int run_eval(const Options& o) {
    const LinComb x = evaluate(o.expr);
    emit(o, to_json(x), to_string(x));
    return ok;
}

int run_coproduct(const Options& o) {
    const LinComb x = evaluate(o.expr);
    Tensor2 t;
    if (o.ass) {
        t = o.reduced ? reduced_coproduct_ass(x) : coproduct_ass(x);
    } else {
        t = o.reduced ? reduced_coproduct(x) : coproduct(x);
    }
    emit(o, to_json(t), to_string(t));
    return ok;
}

int run_antipode(const Options& o) {
    const LinComb s = antipode(evaluate(o.expr));
    emit(o, to_json(s), to_string(s));
    return ok;
}

int run_pair(const Options& o) {
    const Scalar v = pairing(evaluate(o.expr), evaluate(o.other));
    emit(o, Json{{"value", to_json(v)}}, v.get_str());
    return ok;
}

int run_gram(const Options& o) {
    const IntMatrix m = gram_matrix(o.degree, o.gram_bound);
    const auto basis = enumerate_forests(o.degree);
    Json names = Json::array();
    std::string text;
    for (const auto& f : basis) {
        names.push_back(render(f));
        text += "# " + render(f) + "\n";
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) text += (j ? " " : "") + m(i, j).get_str();
        if (i + 1 < m.rows()) text += "\n";
    }
    emit(o, Json{{"degree", o.degree}, {"basis", names}, {"matrix", to_json(m)}, {"rank", rank(m)}}, text);
    return ok;
}

OperadElement operation(const std::string& text) {
    const LinComb x = evaluate(text);
    if (x.is_zero()) throw DomainError("cannot compose with 0");
    return OperadElement(degree(x.begin()->first), x);
}

int run_compose(const Options& o) {
    std::vector<OperadElement> args;
    for (const auto& a : o.arguments) args.push_back(operation(a));
    const LinComb r = compose(operation(o.expr), args).value();
    emit(o, to_json(r), to_string(r));
    return ok;
}

int run_dagger(const Options& o) {
    const LinComb r = evaluate(o.expr).map_linear<LinComb>([](const Forest& f) { return LinComb(dagger(f)); });
    emit(o, to_json(r), to_string(r));
    return ok;
}

int run_count(const Options& o) {
    if (o.which == "dual") {
        const auto forests = dual_counts(o.upto);
        const auto trees = dual_tree_counts(o.upto);
        emit(o, Json{{"which", "dual"}, {"forests", to_json_array(forests)}, {"trees", to_json_array(trees)}},
             join(forests));
    } else {
        const auto forests = forest_counts(o.upto);
        const auto trees = tree_counts(o.upto);
        emit(o, Json{{"which", "bt"}, {"forests", to_json_array(forests)}, {"trees", to_json_array(trees)}},
             join(forests));
    }
    return ok;
}

int run_series_check(const Options& o) {
    const SeriesCheck c = inverse_identity_check(o.order);
    emit(o, Json{{"order", o.order}, {"inverse", c.inverse}, {"cubic", c.cubic}},
         std::string("inverse: ") + (c.inverse ? "ok" : "FAILED") + "\ncubic: " + (c.cubic ? "ok" : "FAILED"));
    return c.ok() ? ok : violation;
}

int run_rewrite(const Options& o) {
    const RewriteSystem sys = system_of(o);
    const auto chain = sys.reduction_chain(parse_op_combination(o.expr));
    Json steps = Json::array();
    std::string text;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        steps.push_back(to_string(chain[i]));
        text += (i ? "-> " : "   ") + to_string(chain[i]) + (i + 1 < chain.size() ? "\n" : "");
    }
    emit(o, Json{{"system", sys.name()}, {"chain", steps}, {"normal_form", to_string(chain.back())}}, text);
    return ok;
}

int run_confluence(const Options& o) {
    const RewriteSystem sys = system_of(o);
    const auto critical = critical_pairs(sys);
    std::size_t joinable = 0;
    Json items = Json::array();
    std::string text;
    for (const auto& c : critical) {
        joinable += c.joinable;
        Json branches = Json::array();
        text += c.monomial.render() + (c.joinable ? "  joinable\n" : "  NOT joinable\n");
        for (const auto& b : c.branches) {
            Json chain = Json::array();
            text += "  " + b.rule + " at " + std::to_string(b.position) + ":";
            for (const auto& step : b.chain) {
                chain.push_back(to_string(step));
                text += " " + to_string(step) + " ;";
            }
            text.back() = '\n';
            branches.push_back({{"rule", b.rule}, {"position", b.position}, {"chain", chain}});
        }
        items.push_back({{"monomial", c.monomial.render()},
                         {"joinable", c.joinable},
                         {"left_comb_of_binomial_rules", c.left_comb_of_binomial_rules},
                         {"branches", branches}});
    }
    std::size_t listed_found = 0;
    for (const auto& m : listed_critical_monomials()) {
        listed_found += std::any_of(critical.begin(), critical.end(),
                                    [&](const CriticalMonomial& c) { return c.monomial == m; });
    }
    const bool all = joinable == critical.size();
    text += std::to_string(critical.size()) + " critical monomials, " + std::to_string(joinable) +
            " joinable; listed left combs present: " + std::to_string(listed_found) + "/11; " +
            (all ? "confluent" : "NOT confluent");
    emit(o,
         Json{{"system", sys.name()},
              {"critical", items},
              {"count", critical.size()},
              {"joinable", joinable},
              {"listed_present", listed_found},
              {"confluent", all}},
         text);
    return all ? ok : violation;
}

int run_normal_count(const Options& o) {
    const Scalar n = count_normal_forms(o.arity, system_of(o));
    emit(o, Json{{"system", system_of(o).name()}, {"arity", o.arity}, {"count", to_json(n)}}, n.get_str());
    return ok;
}

int run_homology(const Options& o) {
    const HomologyReport r = homology(o.weight);
    std::string text = "weight " + std::to_string(r.weight) + "\n";
    Json components = Json::array();
    for (std::size_t n = 0; n < r.homology.size(); ++n) {
        text += "H_" + std::to_string(n) + " (arity " + std::to_string(n + 1) +
                "): dim C = " + std::to_string(r.component_dims[n]) + ", rank d = " +
                std::to_string(r.ranks[n]) + ", dim H = " + std::to_string(r.homology[n]) + "\n";
        components.push_back({{"n", n},
                              {"arity", n + 1},
                              {"dimension", r.component_dims[n]},
                              {"rank_d", r.ranks[n]},
                              {"homology", r.homology[n]}});
    }
    text += "euler characteristic " + std::to_string(r.euler_characteristic) + ", d^2 = 0: " +
            (r.d_squared_zero ? "yes" : "NO");
    emit(o,
         Json{{"weight", r.weight},
              {"components", components},
              {"euler_characteristic", r.euler_characteristic},
              {"d_squared_zero", r.d_squared_zero}},
         text);
    return r.d_squared_zero ? ok : violation;
}

int run_enumerate(const Options& o) {
    check_bound(o.degree, default_enumeration_bound, "degree");
    std::vector<std::string> rendered;
    if (o.dual) {
        for (const auto& f : enumerate_forests(o.degree, true)) rendered.push_back(render(f));
    } else {
        for_each_forest(o.degree, [&](const Forest& f) { rendered.push_back(render(f)); });
        std::sort(rendered.begin(), rendered.end());
    }
    if (o.json) {
        Json out = Json::array();
        for (const auto& s : rendered) out.push_back(to_json(parse_forest(s)));
        std::cout << Json{{"degree", o.degree}, {"count", rendered.size()}, {"forests", out}}.dump() << "\n";
    } else {
        for (const auto& s : rendered) std::cout << s << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact computations in the Hopf algebra of {l,r}-decorated planar forests and the bigraft operad.\n"
        "Expressions: forests like \"o[l:o,r:o] o\", \"1\"; operators @ (composition), |> and <| (grafts),\n"
        "* (concatenation), + and -; integer scalars such as \"2 o o - o[l:o]\".\n"
        "Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 bound exceeded, 4 check failed."};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print JSON");
    int (*handler)(const Options&) = nullptr;

    auto sub = [&](const char* name, const char* help, int (*run)(const Options&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_flag("--json", o.json, "Print JSON");
        s->callback([&handler, run] { handler = run; });
        return s;
    };

    auto* eval = sub("eval", "Evaluate an expression", run_eval);
    eval->add_option("expr", o.expr, "Expression")->required();

    auto* cop = sub("coproduct", "Admissible-cut or deconcatenation coproduct", run_coproduct);
    cop->add_option("expr", o.expr, "Expression")->required();
    cop->add_flag("--ass", o.ass, "Use deconcatenation");
    cop->add_flag("--reduced", o.reduced, "Drop the primitive terms x⊗1 and 1⊗x");

    sub("antipode", "Antipode", run_antipode)->add_option("expr", o.expr, "Expression")->required();

    auto* pair = sub("pair", "Pairing of two expressions", run_pair);
    pair->add_option("x", o.expr, "First argument")->required();
    pair->add_option("y", o.other, "Second argument")->required();

    auto* gram = sub("gram", "Gram matrix of the pairing in one degree", run_gram);
    gram->add_option("--degree", o.degree, "Degree")->required();
    gram->add_option("--bound", o.gram_bound, "Largest degree allowed");

    auto* comp = sub("compose", "Operad composition F ∘ (A1, ..., An)", run_compose);
    comp->add_option("operation", o.expr, "Operation")->required();
    comp->add_option("arguments", o.arguments, "Arguments")->required();

    sub("dagger", "Mirror involution", run_dagger)->add_option("expr", o.expr, "Expression")->required();

    auto* count = sub("count", "Dimension sequences", run_count);
    count->add_option("--which", o.which, "bt or dual")->check(CLI::IsMember({"bt", "dual"}));
    count->add_option("--upto", o.upto, "Last degree");

    sub("series-check", "Check the series identities", run_series_check)
        ->add_option("--order", o.order, "Truncation order");

    auto add_system = [&](CLI::App* s) {
        s->add_option("--system", o.system, "bg or bgdual")->check(CLI::IsMember({"bg", "bgdual"}));
        s->add_option("--orientation", o.orientation, "printed or confluent")
            ->check(CLI::IsMember({"printed", "confluent"}));
    };
    auto* rw = sub("rewrite", "Reduce an operad expression such as \">(m,I) - 2 <(I,<)\"", run_rewrite);
    rw->add_option("expr", o.expr, "Combination of monomials")->required();
    add_system(rw);

    add_system(sub("confluence", "Critical monomials and their reduction chains", run_confluence));

    auto* nc = sub("normal-count", "Count normal monomials of one arity", run_normal_count);
    nc->add_option("--arity", o.arity, "Arity")->required();
    add_system(nc);

    sub("homology", "Homology of the free one-generator algebra at one weight", run_homology)
        ->add_option("--weight", o.weight, "Weight")
        ->required();

    auto* en = sub("enumerate", "List the forests of one degree", run_enumerate);
    en->add_option("--degree", o.degree, "Degree")->required();
    en->add_flag("--dual", o.dual, "Only the dual basis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        return handler(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return bound;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain;
    }
}

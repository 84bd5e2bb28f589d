#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chromkh/error.hpp"
#include "chromkh/invariants.hpp"
#include "chromkh/corpus.hpp"

using namespace chromkh;

namespace {
const std::vector<std::string> kMuAB = {"mu", "A", "B"};
}

TEST_CASE("laurent polynomial arithmetic and text") {
    auto a = LaurentPoly::variable({"A"}, 0);
    auto inv = LaurentPoly::variable({"A"}, 0, -1);
    CHECK((a * inv).str() == "1");
    CHECK((-(a.pow(4)) - inv.pow(4)).str() == "-A^4 - A^-4");
    CHECK((a + a + LaurentPoly::constant({"A"}, -3)).str() == "2*A - 3");
    CHECK(LaurentPoly({"A"}).str() == "0");
    auto mu = LaurentPoly::variable(kMuAB, 0), A = LaurentPoly::variable(kMuAB, 1), B = LaurentPoly::variable(kMuAB, 2);
    CHECK((A * mu.pow(2) + B * mu).str() == "mu^2*A + mu*B");
    CHECK_THROWS_AS(a + mu, InvalidArgument);
    auto q = LaurentPoly::variable({"q"}, 0);
    auto lam = LaurentPoly::variable({"lambda"}, 0);
    auto sub = (lam.pow(2) - lam).substitute(0, q + LaurentPoly::constant({"q"}, 1));
    CHECK(sub.str() == "q^2 + q");
}

TEST_CASE("kauffman bracket") {
    CHECK(kauffman_bracket(parse_pd("Loop[1]")).str() == "1");
    // A positive letter resolves horizontally under its A-smoothing, so the
    // closure of sigma_1 is a kink whose bracket is -A^-3; its mirror gives -A^3.
    auto kink = braid_closure(parse_braid("BR[2,{1}]"));
    CHECK(kauffman_bracket(kink).str() == "-A^-3");
    CHECK(kauffman_bracket(mirror(kink)).str() == "-A^3");
    CHECK(kauffman_bracket(braid_closure(parse_braid("BR[2,{1,1}]"))).str() == "-A^4 - A^-4");
    CHECK(unreduced_bracket(parse_pd("Loop[1]")).str() == "-A^2 - A^-2");
    CHECK_THROWS_AS(kauffman_bracket(parse_pd("")), InvalidArgument);
    // Bracket is unchanged by R2/R3 and by crossing order.
    auto fig8 = braid_closure(parse_braid("BR[3,{1,-2,1,-2}]"));
    auto fig8b = braid_closure(parse_braid("BR[3,{-2,1,-2,1}]"));
    CHECK(kauffman_bracket(fig8) == kauffman_bracket(fig8b));
    auto r2 = braid_closure(parse_braid("BR[3,{1,2,-2,1,1}]"));
    CHECK(kauffman_bracket(r2) == kauffman_bracket(braid_closure(parse_braid("BR[3,{1,1,1}]"))));
}

TEST_CASE("graph bracket") {
    auto mu = LaurentPoly::variable(kMuAB, 0), A = LaurentPoly::variable(kMuAB, 1), B = LaurentPoly::variable(kMuAB, 2);
    CHECK(graph_bracket(Multigraph(3)) == mu.pow(3));
    CHECK(graph_bracket(Multigraph(2, {{0, 1}})) == A * mu.pow(2) + B * mu);
    CHECK(graph_bracket(Multigraph(1, {{0, 0}})) == A * mu + B * mu.pow(2));
    CHECK(contract_edge(Multigraph(1, {{0, 0}}), 0).vertex_count() == 2);
    for (const auto& g : simple_graphs_up_to_iso(4, false))
        for (std::size_t e = 0; e < g.edge_count(); ++e) CHECK(graph_bracket_recursion_holds(g, e));
    auto multi = Multigraph(3, {{0, 1}, {0, 1}, {1, 1}, {1, 2}, {2, 0}});
    for (std::size_t e = 0; e < multi.edge_count(); ++e) CHECK(graph_bracket_recursion_holds(multi, e));
    CHECK_THROWS_AS(graph_bracket(complete_graph(7)), InvalidArgument);
}

TEST_CASE("tutte relation") {
    CHECK(tutte_polynomial(complete_graph(3)).str() == "x^2 + x + y");
    CHECK(tutte_check(path(4)));
    CHECK(tutte_check(complete_graph(3)));
    CHECK(tutte_check(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})));
    CHECK(tutte_check(Multigraph(2, {{0, 0}, {0, 1}, {1, 1}, {0, 1}})));
    for (const auto& g : simple_graphs_up_to_iso(5, false)) CHECK(tutte_check(g));
}

TEST_CASE("chromatic polynomial") {
    auto k3 = chromatic_polynomial(complete_graph(3));
    CHECK(k3.str() == "lambda^3 - 3*lambda^2 + 2*lambda");
    CHECK(chromatic_q_form(k3).str() == "q^3 - q");
    CHECK(chromatic_polynomial(Multigraph(2, {{0, 1}, {1, 1}})).is_zero());
    CHECK(chromatic_polynomial(Multigraph(4)).str() == "lambda^4");
    for (const auto& g : simple_graphs_up_to_iso(6, false))
        CHECK(chromatic_polynomial(g) == chromatic_polynomial_state_sum(g));
    auto multi = Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {1, 2}});
    CHECK(chromatic_polynomial(multi) == chromatic_polynomial_state_sum(multi));
}

#pragma once

#include "chromkh/bigraded.hpp"
#include "chromkh/graph.hpp"
#include "chromkh/link.hpp"
#include "chromkh/poly.hpp"

namespace chromkh {

// Diagram bracket <D> = sum_s A^sigma(s) (-A^2 - A^-2)^(|D_s| - 1). The
// unreduced form is [D] = (-A^2 - A^-2) <D>. The empty diagram is rejected;
// at most 24 crossings.
LaurentPoly kauffman_bracket(const LinkDiagram& d);
LaurentPoly unreduced_bracket(const LinkDiagram& d);

// Graph bracket over (mu, A, B):
// [G] = sum_{s subset E} mu^(p0([G:s]) + p1([G:s])) A^|E - s| B^|s|.
// Limited to 20 edges.
LaurentPoly graph_bracket(const Multigraph& g);
// G - e and G // e (contraction; a contracted loop leaves an isolated vertex).
Multigraph delete_edge(const Multigraph& g, std::size_t e);
Multigraph contract_edge(const Multigraph& g, std::size_t e);
// [G] == A [G - e] + B [G // e]
bool graph_bracket_recursion_holds(const Multigraph& g, std::size_t e);

// Tutte polynomial in (x, y) by deletion-contraction.
LaurentPoly tutte_polynomial(const Multigraph& g);
// [G] == mu^p0 A^p1 B^(E-p1) T(G; (B + mu A)/B, (A + mu B)/A), compared
// with denominators cleared.
bool tutte_check(const Multigraph& g);

// Chromatic polynomial in lambda: deletion-contraction, and the state sum
// sum_s (-1)^|s| lambda^k(s) used as an oracle.
LaurentPoly chromatic_polynomial(const Multigraph& g);
LaurentPoly chromatic_polynomial_state_sum(const Multigraph& g);
// lambda -> 1 + q
LaurentPoly chromatic_q_form(const LaurentPoly& in_lambda);

enum class EulerMode { kKhovanov, kChromatic };
// Khovanov: sum_j A^j sum_i (-1)^((j-i)/2) rank H_{i,j}.
// Chromatic: sum_{i,j} (-1)^i rank H^{i,j} q^j.
LaurentPoly euler_characteristic(const BigradedGroups& h, EulerMode mode);

}  // namespace chromkh

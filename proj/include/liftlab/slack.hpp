#pragma once

#include <string>
#include <vector>

#include "liftlab/combi.hpp"
#include "liftlab/matrix.hpp"

namespace liftlab {

enum class PolytopeKind { Perm, SpT, Match };
enum class RowKind { Edge, Vertex, OddSet, SubsetU };

// Exact slack matrix of a named polytope: rows are facet-defining
// constraints, columns are vertices, every entry is >= 0.
struct SlackMatrix {
    RatMatrix matrix;
    PolytopeKind polytope;
    int n = 0;  // ground-set / vertex count
    std::vector<RowKind> row_kinds;
};

// Permutahedron slack S_{J,sigma} = sum_{j in J} sigma(j) - |J|(|J|+1)/2.
// Rows: all proper nonempty J (popcount-then-mask order); columns: all
// sigma in lexicographic order. Requires 2 <= n <= 8.
SlackMatrix slack_perm(int n);

// Spanning-tree polytope slack |U| - 1 - |T ∩ E(U)| over rows U (proper
// subsets with |U| >= 2 and E(U) nonempty) and spanning-tree columns.
// with_nonneg_rows prepends the x_e >= 0 rows, whose slack is chi_T(e).
SlackMatrix slack_spt(const Graph& g, bool with_nonneg_rows = false);

// Matching polytope slack in three row blocks: edge rows (slack chi_M(e)),
// vertex rows (slack 1 - |M ∩ delta(v)|), odd-set rows (|U| >= 3 odd,
// E(U) nonempty, slack (|U|-1)/2 - |M ∩ E(U)|). Columns: all matchings
// including the empty one.
SlackMatrix slack_match(const Graph& g);

// M_sigma * (1,...,n)^T; checks the result equals x_sigma and returns it.
std::vector<int> birkhoff_project(const Perm& sigma);

// Shared row-label helpers (vertex rows are plain integers; edge and subset
// rows use the combi brace formats).
std::string vertex_row_label(int v);

}  // namespace liftlab

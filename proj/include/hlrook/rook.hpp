#pragma once

// Linked rook placements on the board above a Dyck path, their chain
// structure and ranks, the free-cell statistic, and the generating
// polynomials r_{gamma,mu}(q) that give the Hall-Littlewood coefficients of
// the chromatic quasisymmetric function.

#include "hlrook/dyck.hpp"
#include "hlrook/partition.hpp"
#include "hlrook/qlaurent.hpp"

#include <map>
#include <vector>

namespace hlrook {

/// Non-attacking rooks on the board of a size-n Dyck path, sorted by column.
///
/// Rooks (i, j) and (j, k) are linked; following links from a diagonal
/// index gives the chains that make up the linked rook placement.
struct RookPlacement {
    int n = 0;
    std::vector<Cell> rooks;

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

struct ChainDecomposition {
    /// Maximal chains d_1 < d_2 < ... joined by rooks (d_t, d_{t+1}),
    /// singletons included, ordered by first element.
    std::vector<std::vector<int>> chains;
    /// pos[v] is the 1-based position of v in its chain; index 0 unused.
    std::vector<int> pos;
    Partition type;
};

/// Ranks of the extended placement ext(P). All vectors are indexed 1..n.
struct ExtendedRanks {
    /// c_i: rank of the topmost extended rook in column i.
    std::vector<int> col_rank;
    /// Row j'(i) of that rook: the chain successor of i, or n + 1.
    std::vector<int> col_top_row;
    /// r_j: rank of the leftmost extended rook in row j.
    std::vector<int> row_rank;
    /// Column i'(j) of that rook: the chain predecessor of j, or j itself.
    std::vector<int> row_left_col;
};

/// Which free-cell rule to apply. `gated` requires the topmost extended rook
/// of column i to lie strictly above the cell; `ungated` drops that test and
/// exists only to show the gate matters.
enum class FreeCellRule { gated, ungated };

/// Every rook placement on the board of `path`, including the empty one.
/// Columns are visited left to right; each column is first left empty, then
/// given a rook in each free row in increasing order.
std::vector<RookPlacement> rook_placements(const DyckPath& path);

ChainDecomposition chain_decompose(const RookPlacement& placement);

ExtendedRanks extended_ranks(const RookPlacement& placement);

std::vector<Cell> free_cells(const DyckPath& path, const RookPlacement& placement,
                             FreeCellRule rule = FreeCellRule::gated);

int free_cell_count(const DyckPath& path, const RookPlacement& placement,
                    FreeCellRule rule = FreeCellRule::gated);

/// r_{gamma,mu}(q) for every type mu with a nonzero value.
std::map<Partition, QLaurent, RevLex> r_polys(const DyckPath& path,
                                              FreeCellRule rule = FreeCellRule::gated);

/// r_{gamma,mu}(q) = sum over placements of type mu of q^fc. Throws
/// std::domain_error if |mu| != n.
QLaurent r_poly(const DyckPath& path, const Partition& mu, FreeCellRule rule = FreeCellRule::gated);

/// Coefficient of P_mu in X_gamma:
///   q^{area(gamma) - n(mu)} r_{gamma,mu}(q) prod_i [m_i(mu)]_q!.
/// Throws std::logic_error if the result has negative powers of q.
QLaurent hl_coefficient(const DyckPath& path, const Partition& mu,
                        FreeCellRule rule = FreeCellRule::gated);

/// prod_i [m_i(mu)]_q!.
QLaurent multiplicity_factorial(const Partition& mu);

}  // namespace hlrook

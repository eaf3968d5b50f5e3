#include "hlrook/rook.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hlrook {

namespace {

// successor[i] = j for a rook (i, j), predecessor[j] = i; 0 when absent.
struct Links {
    std::vector<int> successor;
    std::vector<int> predecessor;
};

Links links_of(const RookPlacement& placement) {
    const auto size = static_cast<std::size_t>(placement.n + 1);
    Links links{std::vector<int>(size, 0), std::vector<int>(size, 0)};
    for (const Cell& rook : placement.rooks) {
        links.successor[static_cast<std::size_t>(rook.col)] = rook.row;
        links.predecessor[static_cast<std::size_t>(rook.row)] = rook.col;
    }
    return links;
}

}  // namespace

std::vector<RookPlacement> rook_placements(const DyckPath& path) {
    const int n = path.size();
    std::vector<RookPlacement> out;
    std::vector<bool> row_used(static_cast<std::size_t>(n + 1), false);
    RookPlacement current{n, {}};

    std::function<void(int)> place = [&](int col) {
        if (col > n) {
            out.push_back(current);
            return;
        }
        place(col + 1);
        for (int row = path.height(col) + 1; row <= n; ++row) {
            if (row_used[static_cast<std::size_t>(row)]) {
                continue;
            }
            row_used[static_cast<std::size_t>(row)] = true;
            current.rooks.push_back({col, row});
            place(col + 1);
            current.rooks.pop_back();
            row_used[static_cast<std::size_t>(row)] = false;
        }
    };
    place(1);
    return out;
}

ChainDecomposition chain_decompose(const RookPlacement& placement) {
    const int n = placement.n;
    const Links links = links_of(placement);
    ChainDecomposition out;
    out.pos.assign(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> lengths;
    for (int start = 1; start <= n; ++start) {
        if (links.predecessor[static_cast<std::size_t>(start)] != 0) {
            continue;
        }
        std::vector<int> chain;
        for (int v = start; v != 0; v = links.successor[static_cast<std::size_t>(v)]) {
            chain.push_back(v);
            out.pos[static_cast<std::size_t>(v)] = static_cast<int>(chain.size());
        }
        lengths.push_back(static_cast<int>(chain.size()));
        out.chains.push_back(std::move(chain));
    }
    out.type = Partition::from_unsorted(std::move(lengths));
    return out;
}

ExtendedRanks extended_ranks(const RookPlacement& placement) {
    const int n = placement.n;
    const Links links = links_of(placement);
    const ChainDecomposition chains = chain_decompose(placement);
    const auto size = static_cast<std::size_t>(n + 1);
    ExtendedRanks ranks{std::vector<int>(size, 0), std::vector<int>(size, 0), std::vector<int>(size, 0),
                        std::vector<int>(size, 0)};
    for (int v = 1; v <= n; ++v) {
        const auto idx = static_cast<std::size_t>(v);
        const int pos = chains.pos[idx];
        // Column v holds the diagonal cell (rank 2*pos-1 -> pos-1) and above it
        // either the next rook in the chain or the extended-row cell, both of
        // rank pos. Row v holds the diagonal cell and, to its left, the rook
        // arriving from the predecessor, of rank pos-1 as well.
        ranks.col_rank[idx] = pos;
        ranks.col_top_row[idx] = links.successor[idx] != 0 ? links.successor[idx] : n + 1;
        ranks.row_rank[idx] = pos - 1;
        ranks.row_left_col[idx] = links.predecessor[idx] != 0 ? links.predecessor[idx] : v;
    }
    return ranks;
}

std::vector<Cell> free_cells(const DyckPath& path, const RookPlacement& placement, FreeCellRule rule) {
    if (placement.n != path.size()) {
        throw std::domain_error("free_cells: placement size does not match the path");
    }
    const ExtendedRanks ranks = extended_ranks(placement);
    std::vector<Cell> out;
    for (const Cell& cell : path.board()) {
        const auto i = static_cast<std::size_t>(cell.col);
        const auto j = static_cast<std::size_t>(cell.row);
        if (rule == FreeCellRule::gated && ranks.col_top_row[i] <= cell.row) {
            continue;
        }
        const int a = ranks.col_rank[i];
        const int b = ranks.row_rank[j];
        const int left = ranks.row_left_col[j];
        if ((cell.col < left && b <= a) || (left < cell.col && b < a)) {
            out.push_back(cell);
        }
    }
    return out;
}

int free_cell_count(const DyckPath& path, const RookPlacement& placement, FreeCellRule rule) {
    return static_cast<int>(free_cells(path, placement, rule).size());
}

std::map<Partition, QLaurent, RevLex> r_polys(const DyckPath& path, FreeCellRule rule) {
    std::map<Partition, QLaurent, RevLex> out;
    for (const RookPlacement& placement : rook_placements(path)) {
        out[chain_decompose(placement).type] += QLaurent::monomial(free_cell_count(path, placement, rule));
    }
    return out;
}

QLaurent r_poly(const DyckPath& path, const Partition& mu, FreeCellRule rule) {
    if (mu.size() != path.size()) {
        throw std::domain_error("r_poly: |mu| = " + std::to_string(mu.size()) + " but the path has size " +
                                std::to_string(path.size()));
    }
    QLaurent total;
    for (const RookPlacement& placement : rook_placements(path)) {
        if (chain_decompose(placement).type == mu) {
            total += QLaurent::monomial(free_cell_count(path, placement, rule));
        }
    }
    return total;
}

QLaurent multiplicity_factorial(const Partition& mu) {
    QLaurent out = 1;
    for (const auto& [part, count] : mu.multiplicities()) {
        out *= q_factorial(count);
    }
    return out;
}

QLaurent hl_coefficient(const DyckPath& path, const Partition& mu, FreeCellRule rule) {
    const QLaurent value =
        (r_poly(path, mu, rule) * multiplicity_factorial(mu)).shifted(path.area() - mu.n_stat());
    if (!value.is_polynomial()) {
        throw std::logic_error("hl_coefficient: negative power of q for heights " + path.to_text() +
                               ", mu = " + mu.to_string() + ": " + value.to_string());
    }
    return value;
}

}  // namespace hlrook

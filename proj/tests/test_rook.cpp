#include "hlrook/rook.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hlrook;

namespace {

std::vector<Cell> sorted_rooks(const RookPlacement& p) {
    std::vector<Cell> r = p.rooks;
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

TEST_CASE("type (3,2) placements on the running example") {
    const DyckPath path = DyckPath::parse("2,2,4,4,5");
    std::multiset<int> fcs;
    for (const RookPlacement& p : rook_placements(path)) {
        if (chain_decompose(p).type == Partition({3, 2})) {
            fcs.insert(free_cell_count(path, p));
        }
    }
    CHECK(fcs == std::multiset<int>{0, 1, 1, 2});
    CHECK(r_poly(path, Partition({3, 2})) == QLaurent::from_coeffs(0, {1, 2, 1}));
    CHECK(hl_coefficient(path, Partition({3, 2})) == QLaurent::from_coeffs(0, {1, 2, 1}));

    const RookPlacement p3{5, {{1, 4}, {2, 3}, {4, 5}}};
    CHECK(free_cells(path, p3) == std::vector<Cell>{{1, 3}, {3, 5}});
    const RookPlacement p1{5, {{1, 3}, {2, 4}, {3, 5}}};
    CHECK(free_cell_count(path, p1) == 0);
}

TEST_CASE("chains, type and ranks") {
    const RookPlacement p{5, {{1, 3}, {3, 5}, {2, 4}}};
    const ChainDecomposition c = chain_decompose(p);
    CHECK(c.chains == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});
    CHECK(c.type == Partition({3, 2}));
    CHECK(c.pos[5] == 3);
    const ExtendedRanks r = extended_ranks(p);
    CHECK(r.col_rank[1] == 1);
    CHECK(r.col_top_row[1] == 3);
    CHECK(r.col_top_row[5] == 6);
    CHECK(r.row_rank[1] == 0);
    CHECK(r.row_left_col[1] == 1);
    CHECK(r.row_rank[5] == 2);
    CHECK(r.row_left_col[5] == 3);
}

TEST_CASE("empty path and small cases") {
    const DyckPath empty;
    const auto polys = r_polys(empty);
    CHECK(polys.size() == 1);
    CHECK(polys.begin()->first == Partition());
    CHECK(polys.begin()->second == QLaurent(1));

    const DyckPath two = DyckPath::edgeless(2);
    CHECK(r_poly(two, Partition({1, 1})) == QLaurent::q());
    CHECK(r_poly(two, Partition({2})) == QLaurent(1));
    CHECK_THROWS_AS(r_poly(two, Partition({3})), std::domain_error);
}

TEST_CASE("hl_coefficient at (1^n) is [n]_q!") {
    for (int n = 0; n <= 6; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            CHECK(hl_coefficient(path, Partition::column(n)) == q_factorial(n));
        }
    }
}

TEST_CASE("complete graph: only the empty placement") {
    for (int n = 1; n <= 6; ++n) {
        const auto polys = r_polys(DyckPath::complete(n));
        CHECK(polys.size() == 1);
        CHECK(polys.begin()->first == Partition::column(n));
    }
}

TEST_CASE("property: placements match brute-force rook subsets") {
    for (int n = 0; n <= 6; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            std::set<std::vector<Cell>> found;
            for (const RookPlacement& p : rook_placements(path)) {
                CHECK(p.n == n);
                found.insert(sorted_rooks(p));
            }
            CHECK(found.size() == rook_placements(path).size());
            CHECK(found == oracle::rook_subsets(path));
        }
    }
}

TEST_CASE("property: rank shortcut and type match the literal extended placement") {
    for (int n = 0; n <= 6; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            for (const RookPlacement& p : rook_placements(path)) {
                CHECK(chain_decompose(p).type == oracle::literal_type(n, p.rooks));
                CHECK(free_cell_count(path, p) == oracle::literal_fc(path, p.rooks));

                const auto ext = oracle::literal_extension(n, p.rooks);
                const ExtendedRanks r = extended_ranks(p);
                for (int v = 1; v <= n; ++v) {
                    const oracle::ExtendedCell* top = nullptr;
                    const oracle::ExtendedCell* leftmost = nullptr;
                    for (const auto& e : ext) {
                        if (e.col == v && (!top || e.row > top->row)) {
                            top = &e;
                        }
                        if (e.row == v && (!leftmost || e.col < leftmost->col)) {
                            leftmost = &e;
                        }
                    }
                    REQUIRE(top);
                    REQUIRE(leftmost);
                    CHECK(r.col_rank[static_cast<std::size_t>(v)] == top->rank);
                    CHECK(r.col_top_row[static_cast<std::size_t>(v)] == top->row);
                    CHECK(r.row_rank[static_cast<std::size_t>(v)] == leftmost->rank);
                    CHECK(r.row_left_col[static_cast<std::size_t>(v)] == leftmost->col);
                }
            }
        }
    }
}

TEST_CASE("property: r at q = 1 counts placements, and r_polys agrees with r_poly") {
    for (int n = 0; n <= 5; ++n) {
        for (const DyckPath& path : dyck_paths(n)) {
            const auto polys = r_polys(path);
            BigInt total = 0;
            for (const Partition& mu : partitions_of(n)) {
                const QLaurent r = r_poly(path, mu);
                const auto it = polys.find(mu);
                CHECK(r == (it == polys.end() ? QLaurent{} : it->second));
                CHECK(r.has_nonnegative_coeffs());
                total += r.at_one();
            }
            CHECK(total == static_cast<unsigned long>(oracle::rook_subsets(path).size()));
        }
    }
}

TEST_CASE("dropping the gate changes the running example") {
    const DyckPath path = DyckPath::parse("2,2,4,4,5");
    CHECK(r_poly(path, Partition({3, 2}), FreeCellRule::ungated) != QLaurent::from_coeffs(0, {1, 2, 1}));
}

#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlrook {

/// Board cell in (column, row) coordinates with column < row.
struct Cell {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Edge {lo, hi} of the incomparability graph, lo < hi.
struct Edge {
    int lo = 0;
    int hi = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class DyckError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dyck path from (0,0) to (n,n), stored as its column heights m_1..m_n.
///
/// The same sequence describes the natural unit interval order on [n]
/// (i < j in the poset iff j > m_i) and its incomparability graph
/// (edge {i,j} iff i < j <= m_i). Cells above the path, (i, j) with
/// j > m_i, form the rook board.
class DyckPath {
public:
    DyckPath() = default;
    /// Validates non-decreasing heights with i <= m_i <= n; throws DyckError
    /// naming the offending (1-based) index.
    static DyckPath from_heights(std::vector<int> heights);
    /// Comma separated heights, "2,2,4,4,5". The empty path is "-".
    static DyckPath parse(std::string_view text);
    /// N^k E^k: the complete graph K_k.
    static DyckPath complete(int k);
    /// (1,2,...,n): the edgeless graph on n vertices.
    static DyckPath edgeless(int n);

    int size() const noexcept { return static_cast<int>(heights_.size()); }
    const std::vector<int>& heights() const noexcept { return heights_; }
    /// m_i for 1 <= i <= n, with m_0 = 0.
    int height(int i) const noexcept { return i == 0 ? 0 : heights_[static_cast<std::size_t>(i - 1)]; }

    /// i and j (i < j) are incomparable, i.e. joined by an edge.
    bool adjacent(int i, int j) const noexcept { return j <= height(i); }

    /// a_1..a_n, a_i = #{c < i : m_c >= i}.
    std::vector<int> row_counts() const;
    int area() const;
    std::vector<Edge> edges() const;
    /// Cells (i, j), i < j, above the path; column-major order.
    std::vector<Cell> board() const;

    std::string to_text() const;

    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    explicit DyckPath(std::vector<int> heights) : heights_(std::move(heights)) {}

    std::vector<int> heights_;
};

std::ostream& operator<<(std::ostream& os, const DyckPath& path);

/// gamma1 followed by gamma2, heights of gamma2 shifted by |gamma1|.
DyckPath concat(const DyckPath& first, const DyckPath& second);

/// All Dyck paths of size n, lexicographic in the height sequence.
std::vector<DyckPath> dyck_paths(int n);

/// (gamma0, gamma1, gamma2) satisfying the modular law conditions of the
/// stated kind at column `position`.
struct ModularTriple {
    DyckPath lower;   // gamma0
    DyckPath middle;  // gamma1
    DyckPath upper;   // gamma2
    int kind = 1;
    int position = 1;
};

/// All modular triples of both kinds for paths of size n, ordered by
/// middle path, then kind, then position.
std::vector<ModularTriple> modular_triples(int n);

/// Checks the defining conditions of a modular triple literally.
bool is_modular_triple(const DyckPath& lower, const DyckPath& middle, const DyckPath& upper, int kind,
                       int position);

}  // namespace hlrook

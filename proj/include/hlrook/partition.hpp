#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hlrook {

/// Integer partition, a weakly decreasing list of positive parts.
///
/// Parts are 1-indexed through part(i) and read as 0 beyond the length, so
/// expressions like nu'_{i+1} - mu'_{i+1} can index freely.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts decreasingly and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);
    /// (1^n).
    static Partition column(int n);
    /// Text syntax: "3,2,2"; the empty partition is "-".
    static Partition parse(std::string_view text);

    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int part(int i) const noexcept;

    Partition conjugate() const;
    /// n(lambda) = sum_i (i-1) lambda_i.
    int n_stat() const noexcept;
    /// m_i(lambda) for i >= 1.
    int multiplicity(int i) const noexcept;
    /// Nonzero multiplicities keyed by part value.
    std::map<int, int> multiplicities() const;

    /// "(3,2)"; "()" for the empty partition.
    std::string to_string() const;
    /// "3,2"; "-" for the empty partition.
    std::string to_text() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Ordering with larger partitions (lexicographically) first; this is the
/// reverse lexicographic order used for every partition-indexed table.
using RevLex = std::greater<Partition>;

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// mu <= lambda in dominance order. Throws std::domain_error on size mismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// nu / mu is a vertical strip: mu contained in nu, at most one cell per row.
bool is_vertical_strip(const Partition& nu, const Partition& mu);

}  // namespace hlrook

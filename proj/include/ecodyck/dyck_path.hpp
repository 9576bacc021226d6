#pragma once

// Dyck paths, the Dyck lattice order, and the ECO construction that builds
// every path of semilength n+1 exactly once from the paths of semilength n
// by inserting a peak somewhere along the last descent.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ecodyck/int_poly.hpp"

namespace ecodyck {

enum class Step : std::uint8_t { up, down };

class DyckPath {
public:
    /// The empty path (semilength 0).
    DyckPath() = default;
    /// Throws std::invalid_argument unless the steps form a Dyck path.
    explicit DyckPath(std::vector<Step> steps);

    /// Parses a U/D literal, case-insensitive.
    static DyckPath parse(std::string_view text);
    /// (UD)^n, the lattice minimum.
    static DyckPath zigzag(std::size_t n);
    /// U^n D^n, the lattice maximum.
    static DyckPath pyramid(std::size_t n);

    std::span<const Step> steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }
    std::size_t semilength() const noexcept { return steps_.size() / 2; }
    bool empty() const noexcept { return steps_.empty(); }

    /// Height after each step, y_1 .. y_{2n}.
    std::vector<int> heights() const;

    /// Canonical uppercase literal.
    std::string str() const;

    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    struct Unchecked {};
    DyckPath(std::vector<Step> steps, Unchecked) : steps_(std::move(steps)) {}
    friend DyckPath from_heights(std::span<const int>);
    friend std::vector<DyckPath> eco_sons(const DyckPath&);
    friend DyckPath eco_parent(const DyckPath&);

    std::vector<Step> steps_;
};

/// Rebuilds a path from its height profile y_1 .. y_{2n}.
DyckPath from_heights(std::span<const int> heights);

/// Unit-triangle area: the sum of all heights y_1 .. y_{2n}.
std::size_t area(const DyckPath& p);

/// (area - n) / 2
std::size_t rank(const DyckPath& p);

std::size_t last_descent_length(const DyckPath& p);

/// The k+1 sons of a path whose last descent has length k, ordered by
/// increasing rank. Son h inserts the peak at height h of the last descent
/// and has rank rank(p) + h.
std::vector<DyckPath> eco_sons(const DyckPath& p);

/// Deletes the rightmost peak. Left inverse of every branch of eco_sons.
DyckPath eco_parent(const DyckPath& p);

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bound on the number of objects an exhaustive computation may materialize.
struct EnumerationGuard {
    std::uint64_t max_objects = 3'000'000;

    /// Throws GuardExceeded when `count` exceeds the bound.
    void require(const BigInt& count, std::string_view what) const;
};

/// All C_n paths of semilength n >= 1, generated level by level through
/// eco_sons starting from UD.
std::vector<DyckPath> enumerate(std::size_t n, const EnumerationGuard& guard = {});

/// Visits every path of semilength n in generating-tree depth-first order
/// without storing them. The callback receives the step sequence.
void for_each_path(std::size_t n, const std::function<void(std::span<const Step>)>& visit,
                   const EnumerationGuard& guard = {});

/// Number of paths of D_n at each rank, by explicit enumeration.
/// The parallel version splits the generating tree into subtrees.
std::vector<std::uint64_t> rank_histogram(std::size_t n, const EnumerationGuard& guard = {});
std::vector<std::uint64_t> rank_histogram_serial(std::size_t n, const EnumerationGuard& guard = {});

// Lattice order: p <= q iff p lies weakly below q. Mismatched semilengths
// throw std::invalid_argument.
bool leq(const DyckPath& p, const DyckPath& q);
DyckPath meet(const DyckPath& p, const DyckPath& q);
DyckPath join(const DyckPath& p, const DyckPath& q);

struct Partition {
    std::vector<std::size_t> parts;  // weakly decreasing, positive

    std::size_t size() const noexcept;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Cells of the staircase (n-1, ..., 1) lying strictly above the path
/// (drawn with U as north and D as east steps), read row by row from the
/// top. Part r is the number of D steps preceding the (n+1-r)-th U step,
/// and size + rank = C(n, 2).
Partition to_young(const DyckPath& p);

/// Inverse of to_young. Throws std::invalid_argument when the partition is
/// not weakly decreasing and positive or does not fit the staircase.
DyckPath from_young(std::size_t n, const Partition& lambda);

} // namespace ecodyck

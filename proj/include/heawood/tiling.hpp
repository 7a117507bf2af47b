#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heawood/lattice.hpp"

namespace heawood {

using Coords = std::vector<std::int64_t>;

/// Coordinate sum 1+...+(d+1) and one coordinate in each residue class.
bool is_tiling_vertex(std::span<const std::int64_t> x);

/// The d+1 tiling neighbours x - e_i + e_j, one for each i, taking j with
/// x_i = x_j + 1 mod (d+1). Ordered by i.
std::vector<Coords> neighbors(std::span<const std::int64_t> x);

/// Offsets v (as w-coefficients) of the d+1 tiles Pi_d + v through x.
/// Entry c is the tile in which x - v has x_a - c = (x - v)_a mod (d+1).
std::vector<WCoeffs> tiles_containing(std::span<const std::int64_t> x);

/// The permutation p with p_1 = 1 and x - p in the lattice. Lattice
/// translations shift every residue equally, so p is translation invariant.
Coords base_permutation(std::span<const std::int64_t> x);

/// Ordered set partition of {1..n}, blocks kept as bitmasks over 0-based
/// elements.
class OrderedPartition {
public:
    OrderedPartition() = default;
    /// Blocks given with 1-based elements; validated.
    OrderedPartition(std::vector<std::vector<int>> blocks, int n);
    static OrderedPartition from_masks(std::vector<std::uint32_t> masks, int n);
    /// Parses "[{2,3},{1}]" or "23|1".
    static OrderedPartition parse(const std::string& text, int n);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return masks_.size(); }
    std::uint32_t mask(std::size_t i) const { return masks_[i]; }
    const std::vector<std::uint32_t>& masks() const noexcept { return masks_; }
    std::vector<int> block(std::size_t i) const;
    /// Index of the block containing element e (1-based).
    std::size_t block_of(int e) const;

    std::string to_string() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
    friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

private:
    std::vector<std::uint32_t> masks_;
    int n_ = 0;
};

/// All ordered partitions of {1..n} into exactly `blocks` blocks.
std::vector<OrderedPartition> ordered_partitions(int n, int blocks);

/// The face [B_1,...,B_k] + v of the tiling.
struct TilingFace {
    OrderedPartition partition;
    WCoeffs offset;

    bool is_canonical() const { return partition.size() > 0 && (partition.mask(0) & 1u); }
    std::string to_string() const;

    friend bool operator==(const TilingFace&, const TilingFace&) = default;
    friend auto operator<=>(const TilingFace&, const TilingFace&) = default;
};

/// Same face named with blocks [B_2,...,B_k,B_1]; the offset drops by the
/// sum of w_b over B_1.
TilingFace rotate_partition(const TilingFace& f);

/// Rotates until 1 lies in the first block.
TilingFace canonical_face(const TilingFace& f);

/// Vertices of the face, sorted.
std::vector<Coords> face_vertices(const TilingFace& f);

enum class Membership { Interior, Boundary, Outside };
std::string to_string(Membership m);

/// Classifies the rational point numer/denom, translated back by the offset,
/// against the facet inequalities sum_{a in A} x_a >= 1+...+|A|.
Membership permutahedron_membership(std::span<const std::int64_t> numer, std::int64_t denom,
                                    const WCoeffs& offset);
Membership permutahedron_membership(std::span<const std::int64_t> x, const WCoeffs& offset);

}  // namespace heawood

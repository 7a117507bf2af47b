#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/intlin.hpp"

namespace heawood {

/// Parameter vector k = (k_1, ..., k_{d+1}).
///
/// Strict signatures (all k_i >= 1) give simplicial tori. Delta signatures
/// admit zeros and only promise lattice and graph structure.
class KSignature {
public:
    static KSignature strict(std::vector<std::int64_t> k);
    static KSignature delta(std::vector<std::int64_t> k);
    /// Parses "1,2,1". Delta mode must be requested explicitly.
    static KSignature parse(std::string_view text, bool allow_delta = false);

    std::span<const std::int64_t> entries() const noexcept { return k_; }
    std::int64_t operator[](std::size_t i) const { return k_[i]; }
    std::size_t size() const noexcept { return k_.size(); }
    int dim() const noexcept { return static_cast<int>(k_.size()) - 1; }
    bool is_delta() const noexcept { return delta_; }
    bool is_constant() const noexcept;

    IntMatrix matrix() const { return build_mk(k_); }
    Integer dk() const { return closed_form_dk(k_); }
    std::string to_string() const;

    friend bool operator==(const KSignature&, const KSignature&) = default;

private:
    KSignature(std::vector<std::int64_t> k, bool delta) : k_(std::move(k)), delta_(delta) {}

    std::vector<std::int64_t> k_;
    bool delta_ = false;
};

/// Coefficients over w_1, ..., w_{d+1}, kept canonical modulo the relation
/// w_1 + ... + w_{d+1} = 0 (smallest coefficient is zero).
class WCoeffs {
public:
    WCoeffs() = default;
    explicit WCoeffs(std::vector<std::int64_t> raw);

    static WCoeffs zero(std::size_t n) { return WCoeffs(std::vector<std::int64_t>(n, 0)); }
    /// Class of w_i (0-based index).
    static WCoeffs unit(std::size_t i, std::size_t n);

    std::span<const std::int64_t> coeffs() const noexcept { return a_; }
    std::int64_t operator[](std::size_t i) const { return a_[i]; }
    std::size_t size() const noexcept { return a_.size(); }
    bool is_zero() const noexcept;

    WCoeffs operator+(const WCoeffs& o) const;
    WCoeffs operator-(const WCoeffs& o) const;
    WCoeffs operator-() const;

    std::string to_string() const;

    friend bool operator==(const WCoeffs&, const WCoeffs&) = default;
    friend auto operator<=>(const WCoeffs&, const WCoeffs&) = default;

private:
    std::vector<std::int64_t> a_;
};

/// A class of the quotient of the weight lattice by the sublattice, named by
/// its fundamental-vector representative.
struct LatticeClass {
    WCoeffs rep;

    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
    friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;
};

/// w_i = (d+1) e_i - sum_j e_j, with i 1-based.
std::vector<std::int64_t> w_vector(std::size_t i, int d);

std::vector<std::int64_t> to_ambient(const WCoeffs& a);
/// Inverse of to_ambient on lattice vectors (sum zero, all coordinates
/// congruent mod d+1); throws NotInLattice otherwise.
WCoeffs from_ambient(std::span<const std::int64_t> v);

bool sublattice_contains(const WCoeffs& a, const KSignature& k);

/// Cyclic row corrections followed by removal of the all-ones excess.
/// Requires a strict signature.
LatticeClass reduce_to_fundamental(std::span<const std::int64_t> a, const KSignature& k);
LatticeClass reduce_to_fundamental(const WCoeffs& a, const KSignature& k);

/// Coefficient vectors with 0 <= a_i <= k_i and some a_i = 0, in
/// lexicographic order.
std::vector<LatticeClass> enumerate_fundamental(const KSignature& k);

/// Order of Z^{n} / (rowspan(rows) + Z (1,...,1)); throws InfiniteQuotient
/// when the augmented lattice is not full rank.
Integer quotient_order_general(const IntMatrix& rows);

/// The translation sublattice used to build a quotient, either from a
/// signature (banded matrix) or from an arbitrary integer matrix whose rows
/// are coefficient vectors. The all-ones vector is always included.
class Sublattice {
public:
    static Sublattice from_signature(const KSignature& k);
    static Sublattice from_rows(const IntMatrix& rows);

    int dim() const noexcept { return static_cast<int>(width_) - 1; }
    std::size_t width() const noexcept { return width_; }
    const IntMatrix& generators() const noexcept { return rows_; }
    const std::optional<KSignature>& signature() const noexcept { return sig_; }
    /// True when reduction uses the fundamental-vector algorithm.
    bool uses_fundamental_vectors() const noexcept { return sig_ && !sig_->is_delta(); }
    const Integer& order() const noexcept { return order_; }

    /// Canonical representative of the class of a raw coefficient vector.
    WCoeffs reduce(std::span<const std::int64_t> a) const;
    WCoeffs reduce(const WCoeffs& a) const { return reduce(a.coeffs()); }
    bool contains(const WCoeffs& a) const;
    /// One representative per class, sorted.
    std::vector<WCoeffs> representatives() const;

private:
    Sublattice() = default;
    WCoeffs reduce_hnf(std::span<const std::int64_t> a) const;

    std::optional<KSignature> sig_;
    IntMatrix rows_;
    std::size_t width_ = 0;
    // HNF of rows + all-ones; upper triangular with positive diagonal.
    std::vector<std::vector<std::int64_t>> hnf_;
    Integer order_;
};

}  // namespace heawood

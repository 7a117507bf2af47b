#include "heawood/tiling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "heawood/error.hpp"

namespace heawood {

namespace {

void require_vertex(std::span<const std::int64_t> x) {
    if (!is_tiling_vertex(x)) throw Error(ErrorKind::Validation, "not a vertex of the tiling");
}

}  // namespace

bool is_tiling_vertex(std::span<const std::int64_t> x) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (n < 2) return false;
    if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != n * (n + 1) / 2) return false;
    std::vector<char> seen(x.size(), 0);
    for (auto v : x) {
        auto r = static_cast<std::size_t>(floor_mod(v, n));
        if (seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

std::vector<Coords> neighbors(std::span<const std::int64_t> x) {
    require_vertex(x);
    const auto n = static_cast<std::int64_t>(x.size());
    std::vector<std::size_t> at_residue(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) at_residue[static_cast<std::size_t>(floor_mod(x[a], n))] = a;
    std::vector<Coords> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t j = at_residue[static_cast<std::size_t>(floor_mod(x[i] - 1, n))];
        Coords y(x.begin(), x.end());
        --y[i];
        ++y[j];
        out.push_back(std::move(y));
    }
    return out;
}

Coords base_permutation(std::span<const std::int64_t> x) {
    const auto n = static_cast<std::int64_t>(x.size());
    Coords p(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) p[a] = floor_mod(x[a] - x[0], n) + 1;
    return p;
}

std::vector<WCoeffs> tiles_containing(std::span<const std::int64_t> x) {
    require_vertex(x);
    const auto n = static_cast<std::int64_t>(x.size());
    std::vector<WCoeffs> out;
    for (std::int64_t c = 0; c < n; ++c) {
        Coords v(x.size());
        for (std::size_t a = 0; a < x.size(); ++a) v[a] = x[a] - (floor_mod(x[a] - c - 1, n) + 1);
        out.push_back(from_ambient(v));
    }
    return out;
}

OrderedPartition::OrderedPartition(std::vector<std::vector<int>> blocks, int n) : n_(n) {
    if (n < 1 || n > 31) throw Error(ErrorKind::Validation, "partition size out of range");
    std::uint32_t all = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw Error(ErrorKind::Validation, "empty block");
        std::uint32_t m = 0;
        for (int e : b) {
            if (e < 1 || e > n) throw Error(ErrorKind::Validation, "block element out of range");
            const std::uint32_t bit = 1u << (e - 1);
            if ((m | all) & bit) throw Error(ErrorKind::Validation, "element repeated across blocks");
            m |= bit;
        }
        all |= m;
        masks_.push_back(m);
    }
    if (all != (1u << n) - 1) throw Error(ErrorKind::Validation, "blocks do not cover 1..n");
}

OrderedPartition OrderedPartition::from_masks(std::vector<std::uint32_t> masks, int n) {
    std::vector<std::vector<int>> blocks;
    for (auto m : masks) {
        std::vector<int> b;
        for (int e = 0; e < 32; ++e)
            if (m & (1u << e)) b.push_back(e + 1);
        blocks.push_back(std::move(b));
    }
    return OrderedPartition(std::move(blocks), n);
}

OrderedPartition OrderedPartition::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    if (text.find('{') != std::string::npos) {
        std::vector<int>* cur = nullptr;
        int value = 0;
        bool have = false;
        auto flush = [&] {
            if (have && cur) cur->push_back(value);
            value = 0;
            have = false;
        };
        for (char ch : text) {
            if (ch == '{') {
                blocks.emplace_back();
                cur = &blocks.back();
            } else if (ch == '}') {
                flush();
                cur = nullptr;
            } else if (ch == ',') {
                flush();
            } else if (ch >= '0' && ch <= '9') {
                if (!cur) throw Error(ErrorKind::Validation, "digit outside a block");
                value = value * 10 + (ch - '0');
                have = true;
            } else if (ch != '[' && ch != ']' && ch != ' ') {
                throw Error(ErrorKind::Validation, "unexpected character in partition");
            }
        }
    } else {
        blocks.emplace_back();
        for (char ch : text) {
            if (ch == '|') blocks.emplace_back();
            else if (ch >= '1' && ch <= '9') blocks.back().push_back(ch - '0');
            else throw Error(ErrorKind::Validation, "unexpected character in partition");
        }
    }
    return OrderedPartition(std::move(blocks), n);
}

std::vector<int> OrderedPartition::block(std::size_t i) const {
    std::vector<int> b;
    for (int e = 0; e < n_; ++e)
        if (masks_.at(i) & (1u << e)) b.push_back(e + 1);
    return b;
}

std::size_t OrderedPartition::block_of(int e) const {
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] & (1u << (e - 1))) return i;
    throw Error(ErrorKind::IndexOutOfRange, "element not in partition");
}

std::string OrderedPartition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (i) s += ',';
        s += '{';
        bool first = true;
        for (int e : block(i)) {
            if (!first) s += ',';
            s += std::to_string(e);
            first = false;
        }
        s += '}';
    }
    return s + "]";
}

std::vector<OrderedPartition> ordered_partitions(int n, int blocks) {
    std::vector<OrderedPartition> out;
    if (blocks < 1 || blocks > n) return out;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
        if (static_cast<int>(cur.size()) == blocks - 1) {
            if (remaining == 0) return;
            cur.push_back(remaining);
            out.push_back(OrderedPartition::from_masks(cur, n));
            cur.pop_back();
            return;
        }
        // Nonempty proper submasks of remaining, leaving room for later blocks.
        for (std::uint32_t s = remaining; s; s = (s - 1) & remaining) {
            if (s == remaining) continue;
            cur.push_back(s);
            self(self, remaining & ~s);
            cur.pop_back();
        }
    };
    if (blocks == 1) {
        out.push_back(OrderedPartition::from_masks({full}, n));
        return out;
    }
    rec(rec, full);
    std::sort(out.begin(), out.end());
    return out;
}

std::string TilingFace::to_string() const { return partition.to_string() + "+" + offset.to_string(); }

TilingFace rotate_partition(const TilingFace& f) {
    const auto& masks = f.partition.masks();
    if (masks.size() <= 1) return f;
    const int n = f.partition.n();
    std::vector<std::uint32_t> rotated(masks.begin() + 1, masks.end());
    rotated.push_back(masks.front());
    std::vector<std::int64_t> shift(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b)
        if (masks.front() & (1u << b)) shift[static_cast<std::size_t>(b)] = 1;
    const WCoeffs offset = f.offset.size() == 0 ? WCoeffs::zero(static_cast<std::size_t>(n)) : f.offset;
    return {OrderedPartition::from_masks(std::move(rotated), n), offset - WCoeffs(std::move(shift))};
}

TilingFace canonical_face(const TilingFace& f) {
    TilingFace g = f;
    if (g.offset.size() == 0) g.offset = WCoeffs::zero(static_cast<std::size_t>(f.partition.n()));
    for (std::size_t i = 0; i < f.partition.size() && !g.is_canonical(); ++i) g = rotate_partition(g);
    return g;
}

std::vector<Coords> face_vertices(const TilingFace& f) {
    const int n = f.partition.n();
    // Values b_{i-1}+1..b_i go to block i; block i's positions take them in
    // every order.
    std::vector<Coords> out{Coords(static_cast<std::size_t>(n), 0)};
    std::int64_t next_value = 1;
    for (std::size_t i = 0; i < f.partition.size(); ++i) {
        const auto positions = f.partition.block(i);
        std::vector<std::int64_t> values(positions.size());
        std::iota(values.begin(), values.end(), next_value);
        next_value += static_cast<std::int64_t>(values.size());
        std::vector<Coords> grown;
        for (const auto& partial : out) {
            auto vals = values;
            do {
                Coords x = partial;
                for (std::size_t t = 0; t < positions.size(); ++t) x[static_cast<std::size_t>(positions[t] - 1)] = vals[t];
                grown.push_back(std::move(x));
            } while (std::next_permutation(vals.begin(), vals.end()));
        }
        out = std::move(grown);
    }
    if (f.offset.size() != 0) {
        const auto v = to_ambient(f.offset);
        for (auto& x : out)
            for (std::size_t a = 0; a < x.size(); ++a) x[a] += v[a];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Interior: return "interior";
        case Membership::Boundary: return "boundary";
        case Membership::Outside: return "outside";
    }
    return "outside";
}

Membership permutahedron_membership(std::span<const std::int64_t> numer, std::int64_t denom,
                                    const WCoeffs& offset) {
    if (denom <= 0) throw Error(ErrorKind::Validation, "denominator must be positive");
    const std::size_t n = numer.size();
    if (n < 2 || n > 20) throw Error(ErrorKind::ShapeError, "point has unsupported length");
    std::vector<std::int64_t> p(numer.begin(), numer.end());
    if (offset.size() != 0) {
        if (offset.size() != n) throw Error(ErrorKind::ShapeError, "offset length does not match point");
        const auto v = to_ambient(offset);
        for (std::size_t a = 0; a < n; ++a) p[a] -= v[a] * denom;
    }
    const auto ni = static_cast<std::int64_t>(n);
    if (std::accumulate(p.begin(), p.end(), std::int64_t{0}) != denom * ni * (ni + 1) / 2)
        throw Error(ErrorKind::SliceError, "point is not on the affine slice");
    bool on_facet = false;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t a = 1; a < full; ++a) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (a & (1u << i)) sum += p[i];
        const auto sz = static_cast<std::int64_t>(std::popcount(a));
        const std::int64_t bound = denom * sz * (sz + 1) / 2;
        if (sum < bound) return Membership::Outside;
        if (sum == bound) on_facet = true;
    }
    return on_facet ? Membership::Boundary : Membership::Interior;
}

Membership permutahedron_membership(std::span<const std::int64_t> x, const WCoeffs& offset) {
    return permutahedron_membership(x, 1, offset);
}

}  // namespace heawood

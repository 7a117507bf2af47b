#include "heawood/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "heawood/error.hpp"

namespace heawood {

namespace {

constexpr std::size_t kReductionGuard = 1'000'000;

std::int64_t to_i64(const Integer& x) {
    if (!x.fits_slong_p()) throw Error(ErrorKind::Internal, "integer does not fit in 64 bits");
    return x.get_si();
}

}  // namespace

KSignature KSignature::strict(std::vector<std::int64_t> k) {
    if (k.size() < 3) throw Error(ErrorKind::InvalidSignature, "need at least three entries (d >= 2)");
    for (auto ki : k)
        if (ki < 1) throw Error(ErrorKind::InvalidSignature, "strict signatures need every k_i >= 1");
    return KSignature(std::move(k), false);
}

KSignature KSignature::delta(std::vector<std::int64_t> k) {
    if (k.size() < 3) throw Error(ErrorKind::InvalidSignature, "need at least three entries (d >= 2)");
    for (auto ki : k)
        if (ki < 0) throw Error(ErrorKind::InvalidSignature, "entries must be nonnegative");
    return KSignature(std::move(k), true);
}

KSignature KSignature::parse(std::string_view text, bool allow_delta) {
    std::vector<std::int64_t> k;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw Error(ErrorKind::InvalidSignature, "cannot parse signature '" + std::string(text) + "'");
        k.push_back(v);
        pos = comma + 1;
    }
    const bool has_zero = std::any_of(k.begin(), k.end(), [](auto v) { return v == 0; });
    if (has_zero && allow_delta) return delta(std::move(k));
    return strict(std::move(k));
}

bool KSignature::is_constant() const noexcept {
    return std::adjacent_find(k_.begin(), k_.end(), std::not_equal_to<>()) == k_.end();
}

std::string KSignature::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(k_[i]);
    }
    return s;
}

WCoeffs::WCoeffs(std::vector<std::int64_t> raw) : a_(std::move(raw)) {
    if (a_.empty()) return;
    const auto m = *std::min_element(a_.begin(), a_.end());
    for (auto& x : a_) x -= m;
}

WCoeffs WCoeffs::unit(std::size_t i, std::size_t n) {
    if (i >= n) throw Error(ErrorKind::IndexOutOfRange, "w index out of range");
    std::vector<std::int64_t> a(n, 0);
    a[i] = 1;
    return WCoeffs(std::move(a));
}

bool WCoeffs::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](auto x) { return x == 0; });
}

WCoeffs WCoeffs::operator+(const WCoeffs& o) const {
    if (o.size() != size()) throw Error(ErrorKind::ShapeError, "coefficient length mismatch");
    std::vector<std::int64_t> r(a_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.a_[i];
    return WCoeffs(std::move(r));
}

WCoeffs WCoeffs::operator-(const WCoeffs& o) const {
    if (o.size() != size()) throw Error(ErrorKind::ShapeError, "coefficient length mismatch");
    std::vector<std::int64_t> r(a_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.a_[i];
    return WCoeffs(std::move(r));
}

WCoeffs WCoeffs::operator-() const {
    std::vector<std::int64_t> r(a_);
    for (auto& x : r) x = -x;
    return WCoeffs(std::move(r));
}

std::string WCoeffs::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a_[i]);
    }
    return s + ")";
}

std::vector<std::int64_t> w_vector(std::size_t i, int d) {
    if (d < 1 || i < 1 || i > static_cast<std::size_t>(d) + 1)
        throw Error(ErrorKind::IndexOutOfRange, "w_i needs 1 <= i <= d+1");
    std::vector<std::int64_t> w(static_cast<std::size_t>(d) + 1, -1);
    w[i - 1] = d;
    return w;
}

std::vector<std::int64_t> to_ambient(const WCoeffs& a) {
    const auto n = static_cast<std::int64_t>(a.size());
    const auto c = a.coeffs();
    const std::int64_t total = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    std::vector<std::int64_t> v(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) v[j] = n * c[j] - total;
    return v;
}

WCoeffs from_ambient(std::span<const std::int64_t> v) {
    if (v.empty()) return {};
    const auto n = static_cast<std::int64_t>(v.size());
    if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) != 0)
        throw Error(ErrorKind::NotInLattice, "coordinates do not sum to zero");
    const auto lo = *std::min_element(v.begin(), v.end());
    std::vector<std::int64_t> a(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if ((v[j] - lo) % n != 0)
            throw Error(ErrorKind::NotInLattice, "coordinate differences are not divisible by d+1");
        a[j] = (v[j] - lo) / n;
    }
    return WCoeffs(std::move(a));
}

bool sublattice_contains(const WCoeffs& a, const KSignature& k) {
    if (a.size() != k.size()) throw Error(ErrorKind::ShapeError, "coefficient length does not match signature");
    // Rows of M_k sum to the all-ones vector, so the all-ones relation is
    // already inside the row span.
    return integer_span_contains(k.matrix(), a.coeffs());
}

LatticeClass reduce_to_fundamental(std::span<const std::int64_t> raw, const KSignature& k) {
    if (k.is_delta()) throw Error(ErrorKind::InvalidSignature, "fundamental vectors need a strict signature");
    if (raw.size() != k.size()) throw Error(ErrorKind::ShapeError, "coefficient length does not match signature");
    const std::size_t n = k.size();
    const WCoeffs start(std::vector<std::int64_t>(raw.begin(), raw.end()));
    std::vector<std::int64_t> a(start.coeffs().begin(), start.coeffs().end());

    // Row i of M_k is (k_i + 1) e_i - k_{i+1} e_{i+1}, indices cyclic.
    std::size_t steps = 0;
    for (;;) {
        std::size_t i = 0;
        while (i < n && a[i] >= 0 && a[i] <= k[i]) ++i;
        if (i == n) break;
        if (++steps > kReductionGuard)
            throw Error(ErrorKind::ReductionFailure, "row corrections did not terminate for " + start.to_string());
        const std::int64_t t = -floor_div(a[i], k[i] + 1);
        const std::size_t next = (i + 1) % n;
        a[i] += t * (k[i] + 1);
        a[next] -= t * k[next];
    }
    // Every entry is in [0, k_i]; subtract ones until an entry hits zero.
    return {WCoeffs(std::move(a))};
}

LatticeClass reduce_to_fundamental(const WCoeffs& a, const KSignature& k) {
    return reduce_to_fundamental(a.coeffs(), k);
}

std::vector<LatticeClass> enumerate_fundamental(const KSignature& k) {
    if (k.is_delta()) throw Error(ErrorKind::InvalidSignature, "fundamental vectors need a strict signature");
    const std::size_t n = k.size();
    std::vector<LatticeClass> out;
    std::vector<std::int64_t> a(n, 0);
    for (;;) {
        if (std::find(a.begin(), a.end(), 0) != a.end()) out.push_back({WCoeffs(a)});
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (a[i] < k[i]) {
                ++a[i];
                std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
    }
}

Integer quotient_order_general(const IntMatrix& rows) {
    std::vector<Integer> ones(rows.cols(), Integer(1));
    const SnfResult snf = smith_normal_form(rows.with_row(ones));
    if (snf.rank() < rows.cols()) throw Error(ErrorKind::InfiniteQuotient, "rows do not span a full-rank lattice");
    Integer order = 1;
    for (const auto& x : snf.diagonal())
        if (x != 0) order *= x;
    return order;
}

Sublattice Sublattice::from_signature(const KSignature& k) {
    Sublattice s = from_rows(k.matrix());
    s.sig_ = k;
    return s;
}

Sublattice Sublattice::from_rows(const IntMatrix& rows) {
    if (rows.cols() < 2) throw Error(ErrorKind::ShapeError, "need at least two columns");
    Sublattice s;
    s.rows_ = rows;
    s.width_ = rows.cols();
    s.order_ = quotient_order_general(rows);
    std::vector<Integer> ones(rows.cols(), Integer(1));
    const IntMatrix h = hermite_normal_form(rows.with_row(ones));
    if (h.rows() != s.width_) throw Error(ErrorKind::Internal, "unexpected Hermite form shape");
    s.hnf_.assign(h.rows(), std::vector<std::int64_t>(h.cols()));
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) s.hnf_[r][c] = to_i64(h(r, c));
    return s;
}

WCoeffs Sublattice::reduce_hnf(std::span<const std::int64_t> raw) const {
    std::vector<std::int64_t> a(raw.begin(), raw.end());
    for (std::size_t r = 0; r < hnf_.size(); ++r) {
        const std::int64_t q = floor_div(a[r], hnf_[r][r]);
        if (q == 0) continue;
        for (std::size_t c = r; c < width_; ++c) a[c] -= q * hnf_[r][c];
    }
    return WCoeffs(std::move(a));
}

WCoeffs Sublattice::reduce(std::span<const std::int64_t> a) const {
    if (a.size() != width_) throw Error(ErrorKind::ShapeError, "coefficient length does not match lattice");
    if (uses_fundamental_vectors()) return reduce_to_fundamental(a, *sig_).rep;
    return reduce_hnf(a);
}

bool Sublattice::contains(const WCoeffs& a) const {
    if (a.size() != width_) throw Error(ErrorKind::ShapeError, "coefficient length does not match lattice");
    std::vector<Integer> ones(width_, Integer(1));
    return integer_span_contains(rows_.with_row(ones), a.coeffs());
}

std::vector<WCoeffs> Sublattice::representatives() const {
    std::vector<WCoeffs> out;
    if (uses_fundamental_vectors()) {
        for (auto& c : enumerate_fundamental(*sig_)) out.push_back(std::move(c.rep));
        return out;
    }
    // The box [0, h_00) x ... x [0, h_nn) on the Hermite diagonal is a
    // complete, irredundant set of residues.
    std::vector<std::int64_t> a(width_, 0);
    for (;;) {
        out.push_back(reduce_hnf(a));
        std::size_t i = width_;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (a[i] + 1 < hnf_[i][i]) {
                ++a[i];
                std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace heawood

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "rcx/errors.hpp"

namespace rcx {

enum class IndexKind { Real, Imaginary };

namespace detail {

// Exact positive rational, small enough for cycle-consistency propagation.
struct Fraction {
    std::int64_t num = 1;
    std::int64_t den = 1;

    void reduce() {
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    static Fraction times_ratio(Fraction f, std::int64_t p, std::int64_t q) {
        // f * p/q with p, q of equal sign (both negative here: off-diagonal entries).
        if (p < 0) {
            p = -p;
            q = -q;
        }
        Fraction r{f.num * p, f.den * q};
        r.reduce();
        return r;
    }
};

} // namespace detail

// Validated Borcherds–Cartan matrix over an ordered finite index set.
// Every entry is an integer, diagonal entries lie in {2} ∪ 2Z_{<=0}, off-diagonal
// entries are <= 0 with a symmetric zero pattern, and the matrix is
// symmetrizable by a positive rational diagonal.
class BorcherdsCartanDatum {
public:
    // Checks all defining conditions; throws rcx::Error naming the violating
    // entry by label pair otherwise.
    static BorcherdsCartanDatum validate(std::vector<std::vector<std::int64_t>> entries,
                                         std::vector<std::string> labels) {
        const std::size_t n = labels.size();
        if (entries.size() != n)
            fail(errc::precondition_violated, "matrix size " + std::to_string(entries.size()) +
                                                  " does not match " + std::to_string(n) + " labels");
        for (const auto& row : entries)
            if (row.size() != n) fail(errc::precondition_violated, "matrix is not square");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (labels[a] == labels[b])
                    fail(errc::precondition_violated, "duplicate index label \"" + labels[a] + "\"");

        auto entry_name = [&](std::size_t a, std::size_t b) {
            return "A[" + labels[a] + "," + labels[b] + "]";
        };

        for (std::size_t a = 0; a < n; ++a) {
            const std::int64_t d = entries[a][a];
            if (d != 2 && d > 0)
                fail(errc::diagonal_invalid,
                     entry_name(a, a) + " = " + std::to_string(d) + " is neither 2 nor <= 0");
            if (d % 2 != 0)
                fail(errc::diagonal_odd, entry_name(a, a) + " = " + std::to_string(d) + " is odd");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                if (entries[a][b] > 0)
                    fail(errc::positive_off_diagonal,
                         entry_name(a, b) + " = " + std::to_string(entries[a][b]) + " is positive");
                if ((entries[a][b] == 0) != (entries[b][a] == 0))
                    fail(errc::asymmetric_zero_pattern,
                         entry_name(a, b) + " = " + std::to_string(entries[a][b]) + " but " +
                             entry_name(b, a) + " = " + std::to_string(entries[b][a]));
            }

        check_symmetrizable(entries, labels);

        BorcherdsCartanDatum datum;
        datum.labels_ = std::move(labels);
        datum.entries_ = std::move(entries);
        datum.kinds_.reserve(n);
        for (std::size_t a = 0; a < n; ++a)
            datum.kinds_.push_back(datum.entries_[a][a] == 2 ? IndexKind::Real
                                                             : IndexKind::Imaginary);
        for (std::size_t a = 0; a < n; ++a) datum.position_[datum.labels_[a]] = a;
        return datum;
    }

    std::size_t rank() const { return labels_.size(); }

    std::int64_t entry(std::size_t a, std::size_t b) const {
        check_index(a);
        check_index(b);
        return entries_[a][b];
    }

    IndexKind kind(std::size_t a) const {
        check_index(a);
        return kinds_[a];
    }
    bool is_real(std::size_t a) const { return kind(a) == IndexKind::Real; }
    bool is_imaginary(std::size_t a) const { return kind(a) == IndexKind::Imaginary; }

    bool purely_imaginary() const {
        for (auto k : kinds_)
            if (k == IndexKind::Real) return false;
        return !kinds_.empty();
    }

    // -A_aa/2; integral because diagonal entries are even.  This is the rigging
    // of every freshly created row at an imaginary index.
    std::int64_t half_diagonal(std::size_t a) const { return entry(a, a) / 2; }

    const std::string& label(std::size_t a) const {
        check_index(a);
        return labels_[a];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t position(std::string_view label) const {
        auto it = position_.find(std::string(label));
        if (it == position_.end())
            fail(errc::unknown_index, "no index labelled \"" + std::string(label) + "\"");
        return it->second;
    }

    void check_index(std::size_t a) const {
        if (a >= labels_.size())
            fail(errc::unknown_index, "index position " + std::to_string(a) + " out of range (rank " +
                                          std::to_string(labels_.size()) + ")");
    }

    friend bool operator==(const BorcherdsCartanDatum& x, const BorcherdsCartanDatum& y) {
        return x.labels_ == y.labels_ && x.entries_ == y.entries_;
    }

private:
    BorcherdsCartanDatum() = default;

    // d_a * A_ab = d_b * A_ba propagated along a spanning forest of the
    // nonzero-pattern graph, then verified on every edge.  Exact arithmetic,
    // no numerics; positivity of the propagated d is automatic because paired
    // off-diagonal entries are both negative.
    static void check_symmetrizable(const std::vector<std::vector<std::int64_t>>& a,
                                    const std::vector<std::string>& labels) {
        const std::size_t n = labels.size();
        std::vector<detail::Fraction> d(n);
        std::vector<int> seen(n, 0);
        for (std::size_t root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            d[root] = detail::Fraction{1, 1};
            std::vector<std::size_t> stack{root};
            while (!stack.empty()) {
                std::size_t u = stack.back();
                stack.pop_back();
                for (std::size_t v = 0; v < n; ++v) {
                    if (v == u || a[u][v] == 0 || seen[v]) continue;
                    // d_u A_uv = d_v A_vu  =>  d_v = d_u * A_uv / A_vu
                    d[v] = detail::Fraction::times_ratio(d[u], a[u][v], a[v][u]);
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                if (a[u][v] == 0) continue;
                // Cross-multiplied d_u A_uv == d_v A_vu.
                const __int128 lhs = static_cast<__int128>(d[u].num) * d[v].den * a[u][v];
                const __int128 rhs = static_cast<__int128>(d[v].num) * d[u].den * a[v][u];
                if (lhs != rhs)
                    fail(errc::not_symmetrizable, "entries A[" + labels[u] + "," + labels[v] +
                                                      "] and A[" + labels[v] + "," + labels[u] +
                                                      "] admit no positive symmetrizing diagonal");
            }
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<std::int64_t>> entries_;
    std::vector<IndexKind> kinds_;
    std::map<std::string, std::size_t, std::less<>> position_;
};

using DatumPtr = std::shared_ptr<const BorcherdsCartanDatum>;

inline DatumPtr make_datum(std::vector<std::vector<std::int64_t>> entries,
                           std::vector<std::string> labels) {
    return std::make_shared<const BorcherdsCartanDatum>(
        BorcherdsCartanDatum::validate(std::move(entries), std::move(labels)));
}

// Element of Q^-, stored as nonnegative coefficients: wt = -Σ_a c_a α_a.
class RootWeight {
public:
    explicit RootWeight(std::size_t rank) : coeffs_(rank, 0) {}

    static RootWeight from_coeffs(std::vector<std::int64_t> coeffs) {
        for (std::size_t a = 0; a < coeffs.size(); ++a)
            if (coeffs[a] < 0)
                fail(errc::negative_coefficient,
                     "coefficient " + std::to_string(coeffs[a]) + " at position " + std::to_string(a));
        RootWeight w(coeffs.size());
        w.coeffs_ = std::move(coeffs);
        return w;
    }

    std::size_t rank() const { return coeffs_.size(); }
    std::int64_t coeff(std::size_t a) const { return coeffs_.at(a); }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    RootWeight plus(const RootWeight& other) const {
        require_same_rank(other);
        RootWeight w(rank());
        for (std::size_t a = 0; a < rank(); ++a) w.coeffs_[a] = coeffs_[a] + other.coeffs_[a];
        return w;
    }

    // wt - α_a (one more box at index a).
    RootWeight minus_simple_root(std::size_t a) const {
        RootWeight w = *this;
        w.coeffs_.at(a) += 1;
        return w;
    }

    // wt + α_a; leaves Q^- when c_a = 0.
    RootWeight plus_simple_root(std::size_t a) const {
        RootWeight w = *this;
        if (w.coeffs_.at(a) == 0)
            fail(errc::negative_coefficient,
                 "adding a simple root at position " + std::to_string(a) + " would leave Q^-");
        w.coeffs_[a] -= 1;
        return w;
    }

    friend bool operator==(const RootWeight& x, const RootWeight& y) { return x.coeffs_ == y.coeffs_; }
    friend bool operator<(const RootWeight& x, const RootWeight& y) { return x.coeffs_ < y.coeffs_; }

private:
    void require_same_rank(const RootWeight& other) const {
        if (other.rank() != rank())
            fail(errc::precondition_violated, "rank mismatch in weight arithmetic");
    }

    std::vector<std::int64_t> coeffs_;
};

// ⟨h_a, wt⟩ = -Σ_b A_ab c_b.
inline std::int64_t pairing(const BorcherdsCartanDatum& datum, std::size_t a, const RootWeight& w) {
    datum.check_index(a);
    if (w.rank() != datum.rank()) fail(errc::precondition_violated, "weight rank mismatch");
    std::int64_t s = 0;
    for (std::size_t b = 0; b < datum.rank(); ++b) s -= datum.entry(a, b) * w.coeff(b);
    return s;
}

// Dominant integral weight λ, tracked only through its coroot pairings ⟨h_a, λ⟩.
class DominantWeight {
public:
    explicit DominantWeight(std::size_t rank) : pairings_(rank, 0) {}

    static DominantWeight from_pairings(std::vector<std::int64_t> pairings) {
        for (std::size_t a = 0; a < pairings.size(); ++a)
            if (pairings[a] < 0)
                fail(errc::precondition_violated,
                     "dominant weight pairing " + std::to_string(pairings[a]) + " at position " +
                         std::to_string(a) + " is negative");
        DominantWeight w(pairings.size());
        w.pairings_ = std::move(pairings);
        return w;
    }

    std::size_t rank() const { return pairings_.size(); }
    std::int64_t pairing(std::size_t a) const { return pairings_.at(a); }
    const std::vector<std::int64_t>& pairings() const { return pairings_; }

    DominantWeight plus(const DominantWeight& other) const {
        if (other.rank() != rank()) fail(errc::precondition_violated, "rank mismatch in weight sum");
        DominantWeight w(rank());
        for (std::size_t a = 0; a < rank(); ++a) w.pairings_[a] = pairings_[a] + other.pairings_[a];
        return w;
    }

    bool is_zero() const {
        for (auto p : pairings_)
            if (p != 0) return false;
        return true;
    }

    friend bool operator==(const DominantWeight& x, const DominantWeight& y) {
        return x.pairings_ == y.pairings_;
    }
    friend bool operator<(const DominantWeight& x, const DominantWeight& y) {
        return x.pairings_ < y.pairings_;
    }

private:
    std::vector<std::int64_t> pairings_;
};

} // namespace rcx

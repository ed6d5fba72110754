#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcx/cartan.hpp"
#include "rcx/errors.hpp"

namespace rcx {

// One rigged row: a part of length >= 1 carrying an integer rigging.  Rows of
// length 0 with rigging 0 are implicit and never stored.
struct RiggedRow {
    std::int64_t length;
    std::int64_t rigging;

    friend bool operator==(const RiggedRow&, const RiggedRow&) = default;
};

// Multiset of rigged rows for a single index, kept in canonical order
// (length descending, then rigging descending) so that equality and ordering
// of configurations are multiset equality and a fixed total order.
class RiggedPartition {
public:
    RiggedPartition() = default;

    static RiggedPartition from_rows(std::vector<RiggedRow> rows) {
        for (const auto& r : rows)
            if (r.length < 1)
                fail(errc::precondition_violated,
                     "row length " + std::to_string(r.length) + " is not positive");
        RiggedPartition p;
        p.rows_ = std::move(rows);
        p.normalize();
        return p;
    }

    const std::vector<RiggedRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    std::size_t row_count() const { return rows_.size(); }

    std::int64_t box_count() const {
        std::int64_t s = 0;
        for (const auto& r : rows_) s += r.length;
        return s;
    }

    bool is_column() const {
        for (const auto& r : rows_)
            if (r.length != 1) return false;
        return true;
    }

    std::optional<std::int64_t> min_rigging() const {
        std::optional<std::int64_t> m;
        for (const auto& r : rows_)
            if (!m || r.rigging < *m) m = r.rigging;
        return m;
    }

    // Descending list of riggings; meaningful for columns.
    std::vector<std::int64_t> riggings_descending() const {
        std::vector<std::int64_t> v;
        v.reserve(rows_.size());
        for (const auto& r : rows_) v.push_back(r.rigging);
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    }

    friend bool operator==(const RiggedPartition& x, const RiggedPartition& y) {
        return x.rows_ == y.rows_;
    }
    friend bool operator<(const RiggedPartition& x, const RiggedPartition& y) {
        return std::lexicographical_compare(
            x.rows_.begin(), x.rows_.end(), y.rows_.begin(), y.rows_.end(),
            [](const RiggedRow& a, const RiggedRow& b) {
                if (a.length != b.length) return a.length > b.length;
                return a.rigging > b.rigging;
            });
    }

private:
    friend class RiggedConfiguration;

    void normalize() {
        std::sort(rows_.begin(), rows_.end(), [](const RiggedRow& a, const RiggedRow& b) {
            if (a.length != b.length) return a.length > b.length;
            return a.rigging > b.rigging;
        });
    }

    std::vector<RiggedRow> rows_;
};

// A rigged configuration over a Borcherds–Cartan datum: one rigged partition
// per index.  Values are immutable; the Kashiwara operators return fresh
// configurations.
//
// Operator conventions (with ℓ the length, before the change, of the row the
// operator acts on, and x the selected rigging/corigging):
//
//   f_a   adds a box to a maximal-length row whose rigging is
//         x = min(0, riggings); the new rigging is x - A_aa/2 and every other
//         rigging in a length-i row of index b shifts by -A_ba for i > ℓ, so
//         that all other coriggings are preserved.
//   e_a   removes a box from the matching row (minimal length, rigging x < 0
//         for real a; the rigging -A_aa/2 row for imaginary a); the new
//         rigging is x + A_aa/2 and other riggings shift by +A_ba for i >= ℓ.
//   f*_a  is the corigging mirror: it acts on a maximal-length row of minimal
//         corigging x = min(0, coriggings), sets the new corigging to
//         x - A_aa/2, and keeps every other rigging fixed.
//   e*_a  removes dually (new corigging x + A_aa/2), keeping other riggings
//         fixed.
class RiggedConfiguration {
public:
    explicit RiggedConfiguration(DatumPtr datum)
        : datum_(std::move(datum)), parts_(datum_->rank()) {}

    static RiggedConfiguration from_parts(DatumPtr datum, std::vector<RiggedPartition> parts) {
        if (parts.size() != datum->rank())
            fail(errc::precondition_violated, "part count does not match datum rank");
        RiggedConfiguration rc(std::move(datum));
        rc.parts_ = std::move(parts);
        return rc;
    }

    const BorcherdsCartanDatum& datum() const { return *datum_; }
    const DatumPtr& datum_ptr() const { return datum_; }
    std::size_t rank() const { return parts_.size(); }

    const RiggedPartition& part(std::size_t a) const {
        datum_->check_index(a);
        return parts_[a];
    }

    bool is_empty() const {
        for (const auto& p : parts_)
            if (!p.empty()) return false;
        return true;
    }

    std::int64_t total_boxes() const {
        std::int64_t s = 0;
        for (const auto& p : parts_) s += p.box_count();
        return s;
    }

    // Vacancy number p_i^(a) = -Σ_b A_ab Σ_rows min(i, row length), i >= 1.
    std::int64_t vacancy(std::size_t a, std::int64_t i) const {
        datum_->check_index(a);
        if (i < 1) fail(errc::precondition_violated, "vacancy number index must be >= 1");
        std::int64_t s = 0;
        for (std::size_t b = 0; b < rank(); ++b) {
            std::int64_t boxes = 0;
            for (const auto& r : parts_[b].rows_) boxes += std::min(i, r.length);
            s -= datum_->entry(a, b) * boxes;
        }
        return s;
    }

    // p_∞^(a) = -Σ_b A_ab |ν^(b)| = ⟨h_a, wt⟩.
    std::int64_t vacancy_infinity(std::size_t a) const {
        datum_->check_index(a);
        std::int64_t s = 0;
        for (std::size_t b = 0; b < rank(); ++b) s -= datum_->entry(a, b) * parts_[b].box_count();
        return s;
    }

    std::int64_t corigging(std::size_t a, const RiggedRow& row) const {
        return vacancy(a, row.length) - row.rigging;
    }

    std::optional<std::int64_t> min_corigging(std::size_t a) const {
        datum_->check_index(a);
        std::optional<std::int64_t> m;
        for (const auto& r : parts_[a].rows_) {
            std::int64_t c = corigging(a, r);
            if (!m || c < *m) m = c;
        }
        return m;
    }

    RootWeight weight() const {
        std::vector<std::int64_t> c(rank());
        for (std::size_t a = 0; a < rank(); ++a) c[a] = parts_[a].box_count();
        return RootWeight::from_coeffs(std::move(c));
    }

    // --- crystal operators -------------------------------------------------

    RiggedConfiguration f(std::size_t a) const {
        datum_->check_index(a);
        const std::int64_t x = std::min<std::int64_t>(0, part_min_rigging(a));
        // Maximal-length row with rigging x; absent means the implicit
        // zero-length row, i.e. a new row is created.
        std::int64_t ell = 0;
        int chosen = -1;
        for (std::size_t r = 0; r < parts_[a].rows_.size(); ++r) {
            const auto& row = parts_[a].rows_[r];
            if (row.rigging == x && row.length > ell) {
                ell = row.length;
                chosen = static_cast<int>(r);
            }
        }
        RiggedConfiguration out(datum_);
        for (std::size_t b = 0; b < rank(); ++b) {
            auto& rows = out.parts_[b].rows_;
            for (std::size_t r = 0; r < parts_[b].rows_.size(); ++r) {
                if (b == a && static_cast<int>(r) == chosen) continue;
                RiggedRow row = parts_[b].rows_[r];
                if (row.length > ell) row.rigging -= datum_->entry(b, a);
                rows.push_back(row);
            }
        }
        out.parts_[a].rows_.push_back(RiggedRow{ell + 1, x - datum_->half_diagonal(a)});
        for (auto& p : out.parts_) p.normalize();
        return out;
    }

    std::optional<RiggedConfiguration> e(std::size_t a) const {
        datum_->check_index(a);
        std::int64_t x;
        if (datum_->is_real(a)) {
            x = std::min<std::int64_t>(0, part_min_rigging(a));
            if (x == 0) return std::nullopt;
        } else {
            if (parts_[a].empty()) return std::nullopt;
            x = *parts_[a].min_rigging();
            if (x != -datum_->half_diagonal(a)) return std::nullopt;
        }
        // Minimal-length row with rigging x.
        std::int64_t ell = 0;
        int chosen = -1;
        for (std::size_t r = 0; r < parts_[a].rows_.size(); ++r) {
            const auto& row = parts_[a].rows_[r];
            if (row.rigging == x && (chosen < 0 || row.length < ell)) {
                ell = row.length;
                chosen = static_cast<int>(r);
            }
        }
        RiggedConfiguration out(datum_);
        for (std::size_t b = 0; b < rank(); ++b) {
            auto& rows = out.parts_[b].rows_;
            for (std::size_t r = 0; r < parts_[b].rows_.size(); ++r) {
                if (b == a && static_cast<int>(r) == chosen) continue;
                RiggedRow row = parts_[b].rows_[r];
                if (row.length >= ell) row.rigging += datum_->entry(b, a);
                rows.push_back(row);
            }
        }
        if (ell - 1 >= 1)
            out.parts_[a].rows_.push_back(RiggedRow{ell - 1, x + datum_->half_diagonal(a)});
        for (auto& p : out.parts_) p.normalize();
        return out;
    }

    RiggedConfiguration f_star(std::size_t a) const {
        datum_->check_index(a);
        const std::int64_t x = std::min<std::int64_t>(0, part_min_corigging(a));
        std::int64_t ell = 0;
        int chosen = -1;
        for (std::size_t r = 0; r < parts_[a].rows_.size(); ++r) {
            const auto& row = parts_[a].rows_[r];
            if (corigging(a, row) == x && row.length > ell) {
                ell = row.length;
                chosen = static_cast<int>(r);
            }
        }
        RiggedConfiguration out = *this;
        auto& rows = out.parts_[a].rows_;
        if (chosen < 0) {
            rows.push_back(RiggedRow{1, 0});
            chosen = static_cast<int>(rows.size()) - 1;
        } else {
            rows[chosen].length += 1;
        }
        // Rigging chosen so the corigging in the new shape is x - A_aa/2.
        rows[chosen].rigging =
            out.vacancy(a, ell + 1) - (x - datum_->half_diagonal(a));
        out.parts_[a].normalize();
        return out;
    }

    std::optional<RiggedConfiguration> e_star(std::size_t a) const {
        datum_->check_index(a);
        std::int64_t x;
        if (datum_->is_real(a)) {
            x = std::min<std::int64_t>(0, part_min_corigging(a));
            if (x == 0) return std::nullopt;
        } else {
            if (parts_[a].empty()) return std::nullopt;
            x = *min_corigging(a);
            if (x != -datum_->half_diagonal(a)) return std::nullopt;
        }
        std::int64_t ell = 0;
        int chosen = -1;
        for (std::size_t r = 0; r < parts_[a].rows_.size(); ++r) {
            const auto& row = parts_[a].rows_[r];
            if (corigging(a, row) == x && (chosen < 0 || row.length < ell)) {
                ell = row.length;
                chosen = static_cast<int>(r);
            }
        }
        RiggedConfiguration out = *this;
        auto& rows = out.parts_[a].rows_;
        if (ell - 1 >= 1) {
            rows[chosen].length -= 1;
            // Dual of e_a: the new corigging is x + A_aa/2.
            rows[chosen].rigging =
                out.vacancy(a, ell - 1) - (x + datum_->half_diagonal(a));
        } else {
            rows.erase(rows.begin() + chosen);
        }
        out.parts_[a].normalize();
        return out;
    }

    // --- statistics ---------------------------------------------------------

    std::int64_t epsilon(std::size_t a) const {
        datum_->check_index(a);
        if (datum_->is_imaginary(a)) return 0;
        return -std::min<std::int64_t>(0, part_min_rigging(a));
    }

    std::int64_t phi(std::size_t a) const { return vacancy_infinity(a) + epsilon(a); }

    std::int64_t epsilon_star(std::size_t a) const {
        datum_->check_index(a);
        if (datum_->is_imaginary(a)) return 0;
        return -std::min<std::int64_t>(0, part_min_corigging(a));
    }

    std::int64_t phi_star(std::size_t a) const { return vacancy_infinity(a) + epsilon_star(a); }

    // max{k >= 0 : e_a^k != 0}, by iteration.  Equals epsilon for real a.
    std::int64_t tilde_epsilon(std::size_t a) const {
        std::int64_t k = 0;
        RiggedConfiguration cur = *this;
        while (auto up = cur.e(a)) {
            cur = std::move(*up);
            ++k;
        }
        return k;
    }

    std::int64_t tilde_epsilon_star(std::size_t a) const {
        std::int64_t k = 0;
        RiggedConfiguration cur = *this;
        while (auto up = cur.e_star(a)) {
            cur = std::move(*up);
            ++k;
        }
        return k;
    }

    // The jump statistic κ_a, controlling when f_a and f*_a coincide.
    std::int64_t kappa(std::size_t a) const {
        datum_->check_index(a);
        if (datum_->is_real(a)) return epsilon(a) + epsilon_star(a) + vacancy_infinity(a);
        return epsilon(a) + tilde_epsilon_star(a) * datum_->entry(a, a) + vacancy_infinity(a);
    }

    std::int64_t kappa_star(std::size_t a) const {
        datum_->check_index(a);
        if (datum_->is_real(a)) return epsilon_star(a) + epsilon(a) + vacancy_infinity(a);
        return epsilon_star(a) + tilde_epsilon(a) * datum_->entry(a, a) + vacancy_infinity(a);
    }

    // The star involution: every rigging x of a length-i row becomes the
    // corigging p_i^(a) - x.  Shapes, and hence vacancy numbers, are unchanged.
    RiggedConfiguration star() const {
        RiggedConfiguration out(datum_);
        for (std::size_t a = 0; a < rank(); ++a) {
            for (const auto& row : parts_[a].rows_)
                out.parts_[a].rows_.push_back(RiggedRow{row.length, corigging(a, row)});
            out.parts_[a].normalize();
        }
        return out;
    }

    // Shape constraints satisfied by every element of RC(∞): imaginary
    // partitions are columns with riggings >= -A_aa/2.  Checked on demand so
    // foreign configurations remain representable.
    bool is_infinity_candidate() const {
        for (std::size_t a = 0; a < rank(); ++a) {
            if (!datum_->is_imaginary(a)) continue;
            for (const auto& row : parts_[a].rows_) {
                if (row.length != 1) return false;
                if (row.rigging < -datum_->half_diagonal(a)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const RiggedConfiguration& x, const RiggedConfiguration& y) {
        return x.parts_ == y.parts_;
    }
    friend bool operator!=(const RiggedConfiguration& x, const RiggedConfiguration& y) {
        return !(x == y);
    }
    friend bool operator<(const RiggedConfiguration& x, const RiggedConfiguration& y) {
        return x.parts_ < y.parts_;
    }

private:
    std::int64_t part_min_rigging(std::size_t a) const {
        auto m = parts_[a].min_rigging();
        return m ? *m : 0;
    }
    std::int64_t part_min_corigging(std::size_t a) const {
        auto m = min_corigging(a);
        return m ? *m : 0;
    }

    DatumPtr datum_;
    std::vector<RiggedPartition> parts_;
};

inline RiggedConfiguration empty_rc(DatumPtr datum) { return RiggedConfiguration(std::move(datum)); }

} // namespace rcx

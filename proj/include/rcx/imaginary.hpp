#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rcx/rigged.hpp"

namespace rcx {

// Maximal run of riggings in a purely imaginary column whose consecutive
// differences all equal -A_aa.
struct AString {
    std::size_t index;
    std::vector<std::int64_t> riggings; // descending

    std::int64_t size() const { return static_cast<std::int64_t>(riggings.size()); }
    std::int64_t min_rigging() const { return riggings.back(); }

    friend bool operator==(const AString&, const AString&) = default;
};

// Unique decomposition of the rigging list of ν^(a) into maximal arithmetic
// runs of step -A_aa.
inline std::vector<AString> a_strings(const RiggedConfiguration& rc, std::size_t a) {
    rc.datum().check_index(a);
    if (!rc.datum().is_imaginary(a))
        fail(errc::not_imaginary, "index " + rc.datum().label(a) + " is real");
    if (!rc.part(a).is_column())
        fail(errc::not_column, "partition at index " + rc.datum().label(a) + " is not a column");
    const std::int64_t step = -rc.datum().entry(a, a);
    std::vector<AString> out;
    for (std::int64_t x : rc.part(a).riggings_descending()) {
        if (!out.empty() && out.back().riggings.back() - x == step)
            out.back().riggings.push_back(x);
        else
            out.push_back(AString{a, {x}});
    }
    return out;
}

struct BalanceReport {
    bool balanced = false;
    std::vector<AString> witness; // admissible total order when balanced
};

namespace detail {

inline void require_purely_imaginary(const BorcherdsCartanDatum& datum) {
    if (!datum.purely_imaginary())
        fail(errc::not_purely_imaginary, "datum has real indices");
}

// Required smallest rigging of the next a-string, given the boxes consumed so
// far per index: -A_aa/2 - Σ_b A_ab * consumed_b.
inline std::int64_t required_min(const BorcherdsCartanDatum& datum, std::size_t a,
                                 const std::vector<std::int64_t>& consumed) {
    std::int64_t req = -datum.half_diagonal(a);
    for (std::size_t b = 0; b < datum.rank(); ++b) req -= datum.entry(a, b) * consumed[b];
    return req;
}

} // namespace detail

// Decides whether an admissible total order on all a-strings exists, with
// backtracking over the (tiny) choice tree; returns a witness order when it
// does.  The empty configuration is vacuously balanced.
inline BalanceReport is_balanced(const RiggedConfiguration& rc) {
    detail::require_purely_imaginary(rc.datum());
    BalanceReport report;
    for (std::size_t a = 0; a < rc.rank(); ++a)
        if (!rc.part(a).is_column()) return report;

    std::vector<AString> strings;
    for (std::size_t a = 0; a < rc.rank(); ++a) {
        auto part = a_strings(rc, a);
        strings.insert(strings.end(), part.begin(), part.end());
    }
    if (strings.size() > 60) fail(errc::precondition_violated, "too many strings to order");

    const BorcherdsCartanDatum& datum = rc.datum();
    std::set<std::uint64_t> dead;
    std::vector<std::size_t> order;
    std::vector<std::int64_t> consumed(rc.rank(), 0);

    std::function<bool(std::uint64_t)> search = [&](std::uint64_t used) -> bool {
        if (order.size() == strings.size()) return true;
        if (dead.count(used)) return false;
        for (std::size_t i = 0; i < strings.size(); ++i) {
            if (used & (std::uint64_t{1} << i)) continue;
            if (strings[i].min_rigging() != detail::required_min(datum, strings[i].index, consumed))
                continue;
            order.push_back(i);
            consumed[strings[i].index] += strings[i].size();
            if (search(used | (std::uint64_t{1} << i))) return true;
            consumed[strings[i].index] -= strings[i].size();
            order.pop_back();
        }
        dead.insert(used);
        return false;
    };

    report.balanced = search(0);
    if (report.balanced)
        for (std::size_t i : order) report.witness.push_back(strings[i]);
    return report;
}

// All balanced rigged configurations with at most max_boxes boxes, enumerated
// by extending witness orders one string element at a time (each placed row
// carries the rigging forced by the boxes already present) and filtering with
// the balance check.  This walks a different path than the crystal operators:
// placed riggings are never revised, whereas f_a bumps existing rows.
inline std::set<RiggedConfiguration> enumerate_balanced(const DatumPtr& datum,
                                                        std::int64_t max_boxes) {
    detail::require_purely_imaginary(*datum);
    std::set<RiggedConfiguration> reachable;
    std::vector<RiggedConfiguration> frontier{empty_rc(datum)};
    reachable.insert(frontier.front());
    for (std::int64_t boxes = 0; boxes < max_boxes; ++boxes) {
        std::vector<RiggedConfiguration> next;
        for (const auto& rc : frontier) {
            std::vector<std::int64_t> consumed(datum->rank());
            for (std::size_t b = 0; b < datum->rank(); ++b) consumed[b] = rc.part(b).box_count();
            for (std::size_t a = 0; a < datum->rank(); ++a) {
                std::vector<RiggedRow> rows = rc.part(a).rows();
                rows.push_back(RiggedRow{1, detail::required_min(*datum, a, consumed)});
                std::vector<RiggedPartition> parts;
                for (std::size_t b = 0; b < datum->rank(); ++b)
                    parts.push_back(b == a ? RiggedPartition::from_rows(rows) : rc.part(b));
                RiggedConfiguration ext =
                    RiggedConfiguration::from_parts(datum, std::move(parts));
                if (reachable.insert(ext).second) next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    std::set<RiggedConfiguration> balanced;
    for (const auto& rc : reachable)
        if (is_balanced(rc).balanced) balanced.insert(rc);
    return balanced;
}

struct BalancedEqualsGeneratedReport {
    bool ok = false;
    std::size_t generated_count = 0;
    std::size_t balanced_count = 0;
    std::vector<RiggedConfiguration> only_generated;
    std::vector<RiggedConfiguration> only_balanced;
};

// The purely-imaginary characterization: the set of balanced rigged
// configurations with at most `depth` boxes must coincide with the BFS
// truncation of RC(∞).
inline BalancedEqualsGeneratedReport balanced_equals_generated(const DatumPtr& datum,
                                                               std::int64_t depth) {
    detail::require_purely_imaginary(*datum);
    BalancedEqualsGeneratedReport report;

    std::set<RiggedConfiguration> generated;
    std::vector<RiggedConfiguration> frontier{empty_rc(datum)};
    generated.insert(frontier.front());
    for (std::int64_t d = 0; d < depth; ++d) {
        std::vector<RiggedConfiguration> next;
        for (const auto& rc : frontier)
            for (std::size_t a = 0; a < datum->rank(); ++a) {
                RiggedConfiguration fv = rc.f(a);
                if (generated.insert(fv).second) next.push_back(std::move(fv));
            }
        frontier = std::move(next);
    }

    std::set<RiggedConfiguration> balanced = enumerate_balanced(datum, depth);
    report.generated_count = generated.size();
    report.balanced_count = balanced.size();
    for (const auto& rc : generated)
        if (!balanced.count(rc)) report.only_generated.push_back(rc);
    for (const auto& rc : balanced)
        if (!generated.count(rc)) report.only_balanced.push_back(rc);
    report.ok = report.only_generated.empty() && report.only_balanced.empty();
    return report;
}

// Whether f_a and f_b agree in either order on every element of the depth
// truncation.  By the commutation dichotomy this must come out as A_ab = 0.
inline bool operators_commute(const DatumPtr& datum, std::size_t a, std::size_t b,
                              std::int64_t depth) {
    detail::require_purely_imaginary(*datum);
    datum->check_index(a);
    datum->check_index(b);
    std::set<RiggedConfiguration> seen;
    std::vector<RiggedConfiguration> frontier{empty_rc(datum)};
    seen.insert(frontier.front());
    for (std::int64_t d = 0; d <= depth; ++d) {
        for (const auto& rc : frontier)
            if (!(rc.f(a).f(b) == rc.f(b).f(a))) return false;
        if (d == depth) break;
        std::vector<RiggedConfiguration> next;
        for (const auto& rc : frontier)
            for (std::size_t c = 0; c < datum->rank(); ++c) {
                RiggedConfiguration fv = rc.f(c);
                if (seen.insert(fv).second) next.push_back(std::move(fv));
            }
        frontier = std::move(next);
    }
    return true;
}

// --- right-angled Artin monoid -------------------------------------------------

// A word in the generators f_a, applied to a configuration left to right
// (the first letter acts first).
struct MonoidWord {
    std::vector<std::size_t> letters;

    friend bool operator==(const MonoidWord&, const MonoidWord&) = default;
    friend bool operator<(const MonoidWord& x, const MonoidWord& y) {
        return x.letters < y.letters;
    }
};

inline RiggedConfiguration apply_monoid_word(const DatumPtr& datum, const MonoidWord& word) {
    RiggedConfiguration rc = empty_rc(datum);
    for (std::size_t a : word.letters) rc = rc.f(a);
    return rc;
}

// Lexicographically least representative under the commutation congruence
// f_a f_b = f_b f_a (A_ab = 0): greedily extract, among the letters that can
// be commuted to the front, the smallest one.
inline MonoidWord monoid_normal_form(const BorcherdsCartanDatum& datum, MonoidWord word) {
    detail::require_purely_imaginary(datum);
    for (std::size_t a : word.letters) datum.check_index(a);
    std::vector<std::size_t> rest = std::move(word.letters);
    std::vector<std::size_t> out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        std::size_t best_pos = rest.size();
        for (std::size_t j = 0; j < rest.size(); ++j) {
            bool movable = true;
            for (std::size_t k = 0; k < j && movable; ++k)
                if (datum.entry(rest[j], rest[k]) != 0) movable = false;
            if (movable && (best_pos == rest.size() || rest[j] < rest[best_pos])) best_pos = j;
        }
        out.push_back(rest[best_pos]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_pos));
    }
    return MonoidWord{std::move(out)};
}

struct CayleyReport {
    bool ok = true;
    std::size_t monoid_nodes = 0;
    std::size_t crystal_nodes = 0;
    std::string detail;
};

// Builds the radius-`depth` ball of the Cayley graph (nodes: normal forms,
// edges: right multiplication by a generator) and checks that
// word ↦ f_word(ν_∅) is a color-preserving isomorphism onto the crystal ball.
inline CayleyReport cayley_isomorphism_check(const DatumPtr& datum, std::int64_t depth) {
    detail::require_purely_imaginary(*datum);
    CayleyReport report;
    auto fail_with = [&](std::string why) {
        report.ok = false;
        report.detail = std::move(why);
        return report;
    };

    std::set<MonoidWord> words;
    std::map<MonoidWord, RiggedConfiguration> image;
    std::vector<MonoidWord> frontier{MonoidWord{}};
    words.insert(frontier.front());
    image.emplace(frontier.front(), empty_rc(datum));

    std::set<RiggedConfiguration> crystal;
    crystal.insert(empty_rc(datum));

    for (std::int64_t d = 0; d < depth; ++d) {
        std::vector<MonoidWord> next;
        for (const auto& w : frontier) {
            const RiggedConfiguration& rc = image.at(w);
            for (std::size_t a = 0; a < datum->rank(); ++a) {
                MonoidWord extended = w;
                extended.letters.push_back(a);
                MonoidWord nf = monoid_normal_form(*datum, extended);
                RiggedConfiguration target = rc.f(a);
                crystal.insert(target);
                auto [it, inserted] = image.emplace(nf, target);
                if (!inserted) {
                    // Same monoid element reached twice; images must agree.
                    if (!(it->second == target))
                        return fail_with("normal form does not determine the crystal element");
                } else {
                    words.insert(nf);
                    next.push_back(std::move(nf));
                }
            }
        }
        frontier = std::move(next);
    }

    report.monoid_nodes = words.size();
    report.crystal_nodes = crystal.size();
    if (words.size() != crystal.size())
        return fail_with("ball sizes differ: " + std::to_string(words.size()) + " words vs " +
                         std::to_string(crystal.size()) + " configurations");
    std::set<RiggedConfiguration> distinct_images;
    for (const auto& [w, rc] : image) distinct_images.insert(rc);
    if (distinct_images.size() != words.size())
        return fail_with("word action is not injective on normal forms");
    return report;
}

} // namespace rcx

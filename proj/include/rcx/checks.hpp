#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcx/serialize.hpp"

namespace rcx {

// Operator table used by the checkers.  The default entries are the library
// implementations; tests substitute deliberately broken operators to prove the
// checkers can fail.
struct RcOps {
    std::function<RiggedConfiguration(const RiggedConfiguration&, std::size_t)> f;
    std::function<std::optional<RiggedConfiguration>(const RiggedConfiguration&, std::size_t)> e;
    std::function<RiggedConfiguration(const RiggedConfiguration&, std::size_t)> f_star;
    std::function<std::optional<RiggedConfiguration>(const RiggedConfiguration&, std::size_t)> e_star;
    std::function<std::int64_t(const RiggedConfiguration&, std::size_t)> epsilon;
    std::function<std::int64_t(const RiggedConfiguration&, std::size_t)> phi;
    std::function<std::int64_t(const RiggedConfiguration&, std::size_t)> epsilon_star;
    std::function<std::int64_t(const RiggedConfiguration&, std::size_t)> phi_star;

    static RcOps standard() {
        RcOps ops;
        ops.f = [](const RiggedConfiguration& v, std::size_t a) { return v.f(a); };
        ops.e = [](const RiggedConfiguration& v, std::size_t a) { return v.e(a); };
        ops.f_star = [](const RiggedConfiguration& v, std::size_t a) { return v.f_star(a); };
        ops.e_star = [](const RiggedConfiguration& v, std::size_t a) { return v.e_star(a); };
        ops.epsilon = [](const RiggedConfiguration& v, std::size_t a) { return v.epsilon(a); };
        ops.phi = [](const RiggedConfiguration& v, std::size_t a) { return v.phi(a); };
        ops.epsilon_star = [](const RiggedConfiguration& v, std::size_t a) {
            return v.epsilon_star(a);
        };
        ops.phi_star = [](const RiggedConfiguration& v, std::size_t a) { return v.phi_star(a); };
        return ops;
    }

    std::int64_t tilde_epsilon(const RiggedConfiguration& v, std::size_t a) const {
        std::int64_t k = 0;
        RiggedConfiguration cur = v;
        while (auto up = e(cur, a)) {
            cur = std::move(*up);
            ++k;
        }
        return k;
    }
    std::int64_t tilde_epsilon_star(const RiggedConfiguration& v, std::size_t a) const {
        std::int64_t k = 0;
        RiggedConfiguration cur = v;
        while (auto up = e_star(cur, a)) {
            cur = std::move(*up);
            ++k;
        }
        return k;
    }
    std::int64_t kappa(const RiggedConfiguration& v, std::size_t a) const {
        if (v.datum().is_real(a))
            return epsilon(v, a) + epsilon_star(v, a) + v.vacancy_infinity(a);
        return epsilon(v, a) + tilde_epsilon_star(v, a) * v.datum().entry(a, a) +
               v.vacancy_infinity(a);
    }
    std::int64_t kappa_star(const RiggedConfiguration& v, std::size_t a) const {
        if (v.datum().is_real(a))
            return epsilon_star(v, a) + epsilon(v, a) + v.vacancy_infinity(a);
        return epsilon_star(v, a) + tilde_epsilon(v, a) * v.datum().entry(a, a) +
               v.vacancy_infinity(a);
    }
};

struct CheckReport {
    std::string condition;
    bool pass = true;
    std::size_t checked = 0;
    std::int64_t interior_depth = 0;
    std::string counterexample; // canonical serialization plus index info; empty iff pass

    void record_failure(const RiggedConfiguration& v, const std::string& info) {
        if (!pass) return;
        pass = false;
        counterexample = canonical_node_key(v.datum(), CrystalNode::rc(v)) + " " + info;
    }
};

namespace detail {

// Layered closure of the empty configuration under the table's f (and
// optionally f*) operators.  Layer = number of operator applications = box
// count; per-layer sets keep the enumeration deterministic.
inline std::vector<std::vector<RiggedConfiguration>> closure_layers(const DatumPtr& datum,
                                                                    std::int64_t depth,
                                                                    const RcOps& ops,
                                                                    bool with_star) {
    std::vector<std::vector<RiggedConfiguration>> layers;
    std::set<RiggedConfiguration> seen;
    layers.push_back({empty_rc(datum)});
    seen.insert(layers[0][0]);
    for (std::int64_t d = 1; d <= depth; ++d) {
        std::set<RiggedConfiguration> next;
        for (const auto& v : layers[d - 1]) {
            for (std::size_t a = 0; a < datum->rank(); ++a) {
                RiggedConfiguration fv = ops.f(v, a);
                if (!seen.count(fv)) next.insert(std::move(fv));
                if (with_star) {
                    RiggedConfiguration fsv = ops.f_star(v, a);
                    if (!seen.count(fsv)) next.insert(std::move(fsv));
                }
            }
        }
        layers.emplace_back(next.begin(), next.end());
        seen.insert(next.begin(), next.end());
        if (layers.back().empty()) break;
    }
    return layers;
}

} // namespace detail

// Verifies the abstract-crystal axioms on the closure of the empty
// configuration under f and f*, for both the plain and the star operator
// family.  Single-operator images are asserted on elements at least one layer
// inside the truncation.
inline std::vector<CheckReport> check_axioms(DatumPtr datum, std::int64_t depth,
                                             const RcOps& ops = RcOps::standard()) {
    if (depth < 1) fail(errc::depth_too_small, "check_axioms requires depth >= 1");
    const auto layers = detail::closure_layers(datum, depth, ops, /*with_star=*/true);
    const std::int64_t interior = depth - 1;

    struct Family {
        std::string tag;
        std::function<RiggedConfiguration(const RiggedConfiguration&, std::size_t)> f;
        std::function<std::optional<RiggedConfiguration>(const RiggedConfiguration&, std::size_t)> e;
        std::function<std::int64_t(const RiggedConfiguration&, std::size_t)> eps;
        std::function<std::int64_t(const RiggedConfiguration&, std::size_t)> phi;
    };
    const std::vector<Family> families = {
        {"", ops.f, ops.e, ops.epsilon, ops.phi},
        {"*", ops.f_star, ops.e_star, ops.epsilon_star, ops.phi_star},
    };

    std::vector<CheckReport> reports;
    for (const auto& fam : families) {
        CheckReport wt_e{"axiom 1: wt(e" + fam.tag + " v) = wt(v) + alpha"};
        CheckReport wt_f{"axiom 2: wt(f" + fam.tag + " v) = wt(v) - alpha"};
        CheckReport phi_eps{"axiom 3: phi" + fam.tag + " = eps" + fam.tag + " + <h, wt>"};
        CheckReport inverse{"axiom 4: e" + fam.tag + " and f" + fam.tag + " are mutually inverse"};
        CheckReport e_shift{"axiom 5: statistics shift under e" + fam.tag};
        CheckReport f_shift{"axiom 6: statistics shift under f" + fam.tag};
        CheckReport never_null{"axiom 7: phi" + fam.tag + " = -inf never occurs"};
        for (CheckReport* r : {&wt_e, &wt_f, &phi_eps, &inverse, &e_shift, &f_shift, &never_null})
            r->interior_depth = interior;

        for (std::int64_t d = 0; d < static_cast<std::int64_t>(layers.size()) && d <= interior;
             ++d) {
            for (const auto& v : layers[d]) {
                for (std::size_t a = 0; a < datum->rank(); ++a) {
                    const std::string at = "at index " + datum->label(a);
                    const bool real = datum->is_real(a);
                    const std::int64_t aa = datum->entry(a, a);

                    ++phi_eps.checked;
                    if (fam.phi(v, a) != fam.eps(v, a) + pairing(*datum, a, v.weight()))
                        phi_eps.record_failure(v, at);

                    ++never_null.checked; // rc statistics are integers by construction

                    RiggedConfiguration fv = fam.f(v, a);
                    ++wt_f.checked;
                    if (!(fv.weight() == v.weight().minus_simple_root(a)))
                        wt_f.record_failure(v, at);
                    ++f_shift.checked;
                    if (real) {
                        if (fam.eps(fv, a) != fam.eps(v, a) + 1 ||
                            fam.phi(fv, a) != fam.phi(v, a) - 1)
                            f_shift.record_failure(v, at);
                    } else {
                        if (fam.eps(fv, a) != fam.eps(v, a) ||
                            fam.phi(fv, a) != fam.phi(v, a) - aa)
                            f_shift.record_failure(v, at);
                    }
                    ++inverse.checked;
                    auto back = fam.e(fv, a);
                    if (!back || !(*back == v)) inverse.record_failure(v, at + " (e after f)");

                    if (auto ev = fam.e(v, a)) {
                        ++wt_e.checked;
                        bool wt_ok = true;
                        try {
                            wt_ok = ev->weight() == v.weight().plus_simple_root(a);
                        } catch (const Error&) {
                            wt_ok = false;
                        }
                        if (!wt_ok) wt_e.record_failure(v, at);
                        ++e_shift.checked;
                        if (real) {
                            if (fam.eps(*ev, a) != fam.eps(v, a) - 1 ||
                                fam.phi(*ev, a) != fam.phi(v, a) + 1)
                                e_shift.record_failure(v, at);
                        } else {
                            if (fam.eps(*ev, a) != fam.eps(v, a) ||
                                fam.phi(*ev, a) != fam.phi(v, a) + aa)
                                e_shift.record_failure(v, at);
                        }
                        ++inverse.checked;
                        RiggedConfiguration fe = fam.f(*ev, a);
                        if (!(fe == v)) inverse.record_failure(v, at + " (f after e)");
                    }
                }
            }
        }
        reports.push_back(std::move(wt_e));
        reports.push_back(std::move(wt_f));
        reports.push_back(std::move(phi_eps));
        reports.push_back(std::move(inverse));
        reports.push_back(std::move(e_shift));
        reports.push_back(std::move(f_shift));
        reports.push_back(std::move(never_null));
    }
    return reports;
}

// Verifies the recognition conditions for B(∞) with the star operators on the
// closure under both operator families: non-vanishing, the a ≠ b commutation
// package, the κ-driven coincidence and commutation conditions, and the
// κ = 0 ⇔ κ* = 0 biconditional for imaginary indices.  Conditions that
// mention double operator images are asserted two layers inside the
// truncation.
inline std::vector<CheckReport> check_recognition(DatumPtr datum, std::int64_t depth,
                                                  const RcOps& ops = RcOps::standard()) {
    if (depth < 2) fail(errc::depth_too_small, "check_recognition requires depth >= 2");
    const auto layers = detail::closure_layers(datum, depth, ops, /*with_star=*/true);
    const std::int64_t interior = depth - 2;

    CheckReport c1{"condition 1: f and f* never vanish"};
    CheckReport c2{"condition 2: f*_a f_b = f_b f*_a with stable tilde-eps (a != b)"};
    CheckReport c3{"condition 3: kappa = 0 implies f = f*"};
    CheckReport c4a{"condition 4a: kappa >= 0 (real)"};
    CheckReport c4b{"condition 4b: kappa >= 1 preserves the opposite epsilon (real)"};
    CheckReport c4c{"condition 4c: kappa >= 2 implies f f* = f* f (real)"};
    CheckReport c5{"condition 5: kappa > 0 stabilizes tilde-eps* and commutes f, f* (imaginary)"};
    CheckReport c6{"biconditional: kappa = 0 iff kappa* = 0 (imaginary)"};
    for (auto* r : {&c1, &c2, &c3, &c4a, &c4b, &c4c, &c5, &c6}) r->interior_depth = interior;

    for (std::int64_t d = 0; d < static_cast<std::int64_t>(layers.size()) && d <= interior; ++d) {
        for (const auto& v : layers[d]) {
            for (std::size_t a = 0; a < datum->rank(); ++a) {
                const std::string at = "at index " + datum->label(a);
                const bool real = datum->is_real(a);
                const std::int64_t kap = ops.kappa(v, a);

                ++c1.checked;
                RiggedConfiguration fv = ops.f(v, a);
                RiggedConfiguration fsv = ops.f_star(v, a);
                if (fv.total_boxes() != v.total_boxes() + 1 ||
                    fsv.total_boxes() != v.total_boxes() + 1)
                    c1.record_failure(v, at);

                for (std::size_t b = 0; b < datum->rank(); ++b) {
                    if (b == a) continue;
                    ++c2.checked;
                    RiggedConfiguration fb = ops.f(v, b);
                    if (!(ops.f_star(fb, a) == ops.f(fsv, b)))
                        c2.record_failure(v, at + ", " + datum->label(b) + " (commutation)");
                    else if (ops.tilde_epsilon_star(fb, a) != ops.tilde_epsilon_star(v, a))
                        c2.record_failure(v, at + ", " + datum->label(b) + " (tilde-eps* of f_b)");
                    else if (ops.tilde_epsilon(fsv, b) != ops.tilde_epsilon(v, b))
                        c2.record_failure(v, at + ", " + datum->label(b) + " (tilde-eps of f*_a)");
                }

                if (kap == 0) {
                    ++c3.checked;
                    if (!(fv == fsv)) c3.record_failure(v, at);
                }

                if (real) {
                    ++c4a.checked;
                    if (kap < 0) c4a.record_failure(v, at);
                    if (kap >= 1) {
                        ++c4b.checked;
                        if (ops.epsilon_star(fv, a) != ops.epsilon_star(v, a) ||
                            ops.epsilon(fsv, a) != ops.epsilon(v, a))
                            c4b.record_failure(v, at);
                    }
                    if (kap >= 2) {
                        ++c4c.checked;
                        if (!(ops.f(fsv, a) == ops.f_star(fv, a))) c4c.record_failure(v, at);
                    }
                } else {
                    if (kap > 0) {
                        ++c5.checked;
                        if (ops.tilde_epsilon_star(fv, a) != ops.tilde_epsilon_star(v, a))
                            c5.record_failure(v, at + " (tilde-eps*)");
                        else if (!(ops.f(fsv, a) == ops.f_star(fv, a)))
                            c5.record_failure(v, at + " (commutation)");
                    }
                    ++c6.checked;
                    if ((kap == 0) != (ops.kappa_star(v, a) == 0)) c6.record_failure(v, at);
                }
            }
        }
    }
    return {c1, c2, c3, c4a, c4b, c4c, c5, c6};
}

} // namespace rcx

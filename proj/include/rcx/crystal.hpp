#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rcx/extint.hpp"
#include "rcx/rigged.hpp"

namespace rcx {

// Weight of a crystal node in λ-offset form: a formal dominant part (the
// accumulated T_λ factors, tracked through coroot pairings) plus a Q^- part.
struct CrystalWeight {
    DominantWeight lambda;
    RootWeight qpart;

    explicit CrystalWeight(std::size_t rank) : lambda(rank), qpart(rank) {}
    CrystalWeight(DominantWeight l, RootWeight q) : lambda(std::move(l)), qpart(std::move(q)) {}

    std::int64_t pairing(const BorcherdsCartanDatum& datum, std::size_t a) const {
        return lambda.pairing(a) + rcx::pairing(datum, a, qpart);
    }

    CrystalWeight plus(const CrystalWeight& other) const {
        return CrystalWeight(lambda.plus(other.lambda), qpart.plus(other.qpart));
    }

    friend bool operator==(const CrystalWeight& x, const CrystalWeight& y) {
        return x.lambda == y.lambda && x.qpart == y.qpart;
    }
};

// Tagged union over the crystals this library composes: rigged configurations,
// the one-element crystals T_λ and C, the single-index crystal N_(a) with
// elements z_a(-n), and binary tensor nodes (multi-factor tensors associate
// to the left).
class CrystalNode {
public:
    struct Rc {
        RiggedConfiguration rc;
    };
    struct TLambda {
        DominantWeight lambda;
    };
    struct CUnit {};
    struct Z {
        std::size_t index;
        std::int64_t n; // the element z_index(-n), n >= 0
    };
    struct Tensor {
        std::shared_ptr<const CrystalNode> left;
        std::shared_ptr<const CrystalNode> right;
    };

    static CrystalNode rc(RiggedConfiguration v) { return CrystalNode(Rc{std::move(v)}); }
    static CrystalNode t_lambda(DominantWeight lambda) {
        return CrystalNode(TLambda{std::move(lambda)});
    }
    static CrystalNode c_unit() { return CrystalNode(CUnit{}); }
    static CrystalNode z(std::size_t index, std::int64_t n) {
        if (n < 0) fail(errc::precondition_violated, "z_a(-n) requires n >= 0");
        return CrystalNode(Z{index, n});
    }
    static CrystalNode tensor(CrystalNode left, CrystalNode right) {
        return CrystalNode(Tensor{std::make_shared<const CrystalNode>(std::move(left)),
                                  std::make_shared<const CrystalNode>(std::move(right))});
    }
    static CrystalNode tensor_chain(std::vector<CrystalNode> factors) {
        if (factors.empty()) fail(errc::precondition_violated, "empty tensor chain");
        CrystalNode acc = std::move(factors.front());
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = tensor(std::move(acc), std::move(factors[i]));
        return acc;
    }

    bool is_rc() const { return std::holds_alternative<Rc>(v_); }
    bool is_t() const { return std::holds_alternative<TLambda>(v_); }
    bool is_c() const { return std::holds_alternative<CUnit>(v_); }
    bool is_z() const { return std::holds_alternative<Z>(v_); }
    bool is_tensor() const { return std::holds_alternative<Tensor>(v_); }

    const RiggedConfiguration& as_rc() const { return std::get<Rc>(v_).rc; }
    const DominantWeight& as_t() const { return std::get<TLambda>(v_).lambda; }
    const Z& as_z() const { return std::get<Z>(v_); }
    const CrystalNode& left() const { return *std::get<Tensor>(v_).left; }
    const CrystalNode& right() const { return *std::get<Tensor>(v_).right; }

    // Structural total order; used for canonical sets of nodes.
    static int compare(const CrystalNode& x, const CrystalNode& y) {
        if (x.v_.index() != y.v_.index()) return x.v_.index() < y.v_.index() ? -1 : 1;
        if (x.is_rc()) {
            if (x.as_rc() == y.as_rc()) return 0;
            return x.as_rc() < y.as_rc() ? -1 : 1;
        }
        if (x.is_t()) {
            if (x.as_t() == y.as_t()) return 0;
            return x.as_t() < y.as_t() ? -1 : 1;
        }
        if (x.is_c()) return 0;
        if (x.is_z()) {
            if (x.as_z().index != y.as_z().index) return x.as_z().index < y.as_z().index ? -1 : 1;
            if (x.as_z().n != y.as_z().n) return x.as_z().n < y.as_z().n ? -1 : 1;
            return 0;
        }
        const int c = compare(x.left(), y.left());
        if (c != 0) return c;
        return compare(x.right(), y.right());
    }

    friend bool operator==(const CrystalNode& x, const CrystalNode& y) { return compare(x, y) == 0; }
    friend bool operator!=(const CrystalNode& x, const CrystalNode& y) { return compare(x, y) != 0; }
    friend bool operator<(const CrystalNode& x, const CrystalNode& y) { return compare(x, y) < 0; }

    // Compact debug rendering (canonical JSON lives in serialize.hpp).
    std::string brief(const BorcherdsCartanDatum& datum) const {
        if (is_rc()) {
            std::string s = "rc{";
            bool first_part = true;
            for (std::size_t a = 0; a < datum.rank(); ++a) {
                if (as_rc().part(a).empty()) continue;
                if (!first_part) s += ";";
                first_part = false;
                s += datum.label(a) + ":";
                for (const auto& row : as_rc().part(a).rows())
                    s += "(" + std::to_string(row.length) + "," + std::to_string(row.rigging) + ")";
            }
            return s + "}";
        }
        if (is_t()) {
            std::string s = "t{";
            for (std::size_t a = 0; a < datum.rank(); ++a) {
                if (a) s += ",";
                s += std::to_string(as_t().pairing(a));
            }
            return s + "}";
        }
        if (is_c()) return "c";
        if (is_z())
            return "z_" + datum.label(as_z().index) + "(-" + std::to_string(as_z().n) + ")";
        return "(" + left().brief(datum) + " (x) " + right().brief(datum) + ")";
    }

private:
    using Variant = std::variant<Rc, TLambda, CUnit, Z, Tensor>;
    explicit CrystalNode(Variant v) : v_(std::move(v)) {}

    Variant v_;
};

// --- crystal structure maps -------------------------------------------------

inline CrystalWeight node_weight(const BorcherdsCartanDatum& datum, const CrystalNode& v) {
    const std::size_t n = datum.rank();
    if (v.is_rc()) return CrystalWeight(DominantWeight(n), v.as_rc().weight());
    if (v.is_t()) return CrystalWeight(v.as_t(), RootWeight(n));
    if (v.is_c()) return CrystalWeight(n);
    if (v.is_z()) {
        std::vector<std::int64_t> c(n, 0);
        c[v.as_z().index] = v.as_z().n;
        return CrystalWeight(DominantWeight(n), RootWeight::from_coeffs(std::move(c)));
    }
    return node_weight(datum, v.left()).plus(node_weight(datum, v.right()));
}

inline ExtendedInt node_epsilon(const BorcherdsCartanDatum& datum, const CrystalNode& v,
                                std::size_t a) {
    datum.check_index(a);
    if (v.is_rc()) return ExtendedInt(v.as_rc().epsilon(a));
    if (v.is_t()) return ExtendedInt::neg_infinity();
    if (v.is_c()) return ExtendedInt(0);
    if (v.is_z()) {
        if (a != v.as_z().index) return ExtendedInt::neg_infinity();
        return datum.is_real(a) ? ExtendedInt(v.as_z().n) : ExtendedInt(0);
    }
    const ExtendedInt e1 = node_epsilon(datum, v.left(), a);
    const ExtendedInt e2 = node_epsilon(datum, v.right(), a);
    const std::int64_t w1 = node_weight(datum, v.left()).pairing(datum, a);
    return max(e1, e2 - w1);
}

inline ExtendedInt node_phi(const BorcherdsCartanDatum& datum, const CrystalNode& v, std::size_t a) {
    datum.check_index(a);
    if (v.is_rc()) return ExtendedInt(v.as_rc().phi(a));
    if (v.is_t()) return ExtendedInt::neg_infinity();
    if (v.is_c()) return ExtendedInt(0);
    if (v.is_z()) {
        if (a != v.as_z().index) return ExtendedInt::neg_infinity();
        return datum.is_real(a) ? ExtendedInt(-v.as_z().n)
                                : ExtendedInt(-v.as_z().n * datum.entry(a, a));
    }
    const ExtendedInt p1 = node_phi(datum, v.left(), a);
    const ExtendedInt p2 = node_phi(datum, v.right(), a);
    const std::int64_t w2 = node_weight(datum, v.right()).pairing(datum, a);
    return max(p1 + ExtendedInt(w2), p2);
}

// f_a on an arbitrary node.  On a tensor, f acts on the left factor when
// φ_a(v1) > ε_a(v2) and on the right otherwise.
inline std::optional<CrystalNode> node_f(const BorcherdsCartanDatum& datum, const CrystalNode& v,
                                         std::size_t a) {
    datum.check_index(a);
    if (v.is_rc()) return CrystalNode::rc(v.as_rc().f(a));
    if (v.is_t() || v.is_c()) return std::nullopt;
    if (v.is_z()) {
        if (a != v.as_z().index) return std::nullopt;
        return CrystalNode::z(a, v.as_z().n + 1);
    }
    const ExtendedInt phi1 = node_phi(datum, v.left(), a);
    const ExtendedInt eps2 = node_epsilon(datum, v.right(), a);
    if (phi1 > eps2) {
        auto l = node_f(datum, v.left(), a);
        if (!l) return std::nullopt;
        return CrystalNode::tensor(std::move(*l), v.right());
    }
    auto r = node_f(datum, v.right(), a);
    if (!r) return std::nullopt;
    return CrystalNode::tensor(v.left(), std::move(*r));
}

// e_a on an arbitrary node.  The tensor rule has five branches; for imaginary
// a the middle branch ε_a(v2) < φ_a(v1) <= ε_a(v2) - A_aa kills the node.
inline std::optional<CrystalNode> node_e(const BorcherdsCartanDatum& datum, const CrystalNode& v,
                                         std::size_t a) {
    datum.check_index(a);
    if (v.is_rc()) {
        auto up = v.as_rc().e(a);
        if (!up) return std::nullopt;
        return CrystalNode::rc(std::move(*up));
    }
    if (v.is_t() || v.is_c()) return std::nullopt;
    if (v.is_z()) {
        if (a != v.as_z().index || v.as_z().n == 0) return std::nullopt;
        return CrystalNode::z(a, v.as_z().n - 1);
    }
    const ExtendedInt phi1 = node_phi(datum, v.left(), a);
    const ExtendedInt eps2 = node_epsilon(datum, v.right(), a);
    bool act_left;
    if (datum.is_real(a)) {
        act_left = phi1 >= eps2;
    } else {
        const ExtendedInt barrier = eps2 - datum.entry(a, a); // ε_2 - A_aa >= ε_2
        if (phi1 > barrier) {
            act_left = true;
        } else if (phi1 > eps2) {
            return std::nullopt; // dead zone
        } else {
            act_left = false;
        }
    }
    if (act_left) {
        auto l = node_e(datum, v.left(), a);
        if (!l) return std::nullopt;
        return CrystalNode::tensor(std::move(*l), v.right());
    }
    auto r = node_e(datum, v.right(), a);
    if (!r) return std::nullopt;
    return CrystalNode::tensor(v.left(), std::move(*r));
}

// The embedding Ψ_a: v ↦ (e*_a)^k v ⊗ z_a(-k) with k maximal, i.e. the
// repeated-e*_a count of v.
inline CrystalNode psi_embedding(const RiggedConfiguration& rc, std::size_t a) {
    rc.datum().check_index(a);
    RiggedConfiguration cur = rc;
    std::int64_t k = 0;
    while (auto up = cur.e_star(a)) {
        cur = std::move(*up);
        ++k;
    }
    return CrystalNode::tensor(CrystalNode::rc(std::move(cur)), CrystalNode::z(a, k));
}

// --- morphism verification ---------------------------------------------------

struct MorphismReport {
    std::size_t nodes_checked = 0;
    bool injective = true;
    std::vector<std::string> violations;

    bool ok() const { return injective && violations.empty(); }
};

// Verifies that `map` is a strict-on-f crystal morphism on the given finite
// domain: ε, φ and wt are preserved at every node, and map(f_a v) = f_a map(v)
// whenever both v and f_a v lie in the domain.  Injectivity over the domain is
// reported alongside.
inline MorphismReport morphism_check(const BorcherdsCartanDatum& datum,
                                     const std::vector<CrystalNode>& domain,
                                     const std::function<CrystalNode(const CrystalNode&)>& map) {
    MorphismReport report;
    std::set<CrystalNode> domain_set(domain.begin(), domain.end());
    std::set<CrystalNode> images;
    for (const CrystalNode& v : domain) {
        ++report.nodes_checked;
        const CrystalNode w = map(v);
        images.insert(w);
        if (!(node_weight(datum, w) == node_weight(datum, v)))
            report.violations.push_back("wt not preserved at " + v.brief(datum));
        for (std::size_t a = 0; a < datum.rank(); ++a) {
            if (node_epsilon(datum, w, a) != node_epsilon(datum, v, a))
                report.violations.push_back("epsilon_" + datum.label(a) + " not preserved at " +
                                            v.brief(datum));
            if (node_phi(datum, w, a) != node_phi(datum, v, a))
                report.violations.push_back("phi_" + datum.label(a) + " not preserved at " +
                                            v.brief(datum));
            auto fv = node_f(datum, v, a);
            if (fv && domain_set.count(*fv)) {
                auto fw = node_f(datum, w, a);
                if (!fw || !(*fw == map(*fv)))
                    report.violations.push_back("f_" + datum.label(a) +
                                                " not intertwined at " + v.brief(datum));
            }
        }
    }
    report.injective = images.size() == domain_set.size();
    return report;
}

} // namespace rcx

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcx/checks.hpp"
#include "rcx/graph.hpp"
#include "rcx/imaginary.hpp"

namespace rcx {

// One operator application in a word: e, f, e*, f*, or the highest-weight f'.
struct WordOp {
    enum class Kind { E, F, EStar, FStar, FLambda };
    Kind kind;
    std::size_t index;
};

// Token syntax: operator prefix (e, f, e*, f*, f') followed by an index label,
// optionally separated by ':'.  Examples: f1, f:1, e*2, f':1.
inline WordOp parse_word_op(const BorcherdsCartanDatum& datum, const std::string& token) {
    static const std::vector<std::pair<std::string, WordOp::Kind>> prefixes = {
        {"e*", WordOp::Kind::EStar}, {"f*", WordOp::Kind::FStar}, {"f'", WordOp::Kind::FLambda},
        {"e", WordOp::Kind::E},      {"f", WordOp::Kind::F},
    };
    for (const auto& [prefix, kind] : prefixes) {
        if (token.rfind(prefix, 0) != 0) continue;
        std::string label = token.substr(prefix.size());
        if (!label.empty() && label.front() == ':') label.erase(label.begin());
        if (label.empty()) break;
        return WordOp{kind, datum.position(label)};
    }
    fail(errc::unknown_operator, "cannot parse operator token \"" + token + "\"");
}

inline std::vector<WordOp> parse_word(const BorcherdsCartanDatum& datum,
                                      const std::vector<std::string>& tokens) {
    std::vector<WordOp> ops;
    ops.reserve(tokens.size());
    for (const auto& t : tokens) ops.push_back(parse_word_op(datum, t));
    return ops;
}

// Applies a word right to left, matching operator composition: the word
// (f_1, f_1, f_1, f_2) acts as f_1^3 f_2.  A vanished operator short-circuits
// to null.  e*, f* and f' require a rigged-configuration node.
inline std::optional<CrystalNode> apply_word(const BorcherdsCartanDatum& datum,
                                             const std::vector<WordOp>& word, CrystalNode start,
                                             const std::optional<DominantWeight>& lambda = {}) {
    CrystalNode cur = std::move(start);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto& op = *it;
        std::optional<CrystalNode> next;
        switch (op.kind) {
        case WordOp::Kind::E: next = node_e(datum, cur, op.index); break;
        case WordOp::Kind::F: next = node_f(datum, cur, op.index); break;
        case WordOp::Kind::EStar: {
            if (!cur.is_rc())
                fail(errc::unknown_operator, "e* acts only on rigged configurations");
            auto up = cur.as_rc().e_star(op.index);
            if (up) next = CrystalNode::rc(std::move(*up));
            break;
        }
        case WordOp::Kind::FStar: {
            if (!cur.is_rc())
                fail(errc::unknown_operator, "f* acts only on rigged configurations");
            next = CrystalNode::rc(cur.as_rc().f_star(op.index));
            break;
        }
        case WordOp::Kind::FLambda: {
            if (!cur.is_rc())
                fail(errc::unknown_operator, "f' acts only on rigged configurations");
            if (!lambda)
                fail(errc::precondition_violated, "f' requires a dominant weight");
            auto down = f_lambda(cur.as_rc(), op.index, *lambda);
            if (down) next = CrystalNode::rc(std::move(*down));
            break;
        }
        }
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

inline std::optional<RiggedConfiguration>
apply_word_rc(const DatumPtr& datum, const std::vector<WordOp>& word,
              const std::optional<DominantWeight>& lambda = {}) {
    auto node = apply_word(*datum, word, CrystalNode::rc(empty_rc(datum)), lambda);
    if (!node) return std::nullopt;
    return node->as_rc();
}

} // namespace rcx

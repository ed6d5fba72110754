#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcx {

// Z ⊔ {−∞}, the codomain of the crystal statistics ε and φ.  −∞ absorbs
// addition and compares below every integer.
class ExtendedInt {
public:
    constexpr ExtendedInt() : finite_(true), value_(0) {}
    constexpr ExtendedInt(std::int64_t v) : finite_(true), value_(v) {} // NOLINT: implicit by design

    static constexpr ExtendedInt neg_infinity() {
        ExtendedInt x;
        x.finite_ = false;
        x.value_ = 0;
        return x;
    }

    constexpr bool is_neg_infinity() const { return !finite_; }
    constexpr bool is_finite() const { return finite_; }

    std::int64_t value() const {
        if (!finite_) throw std::logic_error("ExtendedInt: value() on -infinity");
        return value_;
    }

    friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
        if (!a.finite_ || !b.finite_) return neg_infinity();
        return ExtendedInt(a.value_ + b.value_);
    }
    friend constexpr ExtendedInt operator-(ExtendedInt a, std::int64_t n) {
        if (!a.finite_) return neg_infinity();
        return ExtendedInt(a.value_ - n);
    }

    friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend constexpr bool operator<(ExtendedInt a, ExtendedInt b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(ExtendedInt a, ExtendedInt b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtendedInt a, ExtendedInt b) { return b < a; }
    friend constexpr bool operator>=(ExtendedInt a, ExtendedInt b) { return b <= a; }
    friend constexpr bool operator!=(ExtendedInt a, ExtendedInt b) { return !(a == b); }

    friend constexpr ExtendedInt max(ExtendedInt a, ExtendedInt b) { return a < b ? b : a; }

    std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    bool finite_;
    std::int64_t value_;
};

} // namespace rcx

#ifndef PELLARIN_PADIC_HPP
#define PELLARIN_PADIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pellarin/field.hpp"

namespace pellarin {

// An exponent y in Z_p: either an honest integer (any digit on demand, with
// negative integers producing the eventually-constant p-1 expansion) or a
// residue known modulo p^M as M base-p digits.
class PadicInt {
  public:
    enum class Mode { ExactInteger, Truncated };

    static PadicInt integer(std::uint32_t p, BigInt value);
    static PadicInt truncated(std::uint32_t p, std::vector<std::uint32_t> digits);

    std::uint32_t p() const { return p_; }
    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::ExactInteger; }
    const BigInt& value() const { return value_; } // ExactInteger only
    std::size_t precision() const { return digits_.size(); } // Truncated only

    // Digit i of the base-p expansion. Truncated mode throws
    // PrecisionExhausted for i >= M.
    std::uint32_t digit(std::size_t i) const;

    PadicInt negated() const;

    bool is_zero() const;
    // True when this is an exact integer equal to v.
    bool is_exact_value(long long v) const;

    std::string descriptor() const; // canonical cache-key form

  private:
    PadicInt() = default;
    std::uint32_t p_ = 2;
    Mode mode_ = Mode::ExactInteger;
    BigInt value_;
    std::vector<std::uint32_t> digits_;
};

// C(y, k) mod p by Lucas' theorem, digit by digit.
std::uint32_t lucas_binom_residue(const PadicInt& y, std::uint64_t k);

// Same, packaged as an element of F_p over the given spec.
FieldElem lucas_binom(const SpecPtr& spec, const PadicInt& y, std::uint64_t k);

} // namespace pellarin

#endif

#ifndef PELLARIN_FIELD_HPP
#define PELLARIN_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pellarin/error.hpp"

namespace pellarin {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

// Which layer of the tower F_p <= F_q <= E an element lives in.
enum class Level : int { Prime = 0, Fq = 1, Ext = 2 };

std::string level_name(Level);

// Describes the tower F_p <= F_q = F_p[g]/(modulus_q) <= E = F_q[w]/(modulus_E).
// q = p^m0 is always computed, never stored.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m0 = 1;
    std::uint32_t n = 1;
    // monic, degree m0, coefficients in F_p, lowest degree first (size m0+1)
    std::vector<std::uint32_t> modulus_q;
    // monic, degree n, coefficients in F_q (each an F_p-vector of size m0),
    // lowest degree first (size n+1)
    std::vector<std::vector<std::uint32_t>> modulus_E;

    std::uint64_t q() const;
    std::uint64_t cardinality(Level) const;
    std::size_t elem_words(Level) const; // flat coefficient-vector length
    Level top_level() const { return Level::Ext; }

    bool operator==(const FieldSpec& o) const;

    // Canonical descriptor, usable as a cache-key component.
    std::string key() const;

    // Validates everything (p prime, moduli monic and irreducible) and
    // returns an immutable shared spec.
    static std::shared_ptr<const FieldSpec>
    make(std::uint32_t p, std::uint32_t m0, std::uint32_t n,
         std::vector<std::uint32_t> modulus_q,
         std::vector<std::vector<std::uint32_t>> modulus_E);

    // Shipped defaults for q in {2,3,4,5,8,9}; for n > 1 the E-modulus is the
    // first monic irreducible of degree n in enumeration order.
    static std::shared_ptr<const FieldSpec> make_default(std::uint64_t q,
                                                         std::uint32_t n = 1);
};

using SpecPtr = std::shared_ptr<const FieldSpec>;

bool same_spec(const SpecPtr& a, const SpecPtr& b);

// An element of F_p, F_q or E, as a flat F_p coefficient vector:
//   Prime: [c]                       (1 word)
//   Fq:    [c_0..c_{m0-1}]           (m0 words, coefficient of g^i at i)
//   Ext:   n blocks of m0 words      (block j = F_q coefficient of w^j)
class FieldElem {
  public:
    FieldElem() = default; // unusable placeholder, for containers only

    static FieldElem zero(const SpecPtr&, Level);
    static FieldElem one(const SpecPtr&, Level);
    static FieldElem from_integer(const SpecPtr&, Level, long long v);
    static FieldElem from_coeffs(const SpecPtr&, Level, std::vector<std::uint32_t>);
    // Element #idx in the lexicographic order on coefficient vectors.
    static FieldElem at_index(const SpecPtr&, Level, std::uint64_t idx);

    const SpecPtr& spec() const { return spec_; }
    Level level() const { return level_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool valid() const { return spec_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    // Embed into a higher level of the same tower.
    FieldElem lifted(Level) const;
    // Strip to the lowest level that can represent this value exactly.
    FieldElem compressed() const;

    std::uint64_t index() const; // inverse of at_index at this level

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem&, const FieldElem&);
    friend FieldElem operator-(const FieldElem&, const FieldElem&);
    friend FieldElem operator*(const FieldElem&, const FieldElem&);

  private:
    FieldElem(SpecPtr s, Level l, std::vector<std::uint32_t> c);

    SpecPtr spec_;
    Level level_ = Level::Prime;
    std::vector<std::uint32_t> c_;
};

FieldElem inv(const FieldElem&);
FieldElem pow(const FieldElem&, const BigInt& e);
FieldElem pow(const FieldElem&, long long e);

// All elements of the given level, lexicographic on coefficient vectors.
std::vector<FieldElem> enumerate_field(const SpecPtr&, Level,
                                       std::uint64_t cap = kDefaultCap);

} // namespace pellarin

#endif

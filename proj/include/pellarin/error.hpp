#ifndef PELLARIN_ERROR_HPP
#define PELLARIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pellarin {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument: wrong field, non-monic input, divergent evaluation point,
// malformed expression, hypothesis of an operation violated.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Operands live over different field specifications.
class SpecMismatch : public DomainError {
  public:
    explicit SpecMismatch(const std::string& msg) : DomainError(msg) {}
};

// An enumeration would exceed the configured cap.
class CapExceeded : public Error {
  public:
    CapExceeded(const std::string& what, unsigned long long needed, unsigned long long cap)
        : Error(what + ": would enumerate " + std::to_string(needed) +
                " elements, exceeding the enumeration cap " + std::to_string(cap) +
                " (raise the cap explicitly to allow this)"),
          needed(needed), cap(cap) {}
    unsigned long long needed;
    unsigned long long cap;
};

// A result would depend on digits/coefficients that are not known.
class PrecisionExhausted : public Error {
  public:
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

// Inversion of a value that is zero as far as its precision can tell.
class ZeroInverse : public Error {
  public:
    explicit ZeroInverse(long long vanished_at_prec)
        : Error("cannot invert a value that vanishes to its precision O(th^-" +
                std::to_string(vanished_at_prec) + ")"),
          prec(vanished_at_prec) {}
    long long prec;
};

// A proven statement failed on computed data: an arithmetic bug, never a
// math failure.
class InternalInconsistency : public Error {
  public:
    explicit InternalInconsistency(const std::string& msg)
        : Error("internal inconsistency (arithmetic bug): " + msg) {}
};

} // namespace pellarin

#endif

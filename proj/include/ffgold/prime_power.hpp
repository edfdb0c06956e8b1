#pragma once

#include <cstdint>

namespace ffgold {

/// Cardinality q = p^r of a finite field.
class PrimePower {
 public:
  /// Throws InvalidArgument unless p is prime, r >= 1 and p^r fits in 63 bits.
  PrimePower(std::uint64_t p, unsigned r);

  /// Factors q; throws InvalidArgument if q is not a prime power >= 2.
  static PrimePower from_q(std::uint64_t q);

  std::uint64_t p() const noexcept { return p_; }
  unsigned r() const noexcept { return r_; }
  std::uint64_t q() const noexcept { return q_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t p_;
  unsigned r_;
  std::uint64_t q_;
};

}  // namespace ffgold

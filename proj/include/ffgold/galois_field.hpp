#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace ffgold {

/// Polynomial over F_p, coefficients lowest degree first.
using PolyModP = std::vector<std::int64_t>;

bool is_irreducible_mod_p(std::span<const std::int64_t> f, std::uint32_t p);

/// Lexicographically smallest monic irreducible polynomial of degree n over F_p,
/// comparing coefficient tuples (c_0, ..., c_{n-1}) as integer tuples.
PolyModP smallest_irreducible(std::uint32_t p, unsigned n);

/// F_{p^n} realised as F_p[x]/(m(x)), m = smallest_irreducible(p, n).
/// Elements are integers whose base-p digits are the coefficients of the
/// residue polynomial (digit i multiplies x^i).
class GaloisField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

  GaloisField(std::uint32_t p, unsigned n);

  /// Process-wide memo; tables are immutable once built.
  static std::shared_ptr<const GaloisField> get(std::uint32_t p, unsigned n);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return size_; }
  const PolyModP& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Image of the integer v in the prime subfield.
  Elem from_int(std::int64_t v) const;

  /// Absolute trace to F_p, returned as a prime-subfield element.
  Elem trace(Elem a) const;

  /// Odd characteristic only.
  bool is_square(Elem a) const { return a == 0 || log_[a] % 2 == 0; }

  /// Image of an element of `sub` under the embedding sending the generator x
  /// of `sub` to the smallest root of sub.modulus() in this field.
  Elem embed(const GaloisField& sub, Elem a) const;

 private:
  Elem mul_slow(Elem a, Elem b) const;
  Elem embedding_root(const GaloisField& sub) const;

  std::uint32_t p_;
  unsigned n_;
  std::uint32_t size_;
  PolyModP modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;           // length 2*(size-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  mutable std::mutex root_mutex_;
  mutable std::map<unsigned, Elem> embedding_roots_;
};

}  // namespace ffgold

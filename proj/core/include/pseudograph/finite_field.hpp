#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pseudograph {

class FiniteField;

/// Element of GF(p^k) in the polynomial basis: coeffs[i] multiplies x^i.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;
  std::uint64_t field_id = 0;

  bool operator==(const FieldElement& o) const = default;
};

enum class FieldOp { add, sub, mul, div };

/// GF(p^k) with a fixed monic irreducible modulus. Elements also have an
/// integer index: sum of coeffs[i] * p^i. Index-level operations use
/// log/antilog tables and are the fast path for graph builders.
class FiniteField {
 public:
  /// Largest supported order; tables are O(q).
  static constexpr std::uint64_t kMaxOrder = 1u << 22;

  /// `poly` has k+1 coefficients, constant term first, leading term 1.
  /// Without it the least monic irreducible is chosen, ordering candidates
  /// by their coefficient vectors read from x^{k-1} down to x^0.
  FiniteField(std::uint32_t p, std::uint32_t k,
              std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& poly() const noexcept { return poly_; }
  std::uint64_t id() const noexcept { return id_; }
  std::string describe() const;

  // Element conversions.
  FieldElement element(std::uint32_t index) const;
  FieldElement element(std::vector<std::uint32_t> coeffs) const;
  std::uint32_t index(const FieldElement& a) const;
  FieldElement zero() const { return element(0u); }
  FieldElement one() const { return element(1u); }

  // Checked element arithmetic. Throws PreconditionError on mixed fields
  // or a zero divisor.
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  FieldElement arith(FieldOp op, const FieldElement& a, const FieldElement& b) const;

  /// Table-free product via schoolbook multiplication and reduction.
  FieldElement mul_reference(const FieldElement& a, const FieldElement& b) const;

  // Index-level arithmetic (unchecked apart from range in debug builds).
  std::uint32_t add_i(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub_i(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg_i(std::uint32_t a) const noexcept;
  std::uint32_t mul_i(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv_i(std::uint32_t a) const;
  std::uint32_t pow_i(std::uint32_t a, std::uint64_t e) const noexcept;

  /// Index of the least primitive element.
  std::uint32_t primitive() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log_i(std::uint32_t a) const;

  /// Quadratic character by Euler's criterion. Odd q only.
  int quad_char(const FieldElement& x) const;
  int quad_char_i(std::uint32_t x) const;

  /// Norm to GF(p): x^((q-1)/(p-1)), returned as a residue in [0, p).
  std::uint32_t norm(const FieldElement& x) const;
  std::uint32_t norm_i(std::uint32_t x) const;

  /// Coefficient of x^{k-1}.
  std::uint32_t leading_coeff_i(std::uint32_t x) const noexcept;

 private:
  void check(const FieldElement& a) const;
  std::vector<std::uint32_t> digits(std::uint32_t index) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;
  std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const;

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> poly_;
  std::uint64_t id_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept;

/// True when the monic polynomial (constant term first) is irreducible mod p.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Character of the abelian group Z_{orders[0]} x ... evaluated at `element`:
/// prod_j exp(2 pi i index_j element_j / orders_j). Quarter-turn phases are
/// returned exactly.
std::complex<double> char_eval(const std::vector<std::uint64_t>& orders,
                               const std::vector<std::uint64_t>& index,
                               const std::vector<std::uint64_t>& element);

}  // namespace pseudograph

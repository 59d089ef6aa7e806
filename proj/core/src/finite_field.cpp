#include "pseudograph/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pseudograph/common.hpp"

namespace pseudograph {
namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: Fermat.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo monic-or-not b over GF(p); b nonzero and trimmed.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t f = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = f * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1u);
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t r = 0; r < count; ++r) {
      std::uint64_t t = r;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k,
                         std::optional<std::vector<std::uint32_t>> poly)
    : p_(p), k_(k), q_(0) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw CapExceeded("field order exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (poly) {
    if (poly->size() != k + 1) throw PreconditionError("modulus must have k+1 coefficients");
    for (auto c : *poly)
      if (c >= p) throw PreconditionError("modulus coefficient out of range");
    if (poly->back() != 1) throw PreconditionError("modulus must be monic");
    if (!is_irreducible(*poly, p)) throw PreconditionError("modulus is reducible over GF(" + std::to_string(p) + ")");
    poly_ = *poly;
  } else {
    Poly f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t r = 0; r < q; ++r) {
      std::uint64_t t = r;
      for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (is_irreducible(f, p)) {
        poly_ = f;
        break;
      }
    }
  }

  id_ = mix64(p_ * 0x100000001b3ULL + k_);
  for (auto c : poly_) id_ = mix64(id_ ^ (c + 0x9e3779b97f4a7c15ULL));

  // Least primitive element, then log/antilog tables from reference products.
  const std::uint32_t order = q_ - 1;
  log_.assign(q_, 0);
  if (order == 0) return;
  const auto factors = prime_factors(order);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 1; cand < q_ && g == 0; ++cand) {
    bool ok = true;
    for (auto r : factors) {
      // cand^(order/r) by reference multiplication
      Poly acc = digits(1), base = digits(cand);
      std::uint64_t e = order / r;
      while (e) {
        if (e & 1) acc = poly_mulmod(acc, base);
        base = poly_mulmod(base, base);
        e >>= 1;
      }
      if (from_digits(acc) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) g = cand;
  }
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  Poly cur = digits(1);
  const Poly gd = digits(g);
  for (std::uint32_t i = 0; i < order; ++i) {
    const std::uint32_t v = from_digits(cur);
    exp_[i] = exp_[i + order] = v;
    log_[v] = i;
    cur = poly_mulmod(cur, gd);
  }
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (k_ > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = poly_.size(); i-- > 0;) {
      if (poly_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (poly_[i] != 1 || i == 0) os << poly_[i];
      if (i >= 1) os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::uint32_t> FiniteField::digits(std::uint32_t index) const {
  Poly d(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = index % p_;
    index /= p_;
  }
  return d;
}

std::uint32_t FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
  return v;
}

std::vector<std::uint32_t> FiniteField::poly_mulmod(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b) const {
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
  Poly r = poly_rem(prod, poly_, p_);
  r.resize(k_, 0);
  return r;
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw PreconditionError("element index out of range");
  return FieldElement{digits(index), id_};
}

FieldElement FiniteField::element(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw PreconditionError("too many coefficients for the field degree");
  coeffs.resize(k_, 0);
  for (auto c : coeffs)
    if (c >= p_) throw PreconditionError("coefficient out of range");
  return FieldElement{std::move(coeffs), id_};
}

void FiniteField::check(const FieldElement& a) const {
  if (a.field_id != id_) throw PreconditionError("element belongs to a different field");
  if (a.coeffs.size() != k_) throw PreconditionError("malformed field element");
}

std::uint32_t FiniteField::index(const FieldElement& a) const {
  check(a);
  return from_digits(a.coeffs);
}

std::uint32_t FiniteField::add_i(std::uint32_t a, std::uint32_t b) const noexcept {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t r = 0, place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

std::uint32_t FiniteField::neg_i(std::uint32_t a) const noexcept {
  if (k_ == 1) return (p_ - a) % p_;
  std::uint32_t r = 0, place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

std::uint32_t FiniteField::sub_i(std::uint32_t a, std::uint32_t b) const noexcept {
  return add_i(a, neg_i(b));
}

std::uint32_t FiniteField::mul_i(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  return exp_[log_[a] + log_[b]];
}

std::uint32_t FiniteField::inv_i(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (a == 1) return 1;
  return exp_[(q_ - 1) - log_[a]];
}

std::uint32_t FiniteField::pow_i(std::uint32_t a, std::uint64_t e) const noexcept {
  // Square-and-multiply over indices.
  std::uint32_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_i(r, b);
    b = mul_i(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteField::log_i(std::uint32_t a) const {
  if (a == 0 || a >= q_) throw PreconditionError("logarithm of zero or out-of-range element");
  return log_[a];
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return element(add_i(index(a), index(b)));
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return element(sub_i(index(a), index(b)));
}

FieldElement FiniteField::neg(const FieldElement& a) const { return element(neg_i(index(a))); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return element(mul_i(index(a), index(b)));
}

FieldElement FiniteField::inv(const FieldElement& a) const { return element(inv_i(index(a))); }

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t e) const {
  return element(pow_i(index(a), e));
}

FieldElement FiniteField::arith(FieldOp op, const FieldElement& a, const FieldElement& b) const {
  switch (op) {
    case FieldOp::add: return add(a, b);
    case FieldOp::sub: return sub(a, b);
    case FieldOp::mul: return mul(a, b);
    case FieldOp::div: return mul(a, inv(b));
  }
  throw PreconditionError("unknown field operation");
}

FieldElement FiniteField::mul_reference(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return FieldElement{poly_mulmod(a.coeffs, b.coeffs), id_};
}

int FiniteField::quad_char_i(std::uint32_t x) const {
  if (p_ == 2) throw PreconditionError("quadratic character needs odd field order");
  if (x == 0) return 0;
  return pow_i(x, (q_ - 1) / 2) == 1 ? 1 : -1;
}

int FiniteField::quad_char(const FieldElement& x) const { return quad_char_i(index(x)); }

std::uint32_t FiniteField::norm_i(std::uint32_t x) const {
  const std::uint32_t v = pow_i(x, (q_ - 1) / (p_ - 1));
  // The image lies in the prime subfield, whose indices are 0..p-1.
  return v;
}

std::uint32_t FiniteField::norm(const FieldElement& x) const { return norm_i(index(x)); }

std::uint32_t FiniteField::leading_coeff_i(std::uint32_t x) const noexcept {
  for (std::uint32_t i = 1; i < k_; ++i) x /= p_;
  return x % p_;
}

std::complex<double> char_eval(const std::vector<std::uint64_t>& orders,
                               const std::vector<std::uint64_t>& index,
                               const std::vector<std::uint64_t>& element) {
  if (index.size() != orders.size() || element.size() != orders.size())
    throw PreconditionError("character index and element must match the group rank");
  // Accumulate the phase as an exact fraction num/den of a full turn.
  unsigned __int128 num = 0, den = 1;
  bool exact = true;
  double phase = 0.0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const std::uint64_t n = orders[j];
    if (n == 0) throw PreconditionError("cyclic factor of order zero");
    if (index[j] >= n) throw PreconditionError("character index out of range");
    if (element[j] >= n) throw PreconditionError("group element out of range");
    const unsigned __int128 term = static_cast<unsigned __int128>(index[j]) * element[j] % n;
    phase += static_cast<double>(term) / static_cast<double>(n);
    if (!exact) continue;
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(den), n);
    const unsigned __int128 nden = den / g * n;
    if (nden > (static_cast<unsigned __int128>(1) << 62)) {
      exact = false;
      continue;
    }
    num = (num * (nden / den) + term * (nden / n)) % nden;
    den = nden;
  }
  if (exact) {
    if (num == 0) return {1.0, 0.0};
    if ((num * 4) % den == 0) {
      switch (static_cast<int>(num * 4 / den)) {
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        case 3: return {0.0, -1.0};
      }
    }
    phase = static_cast<double>(num) / static_cast<double>(den);
  }
  const double ang = 2.0 * std::numbers::pi * (phase - std::floor(phase));
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace pseudograph

#include <doctest.h>

#include <set>

#include "pseudograph/common.hpp"
#include "pseudograph/finite_field.hpp"

using namespace pseudograph;

namespace {

// Remainder of a modulo b over GF(p), both constant term first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    // b is monic
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
bool irreducible_by_trial(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t x = c;
      for (std::size_t i = 0; i < d; ++i, x /= p) g[i] = static_cast<std::uint32_t>(x % p);
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field GF(13)") {
  FiniteField f(13, 1);
  CHECK(f.q() == 13);
  CHECK(f.inv_i(2) == 7);
  CHECK(f.mul_i(2, 7) == 1);
  CHECK(f.index(f.inv(f.element(2u))) == 7);
}

TEST_CASE("GF(16) with x^4+x+1") {
  const std::vector<std::uint32_t> poly{1, 1, 0, 0, 1};
  CHECK(irreducible_by_trial(poly, 2));
  CHECK(is_irreducible(poly, 2));
  FiniteField f(2, 4, poly);
  const auto x = f.element(std::vector<std::uint32_t>{0, 1});
  const auto x1 = f.element(std::vector<std::uint32_t>{1, 1});
  // (x+1) x = x^2 + x, index 2 + 4
  CHECK(f.index(f.mul(x1, x)) == 6);
  // x^4 = x + 1
  CHECK(f.index(f.pow(x, 4)) == 3);
}

TEST_CASE("GF(9) with x^2+1") {
  const std::vector<std::uint32_t> poly{1, 0, 1};
  CHECK(irreducible_by_trial(poly, 3));
  FiniteField f(3, 2, poly);
  // every generator has g^8 = 1 and no smaller power equal to 1
  int generators = 0;
  for (std::uint32_t a = 1; a < 9; ++a) {
    CHECK(f.pow_i(a, 8) == 1);
    int order = 1;
    while (f.pow_i(a, order) != 1) ++order;
    if (order == 8) {
      ++generators;
      CHECK(f.norm_i(a) == 2);
    }
  }
  CHECK(generators == 4);  // phi(8)
  CHECK(f.norm_i(0) == 0);
  CHECK(f.norm_i(1) == 1);
}

TEST_CASE("default modulus is irreducible for small orders") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 5}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    FiniteField f(p, k);
    CHECK(irreducible_by_trial(f.poly(), p));
  }
}

TEST_CASE("field axioms exhaustively against schoolbook products") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    FiniteField f(p, k);
    const std::uint32_t q = f.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add_i(a, f.neg_i(a)) == 0);
      if (a) CHECK(f.mul_i(a, f.inv_i(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto ea = f.element(a), eb = f.element(b);
        CHECK(f.mul_i(a, b) == f.index(f.mul_reference(ea, eb)));
        CHECK(f.mul_i(a, b) == f.mul_i(b, a));
        CHECK(f.sub_i(f.add_i(a, b), b) == a);
        for (std::uint32_t c = 0; c < q; c += 3)
          CHECK(f.mul_i(a, f.add_i(b, c)) == f.add_i(f.mul_i(a, b), f.mul_i(a, c)));
      }
    }
  }
}

TEST_CASE("quadratic character of GF(13)") {
  FiniteField f(13, 1);
  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 1; x < 13; ++x) squares.insert(f.mul_i(x, x));
  CHECK(squares == std::set<std::uint32_t>{1, 3, 4, 9, 10, 12});
  CHECK(f.quad_char_i(3) == 1);
  CHECK(f.quad_char_i(0) == 0);
  CHECK(f.quad_char_i(2) == -1);
  for (std::uint32_t x = 1; x < 13; ++x) CHECK(f.quad_char_i(x) == (squares.count(x) ? 1 : -1));
}

TEST_CASE("quadratic character on GF(25) matches a square table") {
  FiniteField f(5, 2);
  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 1; x < 25; ++x) squares.insert(f.mul_i(x, x));
  CHECK(squares.size() == 12);
  for (std::uint32_t x = 1; x < 25; ++x) CHECK(f.quad_char(f.element(x)) == (squares.count(x) ? 1 : -1));
}

TEST_CASE("norm is multiplicative onto GF(p)") {
  FiniteField f(3, 3);
  for (std::uint32_t a = 1; a < f.q(); ++a)
    for (std::uint32_t b = 1; b < f.q(); b += 5) CHECK(f.norm_i(f.mul_i(a, b)) == (f.norm_i(a) * f.norm_i(b)) % 3);
}

TEST_CASE("discrete log inverts powers of the primitive element") {
  FiniteField f(2, 5);
  for (std::uint32_t a = 1; a < f.q(); ++a) CHECK(f.pow_i(f.primitive(), f.log_i(a)) == a);
}

TEST_CASE("characters of abelian groups") {
  CHECK(char_eval({4}, {0}, {3}) == std::complex<double>(1, 0));
  CHECK(char_eval({4}, {1}, {2}) == std::complex<double>(-1, 0));
  CHECK(char_eval({4}, {1}, {1}) == std::complex<double>(0, 1));
  const auto z = char_eval({5, 3}, {2, 1}, {1, 2});
  CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(FiniteField(4, 1), PreconditionError);
  CHECK_THROWS_AS(FiniteField(2, 2, std::vector<std::uint32_t>{1, 0, 1}), PreconditionError);  // x^2+1 = (x+1)^2
  FiniteField f(7, 1), g(5, 1);
  CHECK_THROWS_AS(f.add(f.element(1u), g.element(1u)), PreconditionError);
  CHECK_THROWS_AS(f.inv(f.zero()), PreconditionError);
  CHECK(prime_power(49) == std::make_pair(7u, 2u));
  CHECK_FALSE(prime_power(12).has_value());
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

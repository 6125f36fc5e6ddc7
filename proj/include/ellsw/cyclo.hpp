#pragma once
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ellsw/rational.hpp"

namespace ellsw {

// Per-order lookup data for Q(zeta_N).
//
// Canonical basis: write N = prod p^e.  zeta_N^a factors as a product of
// p^e-th roots zeta_{p^e}^{k_p}; a is a basis exponent when every k_p has
// leading base-p digit (k_p div p^(e-1)) at most p-2.  This is the tensor
// product of the power bases {1, w, .., w^(phi(p^e)-1)} of the prime-power
// subfields, so it has phi(N) elements, zeta^0 = 1 is one of them, and for
// prime-power N it coincides with the power basis mod Phi_N.  Any other
// power of zeta rewrites as a signed sum of basis powers via
//   w^(k) = -sum_{j=1}^{p-1} w^(k - j p^(e-1))   (leading digit p-1).
struct FieldTable {
  int N = 1;
  int phi = 1;
  std::vector<std::pair<int, int>> prime_powers;  // (p, p^e)
  // expansion of zeta^a: exps[start[a] .. start[a+1]) with signs
  std::vector<int32_t> start;
  std::vector<int32_t> exps;
  std::vector<int8_t> signs;
  std::vector<double> cosv, sinv;
  std::vector<int64_t> ramanujan;  // c_N(a) for a in [0, N)

  std::span<const int32_t> expansion(int a) const {
    return {exps.data() + start[a], size_t(start[a + 1] - start[a])};
  }
  std::span<const int8_t> expansion_signs(int a) const {
    return {signs.data() + start[a], size_t(start[a + 1] - start[a])};
  }
  bool is_basis(int a) const { return start[a + 1] - start[a] == 1 && exps[start[a]] == a && signs[start[a]] == 1; }
};

// Cached, thread-safe. The returned table stays valid while the pointer lives.
std::shared_ptr<const FieldTable> field_table(int N);

int euler_phi(int64_t n);
int moebius(int64_t n);
// Tr_{Q(zeta_N)/Q}(zeta_N^a): the Ramanujan sum c_N(a).
int64_t ramanujan_sum(int64_t a, int N);
// Phi_N as integer coefficients, lowest degree first.
std::vector<mpz_class> cyclotomic_polynomial(int N);

// Exact element of Q(zeta_N): common positive denominator over sparse
// integer numerators on the canonical basis (sorted by exponent, no zeros,
// gcd-normalized).  Values are immutable; operations are pure.
class CyclotomicNumber {
 public:
  using Term = std::pair<int32_t, int64_t>;

  CyclotomicNumber() = default;  // zero in Q
  CyclotomicNumber(const Rational& r, int N = 1);
  CyclotomicNumber(int64_t v) : CyclotomicNumber(Rational(v)) {}

  static CyclotomicNumber root_of_unity(int64_t k, int N);
  // 1/(1 - zeta_N^k); zeta_N^k must not be 1.
  static CyclotomicNumber inverse_one_minus_root(int64_t k, int N);
  // sum c_i zeta_N^i, any length
  static CyclotomicNumber from_power_basis(int N, const std::vector<Rational>& coeffs);
  // raw constructor: terms on arbitrary exponents (reduced mod N, then expanded)
  static CyclotomicNumber from_terms(int N, int64_t den, const std::vector<Term>& terms);

  int order() const { return N_; }
  int64_t denominator() const { return den_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const { return den_ == 1 && terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
  Rational as_rational() const;  // throws NotRational

  // Same value viewed in Q(zeta_M); requires N | M.
  CyclotomicNumber embed(int M) const;
  CyclotomicNumber conjugate() const;
  // sigma_t: zeta -> zeta^t, gcd(t, N) = 1.
  CyclotomicNumber galois(int64_t t) const;
  CyclotomicNumber invert() const;  // throws DivisionByZero
  Rational trace() const;           // Tr over Q(zeta_N)/Q
  CyclotomicNumber pow(int64_t e) const;

  std::complex<double> to_complex() const;
  // Coefficients mod Phi_N, degree < phi(N).
  std::vector<Rational> power_basis() const;

  size_t hash() const;
  std::string str() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  // Value equality; operands of different order are compared in the lcm field.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // Fused a*b + c*d with a single normalization (matrix products).
  static CyclotomicNumber dot2(const CyclotomicNumber& a, const CyclotomicNumber& b,
                               const CyclotomicNumber& c, const CyclotomicNumber& d);

 private:
  friend class CycloAccumulator;
  int N_ = 1;
  int64_t den_ = 1;
  std::vector<Term> terms_;
};

// Free-function spellings used throughout.
inline CyclotomicNumber root_of_unity(int64_t k, int N) { return CyclotomicNumber::root_of_unity(k, N); }
inline CyclotomicNumber conjugate(const CyclotomicNumber& x) { return x.conjugate(); }
inline CyclotomicNumber invert(const CyclotomicNumber& x) { return x.invert(); }
inline Rational as_rational(const CyclotomicNumber& x) { return x.as_rational(); }

// Arbitrary-precision variant used where products of many factors would
// overflow 64-bit numerators (high-degree polynomial identities).
class BigCyclotomic {
 public:
  using Term = std::pair<int32_t, mpz_class>;

  BigCyclotomic() = default;
  BigCyclotomic(const CyclotomicNumber& x);
  static BigCyclotomic zero(int N);
  // sum c_i zeta_N^i, any length
  static BigCyclotomic from_power_basis(int N, const std::vector<mpq_class>& coeffs);

  int order() const { return N_; }
  bool is_zero() const { return terms_.empty(); }
  BigCyclotomic embed(int M) const;
  BigCyclotomic invert() const;  // throws DivisionByZero
  CyclotomicNumber to_small() const;  // throws std::overflow_error
  std::string str() const;

  friend BigCyclotomic operator+(const BigCyclotomic& a, const BigCyclotomic& b);
  friend BigCyclotomic operator-(const BigCyclotomic& a, const BigCyclotomic& b);
  friend BigCyclotomic operator*(const BigCyclotomic& a, const BigCyclotomic& b);
  BigCyclotomic operator-() const;
  friend bool operator==(const BigCyclotomic& a, const BigCyclotomic& b);

 private:
  void normalize();
  int N_ = 1;
  mpz_class den_ = 1;
  std::vector<Term> terms_;
};

}  // namespace ellsw

#pragma once

// Exact arithmetic in Z[x^1, w^1, t^1] localized at (1-t): every value the
// evaluator can produce lives here, so no general rational-function machinery
// is needed. A RatFun is num / (1-t)^k with num a Laurent polynomial over Z,
// kept canonical (num not divisible by 1-t while k > 0).

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace skeinf {

// Exponents of x^ex * w^ew * t^et. Term order is lexicographic on
// (et, ew, ex): grouping by t-degree keeps serialized polynomials stable
// and easy to diff against published tables.
struct Mono {
  int ex = 0;
  int ew = 0;
  int et = 0;

  friend bool operator==(const Mono&, const Mono&) = default;
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.et != b.et) return a.et < b.et;
    if (a.ew != b.ew) return a.ew < b.ew;
    return a.ex < b.ex;
  }
};

// Laurent polynomial in x, w, t over Z. The zero polynomial is the empty
// map; stored coefficients are never zero.
class Poly {
 public:
  using Terms = std::map<Mono, mpz_class>;

  Poly() = default;
  static Poly constant(long c);
  static Poly mono(int ex, int ew, int et, long c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Mono& m, const mpz_class& c);

  Poly operator+(const Poly& o) const;
  Poly operator-() const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  // Exact division by (1 - t); nullopt when not divisible. Per (ex, ew)
  // group the quotient's t-coefficients are prefix sums of the dividend's,
  // and divisibility is exactly "prefix sums return to zero".
  std::optional<Poly> div_one_minus_t() const;

 private:
  Terms terms_;
};

class RatFun {
 public:
  RatFun() = default;  // zero
  RatFun(Poly num, int k);

  static RatFun constant(long c) { return RatFun(Poly::constant(c), 0); }
  static RatFun mono(int ex, int ew, int et, long c = 1) {
    return RatFun(Poly::mono(ex, ew, et, c), 0);
  }

  const Poly& num() const { return num_; }
  int k() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  friend bool operator==(const RatFun&, const RatFun&) = default;

  // Canonical plain-text form: numerator terms in canonical order with
  // explicit signs, negative monomial content and the (1-t)^k factor
  // rendered as a denominator. Round-trips bit-exactly through parse_text.
  std::string text() const;
  // {"num": [[ex, ew, et, "coeff"], ...], "k": k}; coefficients are decimal
  // strings so arbitrary precision survives any JSON reader.
  std::string json() const;

  static RatFun parse_text(const std::string& s);
  static RatFun parse_json(const std::string& s);

 private:
  Poly num_;
  int k_ = 0;
};

// Laurent polynomial in the single variable s, used for the w = t^(1/2)
// specialization (t = s^2, w = s) without fractional exponents.
class SPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  SPoly() = default;
  static SPoly mono(int e, long c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  void add_term(int e, const mpz_class& c);

  SPoly operator+(const SPoly& o) const;
  SPoly operator-(const SPoly& o) const;
  SPoly operator*(const SPoly& o) const;
  friend bool operator==(const SPoly&, const SPoly&) = default;

  // Exact division by (1 - s^2); nullopt when not divisible.
  std::optional<SPoly> div_one_minus_s2() const;

  std::string text() const;

 private:
  Terms terms_;
};

// w = t^(1/2): x^a w^b t^c -> s^(b+2c), requiring a = 0 everywhere (values
// of single-color evaluations never contain x); the (1-t)^k denominator
// becomes (1-s^2)^k and must cancel exactly. Throws std::domain_error if an
// x exponent survives or cancellation fails.
SPoly substitute_jones(const RatFun& r);

// The skein coefficient constants.
namespace coeffs {
const RatFun& one();
const RatFun& c_plus();        // 1/w
const RatFun& c_minus();       // w
const RatFun& c_merge();       // 1 - 1/t
const RatFun& c_merge_plus();  // (1/w)(1 - 1/t)
const RatFun& tw2();           // t w^2
const RatFun& tw2_inv();
const RatFun& w();
const RatFun& w_inv();
const RatFun& w2();
const RatFun& w2_inv();
const RatFun& t_minus_1();
const RatFun& tinv_minus_1();
const RatFun& inv_wx();   // 1/(wx)
const RatFun& y();        // x(t w^2 - 1)/(1 - t)
const RatFun& y_over_wx();

// Child weights for a positive mixed-color crossing: (switch,
// switch+merge, smooth+merge).
std::array<RatFun, 3> va();
// Same for a negative mixed-color crossing.
std::array<RatFun, 3> vb();
}  // namespace coeffs

// y^(n-c) / (wx)^(n-1): value of the n-component unlink in c colors.
RatFun unlink_value(int n, int c);

}  // namespace skeinf

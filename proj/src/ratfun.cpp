#include "skeinf/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace skeinf {

Poly Poly::constant(long c) { return mono(0, 0, 0, c); }

Poly Poly::mono(int ex, int ew, int et, long c) {
  Poly p;
  if (c != 0) p.terms_[{ex, ew, et}] = c;
  return p;
}

void Poly::add_term(const Mono& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      r.add_term({m1.ex + m2.ex, m1.ew + m2.ew, m1.et + m2.et}, c1 * c2);
    }
  }
  return r;
}

std::optional<Poly> Poly::div_one_minus_t() const {
  // per (ex, ew) group the quotient's t-coefficients are the prefix sums of
  // the dividend's; divisible exactly when each group's sums return to zero
  std::map<std::pair<int, int>, std::map<int, mpz_class>> groups;
  for (const auto& [m, c] : terms_) groups[{m.ex, m.ew}][m.et] = c;
  Poly q;
  for (const auto& [xw, g] : groups) {
    mpz_class run = 0;
    bool have_prev = false;
    int prev = 0;
    for (const auto& [d, c] : g) {
      if (have_prev && run != 0) {
        for (int dd = prev; dd < d; ++dd)
          q.add_term({xw.first, xw.second, dd}, run);
      }
      run += c;
      prev = d;
      have_prev = true;
    }
    if (run != 0) return std::nullopt;
  }
  return q;
}

RatFun::RatFun(Poly num, int k) : num_(std::move(num)), k_(k) {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto d = num_.div_one_minus_t();
    if (!d) break;
    num_ = std::move(*d);
    --k_;
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  int k = std::max(k_, o.k_);
  Poly a = num_, b = o.num_;
  Poly one_minus_t = Poly::constant(1) - Poly::mono(0, 0, 1);
  for (int i = k_; i < k; ++i) a = a * one_minus_t;
  for (int i = o.k_; i < k; ++i) b = b * one_minus_t;
  return RatFun(a + b, k);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return *this + RatFun(-o.num_, o.k_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, k_ + o.k_);
}

namespace {

void append_var(std::string& s, const char* v, int e, bool& first_piece) {
  if (e == 0) return;
  if (!first_piece) s += "*";
  first_piece = false;
  s += v;
  if (e != 1) {
    s += "^";
    s += std::to_string(e);
  }
}

std::string term_body(const Mono& m, const mpz_class& abs_coeff) {
  std::string s;
  bool first = true;
  if (abs_coeff != 1 || (m.ex == 0 && m.ew == 0 && m.et == 0)) {
    s += abs_coeff.get_str();
    first = false;
  }
  append_var(s, "x", m.ex, first);
  append_var(s, "w", m.ew, first);
  append_var(s, "t", m.et, first);
  return s;
}

}  // namespace

std::string RatFun::text() const {
  if (num_.is_zero()) return "0";
  // factor negative monomial content out into the displayed denominator
  int gx = 0, gw = 0, gt = 0;
  bool first = true;
  for (const auto& [m, c] : num_.terms()) {
    if (first) {
      gx = m.ex;
      gw = m.ew;
      gt = m.et;
      first = false;
    } else {
      gx = std::min(gx, m.ex);
      gw = std::min(gw, m.ew);
      gt = std::min(gt, m.et);
    }
  }
  gx = std::min(gx, 0);
  gw = std::min(gw, 0);
  gt = std::min(gt, 0);

  std::string nums;
  bool lead = true;
  for (const auto& [m, c] : num_.terms()) {
    Mono shown{m.ex - gx, m.ew - gw, m.et - gt};
    if (lead) {
      if (c < 0) nums += "-";
      lead = false;
    } else {
      nums += (c < 0) ? " - " : " + ";
    }
    nums += term_body(shown, abs(c));
  }

  std::string dens;
  bool dfirst = true;
  if (k_ > 0) {
    dens += "(1-t)";
    if (k_ != 1) {
      dens += "^";
      dens += std::to_string(k_);
    }
    dfirst = false;
  }
  append_var(dens, "x", -gx, dfirst);
  append_var(dens, "w", -gw, dfirst);
  append_var(dens, "t", -gt, dfirst);

  if (dens.empty()) return nums;
  std::string out;
  if (num_.terms().size() > 1) {
    out = "(" + nums + ")";
  } else {
    out = nums;
  }
  out += " / (" + dens + ")";
  return out;
}

std::string RatFun::json() const {
  nlohmann::json j;
  j["num"] = nlohmann::json::array();
  for (const auto& [m, c] : num_.terms()) {
    j["num"].push_back({m.ex, m.ew, m.et, c.get_str()});
  }
  j["k"] = k_;
  return j.dump();
}

RatFun RatFun::parse_json(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  Poly p;
  for (const auto& term : j.at("num")) {
    if (term.size() != 4) throw std::runtime_error("bad num entry");
    mpz_class c;
    if (term[3].is_string()) {
      c = mpz_class(term[3].get<std::string>());
    } else {
      c = mpz_class(term[3].get<long>());
    }
    p.add_term({term[0].get<int>(), term[1].get<int>(), term[2].get<int>()}, c);
  }
  return RatFun(p, j.at("k").get<int>());
}

namespace {

// Minimal recursive-descent parser for the text form. Accepts what text()
// emits plus free integer exponents, so hand-written inputs work too.
struct TextParser {
  const std::string& s;
  size_t i = 0;

  explicit TextParser(const std::string& str) : s(str) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::runtime_error("polynomial parse error at offset " +
                             std::to_string(i) + ": " + why);
  }

  long integer() {
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    long v = std::stol(s.substr(start, i - start));
    return neg ? -v : v;
  }

  // term := [digits] {'*'? var ['^' int]}
  void term(Poly& out, int sign) {
    skip();
    mpz_class coeff = 1;
    Mono m;
    bool any = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      coeff = mpz_class(s.substr(start, i - start));
      any = true;
    }
    while (true) {
      skip();
      size_t save = i;
      eat('*');
      skip();
      if (i < s.size() && (s[i] == 'x' || s[i] == 'w' || s[i] == 't')) {
        char v = s[i++];
        int e = 1;
        if (eat('^')) e = static_cast<int>(integer());
        (v == 'x' ? m.ex : v == 'w' ? m.ew : m.et) += e;
        any = true;
      } else {
        i = save;
        break;
      }
    }
    if (!any) fail("expected term");
    out.add_term(m, sign < 0 ? mpz_class(-coeff) : coeff);
  }

  // sum := ['-'] term {('+'|'-') term}
  Poly sum() {
    Poly p;
    int sign = eat('-') ? -1 : 1;
    term(p, sign);
    while (true) {
      skip();
      if (eat('+')) {
        term(p, 1);
      } else if (eat('-')) {
        term(p, -1);
      } else {
        break;
      }
    }
    return p;
  }

  Poly group() {
    if (eat('(')) {
      Poly p = sum();
      if (!eat(')')) fail("expected )");
      return p;
    }
    return sum();
  }

  // denominator := piece {'*' piece}; piece := '(1-t)' ['^' int] | var ['^' int]
  void denominator(Poly& content, int& k) {
    skip();
    // a bare "(1-t)..." here is the piece itself, not a wrapping paren
    bool outer = s.compare(i, 5, "(1-t)") != 0 && eat('(');
    while (true) {
      skip();
      if (s.compare(i, 5, "(1-t)") == 0) {
        i += 5;
        int e = 1;
        if (eat('^')) e = static_cast<int>(integer());
        k += e;
      } else if (i < s.size() && (s[i] == 'x' || s[i] == 'w' || s[i] == 't')) {
        char v = s[i++];
        int e = 1;
        if (eat('^')) e = static_cast<int>(integer());
        Mono m;
        (v == 'x' ? m.ex : v == 'w' ? m.ew : m.et) = -e;
        content = content * Poly::mono(m.ex, m.ew, m.et);
      } else {
        fail("expected denominator piece");
      }
      if (!eat('*')) break;
    }
    if (outer && !eat(')')) fail("expected )");
  }
};

}  // namespace

RatFun RatFun::parse_text(const std::string& s) {
  TextParser p(s);
  p.skip();
  if (p.s.compare(p.i, 1, "0") == 0 && p.i + 1 >= p.s.size()) {
    return RatFun();
  }
  Poly num = p.group();
  int k = 0;
  Poly content = Poly::constant(1);
  if (p.eat('/')) {
    p.denominator(content, k);
  }
  p.skip();
  if (p.i != p.s.size()) p.fail("trailing input");
  return RatFun(num * content, k);
}

SPoly SPoly::mono(int e, long c) {
  SPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

void SPoly::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SPoly SPoly::operator+(const SPoly& o) const {
  SPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SPoly SPoly::operator-(const SPoly& o) const {
  SPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SPoly SPoly::operator*(const SPoly& o) const {
  SPoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

std::optional<SPoly> SPoly::div_one_minus_s2() const {
  if (terms_.empty()) return SPoly();
  // n = q (1 - s^2) gives q_i = n_i + q_(i-2); the tail must vanish
  int lo = terms_.begin()->first, hi = terms_.rbegin()->first;
  std::map<int, mpz_class> q;
  for (int e = lo; e <= hi; ++e) {
    mpz_class v = 0;
    auto it = terms_.find(e);
    if (it != terms_.end()) v = it->second;
    auto qit = q.find(e - 2);
    if (qit != q.end()) v += qit->second;
    if (v != 0) q[e] = v;
  }
  if (q.count(hi) || q.count(hi - 1)) return std::nullopt;
  SPoly r;
  for (const auto& [e, c] : q) r.add_term(e, c);
  return r;
}

std::string SPoly::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool lead = true;
  for (const auto& [e, c] : terms_) {
    if (lead) {
      if (c < 0) out += "-";
      lead = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    mpz_class a = abs(c);
    std::string body;
    if (a != 1 || e == 0) body += a.get_str();
    if (e != 0) {
      if (!body.empty()) body += "*";
      body += "s";
      if (e != 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

SPoly substitute_jones(const RatFun& r) {
  SPoly n;
  for (const auto& [m, c] : r.num().terms()) {
    if (m.ex != 0) {
      throw std::domain_error(
          "jones substitution: value contains x (exponent " +
          std::to_string(m.ex) + "); not a single-color invariant");
    }
    n.add_term(m.ew + 2 * m.et, c);
  }
  for (int i = 0; i < r.k(); ++i) {
    auto d = n.div_one_minus_s2();
    if (!d) {
      throw std::domain_error("jones substitution: (1-s^2)^k does not cancel");
    }
    n = std::move(*d);
  }
  return n;
}

namespace coeffs {

const RatFun& one() {
  static const RatFun v = RatFun::constant(1);
  return v;
}
const RatFun& c_plus() {
  static const RatFun v = RatFun::mono(0, -1, 0);
  return v;
}
const RatFun& c_minus() {
  static const RatFun v = RatFun::mono(0, 1, 0);
  return v;
}
const RatFun& c_merge() {
  static const RatFun v =
      RatFun(Poly::constant(1) - Poly::mono(0, 0, -1), 0);
  return v;
}
const RatFun& c_merge_plus() {
  static const RatFun v = c_plus() * c_merge();
  return v;
}
const RatFun& tw2() {
  static const RatFun v = RatFun::mono(0, 2, 1);
  return v;
}
const RatFun& tw2_inv() {
  static const RatFun v = RatFun::mono(0, -2, -1);
  return v;
}
const RatFun& w() {
  static const RatFun v = RatFun::mono(0, 1, 0);
  return v;
}
const RatFun& w_inv() {
  static const RatFun v = RatFun::mono(0, -1, 0);
  return v;
}
const RatFun& w2() {
  static const RatFun v = RatFun::mono(0, 2, 0);
  return v;
}
const RatFun& w2_inv() {
  static const RatFun v = RatFun::mono(0, -2, 0);
  return v;
}
const RatFun& t_minus_1() {
  static const RatFun v =
      RatFun(Poly::mono(0, 0, 1) - Poly::constant(1), 0);
  return v;
}
const RatFun& tinv_minus_1() {
  static const RatFun v =
      RatFun(Poly::mono(0, 0, -1) - Poly::constant(1), 0);
  return v;
}
const RatFun& inv_wx() {
  static const RatFun v = RatFun::mono(-1, -1, 0);
  return v;
}
const RatFun& y() {
  static const RatFun v =
      RatFun(Poly::mono(1, 2, 1) - Poly::mono(1, 0, 0), 1);
  return v;
}
const RatFun& y_over_wx() {
  static const RatFun v = y() * inv_wx();
  return v;
}

std::array<RatFun, 3> va() {
  return {w2(), w2() * t_minus_1(), w() * t_minus_1()};
}

std::array<RatFun, 3> vb() {
  return {w2_inv(), w2_inv() * tinv_minus_1(), w_inv() * tinv_minus_1()};
}

}  // namespace coeffs

RatFun unlink_value(int n, int c) {
  if (c < 1 || c > n) {
    throw std::domain_error("unlink_value: need 1 <= c <= n, got n=" +
                            std::to_string(n) + " c=" + std::to_string(c));
  }
  RatFun r = coeffs::one();
  for (int i = 0; i < n - c; ++i) r = r * coeffs::y();
  for (int i = 0; i < n - 1; ++i) r = r * coeffs::inv_wx();
  return r;
}

}  // namespace skeinf

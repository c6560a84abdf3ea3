#include "skeinf/refvalues.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace skeinf::refvalues {

namespace {

size_t matching_paren(const std::string& s, size_t open) {
  int depth = 0;
  for (size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  throw std::runtime_error("reference value: unbalanced parens: " + s);
}

// product of variable powers and (1-t)/(t-1) powers, separated by spaces
// or '*'; fills the inverse monomial, the (1-t) exponent and the sign.
void parse_denominator(const std::string& s, Poly& inv, int& k, int& sign) {
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() &&
           (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*'))
      ++i;
  };
  auto exponent = [&]() -> int {
    if (i < s.size() && s[i] == '^') {
      ++i;
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (i == start)
        throw std::runtime_error("reference value: bad exponent: " + s);
      return std::stoi(s.substr(start, i - start));
    }
    return 1;
  };
  skip();
  while (i < s.size()) {
    if (s.compare(i, 5, "(1-t)") == 0 || s.compare(i, 5, "(t-1)") == 0) {
      bool flipped = s.compare(i, 5, "(t-1)") == 0;
      i += 5;
      int e = exponent();
      k += e;
      if (flipped && (e % 2)) sign = -sign;
    } else if (s[i] == 'x' || s[i] == 'w' || s[i] == 't') {
      char v = s[i++];
      int e = exponent();
      inv = inv * Poly::mono(v == 'x' ? -e : 0, v == 'w' ? -e : 0,
                             v == 't' ? -e : 0);
    } else {
      throw std::runtime_error("reference value: bad denominator: " + s);
    }
    skip();
  }
}

}  // namespace

RatFun parse_ref(const std::string& s) {
  // split at the last top-level '/'
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) slash = i;
  }
  std::string numpart = (slash == std::string::npos) ? s : s.substr(0, slash);
  int sign = 1, k = 0;
  Poly inv = Poly::constant(1);
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    size_t b = den.find_first_not_of(" \t");
    size_t e = den.find_last_not_of(" \t");
    den = den.substr(b, e - b + 1);
    if (den.front() == '(' && matching_paren(den, 0) == den.size() - 1 &&
        den.compare(0, 5, "(1-t)") != 0 && den.compare(0, 5, "(t-1)") != 0) {
      den = den.substr(1, den.size() - 2);
    }
    parse_denominator(den, inv, k, sign);
  }

  // numerator: optional sign, then monomial factors around one (sum) group
  Poly num = Poly::constant(1);
  size_t i = 0;
  auto skip = [&] {
    while (i < numpart.size() &&
           std::isspace(static_cast<unsigned char>(numpart[i])))
      ++i;
  };
  skip();
  if (i < numpart.size() && numpart[i] == '-') {
    sign = -sign;
    ++i;
  }
  bool saw_factor = false;
  skip();
  while (i < numpart.size()) {
    if (numpart[i] == '(') {
      size_t close = matching_paren(numpart, i);
      num = num * RatFun::parse_text(numpart.substr(i + 1, close - i - 1)).num();
      i = close + 1;
    } else {
      size_t start = i;
      while (i < numpart.size() && numpart[i] != '(') ++i;
      std::string piece = numpart.substr(start, i - start);
      if (piece.find_first_not_of(" \t") == std::string::npos) break;
      num = num * RatFun::parse_text(piece).num();
    }
    saw_factor = true;
    skip();
  }
  if (!saw_factor) {
    throw std::runtime_error("reference value: empty numerator: " + s);
  }
  if (sign < 0) num = -num;
  return RatFun(num * inv, k);
}

const std::vector<SimpleRow>& simple_rows() {
  static const std::vector<SimpleRow> rows = [] {
    std::vector<SimpleRow> r;
    auto add = [&](const std::string& id, const std::string& link,
                   const std::string& colors, const std::string& value) {
      r.push_back({id, link, colors, parse_ref(value)});
    };
    add("L1", "unknot", "0", "1");
    add("L2", "O2", "0,0", "(t w^2-1)/((1-t) w)");
    add("L3", "O2", "0,1", "1/(w x)");
    add("L4", "hopf+", "0,0", "w (t^2 w^2+t-t^2-1)/(1-t)");
    add("L5", "hopf+", "0,1", "(1-x t w^2+x t) w/x");
    add("L6", "hopf-", "0,0", "(t w^2+1-t^2 w^2-w^2)/(t w^3 (t-1))");
    add("L7", "hopf-", "0,1", "(t-x+x w^2)/(t w^3 x)");
    add("L8", "O3", "0,0,0", "(t^2 w^4-2 t w^2+1)/((1-t)^2 w^2)");
    add("L9", "O3", "0,0,1", "(t w^2-1)/((1-t) w^2 x)");
    add("L26", "O3", "0,1,2", "1/(w^2 x^2)");
    add("L40", "trefoil", "0", "t^2 w^2+w^2-t^2 w^4");
    add("L41", "trefoil-", "0", "(t^2 w^2+w^2-1)/(t^2 w^4)");
    return r;
  }();
  return rows;
}

RatFun simple(const std::string& id) {
  for (const auto& row : simple_rows()) {
    if (row.id == id) return row.value;
  }
  throw std::out_of_range("no reference row " + id);
}

const std::map<std::string, RatFun>& f3_table() {
  static const std::map<std::string, RatFun> table = [] {
    std::map<std::string, RatFun> m;
    auto add = [&](const std::string& id, const std::string& v) {
      m.emplace(id, parse_ref(v));
    };
    add("L11n325{1,1}",
        "(-x t^6 w^4+x^2 t^6 w^6+x t^5 w^4-x^2 t^4-x t w^2-3 x^2 t w^2"
        "+6 x^2 t^2 w^2-8 x^2 t^3 w^2+6 x^2 t^4 w^2-3 x^2 t^5 w^2+x^2 t^6 w^2"
        "+x t^3 w^4+x t^2 w^2-2 x t^3 w^2-2 x^2 t^2 w^4+5 x^2 t^3 w^4"
        "-6 x^2 t^4 w^4+5 x^2 t^5 w^4-2 x^2 t^6 w^4-x^2+x t+x t^4 w^2"
        "-x t^5 w^2+x t^6 w^2-x t^2-4 x^2 t^2+3 x^2 t-2 x^2 t^5 w^6"
        "+x^2 t^4 w^6+x^2 w^2+3 x^2 t^3+t^5 w^2+x t^3-x t^4)/(w^6 x^2 t^5)");
    add("L11n424{0,0}",
        "-(2 x t^6 w^4-2 x t^5 w^4+x^2 t^4+2 x^2 t w^2-7 x^2 t^2 w^2"
        "+8 x^2 t^3 w^2-5 x^2 t^4 w^2+4 x^2 t^5 w^2-x^2 t^6 w^2+2 x t^3 w^2"
        "+3 x^2 t^2 w^4-4 x^2 t^3 w^4+6 x^2 t^4 w^4-6 x^2 t^5 w^4"
        "+x^2 t^6 w^4+x^2-x t^4 w^2+2 x t^5 w^2-2 x t^6 w^2+4 x^2 t^2"
        "-2 x^2 t-x t^4 w^4+2 x^2 t^5 w^6-2 x^2 t^4 w^6-x^2 w^2-4 x^2 t^3"
        "-t^5 w^2-2 x t^3+2 x t^4)/(w^6 x^2 t^5)");
    add("L11n356{1,0}",
        "(-t^2 x^2+2 t x^2-x t^5 w^4+x t^3 w^2-x^2+8 t^3 x^2 w^4"
        "-x^2 t^6 w^4+t^2 w^2+x^2 t^6 w^6-4 t^2 x^2 w^4-x t^3 w^4"
        "-5 t^3 x^2 w^2-3 x^2 t^5 w^6-4 x^2 t^4 w^4+x^2 t^4 w^2"
        "+3 x^2 t^5 w^4+2 x^2 w^2+x t^5 w^2+5 x^2 t^2 w^2-5 x^2 t w^2"
        "-x^2 w^4-x t w^2+x t w^4-3 x^2 t^3 w^6+3 t x^2 w^4"
        "+3 x^2 t^4 w^6)/(w^2 x^2 t^2)");
    add("L11n434{0,0}",
        "(x t^3-2 t^2 x^2+2 t x^2-x t+x+x t^3 w^2+8 t^3 x^2 w^4+x t^4 w^2"
        "-x^2 t^6 w^4-x t^4 w^4+t^2 w^2+x^2 t^6 w^6-3 t^2 x^2 w^4"
        "-2 x t^3 w^4-4 t^3 x^2 w^2-2 x^2 t^5 w^6-5 x^2 t^4 w^4"
        "+2 x^2 t^4 w^2+2 x^2 t^5 w^4+x^2 w^2-x t^2+5 x^2 t^2 w^2-x w^2"
        "-6 x^2 t w^2-x^2 w^4+x t w^4-4 x^2 t^3 w^6+x t^2 w^4+4 t x^2 w^4"
        "+3 x^2 t^4 w^6)/(w^2 x^2 t^2)");
    add("L10n79{1,1}",
        "-(-2 x^2 t^2 w^4+x^2 t^3 w^4+3 t^4 w^2 x^2-2 x^2 t^4 w^4"
        "+2 x^2 t^3-3 w^2 x^2 t^3+t^7 x^2 w^4-x^2 t^4+x^2 t^6+t^7 x w^2"
        "+x^2 t^5-2 t^5 x w^2+2 t^5 x-t^7 x-x^2 t w^2-x^2 t^7 w^2+x^2 w^2"
        "-3 x^2 t^5 w^2-x^2-t^6+2 x^2 t^5 w^4+5 w^2 x^2 t^2-2 x t^3 w^2"
        "+2 t^3 x-3 x^2 t^2+x^2 t-x^2 t^6 w^2)/(w^8 x^2 t^6)");
    add("L10n95{1,0}",
        "(t^6-3 w^2 x^2 t^2+x^2 t^2 w^4-2 x^2 t+2 x^2 t w^2-2 x^2 t^5 w^4"
        "+2 x^2 t^2+x^2 t^4+t^5 x w^2-2 x^2 t^3+x t^3 w^2-t^3 x-t^5 x"
        "+2 x^2 t^4 w^4+2 x^2 t^5 w^2+4 w^2 x^2 t^3+x^2 t^6 w^4"
        "-2 x^2 t^3 w^4-x^2 w^2-x^2 t^6 w^2+x t w^2-x t+x^2"
        "-3 t^4 w^2 x^2)/(w^8 x^2 t^6)");
    add("L11a404{1,1}",
        "-(x t^2 w^4-x w^2+x-2 x t^6 w^4-2 x^2 t^7 w^2+x^2 t^8 w^2"
        "+4 x^2 t^7 w^4-2 x^2 t^8 w^4+2 x^2 t^6 w^6-2 x^2 t^7 w^6"
        "+x^2 t^8 w^6-4 x^2 t^4+x t w^2-3 x^2 t w^2+4 x^2 t^2 w^2"
        "-15 x^2 t^3 w^2+9 x^2 t^4 w^2-15 x^2 t^5 w^2+6 x^2 t^6 w^2"
        "-x t^3 w^4-4 x t^2 w^2+x t^3 w^2-t^5-x^2 t^2 w^4+8 x^2 t^3 w^4"
        "-6 x^2 t^4 w^4+15 x^2 t^5 w^4-7 x^2 t^6 w^4-x t-x t^4 w^2"
        "+4 x t^6 w^2-t^3+3 x t^2-3 x^2 t^2+2 x^2 t+2 x t^4 w^4"
        "-x^2 t^3 w^6+x^2 t w^4-4 x^2 t^5 w^6+x^2 t^4 w^6+8 x^2 t^3"
        "+t^5 w^2+4 x^2 t^5-x^2 t^6-2 x t^6-x t^4)/(x^2 t^3)");
    add("L11a428{0,1}",
        "-(-t^6 x-3 x^2 t^4+t^4 x+4 x^2 t^5+7 x^2 t^3-t^3+t^5 x w^2-x^2"
        "+t^5 w^2-4 x^2 t^2+2 t^2 x+9 x^2 t^4 w^2+2 x^2 t+x^2 t^7"
        "+6 x^2 t^3 w^4-t^8 x+x^2 w^2-t^5-x^2 t^8 w^4-2 x^2 t^2 w^4"
        "-7 x^2 t^4 w^4-16 x^2 t^5 w^2-3 x^2 t^7 w^6+4 x^2 t^6 w^2"
        "+2 x^2 t^6 w^6+6 x^2 t^2 w^2+2 t^6 x w^2-x t^6 w^4+x^2 t^8 w^6"
        "+x^2 t^4 w^6-6 x^2 t^6 w^4+2 x t^4 w^4-13 x^2 t^3 w^2"
        "+16 x^2 t^5 w^4-4 x^2 t^7 w^2-4 x^2 t^5 w^6-t^5 x+6 x^2 t^7 w^4"
        "-3 t^4 x w^2+t^8 x w^2-t^7 x w^4-2 x^2 t w^2+t^7 x w^2"
        "-2 x t^2 w^2)/(x^2 t^3)");
    add("L11n358{1,1}",
        "(-x^2 t+x^2 t^2-x^2 t^3+x^2 t^4+2 x^2 t w^2-2 x^2 t^2 w^2"
        "+2 x^2 t^2 w^4-x^2 t w^4+3 x^2 t^3 w^2-3 x^2 t^4 w^2"
        "-4 x^2 t^3 w^4+2 x^2 t^3 w^6+2 x^2 t^4 w^4-x^2 t^2 w^6"
        "-4 x^2 t^5 w^4+x^2 t^4 w^8+x^2 t^5 w^6+3 x^2 t^5 w^2"
        "-x^2 t^4 w^6-t^6 w^8 x^2+2 t^6 w^4 x^2-t^6 w^2 x^2+t^7 w^6 x^2"
        "-t^7 w^4 x^2-x+t w^2+2 x t^3 w^4+x t-2 x t w^2+x w^2"
        "+4 x t^2 w^2-4 x t^2 w^4-x t^3 w^2+x w^4 t+x w^2 t^4-w^6 x t^3"
        "+x w^6 t^4-2 x w^4 t^4) w^2/(x^2 t)");
    add("L11n418{1,0}",
        "(-2 x^2 t+x^2 t^2-x^2 t^3+x^2 t^4+3 x^2 t w^2-2 x^2 t^2 w^2"
        "+2 x^2 t^2 w^4+4 x^2 t^3 w^2-3 x^2 t^4 w^2-5 x^2 t^3 w^4"
        "+x^2 t^3 w^6+x^2 t^4 w^4-x^2 t^2 w^6-4 x^2 t^5 w^4+x^2 t^5 w^6"
        "+3 x^2 t^5 w^2+x^2 t^4 w^6+x^2-t^6 w^8 x^2+2 t^6 w^4 x^2"
        "-t^6 w^2 x^2-2 x^2 w^2+t^7 w^6 x^2-t^7 w^4 x^2+w^4 x^2"
        "-w^6 x t^2+t w^2-2 x t^3 w^4-x t+2 x t w^2-x w^2+x t^2"
        "+x t^2 w^2-x t^2 w^4+x t^3 w^2+x w^4-x w^4 t+w^6 x t^3"
        "+w^8 x^2 t^3-w^6 x^2 t) w^2/(x^2 t)");
    add("L11n358{0,1}",
        "(-t x^2 w^4+x^2 t^5 w^2+x t^2 w^2+t^3 x^2+t^5-3 t^4 x-x w^4 t^6"
        "-t^2 w^6 x^2-t^4 x^2+t^5 x+x^2 t^7 w^6-x^2 t^7 w^4+x t^6 w^2"
        "+x w^4 t^7-x t^7 w^2+t^2 x^2-2 x^2 w^2-x t^2+x^2 w^4"
        "+2 x^2 t^3 w^6+x^2 t^6 w^2-3 x^2 t^4 w^6+x^2 t w^2"
        "-5 x^2 t^2 w^2+5 x^2 t^4 w^4+2 x^2 t^5 w^6+x^2+t^3 x^2 w^2"
        "+5 t^2 x^2 w^4-4 t^3 x^2 w^4-x^2 t^6 w^6+3 x t^4 w^2"
        "-x^2 t^4 w^2-x t^5 w^2-3 x^2 t^5 w^4)/(t^5 x^2 w^8)");
    add("L11a467{0,1}",
        "-(3 x t^4-x^2 t^2-x^2 t^3+3 x^2 w^2+9 x^2 t^2 w^2"
        "+14 x^2 t^3 w^4+5 x^2 t w^4-10 x^2 t^3 w^6-4 x^2 t^3 w^2"
        "-3 x t^4 w^2-13 x^2 t^4 w^4+13 x^2 t^4 w^6+2 x^2 t^4 w^2"
        "+w^8 x^2 t^3-3 t^4 w^8 x^2+t^7 x^2 w^4-t^6 x^2 w^2"
        "-2 t^7 w^6 x^2+x t^7 w^2-t^5+7 t^5 x^2 w^4-10 t^5 x^2 w^6"
        "-t^6 x^2 w^4+5 t^6 x^2 w^6+t^5 x w^2+t^6 w^4 x-t^7 x w^4"
        "-t^6 x w^2+4 w^8 t^5 x^2-x^2 w^6 t-t^5 x^2 w^2+t^7 w^8 x^2"
        "-3 t^6 w^8 x^2+x^2 t^4-x t^5-x^2-x t^2 w^2+x t^2"
        "+5 w^6 x^2 t^2-4 w^2 t x^2-2 x^2 w^4-13 w^4 x^2 t^2)/(w^8 t^5 x^2)");
    add("L10n76{1,1}",
        "(-x^2 w^4 t+t^3 w^6 x^2+3 x^2 t^2 w^4-4 x^2 t^3 w^4+t^5 x w^2"
        "-t^5 x w^4-x^2 t^4 w^2+3 x^2 t^3 w^2-x^2 t^5 w^4-4 x^2 t^2 w^2"
        "+x^2 t^5 w^6+3 x^2 t^4 w^4-2 x^2 t^4 w^6+t^5-t^4 x+x^2 t^2"
        "-2 x^2 t-x^2 w^2+x^2+3 w^2 t x^2-x t+x t w^2-x t^2 w^2"
        "+t^4 w^4 x+x t^2 w^4-x t^3 w^4+2 x t^3 w^2-x t^3)/(t^5 x^2 w^8)");
    add("L11n425{1,0}",
        "-(x^2 w^4 t-2 t^3 w^6 x^2-3 x^2 t^2 w^4+4 x^2 t^3 w^4"
        "-2 t^5 x w^2+2 t^5 x w^4+x^2 t^4 w^2-2 x^2 t^3 w^2"
        "+x^2 t^5 w^4+5 x^2 t^2 w^2-4 x^2 t^4 w^4+2 x^2 t^4 w^6-t^5"
        "+2 t^4 x-2 x^2 t^2+x^2 t+x^2 w^2-x^2-t^6 x+t^5 x^2+t^4 x^2"
        "-t^6 x^2 w^2-2 t^5 x^2 w^2+t^6 x^2 w^4+t^6 x w^2-2 w^2 t x^2"
        "-2 t^4 w^4 x-2 x t^3 w^2+2 x t^3)/(t^5 x^2 w^8)");
    m.emplace("L11n418{0,0}", m.at("L11n358{0,1}"));
    m.emplace("L11a527{0,0}", m.at("L11a467{0,1}"));
    return m;
  }();
  return table;
}

RatFun f3(const std::string& id) {
  auto it = f3_table().find(id);
  if (it == f3_table().end()) throw std::out_of_range("no reference F3 for " + id);
  return it->second;
}

const std::map<std::string, std::vector<RatFun>>& f2_table() {
  static const std::map<std::string, std::vector<RatFun>> table = [] {
    std::map<std::string, std::vector<RatFun>> m;
    auto add = [&](const std::string& id, const std::string& a,
                   const std::string& b, const std::string& c) {
      std::vector<RatFun> v = {parse_ref(a), parse_ref(b), parse_ref(c)};
      std::sort(v.begin(), v.end(), [](const RatFun& l, const RatFun& r) {
        return l.text() < r.text();
      });
      m.emplace(id, std::move(v));
    };
    add("L11n358{0,1}",
        "(2 t^3 w^2+t^4 w^4-4 t^4 w^2-2 t^3+6 x t^2 w^2-2 t^5+5 t^5 w^2"
        "+t^4 x-2 t^5 w^4+2 t^6 w^4-4 t^6 w^2+3 t^4-3 w^6 x t^3"
        "+5 w^6 x t^4+w^6 x t^2-6 x w^6 t^5+4 x w^6 t^6-4 x w^4 t^6"
        "-t^5 x+2 t^7 w^2-t^8 w^2+t^8 w^4-2 t^7 w^4+x w^4 t^7+x t^7 w^2"
        "-2 x t^7 w^6-t^2 w^2+x t-x t^3-x t^2+2 x w^2-x+t^6+7 x t^5 w^4"
        "+t^2-5 x t^3 w^2-x w^4+3 x t^4 w^2+9 x t^3 w^4-3 x t w^2"
        "+2 x t w^4-9 x t^4 w^4-6 x t^2 w^4+x t^8 w^6-x t^8 w^4)"
        "/((t-1) w^8 t^5 x)",
        "-(-7 x t^2 w^2-t^5+t^4 x+t^6 w^2+3 w^6 x t^3-5 w^6 x t^4"
        "-w^6 x t^2+5 x w^6 t^5-3 x w^6 t^6+3 x w^4 t^6-x w^4 t^7"
        "+x t^7 w^6-x t+2 x t^2-2 x w^2+x-5 x t^5 w^4+5 x t^3 w^2+x w^4"
        "-5 x t^4 w^2-8 x t^3 w^4+3 x t w^2-2 x t w^4+9 x t^4 w^4"
        "+6 x t^2 w^4)/((t-1) w^8 t^5 x)",
        "-(t^3 w^2+t^4 w^4-t^4 w^2-t^3-7 x t^2 w^2+t^5 w^2-2 t^5 w^4"
        "+t^6 w^4+3 w^6 x t^3-5 w^6 x t^4-w^6 x t^2+4 x w^6 t^5"
        "-2 x w^6 t^6+2 x w^4 t^6-x w^4 t^7+x t^7 w^6-x t-x t^3"
        "+2 x t^2-2 x w^2+x-6 x t^5 w^4+6 x t^3 w^2+x w^4-4 x t^4 w^2"
        "-8 x t^3 w^4+2 x t^5 w^2+3 x t w^2-2 x t w^4+9 x t^4 w^4"
        "+6 x t^2 w^4)/((t-1) w^8 t^5 x)");
    add("L11n418{0,0}",
        "(-t^4 w^2+7 x t^2 w^2-t^5+2 t^5 w^2+t^6 w^4-3 t^6 w^2+t^4"
        "-3 w^6 x t^3+5 w^6 x t^4+w^6 x t^2-5 x w^6 t^5+3 x w^6 t^6"
        "-3 x w^4 t^6-t^5 x+2 t^7 w^2-t^8 w^2+t^8 w^4-2 t^7 w^4"
        "+x w^4 t^7+x t^7 w^2-2 x t^7 w^6+x t-2 x t^2+2 x w^2-x+t^6"
        "+6 x t^5 w^4-5 x t^3 w^2-x w^4+4 x t^4 w^2+8 x t^3 w^4"
        "-3 x t w^2+2 x t w^4-9 x t^4 w^4-6 x t^2 w^4+x t^8 w^6"
        "-x t^8 w^4)/(w^8 t^5 x (t-1))",
        "-(-t^3 w^2+t^4 w^2+t^3-6 x t^2 w^2-t^5 w^2+t^6 w^2-t^4"
        "+3 w^6 x t^3-5 w^6 x t^4-w^6 x t^2+5 x w^6 t^5-3 x w^6 t^6"
        "+3 x w^4 t^6-x w^4 t^7+x t^7 w^6+t^2 w^2-x t+x t^2-2 x w^2+x"
        "-6 x t^5 w^4-t^2+6 x t^3 w^2+x w^4-4 x t^4 w^2-9 x t^3 w^4"
        "+x t^5 w^2+3 x t w^2-2 x t w^4+9 x t^4 w^4+6 x t^2 w^4)"
        "/(w^8 t^5 x (t-1))",
        "-(t^4 w^2-7 x t^2 w^2-t^5 w^2+t^6 w^2-t^4+3 w^6 x t^3"
        "-5 w^6 x t^4-w^6 x t^2+5 x w^6 t^5-3 x w^6 t^6+3 x w^4 t^6"
        "-x w^4 t^7+x t^7 w^6-x t+2 x t^2-2 x w^2+x-6 x t^5 w^4"
        "+5 x t^3 w^2+x w^4-4 x t^4 w^2-8 x t^3 w^4+x t^5 w^2"
        "+3 x t w^2-2 x t w^4+9 x t^4 w^4+6 x t^2 w^4)/(w^8 t^5 x (t-1))");
    add("L11a467{0,1}",
        "(-8 x t^4 w^2+27 x t^4 w^4-23 x t^4 w^6+15 t^3 w^6 x"
        "-6 t^2 w^6 x-7 w^8 t^5 x-18 t^5 x w^4+22 t^5 w^6 x+t^4 w^4"
        "-2 t^5 w^4+x w^6 t+3 t^5 x w^2-4 t^7 w^8 x+7 t^6 w^8 x"
        "+4 t^4 w^8 x-14 t^6 w^6 x+7 t^6 w^4 x-2 t^7 x w^4-t^3 w^8 x"
        "+t^5 w^2+t^6 w^4+x-26 x t^3 w^4-3 x w^2+2 x w^4-x t^8 w^6"
        "+x t^8 w^8+7 x t w^2+6 t^7 w^6 x-x t-14 x t^2 w^2+2 x t^2"
        "+t^3 w^2-x t^3+18 x t^2 w^4+13 x t^3 w^2-7 x w^4 t-t^4 w^2"
        "-t^3)/(x t^5 w^8 (1-t))",
        "(-x t^4-7 x t^4 w^2+27 x t^4 w^4-23 x t^4 w^6+15 t^3 w^6 x"
        "-6 t^2 w^6 x-x t^7 w^2-7 w^8 t^5 x+2 t^5-19 t^5 x w^4"
        "+24 t^5 w^6 x-t^4 w^4+2 t^5 w^4+x w^6 t+t^5 x w^2-4 t^7 w^8 x"
        "+7 t^6 w^8 x+4 t^4 w^8 x-16 t^6 w^6 x+9 t^6 w^4 x-2 t^7 x w^4"
        "-t^3 w^8 x-5 t^5 w^2+2 t^7 w^4-2 t^7 w^2-2 t^6 w^4+4 t^6 w^2"
        "+x t^5-t^8 w^4-t^6+t^8 x w^4+x-27 x t^3 w^4-3 x w^2+t^2 w^2"
        "-t^2+2 x w^4-2 x t^8 w^6+x t^8 w^8+7 x t w^2+7 t^7 w^6 x-x t"
        "-13 x t^2 w^2+x t^2-2 t^3 w^2+x t^3+18 x t^2 w^4+12 x t^3 w^2"
        "-7 x w^4 t+4 t^4 w^2+t^8 w^2-3 t^4+2 t^3)/(x t^5 w^8 (1-t))",
        "(x t^4-9 x t^4 w^2+27 x t^4 w^4-23 x t^4 w^6+15 t^3 w^6 x"
        "-6 t^2 w^6 x-7 w^8 t^5 x-t^5-17 t^5 x w^4+23 t^5 w^6 x"
        "+x w^6 t+t^5 x w^2-4 t^7 w^8 x+7 t^6 w^8 x+4 t^4 w^8 x"
        "-15 t^6 w^6 x+8 t^6 w^4 x-2 t^7 x w^4-t^3 w^8 x+t^6 w^2+x"
        "-26 x t^3 w^4-3 x w^2+2 x w^4-x t^8 w^6+x t^8 w^8+7 x t w^2"
        "+6 t^7 w^6 x-x t-14 x t^2 w^2+2 x t^2+18 x t^2 w^4"
        "+12 x t^3 w^2-7 x w^4 t)/(x t^5 w^8 (1-t))");
    add("L11a527{0,0}",
        "(-8 x t^4 w^2+27 x t^4 w^4-23 x t^4 w^6+15 t^3 w^6 x"
        "-6 t^2 w^6 x-7 w^8 t^5 x-18 t^5 x w^4+23 t^5 w^6 x+x w^6 t"
        "+2 t^5 x w^2-4 t^7 w^8 x+7 t^6 w^8 x+4 t^4 w^8 x-15 t^6 w^6 x"
        "+8 t^6 w^4 x-2 t^7 x w^4-t^3 w^8 x-t^5 w^2+t^6 w^2+x"
        "-26 x t^3 w^4-3 x w^2+2 x w^4-x t^8 w^6+x t^8 w^8+7 x t w^2"
        "+6 t^7 w^6 x-x t-14 x t^2 w^2+2 x t^2+18 x t^2 w^4"
        "+12 x t^3 w^2-7 x w^4 t+t^4 w^2-t^4)/(x t^5 w^8 (1-t))",
        "(-8 x t^4 w^2+27 x t^4 w^4-23 x t^4 w^6+15 t^3 w^6 x"
        "-6 t^2 w^6 x-x t^7 w^2-7 w^8 t^5 x+t^5-18 t^5 x w^4"
        "+23 t^5 w^6 x+x w^6 t+t^5 x w^2-4 t^7 w^8 x+7 t^6 w^8 x"
        "+4 t^4 w^8 x-15 t^6 w^6 x+8 t^6 w^4 x-2 t^7 x w^4-t^3 w^8 x"
        "-2 t^5 w^2+2 t^7 w^4-2 t^7 w^2-t^6 w^4+3 t^6 w^2+x t^5"
        "-t^8 w^4-t^6+t^8 x w^4+x-26 x t^3 w^4-3 x w^2+2 x w^4"
        "-2 x t^8 w^6+x t^8 w^8+7 x t w^2+7 t^7 w^6 x-x t"
        "-14 x t^2 w^2+2 x t^2+18 x t^2 w^4+12 x t^3 w^2-7 x w^4 t"
        "+t^4 w^2+t^8 w^2-t^4)/(x t^5 w^8 (1-t))",
        "(-8 x t^4 w^2+27 x t^4 w^4-23 x t^4 w^6+15 t^3 w^6 x"
        "-6 t^2 w^6 x-7 w^8 t^5 x-18 t^5 x w^4+23 t^5 w^6 x+x w^6 t"
        "+2 t^5 x w^2-4 t^7 w^8 x+7 t^6 w^8 x+4 t^4 w^8 x-15 t^6 w^6 x"
        "+8 t^6 w^4 x-2 t^7 x w^4-t^3 w^8 x-t^5 w^2+t^6 w^2+x"
        "-27 x t^3 w^4-3 x w^2+t^2 w^2-t^2+2 x w^4-x t^8 w^6"
        "+x t^8 w^8+7 x t w^2+6 t^7 w^6 x-x t-13 x t^2 w^2+x t^2"
        "-t^3 w^2+18 x t^2 w^4+13 x t^3 w^2-7 x w^4 t+t^4 w^2-t^4"
        "+t^3)/(x t^5 w^8 (1-t))");
    add("L10n76{1,1}",
        "(-3 t^5 w^6 x-t^5 x w^2+4 t^5 x w^4+4 x t^4 w^2+2 t^5 w^4"
        "-t^5 w^2-t^6 w^4+t^3+t^6 w^6 x-t^6 w^4 x-t w^2+t-x+2 t^4 w^2"
        "+3 x t-4 x t w^2+x w^2-t^2 w^4+2 t^3 w^4+2 t^2 w^2-t^2"
        "+7 x t^2 w^2-3 x t^2-7 t^4 w^4 x-t^3 w^6 x+3 t^4 w^6 x"
        "-2 t^4 w^4-4 x t^2 w^4+7 x t^3 w^4-7 x t^3 w^2-3 t^3 w^2"
        "+x t^3+x w^4 t)/(w^8 t^5 x (t-1))",
        "(-4 t^5 w^6 x+t^5 x w^2+3 t^5 x w^4+5 x t^4 w^2+t^5-t^4 x"
        "-t^6 w^2+2 t^6 w^6 x-2 t^6 w^4 x-x+2 x t-3 x t w^2+x w^2"
        "+7 x t^2 w^2-3 x t^2-8 t^4 w^4 x-2 t^3 w^6 x+4 t^4 w^6 x"
        "-4 x t^2 w^4+7 x t^3 w^4-5 x t^3 w^2+x w^4 t)/(w^8 t^5 x (t-1))",
        "(-4 t^5 w^6 x+t^5 x w^2+3 t^5 x w^4+5 x t^4 w^2+t^5-t^4 x"
        "-t^6 w^2+2 t^6 w^6 x-2 t^6 w^4 x-x+2 x t-3 x t w^2+x w^2"
        "+7 x t^2 w^2-3 x t^2-8 t^4 w^4 x-2 t^3 w^6 x+4 t^4 w^6 x"
        "-4 x t^2 w^4+7 x t^3 w^4-5 x t^3 w^2+x w^4 t)/(w^8 t^5 x (t-1))");
    add("L11n425{1,0}",
        "(-3 t^5 w^6 x-t^5 x w^2+4 t^5 x w^4+4 x t^4 w^2+2 t^5 w^4"
        "-t^5 w^2-t^6 w^4+t^3+t^6 w^6 x-t^6 w^4 x-x+t^4 w^2+2 x t"
        "-3 x t w^2+x w^2+7 x t^2 w^2-3 x t^2-8 t^4 w^4 x-2 t^3 w^6 x"
        "+4 t^4 w^6 x-t^4 w^4-4 x t^2 w^4+7 x t^3 w^4-6 x t^3 w^2"
        "-t^3 w^2+x t^3+x w^4 t)/(w^8 t^5 x (t-1))",
        "-(4 t^5 w^6 x-t^5 x w^2-3 t^5 x w^4-5 x t^4 w^2-t^5+t^4 x"
        "-2 t^6 w^6 x+2 t^6 w^4 x+t^6 x+x-t^6 x w^2-t^7+t^6+t^7 w^2"
        "-t^7 x w^2+t^7 x w^4-2 x t+3 x t w^2-x w^2-7 x t^2 w^2"
        "+3 x t^2+8 t^4 w^4 x+2 t^3 w^6 x-4 t^4 w^6 x+4 x t^2 w^4"
        "-7 x t^3 w^4+5 x t^3 w^2-x w^4 t)/(w^8 t^5 x (t-1))",
        "(-3 t^5 w^6 x-t^5 x w^2+4 t^5 x w^4+4 x t^4 w^2+2 t^5 w^4"
        "-t^5 w^2-t^6 w^4+t^3+t^6 w^6 x-t^6 w^4 x-x+t^4 w^2+2 x t"
        "-3 x t w^2+x w^2+7 x t^2 w^2-3 x t^2-8 t^4 w^4 x-2 t^3 w^6 x"
        "+4 t^4 w^6 x-t^4 w^4-4 x t^2 w^4+7 x t^3 w^4-6 x t^3 w^2"
        "-t^3 w^2+x t^3+x w^4 t)/(w^8 t^5 x (t-1))");
    return m;
  }();
  return table;
}

const std::vector<RatFun>& f2(const std::string& id) {
  auto it = f2_table().find(id);
  if (it == f2_table().end()) throw std::out_of_range("no reference F2 for " + id);
  return it->second;
}

RatFun chain4_mid_single() {
  static const RatFun v = parse_ref(
      "(1-x t^5 w^6-t-t w^2+t^2-2 x t w^2+2 x t+w^4 t^2 x-t^3 w^2+t^3 w^4"
      "+2 x t^2 w^2-6 x t^3 w^2-3 x t^2+4 x t^3+2 x t^3 w^4-x t^4 w^6"
      "+3 x t^4 w^2+3 x t^5 w^4-3 x t^5 w^2-2 x t^4+x t^5) w^3/(x (t-1)^2)");
  return v;
}

RatFun star4_center_single() {
  static const RatFun v = parse_ref(
      "w^3 (w^4 t^2+3 w^4 t^2 x-6 x t^3 w^2-3 x t^2+4 x t^3-2 x t^4"
      "-w^6 t^3 x-x t^4 w^6+3 x t^4 w^2-x t^5 w^6+3 x t^5 w^4-3 x t^5 w^2"
      "+x t^5+3 x t^3 w^4-3 x t w^2+3 x t+1-2 t w^2)/(x (t-1)^2)");
  return v;
}

}  // namespace skeinf::refvalues

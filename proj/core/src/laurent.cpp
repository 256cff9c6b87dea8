#include "klspecht/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klspecht {

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(Integer constant) {
  add_term(0, constant);
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::q(int exponent) {
  return monomial(Integer(1), exponent);
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Integer LaurentPoly::eval_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_error(std::string_view text) {
  throw std::invalid_argument("malformed Laurent polynomial: '" + std::string(text) + "'");
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) parse_error(text);
  if (s == "0") return {};

  LaurentPoly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      parse_error(text);
    }
    std::size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Integer mag = 1;
    bool has_digits = pos > digits_begin;
    if (has_digits) mag = Integer(s.substr(digits_begin, pos - digits_begin));
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t exp_begin = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == exp_begin || (pos == exp_begin + 1 && s[exp_begin] == '-')) parse_error(text);
        exponent = std::stoi(s.substr(exp_begin, pos - exp_begin));
      }
    } else if (!has_digits) {
      parse_error(text);
    }
    out.add_term(exponent, sign * mag);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

SymmetricSplit split_symmetric(const LaurentPoly& a) {
  SymmetricSplit out;
  for (const auto& [e, c] : a.terms()) {
    if (e == 0) {
      out.gamma += LaurentPoly::monomial(c, 0);
    } else if (e < 0) {
      out.gamma += LaurentPoly::monomial(c, e);
      out.gamma += LaurentPoly::monomial(c, -e);
    }
  }
  out.strict = a - out.gamma;
  return out;
}

SymmetricSplit split_symmetric_negative(const LaurentPoly& a) {
  SymmetricSplit mirrored = split_symmetric(a.bar());
  return {mirrored.gamma, mirrored.strict.bar()};
}

}  // namespace klspecht

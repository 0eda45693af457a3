#include "paracolor/poly.hpp"

#include <cctype>
#include <sstream>

#include "paracolor/errors.hpp"

namespace paracolor {

Poly::Poly(long value) {
  if (value != 0) coeffs_.push_back(Rational(value));
}

Poly::Poly(Rational value) {
  if (value != 0) coeffs_.push_back(std::move(value));
}

Poly Poly::lambda() {
  Poly p;
  p.coeffs_ = {Rational(0), Rational(1)};
  return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

const Rational& Poly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k > degree()) return zero;
  return coeffs_[static_cast<size_t>(k)];
}

Rational Poly::eval(const Rational& at) const {
  Rational acc(0);
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
  return acc;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

bool Poly::operator<(const Poly& o) const {
  const Rational here = eval(Rational(3));
  const Rational there = o.eval(Rational(3));
  if (here != there) return here < there;
  return coeffs_ < o.coeffs_;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (k == 0) {
      out << rational_str(mag);
    } else {
      if (mag != 1) out << rational_str(mag) << '*';
      out << 'l';
      if (k >= 2) out << '^' << k;
    }
  }
  return out.str();
}

namespace {

// One term of the grammar: [rational] ['*'] ['l' ['^' power]]
void parse_term(std::string_view term, bool negative,
                std::vector<Rational>& coeffs) {
  ensure(!term.empty(), ErrorKind::ParseError, "empty polynomial term");
  size_t pos = 0;
  Rational coeff(1);
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(term[0]))) {
    size_t end = pos;
    while (end < term.size() &&
           (std::isdigit(static_cast<unsigned char>(term[end])) ||
            term[end] == '/'))
      ++end;
    coeff = parse_rational(term.substr(pos, end - pos));
    saw_coeff = true;
    pos = end;
    if (pos < term.size() && term[pos] == '*') ++pos;
  }
  int power = 0;
  if (pos < term.size()) {
    ensure(term[pos] == 'l', ErrorKind::ParseError,
           "bad polynomial term '" + std::string(term) + "'");
    ++pos;
    power = 1;
    if (pos < term.size() && term[pos] == '^') {
      ++pos;
      ensure(pos < term.size(), ErrorKind::ParseError, "missing exponent");
      size_t end = pos;
      while (end < term.size() &&
             std::isdigit(static_cast<unsigned char>(term[end])))
        ++end;
      ensure(end > pos && end == term.size(), ErrorKind::ParseError,
             "bad exponent in '" + std::string(term) + "'");
      power = std::stoi(std::string(term.substr(pos, end - pos)));
      pos = end;
    }
  }
  ensure(pos == term.size(), ErrorKind::ParseError,
         "trailing characters in '" + std::string(term) + "'");
  ensure(saw_coeff || power > 0, ErrorKind::ParseError,
         "bad polynomial term '" + std::string(term) + "'");
  if (static_cast<size_t>(power) >= coeffs.size())
    coeffs.resize(static_cast<size_t>(power) + 1, Rational(0));
  coeffs[static_cast<size_t>(power)] += negative ? Rational(-coeff) : coeff;
}

}  // namespace

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  ensure(!s.empty(), ErrorKind::ParseError, "empty polynomial");
  std::vector<Rational> coeffs;
  size_t start = 0;
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    start = 1;
  } else if (s[0] == '+') {
    start = 1;
  }
  size_t pos = start;
  while (true) {
    if (pos == s.size() || s[pos] == '+' || s[pos] == '-') {
      parse_term(std::string_view(s).substr(start, pos - start), negative,
                 coeffs);
      if (pos == s.size()) break;
      negative = s[pos] == '-';
      start = pos + 1;
    }
    ++pos;
  }
  return from_coeffs(std::move(coeffs));
}

}  // namespace paracolor

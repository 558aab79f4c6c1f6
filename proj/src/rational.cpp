#include "divlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace divlab {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rat r;
  r.v_ = mpq_class(mpz_class(std::string(num), 10), d);
  r.v_.canonicalize();
  return r;
}

std::string Rat::str() const {
  return v_.get_str();
}

Rat Rat::abs() const {
  Rat r;
  r.v_ = ::abs(v_);
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace divlab

#include "linext/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace linext {

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  reduce();
}

void Rat::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = BigInt::divexact(num_, g);
  den_ = BigInt::divexact(den_, g);
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rat::to_string() const {
  return num_.to_string() + "/" + den_.to_string();
}

double Rat::to_double() const {
  return std::strtod(num_.to_string().c_str(), nullptr) /
         std::strtod(den_.to_string().c_str(), nullptr);
}

}  // namespace linext

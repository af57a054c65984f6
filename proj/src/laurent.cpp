#include "deltaft/laurent.hpp"

#include <algorithm>

#include "deltaft/error.hpp"

namespace deltaft {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] != 0) out.emplace_back(low_ + static_cast<int>(n), coeffs_[n]);
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const Integer& c, int shift) {
  if (other.is_zero() || c == 0) return;
  const int olow = other.low_ + shift;
  const int ohigh = other.high() + shift;
  if (is_zero()) {
    low_ = olow;
    coeffs_.assign(other.coeffs_.size(), Integer(0));
  } else {
    const int nlow = std::min(low_, olow);
    const int nhigh = std::max(high(), ohigh);
    if (nlow < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - nlow), Integer(0));
      low_ = nlow;
    }
    if (static_cast<int>(coeffs_.size()) < nhigh - low_ + 1)
      coeffs_.resize(static_cast<std::size_t>(nhigh - low_ + 1), Integer(0));
  }
  const auto offset = static_cast<std::size_t>(olow - low_);
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) {
    if (c == 1)
      coeffs_[offset + n] += other.coeffs_[n];
    else
      coeffs_[offset + n] += c * other.coeffs_[n];
  }
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1, 0);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out += other;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out -= other;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  LaurentPoly out;
  out.low_ = low_ + other.low_;
  out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out.coeffs_[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += n;
  return out;
}

LaurentPoly LaurentPoly::rescaled(int factor) const {
  if (factor == 0) throw DomainError("rescaled: zero factor");
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out.add_scaled(monomial(c, e * factor), 1, 0);
  return out;
}

LaurentPoly LaurentPoly::exponents_divided(int divisor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms()) {
    if (e % divisor != 0)
      throw DomainError("exponent " + std::to_string(e) + " is not a multiple of " + std::to_string(divisor));
    out.add_scaled(monomial(c, e / divisor), 1, 0);
  }
  return out;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

std::string LaurentPoly::to_string(const std::string& var, int unit) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (unit == 2 && e % 2 != 0) {
      out += "^(" + std::to_string(e) + "/2)";
    } else {
      const int shown = e / unit;
      if (shown != 1) out += "^" + std::to_string(shown);
    }
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("exact_divide: division by zero");
  if (a.is_zero()) return {};
  // Long division on the top coefficients of the underlying polynomials.
  LaurentPoly rem = a;
  LaurentPoly quotient;
  const Integer& lead = b.coeff(b.high());
  const int span = b.high() - b.low();
  while (!rem.is_zero()) {
    if (rem.high() - rem.low() < span) throw DomainError("exact_divide: not divisible");
    const Integer top = rem.coeff(rem.high());
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw DomainError("exact_divide: not divisible");
    const Integer q = top / lead;
    const int shift = rem.high() - b.high();
    quotient.add_scaled(LaurentPoly::monomial(q, shift), 1, 0);
    rem.add_scaled(b, -q, shift);
  }
  return quotient;
}

}  // namespace deltaft

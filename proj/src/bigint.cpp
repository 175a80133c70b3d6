#include "hadlat/bigint.hpp"

#include <cctype>
#include <cmath>

#include "hadlat/errors.hpp"

namespace hadlat {

BigInt binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: prefix products are binomials
  }
  return result;
}

double log2_value(const BigInt& x) {
  if (x <= 0) throw DomainError("log2_value requires a positive integer");
  unsigned bits = boost::multiprecision::msb(x);  // floor(log2 x)
  if (bits < 63) return std::log2(x.convert_to<double>());
  // Keep the top 53 bits and account for the shift.
  unsigned shift = bits - 52;
  BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

BigInt integer_kth_root(const BigInt& x, unsigned k) {
  if (k == 0) throw DomainError("integer_kth_root requires k >= 1");
  if (x < 0) throw DomainError("integer_kth_root requires x >= 0");
  if (x == 0) return 0;
  unsigned bits = boost::multiprecision::msb(x) + 1;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {  // invariant: lo^k <= x < hi^k
    BigInt mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

BigRational rational_from_string(const std::string& text) {
  auto fail = [&]() -> BigRational {
    throw DomainError("cannot parse rational from '" + text + "'");
  };
  if (text.empty()) return fail();
  std::string s = text;
  bool negative = false;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  auto digits = [&](size_t* p) {
    std::string out;
    while (*p < s.size() && std::isdigit(static_cast<unsigned char>(s[*p]))) {
      out.push_back(s[(*p)++]);
    }
    return out;
  };
  std::string ipart = digits(&pos);
  BigInt num;
  BigInt den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::string dpart = digits(&pos);
    if (ipart.empty() || dpart.empty() || pos != s.size()) return fail();
    num = BigInt(ipart);
    den = BigInt(dpart);
    if (den == 0) return fail();
  } else if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::string fpart = digits(&pos);
    if ((ipart.empty() && fpart.empty()) || pos != s.size()) return fail();
    num = BigInt(ipart.empty() ? "0" : ipart);
    for (char c : fpart) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (ipart.empty() || pos != s.size()) return fail();
    num = BigInt(ipart);
  }
  if (negative) num = -num;
  return BigRational(num, den);
}

double rational_to_double(const BigRational& x) {
  return x.convert_to<double>();
}

}  // namespace hadlat

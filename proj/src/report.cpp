#include "schur_ample/report.hpp"

namespace schur_ample {

std::string mpz_sci_string(const mpz_class& v, int digits) {
  std::string s = v.get_str();
  bool neg = !s.empty() && s[0] == '-';
  std::string mag = neg ? s.substr(1) : s;
  if (mag.size() <= static_cast<std::size_t>(digits)) return s;
  std::string mantissa = mag.substr(0, 1) + "." + mag.substr(1, digits - 1);
  long exp = static_cast<long>(mag.size()) - 1;
  return (neg ? "-" : "") + mantissa + "e" + std::to_string(exp);
}

long mpz_digit_count(const mpz_class& v) {
  std::string s = v.get_str();
  return static_cast<long>(s.size()) - (s[0] == '-' ? 1 : 0);
}

}  // namespace schur_ample

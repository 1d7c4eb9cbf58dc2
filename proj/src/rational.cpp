#include "superkac/rational.hpp"

#include <cctype>

#include "superkac/errors.hpp"

namespace superkac {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw DomainError("empty rational literal");
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
    if (i >= u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational: " + s);
  mpz_class p(num, 10), q(den, 10);
  if (q == 0) throw DomainError("zero denominator: " + s);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) throw DomainError("expected a small integer, got " + to_string(q));
  return q.get_num().get_si();
}

}  // namespace superkac

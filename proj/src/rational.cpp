#include "ktori/rational.hpp"

#include <cmath>
#include <sstream>

#include "ktori/error.hpp"

namespace ktori {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Q parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'"); };
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  Q result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw fail();
    result = Q(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto ex = s.substr(e + 1);
      bool eneg = false;
      if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
        eneg = ex[0] == '-';
        ex.remove_prefix(1);
      }
      if (!all_digits(ex) || ex.size() > 6) throw fail();
      exponent = std::stol(std::string(ex)) * (eneg ? -1 : 1);
      s = s.substr(0, e);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
      if (!all_digits(s)) throw fail();
      digits = s;
    } else {
      auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw fail();
      digits = std::string(ip) + std::string(fp);
      exponent -= static_cast<long>(fp.size());
    }
    mpz_class m(digits, 10);
    result = exponent >= 0 ? Q(m * pow10(exponent)) : Q(m, pow10(-exponent));
  }
  result.canonicalize();
  return neg ? Q(-result) : result;
}

std::string to_decimal(const Q& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale = pow10(digits);
  mpz_class num = abs(q.get_num()) * scale * 2 + q.get_den();
  mpz_class den = q.get_den() * 2;
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string s = r.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (q < 0 && r != 0) s.insert(0, "-");
  return s;
}

Q from_double(double v, int bits) {
  mpz_class m;
  mpz_set_d(m.get_mpz_t(), std::nearbyint(std::ldexp(v, std::min(bits, 60))));
  mpz_class d = 1;
  d <<= std::min(bits, 60);
  Q q(m, d);
  q.canonicalize();
  return q;
}

std::array<double, 3> to_doubles(const Point3& p) { return {p.x.get_d(), p.y.get_d(), p.z.get_d()}; }

std::string to_string(const Point3& p) {
  return "(" + p.x.get_str() + ", " + p.y.get_str() + ", " + p.z.get_str() + ")";
}

Q sqrt_lower(const Q& a, int bits) {
  if (a <= 0) return 0;
  // a = A * 4^e with A in [1, 4); sqrt(a) = sqrt(A) * 2^e.
  long diff = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 2));
  long e = diff >= 0 ? diff / 2 : -((1 - diff) / 2);
  auto pow2 = [](long k) {
    Q r = 1;
    if (k >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), k);
    else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), -k);
    return r;
  };
  Q scaled = a / pow2(2 * e);  // within a factor 4 of [1, 4)
  // floor(sqrt(scaled) * 2^bits) via integer sqrt of floor(scaled * 4^bits).
  Q big = scaled * pow2(2L * bits);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), big.get_num().get_mpz_t(), big.get_den().get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  Q r = Q(root) * pow2(e - bits);
  r.canonicalize();
  return r;
}

}  // namespace ktori

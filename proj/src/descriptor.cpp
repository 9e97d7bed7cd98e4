#include "bclocal/descriptor.hpp"

#include <cctype>
#include <cstdlib>

namespace bclocal {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

long long to_int(const std::string& s) {
  require(!s.empty(), Errc::BadDescriptor, "empty integer");
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (...) {
    fail(Errc::BadDescriptor, "bad integer '" + s + "'");
  }
  require(used == s.size(), Errc::BadDescriptor, "bad integer '" + s + "'");
  return v;
}

// descending-power sums like "x^2+x+1", "x^2-3", "2x"
std::vector<long long> parse_poly(const std::string& s) {
  require(!s.empty(), Errc::BadDescriptor, "empty polynomial");
  std::vector<long long> coeff;
  auto bump = [&](int deg, long long c) {
    if ((int)coeff.size() <= deg) coeff.resize(deg + 1, 0);
    coeff[deg] += c;
  };
  size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      require(i > 0 || s[i] == '-', Errc::BadDescriptor, "stray sign in polynomial");
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    long long mag = digits.empty() ? 1 : to_int(digits);
    int deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string d;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) d += s[i++];
        deg = (int)to_int(d);
      }
    } else {
      require(!digits.empty(), Errc::BadDescriptor, "term without coefficient or x");
    }
    require(deg <= 16, Errc::BadDescriptor, "polynomial degree out of range");
    bump(deg, sign * mag);
    if (i < s.size())
      require(s[i] == '+' || s[i] == '-', Errc::BadDescriptor, "junk between polynomial terms");
  }
  while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
  return coeff;
}

} // namespace

LocalFieldSpec parse_local_field(const std::string& s) {
  require(s.size() >= 2 && s[0] == 'Q', Errc::BadDescriptor,
          "local field descriptor must start with Q");
  size_t i = 1;
  std::string pd;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) pd += s[i++];
  require(all_digits(pd), Errc::BadDescriptor, "missing prime in descriptor");
  long long p = to_int(pd);
  if (i == s.size()) return make_qp(p);
  if (s[i] == 'u') {
    ++i;
    std::string fd;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) fd += s[i++];
    require(i < s.size() && s[i] == ':', Errc::BadDescriptor, "unramified descriptor needs ':'");
    std::vector<long long> poly = parse_poly(s.substr(i + 1));
    require((long long)poly.size() - 1 == to_int(fd), Errc::BadDescriptor,
            "stated degree disagrees with the polynomial");
    return make_unramified(p, poly);
  }
  if (s[i] == '[') {
    require(s.back() == ']', Errc::BadDescriptor, "unterminated polynomial bracket");
    return make_eisenstein(p, parse_poly(s.substr(i + 1, s.size() - i - 2)));
  }
  fail(Errc::BadDescriptor, "unrecognized local field descriptor '" + s + "'");
}

NumberFieldSpec parse_global_field(const std::string& s) {
  if (s == "Q") return make_global_Q();
  if (s == "Q(i)") return make_global_quadratic(-1);
  const std::string pre = "Q(sqrt:";
  if (s.size() > pre.size() + 1 && s.compare(0, pre.size(), pre) == 0 && s.back() == ')')
    return make_global_quadratic(to_int(s.substr(pre.size(), s.size() - pre.size() - 1)));
  fail(Errc::BadDescriptor, "unrecognized global field descriptor '" + s + "'");
}

std::vector<LevelIndex> parse_levels(const std::string& s) {
  require(!s.empty(), Errc::BadDescriptor, "empty level list");
  std::vector<LevelIndex> out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t comma = s.find(',', i);
    std::string item = s.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    size_t colon = item.find(':');
    require(colon != std::string::npos, Errc::BadDescriptor, "level entry needs n:m");
    long long n = to_int(item.substr(0, colon));
    long long m = to_int(item.substr(colon + 1));
    require(n >= 1 && m >= 0 && m <= 1000000, Errc::BadDescriptor, "level entry out of range");
    out.push_back({n, (int)m});
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  return out;
}

BetaList parse_beta_list(const std::string& s) {
  require(!s.empty(), Errc::BadDescriptor, "empty beta list");
  BetaList out;
  size_t i = 0;
  while (i <= s.size()) {
    size_t comma = s.find(',', i);
    std::string item = s.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    if (item == "inf") {
      out.infinity = true;
    } else {
      size_t used = 0;
      double b = 0;
      try {
        b = std::stod(item, &used);
      } catch (...) {
        fail(Errc::BadDescriptor, "bad beta '" + item + "'");
      }
      require(used == item.size(), Errc::BadDescriptor, "bad beta '" + item + "'");
      require(b > 0, Errc::BadDescriptor, "beta must be positive");
      out.values.push_back(b);
    }
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  return out;
}

} // namespace bclocal

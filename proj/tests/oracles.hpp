// Brute-force oracles written straight from the definitions.  They share no
// code with the library beyond the BigInt/Rational aliases.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Bits = std::vector<int>;
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Bits from_string(const std::string& s) {
  Bits w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

inline std::string to_string(const Bits& w) {
  std::string s;
  for (int c : w) s.push_back(static_cast<char>('0' + c));
  return s;
}

/// All n^k words in lexicographic order.
inline void all_words(int n, int k, const std::function<void(const Bits&)>& f) {
  Bits w(k, 0);
  while (true) {
    f(w);
    int i = k;
    while (i > 0 && w[i - 1] == n - 1) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

/// Every pair of 1s has distance in P.
inline bool spacing_ok(const Bits& w, const std::function<bool(int)>& in_p) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == 1 && w[j] == 1 && !in_p(static_cast<int>(j - i))) return false;
    }
  }
  return true;
}

/// Every subword u with |u| >= 2 has at most ceil(log2 |u|) ones.
inline bool counting_ok(const Bits& w) {
  for (std::size_t len = 2; len <= w.size(); ++len) {
    const int cap = static_cast<int>(std::ceil(std::log2(static_cast<double>(len)) - 1e-12));
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      int ones = 0;
      for (std::size_t t = i; t < i + len; ++t) ones += w[t];
      if (ones > cap) return false;
    }
  }
  return true;
}

/// Every suffix of w is <= the equal-length prefix of d.
inline bool beta_ok(const Bits& w, const Bits& d) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t t = 0; i + t < w.size(); ++t) {
      if (w[i + t] < d[t]) break;
      if (w[i + t] > d[t]) return false;
    }
  }
  return true;
}

/// Greedy digits of 1 for the golden ratio in Z[phi], phi^2 = phi + 1.
/// r = p + q phi; floor decided by integer sign tests against sqrt(5).
inline Bits golden_digits(int k) {
  // sign of a + b sqrt5 for integers a, b.
  auto sign = [](Int a, Int b) {
    if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
    if (a <= 0 && b <= 0) return -1;
    const Int lhs = a * a, rhs = 5 * b * b;
    if (a > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
  };
  // x = p + q phi = (2p + q)/2 + (q/2) sqrt5; x >= n iff (2p + q - 2n) + q sqrt5 >= 0.
  Int p = 1, q = 0;
  Bits out;
  for (int i = 0; i < k; ++i) {
    // beta * r = phi (p + q phi) = q + (p + q) phi.
    const Int np = q, nq = p + q;
    Int n = 0;
    while (sign(2 * np + nq - 2 * (n + 1), nq) >= 0) ++n;
    out.push_back(static_cast<int>(n));
    p = np - n;
    q = nq;
  }
  return out;
}

inline Bits rational_digits(const Rat& beta, int k) {
  Rat r = 1;
  Bits out;
  for (int i = 0; i < k; ++i) {
    const Rat x = beta * r;
    const Int d = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
    out.push_back(static_cast<int>(d));
    r = x - Rat(d);
  }
  return out;
}

inline Int choose_sum(int n, int j_max) {
  Int total = 0;
  for (int j = 0; j <= j_max && j <= n; ++j) {
    Int c = 1;
    for (int t = 0; t < j; ++t) c = c * (n - t) / (t + 1);
    total += c;
  }
  return total;
}

}  // namespace oracle

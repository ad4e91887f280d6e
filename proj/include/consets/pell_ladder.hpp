#pragma once

// The m = 2 case (the ladder K_2 x P_n). Pell numbers realize f_1(2,k) and
// the half-companion Pell numbers realize f(2,k); everything here has a
// closed form that is checked against the general engine.

#include "consets/exactmath.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace consets {

// pell(k) = f_1(2,k): 0, 1, 2, 5, 12, ...    (k = 0, 1, ...)
// halfcomp(k) = f(2,k): 1, 3, 7, 17, 41, ... (k = 0, 1, ...)
// Both satisfy x(k) = 2 x(k-1) + x(k-2). Cached append-only.
class PellPair {
 public:
  PellPair() : pell_{0, 1}, halfcomp_{1, 3} {}

  BigInt pell(std::size_t k) {
    grow(k);
    return pell_[k];
  }
  BigInt halfcomp(std::size_t k) {
    grow(k);
    return halfcomp_[k];
  }

 private:
  void grow(std::size_t k) {
    while (pell_.size() <= k) {
      const std::size_t n = pell_.size();
      pell_.push_back(2 * pell_[n - 1] + pell_[n - 2]);
      halfcomp_.push_back(2 * halfcomp_[n - 1] + halfcomp_[n - 2]);
    }
  }

  std::vector<BigInt> pell_;
  std::vector<BigInt> halfcomp_;
};

inline const QuadInt kSilver{1, 1};  // 1 + sqrt 2

// ((1+sqrt2)^{k+1} + (1-sqrt2)^{k+1}) / 2
inline BigInt closed_form_f2(std::size_t k) {
  const QuadInt up = quad_pow(kSilver, k + 1);
  const QuadInt sum = up + up.conjugate();
  if (sum.b != 0) throw invariant_error("closed_form_f2: irrational part did not cancel");
  return exact_div(sum.a, 2, "closed_form_f2");
}

// ((1+sqrt2)^k - (1-sqrt2)^k) / (2 sqrt2)
inline BigInt closed_form_f1(std::size_t k) {
  const QuadInt up = quad_pow(kSilver, k);
  const QuadInt diff = up - up.conjugate();  // 0 + 2b sqrt2
  if (diff.a != 0) throw invariant_error("closed_form_f1: rational part did not cancel");
  return exact_div(diff.b, 2, "closed_form_f1");
}

// N(K_2 x P_n) = (f(2,n+2) - 4n - 7) / 2
inline BigInt ladder_count(std::size_t n) {
  if (n == 0) throw domain_error("ladder_count: n must be >= 1");
  PellPair p;
  return exact_div(p.halfcomp(n + 2) - 4 * BigInt(n) - 7, 2, "ladder_count");
}

// sum_k (n-k+1) S(F(2,k)), multiplied by four:
// (21n - 32) f(2,n) + (19 - 12n) f_1(2,n) + 10n + 32
inline BigInt ladder_weighted_order_sum_times4(std::size_t n) {
  PellPair p;
  const BigInt nn = n;
  return (21 * nn - 32) * p.halfcomp(n) + (19 - 12 * nn) * p.pell(n) + 10 * nn + 32;
}

// Numerator over 2 (f(2,n+2) - 4n - 7), i.e. over 4N.
inline BigRational ladder_average(std::size_t n) {
  if (n == 0) throw domain_error("ladder_average: n must be >= 1");
  PellPair p;
  const BigInt denom = 2 * (p.halfcomp(n + 2) - 4 * BigInt(n) - 7);
  return {ladder_weighted_order_sum_times4(n), denom};
}

// The denominator read literally as 2 f(2,n+2) - 4n - 7. Kept to document
// that this reading disagrees with enumeration (n = 1 gives 16/23).
inline BigRational ladder_average_as_printed(std::size_t n) {
  PellPair p;
  return {ladder_weighted_order_sum_times4(n), 2 * p.halfcomp(n + 2) - 4 * BigInt(n) - 7};
}

inline BigRational ladder_density(std::size_t n) {
  return ladder_average(n) / BigRational(BigInt(2) * n);
}

// Ladder average in Pell / Pell-Lucas form, with beta(k) = f(2,k-1) and
// beta_bar(k) = f_1(2,k):
// ((32 - 45 beta_bar(n) - 32 beta(n)) + n (10 + 21 beta(n) + 30 beta_bar(n)))
//   / (2 (beta(n+3) - 4n - 7))
inline BigRational vince_average(std::size_t n) {
  if (n == 0) throw domain_error("vince_average: n must be >= 1");
  PellPair p;
  const BigInt nn = n;
  const BigInt beta = p.halfcomp(n - 1);
  const BigInt beta_bar = p.pell(n);
  const BigInt numer = (32 - 45 * beta_bar - 32 * beta) + nn * (10 + 21 * beta + 30 * beta_bar);
  const BigInt denom = 2 * (p.halfcomp(n + 2) - 4 * nn - 7);
  return {numer, denom};
}

struct IdentityCheck {
  std::string name;
  BigInt direct;
  BigInt closed;
  bool holds() const { return direct == closed; }
};

struct IdentityReport {
  std::size_t n = 0;
  std::vector<IdentityCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
  std::string failure() const {
    for (const auto& c : checks)
      if (!c.holds())
        return c.name + " at n=" + std::to_string(n) + ": direct " + c.direct.str() +
               ", closed form " + c.closed.str();
    return {};
  }
};

// Summation identities for the ladder, each compared against direct
// summation (closed forms are stated times two so every side is integral).
inline IdentityReport ladder_sum_identities(std::size_t n) {
  if (n == 0) throw domain_error("ladder_sum_identities: n must be >= 1");
  PellPair p;
  const BigInt nn = n;
  auto sum = [&](const std::function<BigInt(std::size_t)>& term) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += term(k);
    return acc;
  };
  auto f = [&](std::size_t k) { return p.halfcomp(k); };
  auto f1 = [&](std::size_t k) { return p.pell(k); };

  IdentityReport r;
  r.n = n;
  r.checks.push_back({"2*sum f(2,k) = f(2,n+1) + f(2,n) - 4",
                      2 * sum([&](std::size_t k) { return f(k); }), f(n + 1) + f(n) - 4});
  r.checks.push_back({"2*sum k f(2,k) = n f(2,n+2) - (n+1) f(2,n+1) + 3",
                      2 * sum([&](std::size_t k) { return k * f(k); }),
                      nn * f(n + 2) - (nn + 1) * f(n + 1) + 3});
  // Printed with f(2,n+3); the index that matches direct summation is n+2.
  r.checks.push_back({"2*sum f_1(2,k+2) = f(2,n+2) - 7",
                      2 * sum([&](std::size_t k) { return f1(k + 2); }), f(n + 2) - 7});
  r.checks.push_back(
      {"2*sum k f_1(2,k+2) = 2(n-1) f_1(2,n+2) + (3n-1) f_1(2,n+1) + n f_1(2,n) + 5",
       2 * sum([&](std::size_t k) { return k * f1(k + 2); }),
       2 * (nn - 1) * f1(n + 2) + (3 * nn - 1) * f1(n + 1) + nn * f1(n) + 5});
  r.checks.push_back(
      {"2*sum k^2 f(2,k) = (2n^2+2n+1) f_1(2,n+2) + (1-2n) f_1(2,n+3) - 7",
       2 * sum([&](std::size_t k) { return BigInt(k) * k * f(k); }),
       (2 * nn * nn + 2 * nn + 1) * f1(n + 2) + (1 - 2 * nn) * f1(n + 3) - 7});
  // Pell self-convolution and the resulting layer order sum for m = 2.
  BigInt conv = 0;
  for (std::size_t i = 1; i <= n; ++i) conv += f1(i) * f1(n + 1 - i);
  r.checks.push_back({"4*sum_i f_1(2,i) f_1(2,n+1-i) = (n+2) f(2,n) - f_1(2,n+2)", 4 * conv,
                      (nn + 2) * f(n) - f1(n + 2)});
  r.checks.push_back({"2*S(F(2,n)) = (3n-2) f(2,n) + f_1(2,n+2)",
                      2 * (2 * nn * f(n) - 2 * conv), (3 * nn - 2) * f(n) + f1(n + 2)});
  r.checks.push_back(
      {"4*sum_k (n-k+1) S(F(2,k)) = (21n-32) f(2,n) + (19-12n) f_1(2,n) + 10n + 32",
       4 * sum([&](std::size_t k) {
         const BigInt kk = k;
         BigInt c = 0;
         for (std::size_t i = 1; i <= k; ++i) c += f1(i) * f1(k + 1 - i);
         return (nn - kk + 1) * (2 * kk * f(k) - 2 * c);
       }),
       ladder_weighted_order_sum_times4(n)});
  return r;
}

}  // namespace consets

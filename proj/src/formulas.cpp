#include "lefschetz/formulas.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

BigInt require_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw InternalError(std::string(what) + ": non-integral quotient " + q.get_str());
  return q.get_num();
}

void require_nonnegative(std::initializer_list<long> values, const char* what) {
  for (long v : values)
    if (v < 0) throw DomainError(std::string(what) + ": negative argument");
}

mpq_class q(const BigInt& v) { return mpq_class(v); }

}  // namespace

BigInt hyperfactorial(long n) {
  if (n < 0) throw DomainError("hyperfactorial of a negative number");
  BigInt h = 1, f = 1;
  for (long i = 1; i < n; ++i) {
    f *= i;
    h *= f;
  }
  return h;
}

BigInt macmahon(long a, long b, long c) {
  require_nonnegative({a, b, c}, "macmahon");
  mpq_class v = q(hyperfactorial(a)) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c);
  v /= q(hyperfactorial(a + b)) * hyperfactorial(a + c) * hyperfactorial(b + c);
  return require_integer(v, "macmahon");
}

BigInt plane_partition_oracle(long a, long b, long c) {
  require_nonnegative({a, b, c}, "plane_partition_oracle");
  if (a * b > 16) throw DomainError("plane_partition_oracle: a*b exceeds 16");
  if (a == 0 || b == 0) return 1;
  // Rows are weakly decreasing sequences of length b, each bounded by the row above.
  std::vector<std::vector<long>> rows;
  std::vector<long> cur(static_cast<std::size_t>(b));
  auto gen = [&](auto&& self, std::size_t j, long cap) -> void {
    if (j == cur.size()) {
      rows.push_back(cur);
      return;
    }
    for (long v = 0; v <= cap; ++v) {
      cur[j] = v;
      self(self, j + 1, v);
    }
  };
  gen(gen, 0, c);
  auto below = [](const std::vector<long>& lo, const std::vector<long>& hi) {
    for (std::size_t j = 0; j < lo.size(); ++j)
      if (lo[j] > hi[j]) return false;
    return true;
  };
  std::vector<BigInt> ways(rows.size(), BigInt(1));
  for (long i = 1; i < a; ++i) {
    std::vector<BigInt> next(rows.size(), BigInt(0));
    for (std::size_t s = 0; s < rows.size(); ++s)
      for (std::size_t t = 0; t < rows.size(); ++t)
        if (below(rows[s], rows[t])) next[s] += ways[t];
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& w : ways) total += w;
  return total;
}

IntMatrix split_binom_matrix(long p, long q_, long r, long m, long n) {
  require_nonnegative({p, q_, r}, "split_binom_matrix");
  if (m < 1 || m > n) throw DomainError("split_binom_matrix: need 1 <= m <= n");
  IntMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          binomial(p, j <= m ? q_ + j - i : q_ + r + j - i);
  return out;
}

BigInt split_binom_det(long p, long q_, long r, long m, long n) {
  require_nonnegative({p, q_, r}, "split_binom_det");
  if (m < 1 || m > n) throw DomainError("split_binom_det: need 1 <= m <= n");
  if (p < q_ + r) throw DomainError("split_binom_det: need p >= q + r");
  mpq_class v = q(macmahon(m, q_, r)) * macmahon(n - m, p - q_ - r, r);
  v *= q(hyperfactorial(q_ + r)) * hyperfactorial(p - q_) * hyperfactorial(n + r) * hyperfactorial(n + p);
  v /= q(hyperfactorial(n + p - q_)) * hyperfactorial(n + q_ + r) * hyperfactorial(p) * hyperfactorial(r);
  return require_integer(v, "split_binom_det");
}

void require_prime_factors_at_most(const BigInt& n, long bound, const char* what) {
  if (n == 0) return;
  for (const auto& [p, e] : factorize(abs(n))) {
    if (p > bound) throw InternalError(std::string(what) + ": prime factor " + p.get_str() + " exceeds " + std::to_string(bound));
  }
}

namespace {

void check_ci_hypotheses(long a, long b, long c, const char* what) {
  if (a < 1 || b < 1 || c < 1) throw DomainError(std::string(what) + ": exponents must be positive");
  if (a > b + c || b > a + c || c > a + b) throw DomainError(std::string(what) + ": triangle inequality fails");
  if ((a + b + c) % 2 != 0) throw DomainError(std::string(what) + ": a+b+c must be even");
}

}  // namespace

BigInt ci_enumeration(long a, long b, long c) {
  check_ci_hypotheses(a, b, c, "ci_enumeration");
  const long d = (a + b + c) / 2;
  BigInt v = macmahon(d - a, d - b, d - c);
  require_prime_factors_at_most(v, d - 1, "ci_enumeration");
  return v;
}

BigInt ci_nest_enumeration(long a, long b, long c, long alpha, long beta, long gamma) {
  check_ci_hypotheses(a, b, c, "ci_nest_enumeration");
  check_ci_hypotheses(alpha, beta, gamma, "ci_nest_enumeration (inner)");
  const long d = (a + b + c) / 2;
  if (alpha + beta + gamma != 2 * (d - a)) throw DomainError("ci_nest_enumeration: inner hexagon does not fit the puncture");
  BigInt v = macmahon(d - a, d - b, d - c) * macmahon(d - a - alpha, d - a - beta, d - a - gamma);
  require_prime_factors_at_most(v, d - 1, "ci_nest_enumeration");
  return v;
}

BigInt two_mahonian_enumeration(long a, long b, long c, long alpha, long beta, long d) {
  if (3 * d != a + b + c + alpha + beta) throw DomainError("two_mahonian_enumeration: d must be (a+b+c+alpha+beta)/3");
  if (!(0 < alpha && alpha < a && 0 < beta && beta < b)) throw DomainError("two_mahonian_enumeration: need 0<alpha<a, 0<beta<b");
  if (std::max({a, b, c, alpha + beta}) > d || d > std::min({a + beta, alpha + b, a + c, b + c}))
    throw DomainError("two_mahonian_enumeration: d outside the admissible range");
  const long s = d - (alpha + beta);
  mpq_class v = q(macmahon(a + beta - d, d - a, s)) * macmahon(alpha + b - d, d - b, s);
  v *= q(hyperfactorial(d - a + s)) * hyperfactorial(d - b + s) * hyperfactorial(d - c + s) * hyperfactorial(d);
  v /= q(hyperfactorial(a)) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(s);
  BigInt out = require_integer(v, "two_mahonian_enumeration");
  require_prime_factors_at_most(out, d - 1, "two_mahonian_enumeration");
  return out;
}

namespace {

long check_type_one_odd(long a, long b, long c, long i) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("type_one_odd_minor: exponents must be positive");
  if ((a + b + c) % 2 == 0) throw DomainError("type_one_odd_minor: a+b+c must be odd");
  const long d = (a + b + c - 1) / 2;
  if (d < std::max({a, b, c})) throw DomainError("type_one_odd_minor: need d >= max(a, b, c)");
  if (!(d - 1 - b < i && i < a)) throw DomainError("type_one_odd_minor: need d-1-b < i < a");
  return d;
}

}  // namespace

BigInt type_one_odd_minor(long a, long b, long c, long i) {
  const long d = check_type_one_odd(a, b, c, i);
  mpq_class v = q(macmahon(a + (d - 1 - i) - d, d - a, 1)) * macmahon(i + b - d, d - b, 1);
  v *= q(hyperfactorial(d - a + 1)) * hyperfactorial(d - b + 1) * hyperfactorial(d - c + 1) * hyperfactorial(d);
  v /= q(hyperfactorial(a)) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(1);
  return require_integer(v, "type_one_odd_minor");
}

mpq_class type_one_odd_minor_simplified(long a, long b, long c, long i) {
  const long d = check_type_one_odd(a, b, c, i);
  if (d - a - 1 < 0) throw DomainError("simplified type-one form needs d > a");
  mpq_class v = q(binomial(d - 1, a - 1)) / q(binomial(d - 1, i));
  v *= q(binomial(d - c, a - i - 1)) * macmahon(d - a - 1, d - b, d - c);
  return v;
}

}  // namespace lefschetz

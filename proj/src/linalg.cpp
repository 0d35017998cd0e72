#include "lefschetz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "lefschetz/errors.hpp"

namespace lefschetz {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

using i128 = __int128;

// log2 of a bound on every minor of m (product of row norms, each at least 1).
// Infinity when an entry does not fit in int64.
double log2_minor_bound(const IntMatrix& m) {
  double total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sq = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& v = m(i, j);
      if (!v.fits_slong_p()) return std::numeric_limits<double>::infinity();
      const double d = v.get_d();
      sq += d * d;
    }
    if (sq > 1) total += 0.5 * std::log2(sq);
  }
  return total;
}

// Fast path is safe when all intermediate minors stay below 2^60, so that
// a*b - c*d cannot overflow 128 bits.
bool fits_fast_path(const IntMatrix& m) { return log2_minor_bound(m) < 60.0; }

template <typename T>
T from_big(const BigInt& v);

template <>
i128 from_big<i128>(const BigInt& v) {
  return static_cast<i128>(v.get_si());
}

template <>
BigInt from_big<BigInt>(const BigInt& v) {
  return v;
}

BigInt to_big(const BigInt& v) { return v; }

BigInt to_big(i128 v) {
  // Values on the fast path are bounded by 2^60.
  return BigInt(static_cast<long>(v));
}

template <typename T>
struct EliminationResult {
  std::size_t rank = 0;
  T det{};  // determinant for square input (0 when singular)
};

// Fraction-free elimination with row pivoting and column skipping. Every entry
// produced is a minor of the input, so each division is exact.
template <typename T>
EliminationResult<T> bareiss(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<T> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = from_big<T>(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };

  T prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
      sign = -sign;
    }
    const T pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = (pivot * at(i, j) - f * at(r, j)) / prev;
      }
      at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  EliminationResult<T> out;
  out.rank = r;
  if (rows == cols) out.det = (r == rows) ? (sign > 0 ? prev : -prev) : T(0);
  return out;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  if (fits_fast_path(m)) return to_big(bareiss<i128>(m).det);
  return bareiss<BigInt>(m).det;
}

std::size_t rank_q(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (fits_fast_path(m)) return bareiss<i128>(m).rank;
  return bareiss<BigInt>(m).rank;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  BigInt v(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  using u128 = unsigned __int128;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  BigInt pb(static_cast<unsigned long>(p)), t;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const BigInt& v = m(i, j);
      if (v.fits_slong_p()) {
        long s = v.get_si() % static_cast<long>(p);
        if (s < 0) s += static_cast<long>(p);
        a[i * cols + j] = static_cast<std::uint64_t>(s);
      } else {
        mpz_fdiv_r(t.get_mpz_t(), v.get_mpz_t(), pb.get_mpz_t());
        a[i * cols + j] = t.get_ui();
      }
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * cols + j]; };
  auto mul = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(u128(x) * y % p); };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const std::uint64_t ip = inv(at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = mul(at(i, c), ip);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul(f, at(r, j));
        at(i, j) = at(i, j) >= sub ? at(i, j) - sub : at(i, j) + p - sub;
      }
    }
    ++r;
  }
  return r;
}

namespace {

template <typename T>
T ryser(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<T> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = from_big<T>(m(i, j));
  std::vector<T> row_sum(n, T(0));
  T total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t diff = next ^ gray;
    const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(diff));
    const bool added = (next & diff) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) row_sum[i] += a[i * n + col];
      else row_sum[i] -= a[i * n + col];
    }
    gray = next;
    T prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    const int size = __builtin_popcountll(gray);
    if ((n - static_cast<std::size_t>(size)) % 2 == 0) total += prod;
    else total -= prod;
  }
  return total;
}

bool ryser_fits_fast(const IntMatrix& m) {
  // Every partial product is bounded by prod_i (row abs sum); the running
  // total by 2^n times that.
  double bits = static_cast<double>(m.rows()) + 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) return false;
      s += std::fabs(m(i, j).get_d());
    }
    if (s > 1) bits += std::log2(s);
  }
  return bits < 120.0;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : k) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

BigInt profile_permanent(const IntMatrix& m, std::size_t max_states) {
  const std::size_t n = m.rows();
  const std::size_t words = (n + 63) / 64;
  // Last row in which each column has a non-zero entry.
  std::vector<long> last_row(n, -1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, j) != 0) last_row[j] = static_cast<long>(i);
  if (std::any_of(last_row.begin(), last_row.end(), [](long r) { return r < 0; })) return 0;

  using Key = std::vector<std::uint64_t>;
  std::unordered_map<Key, BigInt, KeyHash> states, next;
  states.emplace(Key(words, 0), BigInt(1));
  for (std::size_t i = 0; i < n; ++i) {
    next.clear();
    std::vector<std::size_t> closing;
    for (std::size_t j = 0; j < n; ++j)
      if (last_row[j] == static_cast<long>(i)) closing.push_back(j);
    for (const auto& [key, value] : states) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) == 0) continue;
        if (key[j / 64] >> (j % 64) & 1) continue;
        Key k2 = key;
        k2[j / 64] |= std::uint64_t{1} << (j % 64);
        bool ok = true;
        for (std::size_t c : closing) {
          if (!(k2[c / 64] >> (c % 64) & 1)) {
            ok = false;
            break;
          }
          k2[c / 64] &= ~(std::uint64_t{1} << (c % 64));
        }
        if (!ok) continue;
        BigInt& slot = next[k2];
        slot += value * m(i, j);
      }
      if (next.size() > max_states) throw DomainError("permanent: state limit exceeded");
    }
    std::swap(states, next);
    if (states.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [key, value] : states) total += value;
  return total;
}

}  // namespace

BigInt permanent(const IntMatrix& m, const PermanentOptions& options) {
  if (!m.is_square()) throw DomainError("permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  using Method = PermanentOptions::Method;
  Method method = options.method;
  if (method == Method::automatic) method = n <= options.ryser_auto_max ? Method::ryser : Method::profile;
  if (method == Method::ryser) {
    if (n > options.ryser_cap || n > 62) {
      throw DomainError("permanent: order " + std::to_string(n) + " exceeds the Ryser cap");
    }
    if (ryser_fits_fast(m)) {
      const i128 v = ryser<i128>(m);
      // Bounded by 2^120; split into two halves for the conversion.
      const bool neg = v < 0;
      const unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
      BigInt hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
      BigInt out = (hi << 64) + lo;
      return neg ? BigInt(-out) : out;
    }
    return ryser<BigInt>(m);
  }
  return profile_permanent(m, options.max_states);
}

std::vector<BigInt> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<BigInt> out;
  BigInt q;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    auto bring_min = [&]() {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (bi == rows || abs(a(i, j)) < abs(a(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return false;
      if (bi != t)
        for (std::size_t j = 0; j < cols; ++j) swap(a(bi, j), a(t, j));
      if (bj != t)
        for (std::size_t i = 0; i < rows; ++i) swap(a(i, bj), a(i, t));
      return true;
    };
    if (!bring_min()) break;
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Some remainder is smaller than the pivot; restart from it.
        bring_min();
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      for (std::size_t j = t; j < cols; ++j) a(t, j) += a(bad_row, j);
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

BigInt determinantal_divisor(const IntMatrix& m, std::size_t r) {
  if (r > std::min(m.rows(), m.cols())) {
    throw DomainError("minor order " + std::to_string(r) + " exceeds " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()));
  }
  if (r == 0) return 1;
  const std::vector<BigInt> inv = smith_invariants(m);
  if (r > inv.size()) return 0;
  BigInt prod = 1;
  for (std::size_t i = 0; i < r; ++i) prod *= inv[i];
  return prod;
}

Factorization factorize(const BigInt& n_in) {
  if (n_in < 1) throw DomainError("factorize needs a positive integer");
  Factorization out;
  BigInt n = n_in;
  auto take = [&](const BigInt& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  BigInt p = 3;
  while (n > 1) {
    if (p * p > n) {
      out.emplace_back(n, 1);
      break;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      out.emplace_back(n, 1);
      break;
    }
    take(p);
    p += 2;
  }
  return out;
}

std::string to_string(const Factorization& f) {
  std::string s;
  for (const auto& [p, e] : f) {
    if (!s.empty()) s += " * ";
    s += p.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace lefschetz

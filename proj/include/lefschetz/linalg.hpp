#ifndef LEFSCHETZ_LINALG_HPP
#define LEFSCHETZ_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// C(n, k), zero when k < 0, k > n or n < 0.
BigInt binomial(long n, long k);

/// Exact determinant by fraction-free (Bareiss) elimination; 1 for the 0x0 matrix.
BigInt determinant(const IntMatrix& m);

struct PermanentOptions {
  enum class Method { automatic, ryser, profile };
  Method method = Method::automatic;
  /// Largest order Ryser's formula is allowed to handle.
  std::size_t ryser_cap = 24;
  /// Orders up to this use Ryser under Method::automatic.
  std::size_t ryser_auto_max = 14;
  /// State limit of the row-by-row profile recursion.
  std::size_t max_states = std::size_t{1} << 22;
};

/// Exact permanent. Ryser's formula for small orders; larger (sparse) matrices
/// go through a row-by-row recursion whose state is the set of used columns
/// that later rows can still reach. Exceeding a cap throws DomainError.
BigInt permanent(const IntMatrix& m, const PermanentOptions& options = {});

std::size_t rank_q(const IntMatrix& m);

bool is_prime(std::uint64_t n);

/// Rank over F_p. Throws DomainError if p is not prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Non-zero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<BigInt> smith_invariants(const IntMatrix& m);

/// gcd of all r x r minors (0 if they all vanish); 1 for r = 0.
BigInt determinantal_divisor(const IntMatrix& m, std::size_t r);

using Factorization = std::vector<std::pair<BigInt, int>>;

/// Prime factorization of n >= 1, primes ascending.
Factorization factorize(const BigInt& n);

std::string to_string(const Factorization& f);

}  // namespace lefschetz

#endif  // LEFSCHETZ_LINALG_HPP

#ifndef LEFSCHETZ_WLP_HPP
#define LEFSCHETZ_WLP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/ideal.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/region.hpp"

namespace lefschetz {

/// The map x+y+z: [R/I]_{d-2} -> [R/I]_{d-1}, i.e. Z(T_d(I)) transposed.
struct DegreeReport {
  int d = 0;
  std::size_t required_rank = 0;  // min(h(d-2), h(d-1))
  std::size_t rank_q = 0;
  std::map<std::uint64_t, std::size_t> rank_mod;
  /// gcd of the required_rank-order minors; 0 when they all vanish.
  BigInt leading_divisor;
  Balance region_stats;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

enum class WlpMethod { full_scan, peak_shortcut, twin_peak, type_one, type_two };

std::string to_string(WlpMethod m);
std::optional<WlpMethod> parse_wlp_method(const std::string& s);

struct WlpReport {
  MonomialIdeal ideal;
  std::vector<DegreeReport> degrees;
  bool holds_char0 = false;
  /// Exact set of primes where WLP fails; only meaningful when holds_char0.
  std::vector<std::uint64_t> bad_primes;
  bool bad_primes_exact = false;
  /// Characteristic (0 for Q) -> degrees d where Z(T_d) lacks maximal rank.
  std::map<std::uint64_t, std::vector<int>> failing_degrees;
  WlpMethod method = WlpMethod::full_scan;

  /// Verdict in characteristic p (0 for Q). Throws DomainError when p was neither
  /// scanned nor covered by the bad-prime computation.
  bool holds(std::uint64_t p) const;

  friend bool operator==(const WlpReport&, const WlpReport&) = default;
};

struct ScanOptions {
  std::vector<std::uint64_t> primes;
  /// Compute the exact bad-prime set from the leading divisors (and scan those primes).
  bool bad_primes = true;
};

/// One degree of the scan.
DegreeReport degree_report(const MonomialIdeal& ideal, int d, const std::vector<std::uint64_t>& primes);

/// Scans d = 1 .. socle_degree + 2. Asserts the monotonicity of surjectivity and
/// (under the socle hypothesis) injectivity; a violation is an InternalError.
WlpReport wlp_full_scan(const MonomialIdeal& ideal, const ScanOptions& options = {});

enum class PeakKind { twin, strict };

struct PeakShortcut {
  PeakKind kind = PeakKind::twin;
  std::vector<int> degrees;  // decisive d, Z(T_d) indexing
  std::string justification;
};

/// The decisive degrees when the socle sits high enough, else nothing.
std::optional<PeakShortcut> peak_shortcut(const MonomialIdeal& ideal);

/// Verdict from the decisive degrees only (p = 0 for Q).
bool peak_shortcut_verdict(const MonomialIdeal& ideal, const PeakShortcut& shortcut, std::uint64_t p);

/// Primes dividing a leading divisor of some degree. Requires char-0 WLP.
std::vector<std::uint64_t> bad_primes(const MonomialIdeal& ideal);

enum class TypeOneCase { one_dominant, even_sum, odd_sum };

std::string to_string(TypeOneCase c);

struct TypeOneVerdict {
  bool holds = false;
  TypeOneCase which = TypeOneCase::one_dominant;
};

/// WLP of R/(x^a, y^b, z^c) in characteristic p (0 or prime).
TypeOneVerdict type_one_verdict(int a, int b, int c, std::uint64_t p);

enum class Type2Kind { four_generators, five_generators };

std::string to_string(Type2Kind k);

/// (x^a, y^b, z^c, x^alpha y^beta) or (x^a, y^b, z^c, x^alpha y^beta, x^alpha z^gamma)
/// after renaming variables by `permutation`.
struct Type2Form {
  Type2Kind form = Type2Kind::four_generators;
  int a = 0, b = 0, c = 0, alpha = 0, beta = 0, gamma = 0;
  VarPermutation permutation;
  std::pair<int, int> socle_degrees{0, 0};
  bool is_level = false;

  MonomialIdeal normalized() const;
  friend bool operator==(const Type2Form&, const Type2Form&) = default;
};

/// First permutation (lexicographic in `source`) that normalizes I.
Type2Form classify_type2(const MonomialIdeal& ideal);

/// Degrees d where the char-0 map fails maximal rank; empty for four generators.
std::vector<int> type2_condition_range(const Type2Form& form);

struct Type2Verdict {
  bool holds = false;
  std::vector<int> failing_degrees;
};

Type2Verdict type2_char0_verdict(const MonomialIdeal& ideal);

enum class BoundKind { cond_free_linear, hadamard };

std::string to_string(BoundKind k);

struct PosCharBound {
  BoundKind kind = BoundKind::hadamard;
  /// WLP holds in every characteristic p >= bound.
  BigInt bound;
  /// 2e, where the Hadamard bound is ceil(3^e).
  long e_twice = 0;

  friend bool operator==(const PosCharBound&, const PosCharBound&) = default;
};

/// Requires type 2 and char-0 WLP.
PosCharBound type2_poschar_bound(const MonomialIdeal& ideal);

/// Type-2 ideals in both normal forms with pure powers <= max_exponent, under all
/// variable renamings, deduplicated and sorted by canonical text.
std::vector<MonomialIdeal> type2_ideals(int max_exponent);

struct Counterexample {
  MonomialIdeal ideal;
  std::uint64_t prime = 0;
  std::vector<int> degrees;
};

/// Type-2 ideals with char-0 WLP that fail in some prime (a+b+c)/2 < p <= prime_cap.
std::vector<Counterexample> conjecture_scan(int max_exponent, std::uint64_t prime_cap);

/// Full scan, tagged with the closed-form criterion that explains the verdict and checked
/// against it; a disagreement is an InternalError.
WlpReport decide_wlp(const MonomialIdeal& ideal, const ScanOptions& options = {});

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace lefschetz

#endif  // LEFSCHETZ_WLP_HPP

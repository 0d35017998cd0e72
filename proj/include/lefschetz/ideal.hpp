#ifndef LEFSCHETZ_IDEAL_HPP
#define LEFSCHETZ_IDEAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lefschetz {

enum class Var : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kVars = {Var::x, Var::y, Var::z};

/// x^ex y^ey z^ez.
struct Monomial {
  std::array<int, 3> exp{};

  constexpr Monomial() = default;
  constexpr Monomial(int ex, int ey, int ez) : exp{ex, ey, ez} {}

  constexpr int x() const { return exp[0]; }
  constexpr int y() const { return exp[1]; }
  constexpr int z() const { return exp[2]; }
  constexpr int operator[](Var v) const { return exp[static_cast<int>(v)]; }
  constexpr int degree() const { return exp[0] + exp[1] + exp[2]; }

  constexpr bool divides(const Monomial& m) const {
    return exp[0] <= m.exp[0] && exp[1] <= m.exp[1] && exp[2] <= m.exp[2];
  }
  constexpr Monomial times(Var v, int k = 1) const {
    Monomial r = *this;
    r.exp[static_cast<int>(v)] += k;
    return r;
  }
  /// m / v, or nothing when v does not divide m.
  constexpr std::optional<Monomial> divided_by(Var v) const {
    if (exp[static_cast<int>(v)] == 0) return std::nullopt;
    return times(v, -1);
  }

  std::string to_string() const;

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic order on exponent vectors, for use as a map key only.
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded reverse-lexicographic order: higher degree is larger; at equal degree
/// a > b iff the last non-zero entry of a - b is negative.
bool revlex_less(const Monomial& a, const Monomial& b);

struct RevLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return revlex_less(a, b); }
};

/// All monomials of degree k, ascending in reverse-lex order (z^k first, x^k last).
std::vector<Monomial> monomials_of_degree(int k);

/// A renaming of the variables: variable i of the image takes the exponent of
/// variable `source[i]` of the argument.
struct VarPermutation {
  std::array<int, 3> source{0, 1, 2};

  Monomial apply(const Monomial& m) const;
  VarPermutation inverse() const;
  bool is_identity() const { return source == std::array<int, 3>{0, 1, 2}; }
  std::string to_string() const;

  /// The six permutations in lexicographic order of `source`.
  static std::array<VarPermutation, 6> all();

  friend bool operator==(const VarPermutation&, const VarPermutation&) = default;
};

class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// Minimalizes: duplicates and non-minimal generators are dropped.
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;

  /// Exponent of the pure power of v among the generators, if any.
  std::optional<int> pure_power(Var v) const;
  bool is_artinian() const;

  MonomialIdeal with(const Monomial& extra) const;
  MonomialIdeal permuted(const VarPermutation& p) const;

  /// Canonical text: pure powers in x, y, z order, then the rest by degree and
  /// descending reverse-lex; factors joined by '*', generators by ", ".
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::vector<Monomial> gens_;
};

/// Parses `mono (',' mono)*` with `mono := term ('*'? term)*` and
/// `term := ('x'|'y'|'z') ('^' uint)?`. Whitespace is ignored.
MonomialIdeal parse_ideal(std::string_view text);

struct HilbertFunction {
  std::vector<std::int64_t> values;

  /// h(j); zero outside the stored range.
  std::int64_t operator()(int j) const {
    if (j < 0 || j >= static_cast<int>(values.size())) return 0;
    return values[static_cast<std::size_t>(j)];
  }
};

/// values[j] = number of degree-j monomials outside I, for 0 <= j <= d_max.
HilbertFunction hilbert_function(const MonomialIdeal& ideal, int d_max);

struct SocleProfile {
  std::vector<Monomial> monomials;  // ascending reverse-lex
  std::vector<int> degrees;         // sorted
  int type = 0;
  int socle_degree = -1;
  bool is_level = false;
};

/// Largest degree in which R/I can be non-zero is below this bound (Artinian I).
int regularity_bound(const MonomialIdeal& ideal);

SocleProfile socle_profile(const MonomialIdeal& ideal);

/// The ideal whose quotient has socle exactly {m1, m2}: the intersection of
/// (x^{a1+1}, y^{b1+1}, z^{c1+1}) and (x^{a2+1}, y^{b2+1}, z^{c2+1}).
MonomialIdeal annihilator_of_two_monomials(const Monomial& m1, const Monomial& m2);

/// Closed integer interval; empty when lo > hi.
struct IntRange {
  int lo = 1;
  int hi = 0;
  bool empty() const { return lo > hi; }
  bool contains(int j) const { return lo <= j && j <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Where h(j-2) < h(j-1), h(j-2) = h(j-1) and h(j-2) > h(j-1) for the complete
/// intersection (x^a, y^b, z^c), 1 <= j <= a+b+c-1.
struct CiPeakProfile {
  IntRange increasing;
  IntRange flat;
  IntRange decreasing;
};

CiPeakProfile ci_peak_profile(int a, int b, int c);

}  // namespace lefschetz

#endif  // LEFSCHETZ_IDEAL_HPP

#include "lefschetz/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "lefschetz/errors.hpp"

namespace lefschetz {

std::string Monomial::to_string() const {
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (exp[i] > 1) out += '^' + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.x(), b.x()), std::max(a.y(), b.y()), std::max(a.z(), b.z())};
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return {std::min(a.x(), b.x()), std::min(a.y(), b.y()), std::min(a.z(), b.z())};
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 2; i >= 0; --i) {
    const int diff = a.exp[i] - b.exp[i];
    if (diff != 0) return diff > 0;
  }
  return false;
}

std::vector<Monomial> monomials_of_degree(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  out.reserve(static_cast<std::size_t>((k + 1) * (k + 2) / 2));
  // Ascending reverse-lex: larger z first, then larger y.
  for (int c = k; c >= 0; --c) {
    for (int b = k - c; b >= 0; --b) out.emplace_back(k - b - c, b, c);
  }
  return out;
}

Monomial VarPermutation::apply(const Monomial& m) const {
  return {m.exp[source[0]], m.exp[source[1]], m.exp[source[2]]};
}

VarPermutation VarPermutation::inverse() const {
  VarPermutation inv;
  for (int i = 0; i < 3; ++i) inv.source[source[i]] = i;
  return inv;
}

std::string VarPermutation::to_string() const {
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += kNames[source[i]];
  }
  return out + ")";
}

std::array<VarPermutation, 6> VarPermutation::all() {
  std::array<int, 3> p{0, 1, 2};
  std::array<VarPermutation, 6> out;
  std::size_t i = 0;
  do {
    out[i++].source = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  auto pure_rank = [](const Monomial& m) {
    int nonzero = 0, which = 0;
    for (int i = 0; i < 3; ++i) {
      if (m.exp[i] != 0) {
        ++nonzero;
        which = i;
      }
    }
    return nonzero <= 1 ? which : 3;
  };
  const int ra = pure_rank(a), rb = pure_rank(b);
  if (ra != rb) return ra < rb;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return revlex_less(b, a);
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), RevLexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // In ascending degree order a divisor always precedes its multiples.
  for (const Monomial& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), canonical_less);
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 0; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::optional<int> MonomialIdeal::pure_power(Var v) const {
  const int i = static_cast<int>(v);
  for (const Monomial& g : gens_) {
    if (g.degree() == g.exp[i] && g.degree() > 0) return g.exp[i];
  }
  if (is_unit()) return 0;
  return std::nullopt;
}

bool MonomialIdeal::is_artinian() const {
  return pure_power(Var::x) && pure_power(Var::y) && pure_power(Var::z);
}

MonomialIdeal MonomialIdeal::with(const Monomial& extra) const {
  std::vector<Monomial> g = gens_;
  g.push_back(extra);
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::permuted(const VarPermutation& p) const {
  std::vector<Monomial> g;
  g.reserve(gens_.size());
  for (const Monomial& m : gens_) g.push_back(p.apply(m));
  return MonomialIdeal(std::move(g));
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (const Monomial& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return out;
}

namespace {

class IdealParser {
public:
  explicit IdealParser(std::string_view text) : text_(text) {}

  MonomialIdeal parse() {
    std::vector<Monomial> gens;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty generator list", pos_);
    gens.push_back(mono());
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') throw ParseError(unexpected(), pos_);
      ++pos_;
      gens.push_back(mono());
    }
    return MonomialIdeal(std::move(gens));
  }

private:
  Monomial mono() {
    Monomial m;
    term(m);
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) return m;
      const char c = text_[pos_];
      if (c == '*') {
        ++pos_;
        term(m);
      } else if (c == 'x' || c == 'y' || c == 'z') {
        term(m);
      } else {
        return m;
      }
    }
  }

  void term(Monomial& m) {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("expected variable, found end of input", pos_);
    const char c = text_[pos_];
    if (c != 'x' && c != 'y' && c != 'z') throw ParseError("expected variable, " + unexpected(), pos_);
    ++pos_;
    long long e = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      e = uint();
    }
    int& slot = m.exp[c - 'x'];
    if (slot + e > kMaxExponent) throw ParseError("exponent overflow", pos_);
    slot += static_cast<int>(e);
  }

  long long uint() {
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ == text_.size()) throw ParseError("expected exponent, found end of input", pos_);
      throw ParseError("expected non-negative exponent, " + unexpected(), pos_);
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string unexpected() const { return std::string("unexpected '") + text_[pos_] + "'"; }

  static constexpr long long kMaxExponent = 1 << 20;

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) { return IdealParser(text).parse(); }

HilbertFunction hilbert_function(const MonomialIdeal& ideal, int d_max) {
  HilbertFunction h;
  for (int j = 0; j <= d_max; ++j) {
    std::int64_t count = 0;
    for (const Monomial& m : monomials_of_degree(j)) count += ideal.contains(m) ? 0 : 1;
    h.values.push_back(count);
  }
  return h;
}

int regularity_bound(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw DomainError("ideal is not Artinian: " + ideal.to_string());
  return *ideal.pure_power(Var::x) + *ideal.pure_power(Var::y) + *ideal.pure_power(Var::z);
}

SocleProfile socle_profile(const MonomialIdeal& ideal) {
  const int bound = regularity_bound(ideal);
  SocleProfile s;
  for (int k = 0; k <= bound; ++k) {
    for (const Monomial& m : monomials_of_degree(k)) {
      if (ideal.contains(m)) continue;
      if (ideal.contains(m.times(Var::x)) && ideal.contains(m.times(Var::y)) &&
          ideal.contains(m.times(Var::z))) {
        s.monomials.push_back(m);
        s.degrees.push_back(k);
      }
    }
  }
  s.type = static_cast<int>(s.monomials.size());
  if (!s.degrees.empty()) {
    s.socle_degree = s.degrees.back();
    s.is_level = s.degrees.front() == s.degrees.back();
  }
  return s;
}

MonomialIdeal annihilator_of_two_monomials(const Monomial& m1, const Monomial& m2) {
  if (m1.divides(m2) || m2.divides(m1)) {
    throw DomainError("one monomial divides the other: " + m1.to_string() + ", " + m2.to_string());
  }
  auto irreducible = [](const Monomial& m) {
    return std::array<Monomial, 3>{Monomial(m.x() + 1, 0, 0), Monomial(0, m.y() + 1, 0),
                                   Monomial(0, 0, m.z() + 1)};
  };
  std::vector<Monomial> gens;
  for (const Monomial& g1 : irreducible(m1)) {
    for (const Monomial& g2 : irreducible(m2)) gens.push_back(lcm(g1, g2));
  }
  return MonomialIdeal(std::move(gens));
}

CiPeakProfile ci_peak_profile(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("complete intersection exponents must be positive");
  // Work with doubled bounds so that (a+b+c)/2 stays integral.
  const int lo2 = std::min({2 * (a + b), 2 * (a + c), 2 * (b + c), a + b + c});
  const int hi2 = std::max({2 * a, 2 * b, 2 * c, a + b + c});
  CiPeakProfile p;
  p.increasing = {1, (lo2 - 1) / 2};
  p.flat = {(lo2 + 1) / 2, hi2 / 2};
  p.decreasing = {hi2 / 2 + 1, a + b + c - 1};
  return p;
}

}  // namespace lefschetz

#include "lefschetz/wlp.hpp"

#include <algorithm>
#include <set>

#include "lefschetz/errors.hpp"
#include "lefschetz/formulas.hpp"
#include "lefschetz/region_matrices.hpp"

namespace lefschetz {

std::string to_string(WlpMethod m) {
  switch (m) {
    case WlpMethod::full_scan: return "full-scan";
    case WlpMethod::peak_shortcut: return "peak-shortcut";
    case WlpMethod::twin_peak: return "twin-peak";
    case WlpMethod::type_one: return "type-one";
    case WlpMethod::type_two: return "type-two";
  }
  return "full-scan";
}

std::optional<WlpMethod> parse_wlp_method(const std::string& s) {
  for (WlpMethod m : {WlpMethod::full_scan, WlpMethod::peak_shortcut, WlpMethod::twin_peak, WlpMethod::type_one,
                      WlpMethod::type_two}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::string to_string(TypeOneCase c) {
  switch (c) {
    case TypeOneCase::one_dominant: return "one-dominant";
    case TypeOneCase::even_sum: return "even-sum";
    case TypeOneCase::odd_sum: return "odd-sum";
  }
  return "";
}

std::string to_string(Type2Kind k) { return k == Type2Kind::four_generators ? "i" : "ii"; }

std::string to_string(BoundKind k) { return k == BoundKind::cond_free_linear ? "cond-free-linear" : "hadamard"; }

bool WlpReport::holds(std::uint64_t p) const {
  if (p == 0) return holds_char0;
  if (auto it = failing_degrees.find(p); it != failing_degrees.end()) return it->second.empty();
  if (holds_char0 && bad_primes_exact) return !std::binary_search(bad_primes.begin(), bad_primes.end(), p);
  throw DomainError("characteristic " + std::to_string(p) + " was not scanned");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

DegreeReport degree_report(const MonomialIdeal& ideal, int d, const std::vector<std::uint64_t>& primes) {
  const TriangularRegion t = build_region(ideal, d);
  const IntMatrix z = biadjacency(t);
  DegreeReport r;
  r.d = d;
  r.region_stats = balance(t);
  r.required_rank = std::min(t.n_up(), t.n_down());
  r.rank_q = rank_q(z);
  for (std::uint64_t p : primes) r.rank_mod[p] = rank_mod_p(z, p);
  r.leading_divisor = r.rank_q == r.required_rank ? determinantal_divisor(z, r.required_rank) : BigInt(0);
  return r;
}

namespace {

void check_monotone(const WlpReport& report, int min_socle_degree) {
  std::vector<std::uint64_t> chars{0};
  if (!report.degrees.empty())
    for (const auto& [p, r] : report.degrees.front().rank_mod) chars.push_back(p);
  for (std::uint64_t p : chars) {
    auto rank = [&](const DegreeReport& r) { return p == 0 ? r.rank_q : r.rank_mod.at(p); };
    bool surjective_seen = false;
    for (const DegreeReport& r : report.degrees) {
      const bool surjective = rank(r) == r.region_stats.n_up;
      if (surjective_seen && !surjective) {
        throw InternalError("surjectivity lost at degree " + std::to_string(r.d) + " in characteristic " +
                            std::to_string(p));
      }
      surjective_seen = surjective_seen || surjective;
    }
    // Injectivity at d with socle degrees >= d-2 propagates to all smaller d.
    for (std::size_t i = 0; i < report.degrees.size(); ++i) {
      const DegreeReport& r = report.degrees[i];
      if (r.d - 2 > min_socle_degree || rank(r) != r.region_stats.n_down) continue;
      for (std::size_t j = 0; j < i; ++j) {
        const DegreeReport& s = report.degrees[j];
        if (rank(s) != s.region_stats.n_down) {
          throw InternalError("injectivity fails at degree " + std::to_string(s.d) + " below injective degree " +
                              std::to_string(r.d));
        }
      }
    }
  }
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) {
  std::vector<std::uint64_t> out;
  if (n == 0) return out;
  for (const auto& [p, e] : factorize(abs(n))) {
    if (!p.fits_ulong_p()) throw DomainError("bad prime exceeds 64 bits: " + p.get_str());
    out.push_back(p.get_ui());
  }
  return out;
}

}  // namespace

WlpReport wlp_full_scan(const MonomialIdeal& ideal, const ScanOptions& options) {
  const SocleProfile socle = socle_profile(ideal);  // throws unless Artinian
  for (std::uint64_t p : options.primes)
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  std::vector<std::uint64_t> primes = options.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  WlpReport report;
  report.ideal = ideal;
  for (int d = 1; d <= socle.socle_degree + 2; ++d) {
    report.degrees.push_back(degree_report(ideal, d, primes));
  }
  report.holds_char0 = std::all_of(report.degrees.begin(), report.degrees.end(),
                                   [](const DegreeReport& r) { return r.rank_q == r.required_rank; });

  if (options.bad_primes && report.holds_char0) {
    std::set<std::uint64_t> bad;
    for (const DegreeReport& r : report.degrees)
      for (std::uint64_t p : prime_divisors(r.leading_divisor)) bad.insert(p);
    report.bad_primes.assign(bad.begin(), bad.end());
    report.bad_primes_exact = true;
    for (std::uint64_t p : report.bad_primes) {
      if (std::binary_search(primes.begin(), primes.end(), p)) continue;
      for (DegreeReport& r : report.degrees) {
        r.rank_mod[p] = rank_mod_p(biadjacency(build_region(ideal, r.d)), p);
      }
    }
  }

  std::vector<std::uint64_t> chars{0};
  if (!report.degrees.empty())
    for (const auto& [p, rank] : report.degrees.front().rank_mod) chars.push_back(p);
  for (std::uint64_t p : chars) {
    std::vector<int>& fails = report.failing_degrees[p];
    for (const DegreeReport& r : report.degrees) {
      const std::size_t rank = p == 0 ? r.rank_q : r.rank_mod.at(p);
      if (rank != r.required_rank) fails.push_back(r.d);
    }
  }
  // With no degrees at all every requested prime trivially holds.
  for (std::uint64_t p : primes) report.failing_degrees[p];

  if (options.bad_primes && report.holds_char0) {
    for (std::uint64_t p : report.bad_primes) {
      if (report.failing_degrees.at(p).empty()) {
        throw InternalError("prime " + std::to_string(p) + " divides a leading divisor but ranks are maximal");
      }
    }
  }
  check_monotone(report, socle.degrees.empty() ? 0 : socle.degrees.front());
  return report;
}

std::optional<PeakShortcut> peak_shortcut(const MonomialIdeal& ideal) {
  const SocleProfile socle = socle_profile(ideal);
  if (socle.degrees.empty()) return std::nullopt;
  const HilbertFunction h = hilbert_function(ideal, socle.socle_degree + 1);
  int k = 0;
  while (h(k) < h(k + 1)) ++k;
  if (k == 0) return std::nullopt;
  const int min_socle = socle.degrees.front();
  PeakShortcut s;
  if (h(k) == h(k + 1)) {
    const int d = k + 2;
    if (min_socle < d - 2) return std::nullopt;
    s.kind = PeakKind::twin;
    s.degrees = {d};
    s.justification = "h(" + std::to_string(k) + ") = h(" + std::to_string(k + 1) +
                      "), socle degrees >= " + std::to_string(d - 2) + ": WLP iff Z(T_" + std::to_string(d) +
                      ") is non-singular";
  } else {
    const int d = k + 1;
    if (min_socle < d - 2) return std::nullopt;
    s.kind = PeakKind::strict;
    s.degrees = {d, d + 1};
    s.justification = "strict peak at degree " + std::to_string(k) + ", socle degrees >= " + std::to_string(d - 2) +
                      ": WLP iff Z(T_" + std::to_string(d) + ") and Z(T_" + std::to_string(d + 1) +
                      ") have maximal rank";
  }
  return s;
}

bool peak_shortcut_verdict(const MonomialIdeal& ideal, const PeakShortcut& shortcut, std::uint64_t p) {
  for (int d : shortcut.degrees) {
    const IntMatrix z = biadjacency(build_region(ideal, d));
    const std::size_t required = std::min(z.rows(), z.cols());
    const std::size_t rank = p == 0 ? rank_q(z) : rank_mod_p(z, p);
    if (rank != required) return false;
  }
  return true;
}

std::vector<std::uint64_t> bad_primes(const MonomialIdeal& ideal) {
  const WlpReport r = wlp_full_scan(ideal);
  if (!r.holds_char0) throw DomainError("WLP fails in characteristic 0; bad primes are not defined");
  return r.bad_primes;
}

TypeOneVerdict type_one_verdict(int a, int b, int c, std::uint64_t p) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("exponents must be positive");
  if (p != 0 && !is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  const int d = (a + b + c) / 2;
  TypeOneVerdict v;
  auto divides = [p](const BigInt& n) { return p != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p) != 0; };
  if (d < std::max({a, b, c})) {
    v.which = TypeOneCase::one_dominant;
    v.holds = true;
  } else if ((a + b + c) % 2 == 0) {
    v.which = TypeOneCase::even_sum;
    v.holds = !divides(macmahon(d - a, d - b, d - c));
  } else {
    v.which = TypeOneCase::odd_sum;
    // One restricted maximal minor that survives mod p is enough.
    v.holds = false;
    for (int i = std::max(0, d - b); i < a; ++i) v.holds = v.holds || !divides(type_one_odd_minor(a, b, c, i));
  }
  if (!v.holds && (p == 0 || p >= static_cast<std::uint64_t>(d))) {
    throw InternalError("type-one verdict fails in characteristic " + std::to_string(p) + " at or above the blanket bound");
  }
  return v;
}

MonomialIdeal Type2Form::normalized() const {
  std::vector<Monomial> g{{a, 0, 0}, {0, b, 0}, {0, 0, c}, {alpha, beta, 0}};
  if (form == Type2Kind::five_generators) g.emplace_back(alpha, 0, gamma);
  return MonomialIdeal(std::move(g));
}

namespace {

std::optional<Type2Form> match_normal_form(const MonomialIdeal& j) {
  if (!j.is_artinian()) return std::nullopt;
  Type2Form f;
  f.a = *j.pure_power(Var::x);
  f.b = *j.pure_power(Var::y);
  f.c = *j.pure_power(Var::z);
  std::vector<Monomial> mixed;
  for (const Monomial& g : j.gens()) {
    const int nonzero = (g.x() > 0) + (g.y() > 0) + (g.z() > 0);
    if (nonzero > 1) mixed.push_back(g);
    else if (nonzero == 0) return std::nullopt;
  }
  if (j.gens().size() != 3 + mixed.size()) return std::nullopt;
  auto xy = std::find_if(mixed.begin(), mixed.end(), [](const Monomial& g) { return g.z() == 0; });
  if (xy == mixed.end()) return std::nullopt;
  f.alpha = xy->x();
  f.beta = xy->y();
  if (!(0 < f.alpha && f.alpha < f.a && 0 < f.beta && f.beta < f.b)) return std::nullopt;
  if (mixed.size() == 1) {
    f.form = Type2Kind::four_generators;
    f.socle_degrees = {f.a + f.beta + f.c - 3, f.alpha + f.b + f.c - 3};
  } else if (mixed.size() == 2) {
    const Monomial& other = mixed[xy == mixed.begin() ? 1 : 0];
    if (other.y() != 0 || other.x() != f.alpha) return std::nullopt;
    f.gamma = other.z();
    if (!(0 < f.gamma && f.gamma < f.c)) return std::nullopt;
    f.form = Type2Kind::five_generators;
    f.socle_degrees = {f.a + f.beta + f.gamma - 3, f.alpha + f.b + f.c - 3};
  } else {
    return std::nullopt;
  }
  f.is_level = f.socle_degrees.first == f.socle_degrees.second;
  return f;
}

}  // namespace

Type2Form classify_type2(const MonomialIdeal& ideal) {
  const SocleProfile s = socle_profile(ideal);
  if (s.type != 2) throw DomainError("not of type 2 (type " + std::to_string(s.type) + ")");
  for (const VarPermutation& p : VarPermutation::all()) {
    if (auto f = match_normal_form(ideal.permuted(p))) {
      f->permutation = p;
      return *f;
    }
  }
  throw InternalError("type-2 ideal matches neither normal form: " + ideal.to_string());
}

std::vector<int> type2_condition_range(const Type2Form& f) {
  std::vector<int> out;
  if (f.form == Type2Kind::four_generators) return out;
  // Doubled bounds keep the half-integers exact.
  const int lo2 = std::max({2 * f.a, 2 * (f.alpha + f.beta), 2 * (f.alpha + f.gamma), f.a + f.alpha + f.beta + f.gamma});
  const int hi2 = std::min({2 * (f.a + f.beta + f.gamma), f.alpha + f.b + f.c, 2 * (f.b + f.c), 2 * (f.alpha + f.c),
                            2 * (f.alpha + f.b)});
  for (int d = lo2 / 2; 2 * d < hi2; ++d)
    if (2 * d > lo2) out.push_back(d);
  return out;
}

Type2Verdict type2_char0_verdict(const MonomialIdeal& ideal) {
  Type2Verdict v;
  v.failing_degrees = type2_condition_range(classify_type2(ideal));
  v.holds = v.failing_degrees.empty();
  return v;
}

PosCharBound type2_poschar_bound(const MonomialIdeal& ideal) {
  const Type2Form f = classify_type2(ideal);
  if (!type2_condition_range(f).empty()) throw DomainError("WLP fails in characteristic 0");
  PosCharBound out;
  if (f.form == Type2Kind::five_generators) {
    const int lo2 = std::max({2 * f.alpha, 2 * f.b, 2 * f.c, f.alpha + f.b + f.c});
    const int hi2 = std::min({2 * (f.a + f.beta), 2 * (f.a + f.gamma), 2 * (f.alpha + f.beta + f.c),
                              f.a + f.alpha + f.beta + f.c});
    bool any = false;
    for (int d = lo2 / 2; 2 * d < hi2 && !any; ++d) any = 2 * d > lo2;
    if (!any) {
      out.kind = BoundKind::cond_free_linear;
      out.bound = (f.alpha + f.b + f.c) / 2;
      return out;
    }
  }
  out.kind = BoundKind::hadamard;
  out.e_twice = binomial((f.a + f.b + f.c) / 2 + 2, 2).get_si();
  BigInt pow3, root;
  mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>(out.e_twice));
  mpz_sqrt(root.get_mpz_t(), pow3.get_mpz_t());
  if (root * root < pow3) root += 1;
  out.bound = root;
  return out;
}

std::vector<MonomialIdeal> type2_ideals(int max_exponent) {
  std::set<std::vector<Monomial>> seen;
  std::vector<MonomialIdeal> out;
  auto add = [&](const std::vector<Monomial>& gens) {
    for (const VarPermutation& p : VarPermutation::all()) {
      MonomialIdeal j = MonomialIdeal(gens).permuted(p);
      if (seen.insert(j.gens()).second) out.push_back(std::move(j));
    }
  };
  for (int a = 1; a <= max_exponent; ++a)
    for (int b = 1; b <= max_exponent; ++b)
      for (int c = 1; c <= max_exponent; ++c)
        for (int alpha = 1; alpha < a; ++alpha)
          for (int beta = 1; beta < b; ++beta) {
            add({{a, 0, 0}, {0, b, 0}, {0, 0, c}, {alpha, beta, 0}});
            for (int gamma = 1; gamma < c; ++gamma) add({{a, 0, 0}, {0, b, 0}, {0, 0, c}, {alpha, beta, 0}, {alpha, 0, gamma}});
          }
  std::sort(out.begin(), out.end(),
            [](const MonomialIdeal& x, const MonomialIdeal& y) { return x.to_string() < y.to_string(); });
  return out;
}

std::vector<Counterexample> conjecture_scan(int max_exponent, std::uint64_t prime_cap) {
  std::vector<Counterexample> out;
  const std::vector<std::uint64_t> all = primes_up_to(prime_cap);
  for (const MonomialIdeal& ideal : type2_ideals(max_exponent)) {
    const std::uint64_t sum = static_cast<std::uint64_t>(regularity_bound(ideal));
    ScanOptions opts;
    opts.bad_primes = false;
    for (std::uint64_t p : all)
      if (2 * p > sum) opts.primes.push_back(p);
    const WlpReport r = wlp_full_scan(ideal, opts);
    if (!r.holds_char0) continue;
    for (std::uint64_t p : opts.primes) {
      const auto& fails = r.failing_degrees.at(p);
      if (!fails.empty()) out.push_back({ideal, p, fails});
    }
  }
  return out;
}

WlpReport decide_wlp(const MonomialIdeal& ideal, const ScanOptions& options) {
  WlpReport report = wlp_full_scan(ideal, options);
  std::vector<std::uint64_t> chars;
  for (const auto& [p, fails] : report.failing_degrees) chars.push_back(p);
  auto mismatch = [&](const std::string& what, std::uint64_t p) {
    throw InternalError(what + " disagrees with the rank scan in characteristic " + std::to_string(p) + " for " +
                        ideal.to_string());
  };

  const auto& gens = ideal.gens();
  const SocleProfile socle = socle_profile(ideal);
  if (gens.size() == 3 && ideal.is_artinian()) {
    report.method = WlpMethod::type_one;
    const int a = *ideal.pure_power(Var::x), b = *ideal.pure_power(Var::y), c = *ideal.pure_power(Var::z);
    for (std::uint64_t p : chars)
      if (type_one_verdict(a, b, c, p).holds != report.holds(p)) mismatch("type-one verdict", p);
  } else if (socle.type == 2) {
    report.method = WlpMethod::type_two;
    const Type2Verdict v = type2_char0_verdict(ideal);
    if (v.holds != report.holds_char0 || v.failing_degrees != report.failing_degrees.at(0)) mismatch("type-two verdict", 0);
  } else if (auto s = peak_shortcut(ideal)) {
    report.method = s->kind == PeakKind::twin ? WlpMethod::twin_peak : WlpMethod::peak_shortcut;
    for (std::uint64_t p : chars)
      if (peak_shortcut_verdict(ideal, *s, p) != report.holds(p)) mismatch("peak shortcut", p);
  } else {
    report.method = WlpMethod::full_scan;
  }
  return report;
}

}  // namespace lefschetz

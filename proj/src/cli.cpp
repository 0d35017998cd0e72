#include "lefschetz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "lefschetz/errors.hpp"
#include "lefschetz/formulas.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/region.hpp"
#include "lefschetz/render.hpp"
#include "lefschetz/report_json.hpp"
#include "lefschetz/tiling.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 18) {
      throw UsageError("--primes expects a comma-separated list of primes, got '" + text + "'");
    }
    const std::uint64_t p = std::stoull(item);
    if (!is_prime(p)) throw UsageError("--primes: " + item + " is not a prime");
    out.push_back(p);
  }
  if (out.empty()) throw UsageError("--primes: empty list");
  return out;
}

int default_degree(const MonomialIdeal& ideal) {
  const auto s = peak_shortcut(ideal);
  if (!s) throw DomainError("no decisive degree for " + ideal.to_string() + "; pass --d");
  return s->degrees.front();
}

void require_degree(int d) {
  if (d < 1) throw UsageError("--d must be a positive integer");
}

void cmd_hilbert(const std::string& text, bool json, std::ostream& out) {
  const MonomialIdeal ideal = parse_ideal(text);
  const SocleProfile s = socle_profile(ideal);
  const HilbertFunction h = hilbert_function(ideal, std::max(s.socle_degree, 0));
  std::vector<std::string> socle;
  for (const Monomial& m : s.monomials) socle.push_back(m.to_string());
  if (json) {
    Json j;
    j["ideal"] = ideal.to_string();
    j["hilbert"] = h.values;
    j["socle"] = socle;
    j["type"] = s.type;
    j["socle_degree"] = s.socle_degree;
    j["level"] = s.is_level;
    out << j.dump(2) << "\n";
    return;
  }
  out << "ideal: " << ideal.to_string() << "\n";
  out << "hilbert: " << join(h.values, " ") << "\n";
  out << "socle: " << join(socle, ", ") << "\n";
  out << "type: " << s.type << "\n";
  out << "socle degree: " << s.socle_degree << "\n";
  out << "level: " << (s.is_level ? "yes" : "no") << "\n";
}

void cmd_region(const std::string& text, std::optional<int> d_opt, const std::string& svg_path,
                std::optional<std::size_t> tiling, bool ascii, bool json, std::ostream& out) {
  const MonomialIdeal ideal = parse_ideal(text);
  if (d_opt) require_degree(*d_opt);
  const int d = d_opt ? *d_opt : default_degree(ideal);
  const TriangularRegion t = build_region(ideal, d);
  const Balance b = balance(t);
  const std::vector<Puncture> punctures = puncture_analysis(ideal, d);
  if (!svg_path.empty()) {
    SvgOptions opts;
    for (const Puncture& p : punctures) opts.punctures.push_back(p.generator);
    if (tiling) {
      // 1-based index into the enumeration order.
      const std::vector<Tiling> all = enumerate_tilings(t);
      if (*tiling < 1 || *tiling > all.size())
        throw DomainError("--tiling " + std::to_string(*tiling) + ": region has " + std::to_string(all.size()) +
                          " tilings");
      opts.tiling = all[*tiling - 1];
    }
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw DomainError("cannot write " + svg_path);
    f << render_svg(t, opts);
    if (!f) throw DomainError("write failed: " + svg_path);
  }
  if (json) {
    out << to_json(b).dump(2) << "\n";
  } else {
    out << "d: " << d << "\n";
    out << "up: " << b.n_up << "\n";
    out << "down: " << b.n_down << "\n";
    out << "kind: " << to_string(b.kind) << " (excess " << b.excess << ")\n";
    out << "punctures:\n";
    for (const Puncture& p : punctures) {
      out << "  " << p.generator.to_string() << " side " << p.side_length << (p.floating ? " floating" : " boundary")
          << "\n";
    }
    out << "tileable: " << (is_tileable(t).tileable ? "yes" : "no") << "\n";
  }
  if (ascii) out << render_ascii(t);
}

void cmd_count(const std::string& text, std::optional<int> d_opt, bool json, std::ostream& out) {
  const MonomialIdeal ideal = parse_ideal(text);
  if (d_opt) require_degree(*d_opt);
  const int d = d_opt ? *d_opt : default_degree(ideal);
  const TriangularRegion t = build_region(ideal, d);
  if (t.n_up() != t.n_down()) {
    const Balance b = balance(t);
    throw DomainError("T_" + std::to_string(d) + " is " + to_string(b.kind) + " (excess " + std::to_string(b.excess) +
                      "); only balanced regions have tilings");
  }
  const SignedEnumeration e = signed_enumeration(t);
  if (json) {
    out << to_json(e).dump(2) << "\n";
    return;
  }
  out << e.count << " tilings\n";
  out << "sum msgn: " << e.sum_msgn.get_str() << "\n";
  out << "sum lpsgn: " << e.sum_lpsgn.get_str() << "\n";
  out << "det Z: " << e.det_z.get_str() << "\n";
  out << "det N: " << e.det_n.get_str() << "\n";
  out << "per Z: " << e.per_z.get_str() << "\n";
}

void cmd_wlp(const std::string& text, const std::string& primes, bool all_primes, bool json, std::ostream& out) {
  const MonomialIdeal ideal = parse_ideal(text);
  ScanOptions opts;
  opts.bad_primes = all_primes;
  if (!primes.empty()) opts.primes = parse_prime_list(primes);
  const WlpReport r = decide_wlp(ideal, opts);
  if (json) {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  out << "ideal: " << r.ideal.to_string() << "\n";
  out << "method: " << to_string(r.method) << "\n";
  for (const auto& [p, fails] : r.failing_degrees) {
    out << "char " << p << ": ";
    if (fails.empty()) out << "holds\n";
    else out << "fails at d = " << join(fails, ", ") << "\n";
  }
  if (r.bad_primes_exact) out << "bad primes: " << (r.bad_primes.empty() ? "none" : join(r.bad_primes, ", ")) << "\n";
  std::vector<std::uint64_t> failing;
  for (const auto& [p, fails] : r.failing_degrees)
    if (p != 0 && !fails.empty()) failing.push_back(p);
  out << "verdict: char0 " << (r.holds_char0 ? "holds" : "fails");
  if (!failing.empty()) out << "; fails at " << join(failing, ", ");
  out << "\n";
}

void cmd_ci(int a, int b, int c, std::ostream& out) {
  if (a < 1 || b < 1 || c < 1) throw UsageError("ci expects three positive integers");
  const int d = (a + b + c) / 2;
  const TypeOneVerdict v0 = type_one_verdict(a, b, c, 0);
  out << "ideal: " << MonomialIdeal({{a, 0, 0}, {0, b, 0}, {0, 0, c}}).to_string() << "\n";
  out << "d: " << d << "\n";
  out << "case: " << to_string(v0.which) << "\n";
  std::vector<BigInt> values;
  if (v0.which == TypeOneCase::even_sum) {
    values.push_back(macmahon(d - a, d - b, d - c));
    out << "Mac(" << d - a << "," << d - b << "," << d - c << ") = " << values.back().get_str() << "\n";
  } else if (v0.which == TypeOneCase::odd_sum) {
    for (int i = std::max(0, d - b); i < a; ++i) {
      values.push_back(type_one_odd_minor(a, b, c, i));
      out << "minor i=" << i << ": " << values.back().get_str() << "\n";
    }
  }
  // A prime is bad when it divides every decisive minor.
  BigInt g = 0;
  for (const BigInt& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  std::vector<std::string> names;
  if (g != 0)
    for (const auto& [p, e] : factorize(g)) names.push_back(p.get_str());
  out << "bad primes: " << (names.empty() ? "none" : join(names, ", ")) << "\n";
}

void cmd_type2(const std::string& text, std::ostream& out) {
  const MonomialIdeal ideal = parse_ideal(text);
  const Type2Form f = classify_type2(ideal);
  out << "form: (" << to_string(f.form) << ")\n";
  out << "permutation: " << f.permutation.to_string() << "\n";
  out << "normalized: " << f.normalized().to_string() << "\n";
  out << "params: a=" << f.a << " b=" << f.b << " c=" << f.c << " alpha=" << f.alpha << " beta=" << f.beta;
  if (f.form == Type2Kind::five_generators) out << " gamma=" << f.gamma;
  out << "\n";
  out << "socle degrees: " << f.socle_degrees.first << ", " << f.socle_degrees.second << "\n";
  out << "level: " << (f.is_level ? "yes" : "no") << "\n";
  const std::vector<int> range = type2_condition_range(f);
  if (range.empty()) {
    out << "char 0: holds\n";
    const PosCharBound bound = type2_poschar_bound(ideal);
    out << "positive characteristic: holds for p >= " << bound.bound.get_str() << " (" << to_string(bound.kind) << ")\n";
  } else {
    out << "char 0: fails at d = " << join(range, ", ") << "\n";
  }
}

void cmd_scan(int max_exponent, std::uint64_t prime_cap, std::ostream& out) {
  if (max_exponent < 1) throw UsageError("--max-exponent must be positive");
  const std::vector<Counterexample> found = conjecture_scan(max_exponent, prime_cap);
  out << "type-2 ideals scanned: " << type2_ideals(max_exponent).size() << "\n";
  if (found.empty()) {
    out << "no counterexamples\n";
    return;
  }
  for (const Counterexample& c : found) {
    out << c.ideal.to_string() << ": fails in characteristic " << c.prime << " at d = " << join(c.degrees, ", ") << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz property of Artinian monomial ideals in K[x,y,z]", "lefschetz-lab"};
  app.require_subcommand(1);

  std::string ideal_text, svg_path, primes;
  std::optional<int> degree;
  std::optional<std::size_t> tiling_index;
  bool ascii = false, json = false, all_primes = false;
  int ci_a = 0, ci_b = 0, ci_c = 0, max_exponent = 4;
  std::uint64_t prime_cap = 13;
  std::vector<long> formula_args;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and socle");
  hilbert->add_option("ideal", ideal_text, "generators, e.g. \"x^2, y^3, z^4\"")->required();
  hilbert->add_flag("--json", json, "JSON output");

  auto* region = app.add_subcommand("region", "Triangular region T_d(I)");
  region->add_option("ideal", ideal_text)->required();
  region->add_option("--d", degree, "degree (default: first decisive degree)");
  region->add_option("--svg", svg_path, "write an SVG drawing to this path");
  region->add_option("--tiling", tiling_index, "draw the K-th tiling (1-based) in the SVG")->needs("--svg");
  region->add_flag("--ascii", ascii, "print an ASCII drawing");
  region->add_flag("--json", json, "JSON output");

  auto* count = app.add_subcommand("count", "Signed lozenge tiling enumeration of T_d(I)");
  count->add_option("ideal", ideal_text)->required();
  count->add_option("--d", degree, "degree (default: first decisive degree)");
  count->add_flag("--json", json, "JSON output");

  auto* wlp = app.add_subcommand("wlp", "Decide the weak Lefschetz property");
  wlp->add_option("ideal", ideal_text)->required();
  auto* primes_opt = wlp->add_option("--primes", primes, "comma-separated primes to check");
  auto* all_opt = wlp->add_flag("--all-primes", all_primes, "compute the exact bad-prime set");
  primes_opt->excludes(all_opt);
  wlp->add_flag("--json", json, "JSON output");

  auto* ci = app.add_subcommand("ci", "Complete intersection (x^A, y^B, z^C)");
  ci->add_option("A", ci_a)->required();
  ci->add_option("B", ci_b)->required();
  ci->add_option("C", ci_c)->required();

  auto* type2 = app.add_subcommand("type2", "Classify a type-2 ideal");
  type2->add_option("ideal", ideal_text)->required();

  auto* scan = app.add_subcommand("scan", "Search type-2 ideals for large bad primes");
  scan->add_option("--max-exponent", max_exponent, "largest pure-power exponent");
  scan->add_option("--prime-cap", prime_cap, "largest prime checked");

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form enumeration");
  formula->require_subcommand(1);
  struct FormulaSpec {
    const char* name;
    const char* help;
    std::size_t arity;
  };
  const std::vector<FormulaSpec> specs = {{"mac", "MacMahon box formula: A B C", 3},
                                          {"hyper", "hyperfactorial: N", 1},
                                          {"splitdet", "split binomial determinant: P Q R M N", 5},
                                          {"twomahonian", "four-puncture enumeration: A B C ALPHA BETA D", 6},
                                          {"typeone", "odd-sum complete intersection minor: A B C I", 4}};
  std::vector<CLI::App*> formula_cmds;
  for (const FormulaSpec& s : specs) {
    auto* sub = formula->add_subcommand(s.name, s.help);
    sub->add_option("args", formula_args)->required()->expected(static_cast<int>(s.arity));
    formula_cmds.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (hilbert->parsed()) cmd_hilbert(ideal_text, json, out);
    else if (region->parsed()) cmd_region(ideal_text, degree, svg_path, tiling_index, ascii, json, out);
    else if (count->parsed()) cmd_count(ideal_text, degree, json, out);
    else if (wlp->parsed()) cmd_wlp(ideal_text, primes, all_primes, json, out);
    else if (ci->parsed()) cmd_ci(ci_a, ci_b, ci_c, out);
    else if (type2->parsed()) cmd_type2(ideal_text, out);
    else if (scan->parsed()) cmd_scan(max_exponent, prime_cap, out);
    else if (formula->parsed()) {
      const auto& v = formula_args;
      if (formula_cmds[0]->parsed()) out << macmahon(v[0], v[1], v[2]).get_str() << "\n";
      else if (formula_cmds[1]->parsed()) out << hyperfactorial(v[0]).get_str() << "\n";
      else if (formula_cmds[2]->parsed()) out << split_binom_det(v[0], v[1], v[2], v[3], v[4]).get_str() << "\n";
      else if (formula_cmds[3]->parsed())
        out << two_mahonian_enumeration(v[0], v[1], v[2], v[3], v[4], v[5]).get_str() << "\n";
      else if (formula_cmds[4]->parsed()) {
        out << type_one_odd_minor(v[0], v[1], v[2], v[3]).get_str() << "\n";
        const mpq_class simplified = type_one_odd_minor_simplified(v[0], v[1], v[2], v[3]);
        if (simplified != mpq_class(type_one_odd_minor(v[0], v[1], v[2], v[3]))) {
          out << "note: the simplified closed form gives " << simplified.get_str() << "\n";
        }
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lefschetz

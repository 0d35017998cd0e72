#include "lefschetz/report_json.hpp"

#include <string>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer string", 0);
    return v;
  }
  throw ParseError("expected an integer", 0);
}

namespace {

Heaviness parse_heaviness(const std::string& s) {
  for (Heaviness h : {Heaviness::down_heavy, Heaviness::balanced, Heaviness::up_heavy})
    if (to_string(h) == s) return h;
  throw ParseError("unknown heaviness '" + s + "'", 0);
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

}  // namespace

Json to_json(const Balance& b) {
  Json j;
  j["up"] = b.n_up;
  j["down"] = b.n_down;
  j["kind"] = to_string(b.kind);
  return j;
}

Balance balance_from_json(const Json& j) {
  return guarded([&] {
    Balance b;
    b.n_up = j.at("up").get<std::size_t>();
    b.n_down = j.at("down").get<std::size_t>();
    b.kind = parse_heaviness(j.at("kind").get<std::string>());
    b.excess = b.n_up > b.n_down ? b.n_up - b.n_down : b.n_down - b.n_up;
    return b;
  });
}

Json to_json(const SignedEnumeration& e) {
  Json j;
  j["count"] = e.count;
  j["sum_msgn"] = big_to_json(e.sum_msgn);
  j["sum_lpsgn"] = big_to_json(e.sum_lpsgn);
  j["det_Z"] = big_to_json(e.det_z);
  j["det_N"] = big_to_json(e.det_n);
  j["per_Z"] = big_to_json(e.per_z);
  return j;
}

SignedEnumeration enumeration_from_json(const Json& j) {
  return guarded([&] {
    SignedEnumeration e;
    e.count = j.at("count").get<std::uint64_t>();
    e.sum_msgn = big_from_json(j.at("sum_msgn"));
    e.sum_lpsgn = big_from_json(j.at("sum_lpsgn"));
    e.det_z = big_from_json(j.at("det_Z"));
    e.det_n = big_from_json(j.at("det_N"));
    e.per_z = big_from_json(j.at("per_Z"));
    return e;
  });
}

Json to_json(const DegreeReport& r) {
  Json j;
  j["d"] = r.d;
  j["required_rank"] = r.required_rank;
  j["rank_q"] = r.rank_q;
  Json mods = Json::object();
  for (const auto& [p, rank] : r.rank_mod) mods[std::to_string(p)] = rank;
  j["rank_mod"] = mods;
  j["leading_divisor"] = big_to_json(r.leading_divisor);
  j["region"] = to_json(r.region_stats);
  return j;
}

DegreeReport degree_report_from_json(const Json& j) {
  return guarded([&] {
    DegreeReport r;
    r.d = j.at("d").get<int>();
    r.required_rank = j.at("required_rank").get<std::size_t>();
    r.rank_q = j.at("rank_q").get<std::size_t>();
    for (const auto& [p, rank] : j.at("rank_mod").items()) r.rank_mod[std::stoull(p)] = rank.get<std::size_t>();
    r.leading_divisor = big_from_json(j.at("leading_divisor"));
    r.region_stats = balance_from_json(j.at("region"));
    return r;
  });
}

Json to_json(const WlpReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["ideal"] = r.ideal.to_string();
  Json degrees = Json::array();
  for (const DegreeReport& d : r.degrees) degrees.push_back(to_json(d));
  j["degrees"] = degrees;
  j["holds_char0"] = r.holds_char0;
  j["bad_primes"] = r.bad_primes_exact ? Json(r.bad_primes) : Json(nullptr);
  Json fails = Json::object();
  for (const auto& [p, ds] : r.failing_degrees) fails[std::to_string(p)] = ds;
  j["failing_degrees"] = fails;
  j["method"] = to_string(r.method);
  return j;
}

WlpReport wlp_report_from_json(const Json& j) {
  return guarded([&] {
    if (j.at("schema").get<std::string>() != kSchema) throw ParseError("unsupported schema", 0);
    WlpReport r;
    const std::string ideal = j.at("ideal").get<std::string>();
    if (ideal == "1") r.ideal = MonomialIdeal({Monomial{}});
    else if (ideal != "0") r.ideal = parse_ideal(ideal);
    for (const Json& d : j.at("degrees")) r.degrees.push_back(degree_report_from_json(d));
    r.holds_char0 = j.at("holds_char0").get<bool>();
    if (!j.at("bad_primes").is_null()) {
      r.bad_primes = j.at("bad_primes").get<std::vector<std::uint64_t>>();
      r.bad_primes_exact = true;
    }
    for (const auto& [p, ds] : j.at("failing_degrees").items()) r.failing_degrees[std::stoull(p)] = ds.get<std::vector<int>>();
    const auto method = parse_wlp_method(j.at("method").get<std::string>());
    if (!method) throw ParseError("unknown method", 0);
    r.method = *method;
    return r;
  });
}

}  // namespace lefschetz

#include "dispatch.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "schinzel/av.hpp"
#include "schinzel/bezout.hpp"
#include "schinzel/coprime.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/hilbert.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/profile.hpp"
#include "schinzel/residues.hpp"
#include "schinzel/textio.hpp"

namespace schinzel::cli {

using nlohmann::json;

namespace {

Rational parse_scale(const std::string& text) {
  auto bad = [&] { return PreconditionError("bad budget scale '" + text + "'"); };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = Integer::parse(text);
    if (!n) throw bad();
    return Rational(*n);
  }
  auto num = Integer::parse(text.substr(0, slash));
  auto den = Integer::parse(text.substr(slash + 1));
  if (!num || !den || den->is_zero()) throw bad();
  return Rational(*num, *den);
}

Integer parse_integer(const std::string& text, const char* what) {
  auto n = Integer::parse(text);
  if (!n) throw PreconditionError(std::string(what) + ": bad integer '" + text + "'");
  return *n;
}

struct Context {
  RingPtr ring;
  Budget budget;
  json inputs;
};

// the commands that read P(t, y) rather than P(y)
bool is_bivariate_command(const std::string& cmd) {
  return cmd == "hilbert-progression" || cmd == "hilbert-scan" || cmd == "polyring-scan";
}

PolyShape shape_for(const RingPtr& ring, const std::string& command) {
  PolyShape shape;
  shape.with_t = is_bivariate_command(command);
  if (ring->kind() == RingKind::PolyRing && ring->var() == "t") {
    // ring selector Z[t] names the t-layer explicitly
    shape.base = ring->base();
    shape.with_t = true;
  } else {
    shape.base = ring;
  }
  return shape;
}

std::vector<Poly> parse_inputs(const Request& req, Context& ctx) {
  PolyShape shape = shape_for(ctx.ring, req.command);
  std::vector<Poly> ps;
  json echoed = json::array();
  for (const std::string& text : req.polys) {
    Poly p = parse_poly(text, shape);
    echoed.push_back(p.str());
    ps.push_back(std::move(p));
  }
  ctx.inputs["polynomials"] = echoed;
  return ps;
}

json witness_json(const CoprimeWitness& w) {
  json values = json::array();
  for (const Value& v : w.values) values.push_back(v.str());
  json verification{{"gcd_of_values", w.verification.gcd.str()},
                    {"coprime", w.verification.coprime}};
  if (w.verification.integer_content) {
    verification["integer_content"] = w.verification.integer_content->str();
  }
  return json{{"m", w.m.str()}, {"values", values}, {"verification", verification}};
}

json verdict_json(const AvVerdict& v) {
  json evidence = json::array();
  for (const ResidueScanRecord& rec : v.evidence) {
    json e{{"prime", rec.prime.str()},
           {"all_residues_annihilate", rec.all_residues_annihilate}};
    if (rec.surviving_residue) e["surviving_residue"] = rec.surviving_residue->str();
    if (rec.surviving_index) e["surviving_index"] = *rec.surviving_index;
    evidence.push_back(std::move(e));
  }
  json out{{"holds", v.holds}, {"evidence", evidence}};
  if (v.failing_prime) out["failing_prime"] = v.failing_prime->str();
  if (v.content_witness) out["content_witness"] = v.content_witness->str();
  return out;
}

json budget_json(const Budget& b, const std::string& scale) {
  return json{{"trial_division_limit", b.trial_division_limit},
              {"rho_iterations", b.rho_iterations},
              {"prime_scan_limit", b.prime_scan_limit},
              {"kronecker_degree_cap", b.kronecker_degree_cap},
              {"kronecker_combination_cap", b.kronecker_combination_cap},
              {"fp_trial_cap", b.fp_trial_cap},
              {"residue_cap", b.residue_cap},
              {"profile_cap", b.profile_cap.str()},
              {"lambda_bound", b.lambda_bound},
              {"scan_cap", b.scan_cap},
              {"scale", scale.empty() ? "1" : scale}};
}

void cmd_delta(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  BezoutCertificate cert = bezout_delta(ps);
  json cof = json::array();
  for (const Poly& c : cert.cofactors) cof.push_back(c.str());
  result["delta"] = cert.delta.str();
  result["cofactors"] = cof;
  verification["verified"] = verify_certificate(cert, ps);
  if (ps.size() == 2 && ctx.ring->kind() != RingKind::PolyRing) {
    Value rho = resultant(ps[0], ps[1]);
    verification["resultant"] = rho.str();
    verification["delta_divides_resultant"] = Value::divides(cert.delta, rho);
  }
}

void cmd_min_delta(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  DeltaResult res = delta_analysis(ps, ctx.budget);
  int bound = req.degree_bound >= 0 ? req.degree_bound : res.degree_bound_used;
  Value min_delta = minimal_delta_bounded(ps, bound, ctx.budget);
  result["minimal_delta"] = min_delta.str();
  result["degree_bound_used"] = bound;
  result["bezout_delta"] = res.bezout.delta.str();
  verification["divides_bezout_delta"] =
      min_delta.is_zero() || Value::divides(min_delta, res.bezout.delta);
  if (bound > 0) {
    Value prev = minimal_delta_bounded(ps, bound - 1, ctx.budget);
    verification["divides_previous_bound"] = prev.is_zero() || Value::divides(min_delta, prev);
  }
}

void cmd_av_check(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  AvVerdict v = req.av == 1 ? check_av1(ps, ctx.budget) : check_av2(ps, ctx.budget);
  result["assumption"] = req.av == 1 ? "AV1" : "AV2";
  result.update(verdict_json(v));
  verification["failing_prime_verified"] = !v.failing_prime || !v.holds;
}

void cmd_find_coprime(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  CoprimeWitness w;
  const RingPtr& ring = ctx.ring;
  if (ring->kind() == RingKind::Integers ||
      (ring->kind() == RingKind::PolyRing && ring->base()->kind() == RingKind::PrimeField)) {
    w = find_coprime_pid(ps, ctx.budget);
    result["strategy"] = "pid";
  } else if (ring->kind() == RingKind::PolyRing &&
             ring->base()->kind() == RingKind::Rationals) {
    w = find_coprime_infinite_field(ps, ctx.budget);
    result["strategy"] = "infinite-field";
  } else if (ring->kind() == RingKind::PolyRing &&
             ring->base()->kind() == RingKind::Integers) {
    w = find_coprime_polyring(ps, ctx.budget);
    result["strategy"] = "polyring";
  } else {
    throw RingMismatchError("find-coprime: unsupported ring " + ring->describe());
  }
  result["witness"] = witness_json(w);
  verification["coprime"] = w.verification.coprime;
}

void cmd_oracle(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  SearchBox box;
  if (ctx.ring->kind() == RingKind::Integers) {
    box = SearchBox::interval(parse_integer(req.box_lo, "box-lo"),
                              parse_integer(req.box_hi, "box-hi"));
    result["box"] = json{{"lo", req.box_lo}, {"hi", req.box_hi}};
  } else {
    box = SearchBox::poly_box(req.box_degree, req.box_height);
    result["box"] = json{{"max_degree", req.box_degree}, {"max_height", req.box_height}};
  }
  auto w = brute_force_coprime(ps, box, ctx.budget);
  result["found"] = w.has_value();
  if (w) {
    result["witness"] = witness_json(*w);
    verification["coprime"] = w->verification.coprime;
  } else {
    verification["exhaustive"] = true;
  }
}

void cmd_profile(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  GcdProfile p = gcd_profile(ps, ctx.budget);
  result["delta"] = p.delta.str();
  json table = json::array();
  for (const auto& [m, d] : p.table) table.push_back(json{{"m", m.str()}, {"d_m", d.str()}});
  result["table"] = table;
  verification["d_m_divides_delta"] = true;       // asserted inside gcd_profile
  verification["periodicity_spot_checked"] = true;  // l in {-2,-1,1,2}
}

void cmd_dstar(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  DStar d = dstar(ps, ctx.budget);
  json divisors = json::array();
  for (const Value& v : d.divisors) divisors.push_back(v.str());
  result["divisors"] = divisors;
  result["d_star"] = d.d_star.str();
  result["av2_holds"] = d.av2_holds;
  verification["gcd_stable"] = true;  // asserted inside dstar
  verification["d_star_is_member"] = true;
  verification["av2_consistent"] = d.av2_holds == d.d_star.is_unit();
}

void cmd_density(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  Integer lo = parse_integer(req.window_lo, "window-lo");
  Integer hi = parse_integer(req.window_hi, "window-hi");
  Rational density = density_good_m(ps, lo, hi, ctx.budget);
  result["window"] = json{{"lo", lo.str()}, {"hi", hi.str()}};
  result["density"] = density.str();
  verification["window_multiple_of_delta"] = true;  // precondition, checked inside
}

json progression_json(const ProgressionWitness& w) {
  json deltas = json::array();
  for (const Integer& d : w.deltas) deltas.push_back(d.str());
  json records = json::array();
  for (const PrimeResidueChoice& r : w.records) {
    records.push_back(json{{"prime", r.prime.str()},
                           {"residue", r.residue.str()},
                           {"coefficient_index", r.coeff_index}});
  }
  return json{{"a0", w.a0.str()}, {"b0", w.b0.str()}, {"deltas", deltas}, {"records", records}};
}

void cmd_hilbert_progression(const Request& req, Context& ctx, json& result,
                             json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  ProgressionWitness w = primitivity_progression(ps, ctx.budget);
  result.update(progression_json(w));
  verification["sampled_specializations_primitive"] = true;  // asserted inside
}

void cmd_hilbert_scan(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  ProgressionWitness w = primitivity_progression(ps, ctx.budget);
  SpecializationReport rep = irreducible_specializations(ps, w, req.want, req.scan_cap,
                                                         ctx.budget);
  result["progression"] = progression_json(w);
  json hits = json::array();
  for (const Integer& m : rep.hits) hits.push_back(m.str());
  result["hits"] = hits;
  result["scanned"] = rep.scanned;
  result["want"] = rep.want;
  result["scan_cap"] = rep.scan_cap;
  result["exhausted"] = rep.exhausted;
  if (rep.interrupted) result["interrupted"] = true;
  // re-verification pass: no reported hit survives a kronecker refutation
  bool ok = true;
  const RingPtr z = Ring::integers();
  for (const Integer& m : rep.hits) {
    for (const Poly& p : ps) {
      ok = ok && is_irreducible_over_z(specialize_at(p, Value::of_integer(z, m)), ctx.budget);
    }
  }
  verification["hits_reverified"] = ok;
}

void cmd_polyring_scan(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  if (ps.size() != 1) throw PreconditionError("polyring-scan: exactly one polynomial");
  SearchBox box = SearchBox::poly_box(req.box_degree, req.box_height);
  PolyringScanReport rep = specialize_polyring_irreducible(ps[0], box, req.want, ctx.budget);
  json hits = json::array();
  for (const Value& m : rep.hits) hits.push_back(m.str());
  result["hits"] = hits;
  result["scanned"] = rep.scanned;
  result["want"] = rep.want;
  result["exhausted"] = rep.exhausted;
  if (rep.interrupted) result["interrupted"] = true;
  result["factor_degree_bound"] = rep.factor_degree_bound;
  result["evidence_only"] =
      ps[0].coeff_ring()->base()->base()->kind() == RingKind::PrimeField;
  verification["hits_are_no_factor_within_bound"] = true;
}

void cmd_mod_n(const Request& req, Context& ctx, json& result, json& verification) {
  std::vector<Poly> ps = parse_inputs(req, ctx);
  Integer n = parse_integer(req.modulus, "mod");
  std::vector<ModNWitness> ws = mod_n_schinzel(ps, n, req.want, ctx.budget);
  json witnesses = json::array();
  bool ok = true;
  for (const ModNWitness& w : ws) {
    json entries = json::array();
    for (const ModNEntry& e : w.entries) {
      entries.push_back(json{{"value", e.value.str()}, {"prime", e.prime.str()}});
      ok = ok && is_prime(e.prime) && !Integer::divides(e.prime, n) &&
           Integer::mod_floor(e.prime - e.value, n).is_zero();
    }
    witnesses.push_back(json{{"m", w.m.str()}, {"entries", entries}});
  }
  result["modulus"] = n.str();
  result["witnesses"] = witnesses;
  verification["all_entries_certified"] = ok;
}

void cmd_goldbach(const Request& req, Context& ctx, json& result, json& verification) {
  Integer two_n = parse_integer(req.two_n, "two-n");
  Integer n = parse_integer(req.modulus, "mod");
  ctx.inputs["two_n"] = two_n.str();
  std::vector<GoldbachWitness> ws = goldbach_mod_n(two_n, n, req.want, ctx.budget);
  json witnesses = json::array();
  bool ok = true;
  for (const GoldbachWitness& w : ws) {
    witnesses.push_back(json{{"p", w.p.str()}, {"q", w.q.str()}, {"m", w.m.str()}});
    ok = ok && is_prime(w.p) && is_prime(w.q) &&
         Integer::mod_floor(w.p + w.q - two_n, n).is_zero();
  }
  result["modulus"] = n.str();
  result["witnesses"] = witnesses;
  verification["all_witnesses_certified"] = ok;
}

// ---- selftest ----------------------------------------------------------

bool json_subset(const json& expected, const json& actual) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!actual.contains(it.key())) return false;
      if (!json_subset(it.value(), actual.at(it.key()))) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || expected.size() != actual.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!json_subset(expected[i], actual[i])) return false;
    }
    return true;
  }
  return expected == actual;
}

Request request_from_json(const json& j) {
  Request r;
  r.command = j.at("command").get<std::string>();
  if (j.contains("ring")) r.ring = j["ring"].get<std::string>();
  if (j.contains("polys")) r.polys = j["polys"].get<std::vector<std::string>>();
  if (j.contains("want")) r.want = j["want"].get<long>();
  if (j.contains("scan_cap")) r.scan_cap = j["scan_cap"].get<long>();
  if (j.contains("degree_bound")) r.degree_bound = j["degree_bound"].get<int>();
  if (j.contains("box_lo")) r.box_lo = j["box_lo"].get<std::string>();
  if (j.contains("box_hi")) r.box_hi = j["box_hi"].get<std::string>();
  if (j.contains("box_degree")) r.box_degree = j["box_degree"].get<int>();
  if (j.contains("box_height")) r.box_height = j["box_height"].get<long>();
  if (j.contains("window_lo")) r.window_lo = j["window_lo"].get<std::string>();
  if (j.contains("window_hi")) r.window_hi = j["window_hi"].get<std::string>();
  if (j.contains("mod")) r.modulus = j["mod"].get<std::string>();
  if (j.contains("two_n")) r.two_n = j["two_n"].get<std::string>();
  if (j.contains("av")) r.av = j["av"].get<int>();
  return r;
}

// Swan's example: every substitution m(u)^8 + u^3 with deg m <= 4 factors
// over F_2.
bool swan_sweep() {
  RingPtr f2u = Ring::poly_ring(Ring::prime_field(Integer(2)), "u");
  Value u3 = Value::of_poly(
      f2u, Poly::monomial(f2u->base(), "u", Value::one(f2u->base()), 3));
  for (const Value& m : enumerate_fp_polys(f2u, 4)) {
    Value v = m.pow(8) + u3;
    Factorization f = factor_over_prime_field(v.as_poly());
    if (f.is_irreducible()) return false;
  }
  return true;
}

Poly random_poly_for_shape(std::mt19937_64& rng, const PolyShape& shape) {
  std::uniform_int_distribution<int> ydeg(0, 5);
  std::uniform_int_distribution<int> subdeg(0, 2);
  std::uniform_int_distribution<long> coef(-9, 9);
  RingPtr coeff_ring = shape.coefficient_ring();

  std::function<Value(const RingPtr&)> random_value = [&](const RingPtr& r) -> Value {
    switch (r->kind()) {
      case RingKind::Integers:
      case RingKind::Rationals:
      case RingKind::PrimeField:
        return Value::of_integer(r, Integer(coef(rng)));
      default: {
        int d = subdeg(rng);
        std::vector<Value> coeffs;
        for (int i = 0; i <= d; ++i) coeffs.push_back(random_value(r->base()));
        return Value::of_poly(r, Poly::from_coeffs(r->base(), r->var(), std::move(coeffs)));
      }
    }
  };

  int d = ydeg(rng);
  std::vector<Value> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(random_value(coeff_ring));
  return Poly::from_coeffs(coeff_ring, shape.main_var, std::move(coeffs));
}

bool parser_roundtrip(unsigned long seed, json& detail) {
  std::mt19937_64 rng(seed);
  struct Case {
    const char* ring;
    bool with_t;
  };
  const Case cases[] = {{"Z", false},      {"Fp[u]:2", false}, {"Fp[u]:5", false},
                        {"Z[u]", false},   {"Q[u]", false},    {"Z[t]", false},
                        {"Z[u]", true}};
  for (const Case& c : cases) {
    PolyShape shape;
    RingPtr selector = parse_ring(c.ring);
    if (selector->kind() == RingKind::PolyRing && selector->var() == "t") {
      shape.base = selector->base();
      shape.with_t = true;
    } else {
      shape.base = selector;
      shape.with_t = c.with_t;
    }
    for (int i = 0; i < 1000; ++i) {
      Poly p = random_poly_for_shape(rng, shape);
      Poly back = parse_poly(p.str(), shape);
      if (back != p) {
        detail = json{{"ring", c.ring}, {"with_t", c.with_t}, {"poly", p.str()}};
        return false;
      }
      Poly back_asc = parse_poly(p.str(false), shape);
      if (back_asc != p) {
        detail = json{{"ring", c.ring}, {"ascending", true}, {"poly", p.str(false)}};
        return false;
      }
    }
  }
  return true;
}

void cmd_selftest(const Request& req, Context& ctx, json& result, json& verification) {
  json failures = json::array();
  long fixtures_run = 0;
  if (!req.fixtures_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(req.fixtures_dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      std::ifstream in(path);
      json fixture = json::parse(in);
      Request sub = request_from_json(fixture.at("request"));
      sub.interrupt = req.interrupt;
      Response resp = run(sub);
      ++fixtures_run;
      const json& expect = fixture.at("expect");
      bool ok = true;
      if (expect.contains("exit_code")) {
        ok = ok && resp.exit_code == expect["exit_code"].get<int>();
      }
      if (expect.contains("body")) ok = ok && json_subset(expect["body"], resp.body);
      if (!ok) {
        failures.push_back(json{{"fixture", fixture.value("name", path.filename().string())},
                                {"expected", expect},
                                {"actual_exit", resp.exit_code},
                                {"actual_body", resp.body}});
      }
    }
  }
  bool swan_ok = swan_sweep();
  json roundtrip_detail;
  bool roundtrip_ok = parser_roundtrip(req.seed, roundtrip_detail);

  result["fixtures_run"] = fixtures_run;
  result["failures"] = failures;
  result["swan_sweep"] = swan_ok ? "pass" : "fail";
  result["parser_roundtrip"] = roundtrip_ok ? "pass" : "fail";
  if (!roundtrip_ok) result["parser_roundtrip_detail"] = roundtrip_detail;
  verification["all_passed"] = failures.empty() && swan_ok && roundtrip_ok;
  if (!(failures.empty() && swan_ok && roundtrip_ok)) {
    throw Error("selftest: mismatches found");
  }
  (void)ctx;
}

}  // namespace

Response run(const Request& req) {
  Response resp;
  json& body = resp.body;
  body["schema"] = 1;
  body["command"] = req.command;

  Context ctx;
  std::string scale_text = req.budget_scale;
  try {
    ctx.budget = Budget::defaults();
    if (!scale_text.empty()) ctx.budget = ctx.budget.scaled_by(parse_scale(scale_text));
    ctx.budget.interrupt_flag = req.interrupt;
    ctx.ring = parse_ring(req.ring);
    body["ring"] = ctx.ring->describe();

    json result = json::object();
    json verification = json::object();
    if (req.command == "delta") {
      cmd_delta(req, ctx, result, verification);
    } else if (req.command == "min-delta") {
      cmd_min_delta(req, ctx, result, verification);
    } else if (req.command == "av-check") {
      cmd_av_check(req, ctx, result, verification);
    } else if (req.command == "find-coprime") {
      cmd_find_coprime(req, ctx, result, verification);
    } else if (req.command == "oracle") {
      cmd_oracle(req, ctx, result, verification);
    } else if (req.command == "profile") {
      cmd_profile(req, ctx, result, verification);
    } else if (req.command == "dstar") {
      cmd_dstar(req, ctx, result, verification);
    } else if (req.command == "density") {
      cmd_density(req, ctx, result, verification);
    } else if (req.command == "hilbert-progression") {
      cmd_hilbert_progression(req, ctx, result, verification);
    } else if (req.command == "hilbert-scan") {
      cmd_hilbert_scan(req, ctx, result, verification);
    } else if (req.command == "polyring-scan") {
      cmd_polyring_scan(req, ctx, result, verification);
    } else if (req.command == "mod-n") {
      cmd_mod_n(req, ctx, result, verification);
    } else if (req.command == "goldbach-mod-n") {
      cmd_goldbach(req, ctx, result, verification);
    } else if (req.command == "selftest") {
      cmd_selftest(req, ctx, result, verification);
    } else {
      throw ParseError("unknown command '" + req.command + "'", 0);
    }
    body["inputs"] = ctx.inputs;
    body["result"] = result;
    body["verification"] = verification;
    body["budget_report"] = budget_json(ctx.budget, scale_text);
    resp.exit_code = 0;
  } catch (const ParseError& e) {
    body["error"] = json{{"type", "parse"}, {"message", e.what()}, {"position", e.position()}};
    resp.exit_code = 1;
  } catch (const AvViolation& e) {
    body["error"] =
        json{{"type", "assumption-on-values"}, {"message", e.what()},
             {"failing_prime", e.failing_prime()}};
    resp.exit_code = 2;
  } catch (const CommonFactorError& e) {
    body["error"] =
        json{{"type", "common-factor"}, {"message", e.what()}, {"gcd", e.gcd_text()}};
    resp.exit_code = 2;
  } catch (const PreconditionError& e) {
    body["error"] = json{{"type", "precondition"}, {"message", e.what()}};
    resp.exit_code = 2;
  } catch (const BudgetExceeded& e) {
    body["error"] = json{{"type", "budget"}, {"message", e.what()}};
    resp.exit_code = 3;
  } catch (const Error& e) {
    body["error"] = json{{"type", "internal"}, {"message", e.what()}};
    resp.exit_code = 1;
  }
  return resp;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const json& e : j) {
      flatten(e, prefix + "[" + std::to_string(i++) + "]", os);
    }
  } else {
    os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_table(const json& body) {
  std::ostringstream os;
  flatten(body, "", os);
  return os.str();
}

}  // namespace schinzel::cli

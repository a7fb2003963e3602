#include "zipk/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "zipk/error.hpp"

namespace zipk {

namespace {

constexpr std::uint32_t kModuleBound = 8;
constexpr long kDefaultWindow = 2;

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json weights_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w);
  return out;
}

Json roots_json(const RootDatum& rd, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(rd.roots[i]);
  return out;
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json lattice_json(const WindowLattice& l) {
  Json elems = Json::array();
  for (const auto& e : l.elements()) elems.push_back(e.to_string());
  return {{"rank", l.rank()}, {"basis", elems}};
}

Json groebner_json(const GroebnerBasis& gb) {
  return {{"basis", polys_json(gb.generators)},
          {"stats",
           {{"pairs_processed", gb.stats.pairs_processed},
            {"pairs_skipped", gb.stats.pairs_skipped},
            {"reductions_to_zero", gb.stats.reductions_to_zero},
            {"peak_basis_size", gb.stats.peak_basis_size}}}};
}

GroebnerOptions options_for(const JobSpec& job) {
  GroebnerOptions o;
  o.max_degree = job.max_degree;
  return o;
}

CocharacterDatum datum_for(const JobSpec& job) {
  CocharacterDatum d;
  d.group = resolve_group(job);
  d.mu = job.mu ? *job.mu : Weight(d.group.rank, 0);
  d.p = job.p;
  return d;
}

Json datum_json(const CocharacterDatum& d) {
  return {{"cocharacter", d.mu}, {"p", d.p}};
}

void record_error(Json& report, const char* kind, const std::string& name, const std::string& msg) {
  Json e = {{"kind", kind}};
  if (!name.empty()) e["name"] = name;
  e["message"] = msg;
  report["error"] = e;
}

bool wants(const std::vector<std::string>& checks, std::string_view name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end();
}

Json steinberg_section(const RootDatum& rd, long window) {
  const auto weyl = weyl_enumerate(rd);
  const auto cand = steinberg_candidates(rd, weyl);
  if (!cand)
    return {{"status", to_string(CheckStatus::Inconclusive)},
            {"note", "no integral fundamental weights"}};
  return steinberg_json(steinberg_freeness_check(rd, weyl, *cand, window));
}

// ---------------------------------------------------------------------------

void fill_validate(Json& report, const JobSpec& job) {
  const RootDatum rd = resolve_group(job);
  validate(rd);
  report["group"] = group_json(rd);
  if (job.mu) {
    CocharacterDatum d{rd, *job.mu, job.p};
    validate_datum(d);
    report["datum"] = datum_json(d);
  } else if (!is_prime(job.p)) {
    throw ValidationError(ValidationError::Kind::NotPrime, "p = " + std::to_string(job.p) + " is not prime");
  }
  require_simply_connected(rd);
  report["status"] = "ok";
}

void fill_k0_torus(Json& report, const JobSpec& job) {
  const CocharacterDatum d = datum_for(job);
  validate_datum(d);
  report["group"] = group_json(d.group);
  report["datum"] = datum_json(d);
  const TorusQuotient t = compute_k0_torus(d, options_for(job));
  report["presentation"] = {{"variables", t.ring->names()}, {"relations", polys_json(t.relations)}};
  report["groebner"] = groebner_json(t.groebner);
  report["module"] = module_json(t.ring, t.module, kModuleBound);
}

void fill_k0(Json& report, const JobSpec& job) {
  const CocharacterDatum d = datum_for(job);
  validate_datum(d);
  report["group"] = group_json(d.group);
  report["datum"] = datum_json(d);
  require_simply_connected(d.group);
  const auto checks = job.checks.value_or(std::vector<std::string>{"kunneth"});
  const auto options = options_for(job);
  const long window = job.window.value_or(kDefaultWindow);

  // The torus side only feeds checks; it runs alongside the Levi side.
  std::future<TorusQuotient> torus;
  if (wants(checks, "kunneth") || wants(checks, "theta"))
    torus = std::async(std::launch::async, [&] { return compute_k0_torus(d, options); });

  K0Presentation k;
  try {
    k = compute_k0(d, options);
  } catch (...) {
    if (torus.valid()) torus.wait();
    throw;
  }
  if (k.experimental)
    report["experimental"] = "non-split Frobenius twist: results carry no correctness claim";

  Json gens = Json::array();
  for (std::size_t i = 0; i < k.levi_ring.size(); ++i)
    gens.push_back({{"name", k.levi_ring.names[i]}, {"highest_weight", k.levi_ring.weights[i]}});
  Json pairs = Json::array();
  for (const auto& [a, b] : k.levi_ring.inverse_pairs)
    pairs.push_back({k.levi_ring.names[a], k.levi_ring.names[b]});
  std::vector<Polynomial> relations = k.syzygies;
  relations.insert(relations.end(), k.frobenius_relations.begin(), k.frobenius_relations.end());

  report["levi"] = {{"roots", roots_json(d.group, k.levi.roots)},
                    {"simple_roots", roots_json(d.group, k.levi.simple_roots)},
                    {"weyl_order", k.levi.weyl.size()}};
  report["presentation"] = {{"variables", k.ring->names()},
                            {"generators", gens},
                            {"inverse_pairs", pairs},
                            {"relations", polys_json(relations)},
                            {"syzygy_count", k.syzygies.size()},
                            {"frobenius_count", k.frobenius_relations.size()}};
  report["groebner"] = groebner_json(k.groebner);
  report["module"] = module_json(k.ring, k.module, kModuleBound);

  Json out = Json::object();
  report["checks"] = out;
  std::optional<TorusQuotient> t;
  if (torus.valid()) t = torus.get();
  for (const auto& c : checks) {
    if (c == "kunneth")
      out["kunneth"] = kunneth_json(kunneth_rank_check(k, *t));
    else if (c == "theta")
      out["theta"] = theta_json(theta_map_check(d, *t, 8, 1, options));
    else if (c == "hecke")
      out["hecke"] = hecke_json(hecke_check(d.group, window));
    else if (c == "steinberg")
      out["steinberg"] = steinberg_section(d.group, window);
    else if (c == "counterexample")
      out["counterexample"] = counterexample_json(weyl_counterexample_demo(job.module));
    report["checks"] = out;
  }
}

void fill_hecke(Json& report, const JobSpec& job) {
  const RootDatum rd = resolve_group(job);
  validate(rd);
  report["group"] = group_json(rd);
  report["hecke"] = hecke_json(hecke_check(rd, job.window.value_or(kDefaultWindow)));
}

void fill_counterexample(Json& report, const JobSpec& job) {
  report["counterexample"] = counterexample_json(weyl_counterexample_demo(job.module));
}

// ---------------------------------------------------------------------------

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!(x.is_number() || x.is_boolean() || x.is_null() || (x.is_array() && is_flat(x) && !x.empty() && x[0].is_number())))
      return false;
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value) || is_flat(value) || (value.is_array() && value.empty()) ||
          (value.is_object() && value.empty())) {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      } else {
        out << pad << key << ":\n";
        render(out, value, indent + 2);
      }
    }
    return;
  }
  for (const auto& x : j) {
    if (is_scalar(x) || is_flat(x)) {
      out << pad << "- " << scalar_text(x) << '\n';
    } else {
      out << pad << "-\n";
      render(out, x, indent + 2);
    }
  }
}

}  // namespace

std::string to_string(ValidationError::Kind kind) {
  using K = ValidationError::Kind;
  switch (kind) {
    case K::PairingViolation: return "pairing-violation";
    case K::ReflectionNotPermuting: return "reflection-not-permuting";
    case K::NonFiniteCartan: return "non-finite-cartan";
    case K::InvalidSimpleSystem: return "invalid-simple-system";
    case K::TwistNotPreservingBase: return "twist-not-preserving-base";
    case K::NotSimplyConnected: return "not-simply-connected";
    case K::NotPrime: return "not-prime";
    case K::DimensionMismatch: return "dimension-mismatch";
    case K::NotInvariant: return "not-invariant";
    case K::NotDominant: return "not-dominant";
    case K::NotReduced: return "not-reduced";
  }
  return "validation";
}

Json group_json(const RootDatum& rd) {
  Json g = {{"name", rd.name}, {"rank", rd.rank}, {"root_count", rd.roots.size()}};
  g["simple_roots"] = roots_json(rd, rd.simple_roots);
  if (rd.twist) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rd.rank; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < rd.rank; ++j) row.push_back((*rd.twist)(i, j));
      rows.push_back(row);
    }
    g["twist"] = rows;
  }
  g["pi1"] = fundamental_group(rd).to_string();
  g["weyl_order"] = weyl_enumerate(rd).size();
  return g;
}

Json module_json(const RingPtr& ring, const QuotientModule& m, std::uint32_t bound) {
  Json torsion = Json::array();
  for (const auto& t : m.torsion) torsion.push_back(integer_json(t));
  Json standard = Json::array();
  for (const auto& s : m.standard) {
    std::string label = ring->monomial_string(s.monomial);
    if (s.modulus != 0) label += " (mod " + s.modulus.get_str() + ")";
    standard.push_back(label);
  }
  Json out = {{"finite", m.finite}, {"rank", m.rank}, {"torsion", torsion}, {"bound", bound}};
  out["group"] = m.finite ? m.group().to_string() : "not finitely generated";
  if (m.truncated) out["truncation"] = "standard monomials listed up to degree " + std::to_string(bound);
  out["standard_monomials"] = standard;
  return out;
}

Json kunneth_json(const KunnethReport& r) {
  Json out = {{"status", to_string(r.status)}, {"levi_weyl_order", r.levi_weyl_order}};
  out["torus_rank"] = r.torus_rank ? Json(*r.torus_rank) : Json(nullptr);
  out["levi_rank"] = r.levi_rank ? Json(*r.levi_rank) : Json(nullptr);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json theta_json(const ThetaReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json e = {{"kind", s.kind}, {"element", s.element}, {"reduces_to_zero", s.reduces_to_zero}};
    e["expected"] = s.expected ? Json(*s.expected) : Json(nullptr);
    samples.push_back(e);
  }
  return {{"status", to_string(r.status)},
          {"untwisting_matches", r.untwisting_matches},
          {"failures", r.failures},
          {"samples", samples}};
}

Json hecke_json(const HeckeReport& r) {
  return {{"status", to_string(r.status)},
          {"window", r.window},
          {"hecke_invariants", lattice_json(r.hecke)},
          {"weyl_invariants", lattice_json(r.weyl)},
          {"generator_span", lattice_json(r.span)}};
}

Json steinberg_json(const SteinbergReport& r) {
  return {{"status", to_string(r.passed() ? CheckStatus::Pass : CheckStatus::Fail)},
          {"note", "candidate basis e^{w(sum of fundamental weights of simple roots made negative by w)}; "
                   "evidence is numerical"},
          {"candidates", weights_json(r.candidates)},
          {"modulus", r.modulus},
          {"determinants", r.determinants},
          {"independent", r.independent},
          {"window", r.window},
          {"monomials_checked", r.monomials_checked},
          {"unspanned", weights_json(r.unspanned)},
          {"spanning", r.spanning}};
}

Json counterexample_json(const CounterexampleReport& r) {
  const std::string module = r.modulus == 0 ? "Z" : "Z/" + r.modulus.get_str();
  const std::string verdict = r.excess ? "invariants " + r.invariants.to_string() +
                                             " strictly contain image " + r.image.to_string()
                                       : "no excess invariants";
  return {{"module", module},
          {"action", integer_json(r.action)},
          {"invariants", r.invariants.to_string()},
          {"image", r.image.to_string()},
          {"excess", r.excess},
          {"verdict", verdict}};
}

Json run_job(std::string_view command, const JobSpec& job) {
  Json report = {{"schema", kReportSchema}, {"command", command}};
  try {
    if (command == "validate")
      fill_validate(report, job);
    else if (command == "k0")
      fill_k0(report, job);
    else if (command == "k0-torus")
      fill_k0_torus(report, job);
    else if (command == "hecke-check")
      fill_hecke(report, job);
    else if (command == "demo-counterexample")
      fill_counterexample(report, job);
    else
      throw ParseError("unknown command '" + std::string(command) + "'");
  } catch (const ValidationError& e) {
    record_error(report, "validation", to_string(e.kind()), e.what());
  } catch (const ResourceError& e) {
    report["truncated"] = true;
    record_error(report, "resource", "", e.what());
  }
  return report;
}

int exit_code(const Json& report) {
  if (!report.contains("error")) return kExitOk;
  const auto& kind = report["error"]["kind"];
  if (kind == "validation") return kExitValidation;
  if (kind == "resource") return kExitResource;
  return kExitParse;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace zipk

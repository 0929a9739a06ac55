#include "jobs.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "fieldtheory.hpp"
#include "hsicalc.hpp"
#include "linkdiag.hpp"
#include "manifold.hpp"
#include "repvar.hpp"

namespace hsikit {

namespace {

using nlohmann::json;

struct JobError : std::runtime_error {
  int code;
  JobError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
};

long long get_ll(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw JobError(2, std::string("missing integer field '") + key + "'");
  return j[key].get<long long>();
}

long long get_ll_or(const json& j, const char* key, long long dflt) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number_integer())
    throw JobError(2, std::string("field '") + key + "' must be an integer");
  return j[key].get<long long>();
}

ManifoldDesc parse_manifold(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw JobError(2, "manifold must be an object with a 'type'");
  std::string type = j["type"].get<std::string>();
  ManifoldDesc d;
  if (type == "lens") {
    d.shape = LensDesc{get_ll(j, "p"), get_ll(j, "q")};
  } else if (type == "brieskorn") {
    d.shape = BrieskornDesc{get_ll(j, "a1"), get_ll(j, "a2"), get_ll(j, "a3")};
  } else if (type == "plumbing") {
    PlumbingDesc p;
    for (const json& w : j.value("weights", json::array()))
      p.weights.push_back(w.get<long long>());
    for (const json& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw JobError(2, "edge must be a pair");
      p.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    d.shape = std::move(p);
  } else if (type == "surgery_torus_knot") {
    d.shape = TorusKnotSurgeryDesc{get_ll(j, "r"), get_ll(j, "s"), get_ll(j, "framing")};
  } else if (type == "connected_sum") {
    ConnectedSumDesc cs;
    for (const json& s : j.value("summands", json::array()))
      cs.summands.push_back(parse_manifold(s));
    d.shape = std::move(cs);
  } else if (type == "s2xs1") {
    d.shape = S2xS1Desc{};
  } else {
    throw JobError(2, "unknown manifold type '" + type + "'");
  }
  for (const json& b : j.value("class_c", json::array()))
    d.class_c.push_back(b.get<int>() & 1);
  d.validate();
  return d;
}

PDDiagram parse_diagram(const json& j) {
  if (j.is_string() || (j.is_object() && j.contains("name"))) {
    std::string name = j.is_string() ? j.get<std::string>()
                                     : j["name"].get<std::string>();
    if (name == "unknot") return PDDiagram::unknot();
    if (name == "trefoil") return PDDiagram::trefoil();
    if (name == "figure_eight") return PDDiagram::figure_eight();
    if (name == "hopf") return PDDiagram::hopf();
    throw JobError(2, "unknown diagram name '" + name + "'");
  }
  if (!j.is_object() || !j.contains("pd"))
    throw JobError(2, "diagram must name a standard diagram or give a 'pd' code");
  PDDiagram d;
  for (const json& c : j["pd"]) {
    if (!c.is_array() || c.size() != 4)
      throw JobError(2, "pd entries must be 4-tuples");
    d.crossings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(),
                           c[3].get<int>()});
  }
  d.free_loops = static_cast<int>(get_ll_or(j, "free_loops", 0));
  d.validate();
  return d;
}

Word parse_word(const json& j) {
  std::vector<Letter> letters;
  for (const json& l : j) {
    if (!l.is_array() || l.size() != 2)
      throw JobError(2, "word letters must be [generator, exponent] pairs");
    letters.push_back(Letter{l[0].get<int>(), l[1].get<int>() < 0 ? -1 : 1});
  }
  return Word(std::move(letters));
}

CorrespondenceExpr parse_piece(const json& j) {
  std::string kind = j.value("kind", "");
  int genus = static_cast<int>(get_ll(j, "genus"));
  if (kind == "sign_flip") {
    std::vector<int> signs;
    for (const json& s : j.value("signs", json::array()))
      signs.push_back(s.get<int>());
    return CorrespondenceExpr::sign_flip(genus, std::move(signs));
  }
  if (kind == "boundary_rotation")
    return CorrespondenceExpr::boundary_rotation(genus, j.value("angle", 0.0));
  if (kind == "word_substitution") {
    std::vector<Word> images;
    for (const json& w : j.value("images", json::array()))
      images.push_back(parse_word(w));
    return CorrespondenceExpr::word_substitution(genus, std::move(images));
  }
  if (kind == "path_conjugation")
    return CorrespondenceExpr::path_conjugation(genus,
                                                parse_word(j.value("path", json::array())));
  if (kind == "two_handle")
    return CorrespondenceExpr::two_handle(
        genus, static_cast<int>(get_ll(j, "pair")),
        j.value("curve", "beta") == "alpha", static_cast<int>(get_ll_or(j, "eps", 1)));
  if (kind == "one_handle")
    return CorrespondenceExpr::one_handle(genus,
                                          static_cast<int>(get_ll_or(j, "eps", 1)));
  throw JobError(2, "unknown piece kind '" + kind + "'");
}

CobordismChain parse_chain(const json& j) {
  if (j.is_object() && j.contains("preset")) {
    std::string preset = j["preset"].get<std::string>();
    if (preset == "lens")
      return lens_chain(get_ll(j, "p"), get_ll(j, "q"),
                        static_cast<int>(get_ll_or(j, "c0", 0)),
                        static_cast<int>(get_ll_or(j, "c1", 0)));
    if (preset == "s2xs1")
      return s2xs1_chain(static_cast<int>(get_ll_or(j, "c", 0)));
    throw JobError(2, "unknown chain preset '" + preset + "'");
  }
  const json& pieces = j.is_array() ? j : j.value("pieces", json::array());
  CobordismChain chain;
  for (const json& p : pieces) chain.pieces.push_back(parse_piece(p));
  chain.validate();
  return chain;
}

CerfMove parse_move(const json& j) {
  static const std::map<std::string, CerfMoveKind> kinds = {
      {"diffeo", CerfMoveKind::DiffeoEquivalence},
      {"trivial_cylinder", CerfMoveKind::TrivialCylinderInsertion},
      {"birth_death", CerfMoveKind::BirthDeath},
      {"switch", CerfMoveKind::CriticalPointSwitch},
      {"class_slide", CerfMoveKind::ClassSlide},
  };
  auto it = kinds.find(j.value("kind", ""));
  if (it == kinds.end()) throw JobError(2, "unknown cerf move kind");
  CerfMove m;
  m.kind = it->second;
  m.position = static_cast<size_t>(get_ll_or(j, "position", 0));
  m.remove = j.value("remove", false);
  for (const json& s : j.value("slide", json::array()))
    m.slide.push_back(s.get<int>());
  return m;
}

struct Options {
  double tol = 1e-10;
  int restarts = 500;
  std::uint64_t seed = 17;
  int samples = 1000;
};

Options parse_options(const json& job) {
  Options o;
  if (job.contains("options")) {
    const json& j = job["options"];
    o.tol = j.value("tol", o.tol);
    o.restarts = static_cast<int>(get_ll_or(j, "restarts", o.restarts));
    o.seed = static_cast<std::uint64_t>(get_ll_or(j, "seed", 17));
    o.samples = static_cast<int>(get_ll_or(j, "samples", o.samples));
  }
  if (const char* env = std::getenv("HSIKIT_SEED"))
    o.seed = std::strtoull(env, nullptr, 10);
  return o;
}

json big_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

double rounded(double v, double scale = 1e9) {
  double r = std::round(v * scale) / scale;
  return r == 0 ? 0.0 : r;
}

std::string parity_of(const GradedAbelianGroup& g) {
  if (g.is_zero()) return "zero";
  bool even = false, odd = false;
  for (int d = 0; d < 8; ++d) {
    if (g.factors(d).empty()) continue;
    (d % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return "mixed";
  return even ? "even" : "odd";
}

json group_to_json(const GradedAbelianGroup& g) {
  json factors = json::object();
  for (int d = 0; d < 8; ++d)
    if (!g.factors(d).empty()) factors[std::to_string(d)] = g.factors(d);
  return json{{"factors", factors},
              {"degrees_exact", g.degrees_exact()},
              {"total_rank", g.total_rank()}};
}

const char* kind_str(RepKind k) {
  switch (k) {
    case RepKind::Central: return "central";
    case RepKind::Abelian: return "abelian";
    default: return "irreducible";
  }
}

const char* orbit_str(OrbitType t) {
  switch (t) {
    case OrbitType::Point: return "point";
    case OrbitType::Sphere: return "sphere";
    default: return "so3";
  }
}

json orbits_to_json(const std::vector<RepOrbit>& orbits) {
  json arr = json::array();
  for (const RepOrbit& o : orbits) {
    json sig = json::array();
    for (double s : o.signature) sig.push_back(rounded(s));
    arr.push_back(json{{"kind", kind_str(o.kind)},
                       {"orbit_type", orbit_str(o.orbit_type)},
                       {"residual", rounded(o.residual, 1e12)},
                       {"signature", sig}});
  }
  return arr;
}

json kind_histogram(const std::vector<RepOrbit>& orbits) {
  std::map<std::string, int> h;
  for (const RepOrbit& o : orbits) h[kind_str(o.kind)]++;
  return json(h);
}

json bounds_to_json(const RankBounds& b) {
  json j{{"lo", b.lo}, {"conditional", b.conditional}};
  if (b.hi >= 0)
    j["hi"] = b.hi;
  else
    j["hi"] = nullptr;
  return j;
}

json cmd_h1(const json& job) {
  H1Result r = h1(parse_manifold(job.at("manifold")));
  json torsion = json::array();
  for (const BigInt& t : r.torsion) torsion.push_back(big_to_json(t));
  return json{{"betti", r.betti}, {"torsion", torsion}, {"order", big_to_json(r.order())}};
}

json cmd_euler(const json& job) {
  EulerCheck ec = euler_check(parse_manifold(job.at("manifold")));
  return json{{"chi_abs", ec.chi_abs},
              {"h1_order", big_to_json(ec.h1_or_zero)},
              {"agree", ec.agree}};
}

json cmd_hsi(const json& job) {
  HSIResult r = hsi(parse_manifold(job.at("manifold")));
  json out{{"exact", r.exact}, {"method", r.method}, {"bounds", bounds_to_json(r.bounds)}};
  if (r.exact) {
    out["rank"] = r.rank;
    out["minimal"] = r.minimal_certified;
    out["parity"] = parity_of(r.group);
    out["group"] = group_to_json(r.group);
  } else {
    out["minimal"] = false;
  }
  return out;
}

json cmd_rank_bounds(const json& job) {
  if (job.contains("triad")) {
    const json& t = job["triad"];
    if (!t.is_array() || t.size() != 3)
      throw JobError(2, "triad must be [rank_beta, rank_gamma, chi_alpha]");
    RankBounds b = triad_rank_bounds(t[0].get<long long>(), t[1].get<long long>(),
                                     t[2].get<long long>());
    return bounds_to_json(b);
  }
  return bounds_to_json(hsi(parse_manifold(job.at("manifold"))).bounds);
}

json cmd_casson(const json& job) {
  ManifoldDesc d = parse_manifold(job.at("manifold"));
  const BrieskornDesc* b = std::get_if<BrieskornDesc>(&d.shape);
  if (!b) throw JobError(2, "casson needs a brieskorn description");
  BrieskornVariety v = enumerate_brieskorn(b->a1, b->a2, b->a3);
  return json{{"lambda", casson_brieskorn(b->a1, b->a2, b->a3)},
              {"irreducibles", v.irreducible_count()}};
}

json cmd_repvar(const json& job, const Options& opt) {
  ManifoldDesc d = parse_manifold(job.at("manifold"));
  TwistedRepProblem prob;
  json exact;
  if (const LensDesc* l = std::get_if<LensDesc>(&d.shape)) {
    int c0 = d.class_c.size() > 0 ? d.class_c[0] : 0;
    int c1 = d.class_c.size() > 1 ? d.class_c[1] : 0;
    prob = lens_problem(l->p, l->q, c0, c1);
    LensVariety v = enumerate_lens(l->p, l->q, c0, c1);
    exact = json{{"components", v.components.size()},
                 {"perturbed_count", v.perturbed_count}};
  } else if (const BrieskornDesc* b = std::get_if<BrieskornDesc>(&d.shape)) {
    prob = brieskorn_problem(b->a1, b->a2, b->a3);
    BrieskornVariety v = enumerate_brieskorn(b->a1, b->a2, b->a3);
    exact = json{{"orbits", v.orbits.size()},
                 {"irreducibles", v.irreducible_count()}};
  } else {
    throw JobError(2, "repvar supports lens and brieskorn descriptions");
  }
  std::vector<RepOrbit> orbits = solve_numeric(prob, opt.restarts, opt.tol, opt.seed);
  return json{{"count", orbits.size()},
              {"kinds", kind_histogram(orbits)},
              {"orbits", orbits_to_json(orbits)},
              {"exact", exact}};
}

json cmd_qa_check(const json& job) {
  PDDiagram d = parse_diagram(job.at("diagram"));
  auto cert = certify_quasi_alternating(d);
  if (!cert)
    throw JobError(3, "no quasi-alternating certificate found");
  return json{{"quasi_alternating", true},
              {"det", cert->det},
              {"nodes", cert->node_count()},
              {"verified", cert->verify()}};
}

json cmd_plumbing_check(const json& job) {
  ManifoldDesc d = parse_manifold(job.at("manifold"));
  auto cert = certify_minimal(d);
  if (!cert) throw JobError(3, "no minimality certificate found");
  return json{{"certified", true},
              {"rank", cert->rank},
              {"method", cert->method},
              {"triads", cert->triads.size()},
              {"verified", cert->verify()}};
}

json cmd_compose_check(const json& job, const Options& opt) {
  CobordismChain a = parse_chain(job.at("chain"));
  CobordismChain b = parse_chain(job.at("chain2"));
  ComposeReport rep = compose_check(a, b, opt.samples, opt.seed);
  return json{{"symbolic_equal", rep.symbolic_equal},
              {"samples", rep.samples_checked},
              {"disagreements", rep.disagreements},
              {"ok", rep.ok()}};
}

json cmd_cerf_check(const json& job, const Options& opt) {
  CobordismChain chain = parse_chain(job.at("chain"));
  CobordismChain moved = apply_cerf_move(chain, parse_move(job.at("move")));
  std::vector<RepOrbit> before =
      solve_numeric(generalized_intersections(chain), opt.restarts, opt.tol, opt.seed);
  std::vector<RepOrbit> after =
      solve_numeric(generalized_intersections(moved), opt.restarts, opt.tol, opt.seed);
  bool invariant = before.size() == after.size() &&
                   kind_histogram(before) == kind_histogram(after);
  return json{{"orbits_before", before.size()},
              {"orbits_after", after.size()},
              {"kinds_before", kind_histogram(before)},
              {"kinds_after", kind_histogram(after)},
              {"invariant", invariant}};
}

json cmd_intersections(const json& job, const Options& opt) {
  CobordismChain chain = parse_chain(job.at("chain"));
  TwistedRepProblem prob = generalized_intersections(chain);
  if (prob.contradictory())
    return json{{"count", 0}, {"contradictory", true}, {"orbits", json::array()},
                {"kinds", json::object()}};
  std::vector<RepOrbit> orbits = solve_numeric(prob, opt.restarts, opt.tol, opt.seed);
  return json{{"count", orbits.size()},
              {"contradictory", false},
              {"kinds", kind_histogram(orbits)},
              {"orbits", orbits_to_json(orbits)}};
}

}  // namespace

JobResult run_job_text(const std::string& job_json) {
  JobResult res;
  try {
    json job = json::parse(job_json);
    if (!job.is_object() || !job.contains("command"))
      throw JobError(2, "job must be an object with a 'command'");
    std::string command = job["command"].get<std::string>();
    Options opt = parse_options(job);
    json out;
    if (command == "h1") out = cmd_h1(job);
    else if (command == "euler") out = cmd_euler(job);
    else if (command == "hsi") out = cmd_hsi(job);
    else if (command == "rank-bounds") out = cmd_rank_bounds(job);
    else if (command == "casson") out = cmd_casson(job);
    else if (command == "repvar") out = cmd_repvar(job, opt);
    else if (command == "qa-check") out = cmd_qa_check(job);
    else if (command == "plumbing-check") out = cmd_plumbing_check(job);
    else if (command == "compose-check") out = cmd_compose_check(job, opt);
    else if (command == "cerf-check") out = cmd_cerf_check(job, opt);
    else if (command == "intersections") out = cmd_intersections(job, opt);
    else throw JobError(2, "unknown command '" + command + "'");
    out["command"] = command;
    res.code = 0;
    res.body = out.dump(2);
  } catch (const JobError& e) {
    res.code = e.code;
    res.body = json{{"error", e.what()}}.dump(2);
  } catch (const NoConvergence& e) {
    res.code = 3;
    res.body = json{{"error", e.what()}}.dump(2);
  } catch (const json::exception& e) {
    res.code = 2;
    res.body = json{{"error", e.what()}}.dump(2);
  } catch (const InternalError& e) {
    res.code = 4;
    res.body = json{{"error", e.what()}}.dump(2);
  } catch (const std::logic_error& e) {
    res.code = 2;
    res.body = json{{"error", e.what()}}.dump(2);
  } catch (const std::runtime_error& e) {
    res.code = 2;
    res.body = json{{"error", e.what()}}.dump(2);
  } catch (const std::exception& e) {
    res.code = 4;
    res.body = json{{"error", e.what()}}.dump(2);
  }
  return res;
}

}  // namespace hsikit

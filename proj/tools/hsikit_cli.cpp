#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hsikit.h"

using nlohmann::json;

namespace {

struct ManifoldFlags {
  std::vector<long long> lens, brieskorn, surgery;
  bool s2xs1 = false;
  std::vector<long long> weights;
  std::vector<std::string> edges;
  std::string manifold_json;
  std::vector<int> class_c;
};

void add_manifold_flags(CLI::App* cmd, ManifoldFlags& f) {
  cmd->add_option("--lens", f.lens, "lens space parameters p q")->expected(2);
  cmd->add_option("--brieskorn", f.brieskorn, "Brieskorn parameters a1 a2 a3")
      ->expected(3);
  cmd->add_option("--surgery", f.surgery, "torus knot surgery r s framing")
      ->expected(3);
  cmd->add_flag("--s2xs1", f.s2xs1, "the product of a sphere and a circle");
  cmd->add_option("--plumbing", f.weights, "plumbing vertex weights");
  cmd->add_option("--edges", f.edges, "plumbing edges as i-j pairs");
  cmd->add_option("--manifold-json", f.manifold_json,
                  "full manifold description as JSON");
  cmd->add_option("--class", f.class_c, "class c bits over the H1 basis");
}

json manifold_from_flags(const ManifoldFlags& f) {
  json m;
  if (!f.manifold_json.empty()) {
    m = json::parse(f.manifold_json);
  } else if (f.lens.size() == 2) {
    m = {{"type", "lens"}, {"p", f.lens[0]}, {"q", f.lens[1]}};
  } else if (f.brieskorn.size() == 3) {
    m = {{"type", "brieskorn"},
         {"a1", f.brieskorn[0]},
         {"a2", f.brieskorn[1]},
         {"a3", f.brieskorn[2]}};
  } else if (f.surgery.size() == 3) {
    m = {{"type", "surgery_torus_knot"},
         {"r", f.surgery[0]},
         {"s", f.surgery[1]},
         {"framing", f.surgery[2]}};
  } else if (!f.weights.empty()) {
    json edges = json::array();
    for (const std::string& e : f.edges) {
      auto dash = e.find('-');
      if (dash == std::string::npos)
        throw CLI::ValidationError("--edges", "edges look like 0-1");
      edges.push_back({std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1))});
    }
    m = {{"type", "plumbing"}, {"weights", f.weights}, {"edges", edges}};
  } else if (f.s2xs1) {
    m = {{"type", "s2xs1"}};
  } else {
    throw CLI::ValidationError("manifold", "no manifold description given");
  }
  if (!f.class_c.empty()) m["class_c"] = f.class_c;
  return m;
}

// chain shorthand: "lens:p:q[:c0:c1]", "s2xs1[:c]", or inline JSON
json parse_chain_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
  std::vector<std::string> parts;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty()) throw CLI::ValidationError("chain", "empty chain description");
  if (parts[0] == "lens" && parts.size() >= 3) {
    json c{{"preset", "lens"},
           {"p", std::stoll(parts[1])},
           {"q", std::stoll(parts[2])}};
    if (parts.size() > 3) c["c0"] = std::stoi(parts[3]);
    if (parts.size() > 4) c["c1"] = std::stoi(parts[4]);
    return c;
  }
  if (parts[0] == "s2xs1") {
    json c{{"preset", "s2xs1"}};
    if (parts.size() > 1) c["c"] = std::stoi(parts[1]);
    return c;
  }
  throw CLI::ValidationError("chain", "unknown chain shorthand '" + arg + "'");
}

int run_job(const json& job) {
  char* out = nullptr;
  hsk_status status = hsk_run_json(job.dump().c_str(), &out);
  if (out) {
    if (status == HSK_OK)
      std::cout << out << "\n";
    else
      std::cerr << out << "\n";
    hsk_string_free(out);
  }
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsikit: invariants of 3-manifolds from Heegaard and surgery "
               "descriptions"};
  app.require_subcommand(1);

  double tol = 1e-10;
  int restarts = 500;
  long long seed = 17;
  int samples = 1000;
  app.add_option("--tol", tol, "numeric solver tolerance")->capture_default_str();
  app.add_option("--restarts", restarts, "solver restarts")->capture_default_str();
  app.add_option("--seed", seed, "random seed (HSIKIT_SEED overrides)")
      ->capture_default_str();
  app.add_option("--samples", samples, "sampling check size")->capture_default_str();

  struct Sub {
    CLI::App* cmd;
    ManifoldFlags flags;
  };
  std::vector<std::string> manifold_cmds = {"h1",     "euler",          "hsi",
                                            "rank-bounds", "casson", "repvar",
                                            "plumbing-check"};
  std::map<std::string, Sub> subs;
  subs["h1"].cmd = app.add_subcommand("h1", "first homology of a description");
  subs["euler"].cmd =
      app.add_subcommand("euler", "Euler characteristic law check");
  subs["hsi"].cmd = app.add_subcommand("hsi", "graded group, rank and minimality");
  subs["rank-bounds"].cmd =
      app.add_subcommand("rank-bounds", "rank bounds from surgery triangles");
  subs["casson"].cmd =
      app.add_subcommand("casson", "Casson invariant of a Brieskorn sphere");
  subs["repvar"].cmd = app.add_subcommand(
      "repvar", "twisted representation variety, numeric and exact");
  subs["plumbing-check"].cmd =
      app.add_subcommand("plumbing-check", "minimality certificate search");
  for (const std::string& name : manifold_cmds)
    add_manifold_flags(subs[name].cmd, subs[name].flags);

  std::vector<long long> triad;
  subs["rank-bounds"].cmd
      ->add_option("--triad", triad, "rank_beta rank_gamma chi_alpha")
      ->expected(3);

  CLI::App* qa = app.add_subcommand("qa-check", "quasi-alternating certificate");
  std::string diagram_name, pd_json;
  qa->add_option("--diagram", diagram_name,
                 "unknot, hopf, trefoil or figure_eight");
  qa->add_option("--pd", pd_json, "PD code as a JSON list of 4-tuples");

  CLI::App* compose =
      app.add_subcommand("compose-check", "composition coherence of two chains");
  std::string chain_arg, chain2_arg;
  compose->add_option("--chain", chain_arg, "first chain (JSON or lens:p:q)")
      ->required();
  compose->add_option("--chain2", chain2_arg, "second chain")->required();

  CLI::App* cerf = app.add_subcommand("cerf-check", "Cerf move invariance check");
  std::string cerf_chain, move_kind;
  long long move_position = 0;
  bool move_remove = false;
  std::vector<int> move_slide;
  cerf->add_option("--chain", cerf_chain, "chain (JSON or lens:p:q)")->required();
  cerf->add_option("--move", move_kind,
                   "diffeo, trivial_cylinder, birth_death, switch, class_slide")
      ->required();
  cerf->add_option("--position", move_position, "piece index the move acts at");
  cerf->add_flag("--remove", move_remove, "apply the removing direction");
  cerf->add_option("--slide", move_slide, "class slide sign vector");

  CLI::App* inter =
      app.add_subcommand("intersections", "generalized intersection points");
  std::string inter_chain;
  inter->add_option("--chain", inter_chain, "chain (JSON or lens:p:q)")->required();

  std::string job_file;
  CLI::App* raw = app.add_subcommand("job", "run a raw JSON job document");
  raw->add_option("file", job_file, "path to the job file, or - for stdin")
      ->required();

  CLI11_PARSE(app, argc, argv);

  json job;
  job["options"] = {{"tol", tol}, {"restarts", restarts}, {"seed", seed},
                    {"samples", samples}};
  try {
    if (raw->parsed()) {
      std::string text;
      if (job_file == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(job_file);
        if (!in) {
          std::cerr << "cannot open " << job_file << "\n";
          return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      job = json::parse(text);
      if (!job.contains("options"))
        job["options"] = {{"tol", tol}, {"restarts", restarts}, {"seed", seed},
                          {"samples", samples}};
    } else if (qa->parsed()) {
      job["command"] = "qa-check";
      if (!pd_json.empty())
        job["diagram"] = {{"pd", json::parse(pd_json)}};
      else if (!diagram_name.empty())
        job["diagram"] = diagram_name;
      else
        throw CLI::ValidationError("qa-check", "need --diagram or --pd");
    } else if (compose->parsed()) {
      job["command"] = "compose-check";
      job["chain"] = parse_chain_arg(chain_arg);
      job["chain2"] = parse_chain_arg(chain2_arg);
    } else if (cerf->parsed()) {
      job["command"] = "cerf-check";
      job["chain"] = parse_chain_arg(cerf_chain);
      json move{{"kind", move_kind}, {"position", move_position},
                {"remove", move_remove}};
      if (!move_slide.empty()) move["slide"] = move_slide;
      job["move"] = move;
    } else if (inter->parsed()) {
      job["command"] = "intersections";
      job["chain"] = parse_chain_arg(inter_chain);
    } else {
      for (const std::string& name : manifold_cmds) {
        if (!subs[name].cmd->parsed()) continue;
        job["command"] = name;
        if (name == "rank-bounds" && triad.size() == 3)
          job["triad"] = triad;
        else
          job["manifold"] = manifold_from_flags(subs[name].flags);
        break;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  return run_job(job);
}

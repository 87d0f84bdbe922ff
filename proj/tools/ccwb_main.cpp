#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccwb/ccsolve.hpp"
#include "ccwb/enumerate.hpp"
#include "ccwb/json_io.hpp"

using namespace ccwb;

namespace {

struct RunContext {
  std::string command;
  std::string inputs;  // concatenated canonical input bytes
  Json outcome;
  Json certificate;
  int exit_code = 0;
  long seed = 0;
  std::string format = "json";
  std::string output_path;
};

Json load_json(RunContext& ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  Json j = Json::parse(bytes);  // throws with byte location on failure
  ctx.inputs += canonical(j);
  return j;
}

void write_atomically(const std::string& path, const std::string& bytes) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << bytes;
  }
  std::filesystem::rename(tmp, path);
}

void emit(RunContext& ctx, double wall_ms) {
  Json report{{"command", ctx.command},
              {"inputs_digest", digest(ctx.inputs)},
              {"outcome", ctx.outcome},
              {"certificate", ctx.certificate},
              {"wall_ms", wall_ms},
              {"seed", ctx.seed}};
  std::string bytes = canonical(report);
  if (!ctx.output_path.empty()) write_atomically(ctx.output_path, bytes);
  if (ctx.format == "text") {
    std::cout << "command:  " << ctx.command << "\n"
              << "digest:   " << digest(ctx.inputs) << "\n"
              << "outcome:  " << ctx.outcome.dump(2) << "\n";
    if (!ctx.certificate.is_null())
      std::cout << "certificate: " << ctx.certificate.dump(2) << "\n";
  } else if (ctx.output_path.empty()) {
    std::cout << bytes << "\n";
  }
}

Word parse_word3(const std::string& s) { return Word::parse(s, 3); }

RightTuple parse_tuple(const std::string& s, int arity) {
  std::vector<Word> ws;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) ws.push_back(Word::parse(cur, 2));
  if (ws.empty())
    for (int i = 0; i < arity; ++i) ws.push_back(Word(2));
  if (static_cast<int>(ws.size()) != arity)
    throw std::invalid_argument("tuple arity mismatch: expected " + std::to_string(arity));
  return RightTuple(ws);
}

Json oracle_check(const CrossTree& t, const Solution& sol) {
  auto brute = brute_solution(t);
  if (!brute.has_value()) return Json{{"oracle_consistent", false}};
  std::size_t solve_score = 0, brute_score = 0;
  for (std::size_t s = 0; s < sol.agreement.size(); ++s) {
    if (!sol.agreement[s].empty()) ++solve_score;
    if (!brute->agreement[s].empty()) ++brute_score;
  }
  bool consistent = check_solution(t, sol).empty() && brute_score >= solve_score;
  return Json{{"oracle_consistent", consistent},
              {"oracle", {{"pair", Json::array({to_json(brute->sol0), to_json(brute->sol1)})},
                          {"score", brute_score}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-tree combinatorics workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  RunContext ctx;
  std::string input_path, forbidden_path, rho_arg, sigma_arg, prefix_arg;
  std::vector<std::string> table_paths;
  int height = 1, arity = 1, target = 0, level = 0, chain_b = 1, chain_s = 0;
  int samples = 0;
  long cap = 1000000;
  long budget = 0;
  bool oracle = false;
  std::vector<int> sweep;

  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--format", ctx.format, "json|text")->capture_default_str();
  app.add_option("--output", ctx.output_path, "write the report to this file atomically");
  app.add_option("--budget", budget, "depth budget for stabilization sweeps");

  auto* tree = app.add_subcommand("tree", "cross-tree operations");
  tree->require_subcommand(1);
  tree->fallthrough();
  auto* t_validate = tree->add_subcommand("validate", "check the cross-tree invariants");
  t_validate->fallthrough();
  t_validate->add_option("--input", input_path)->required();
  auto* t_prune = tree->add_subcommand("prune", "right-prune the tree");
  t_prune->fallthrough();
  t_prune->add_option("--input", input_path)->required();
  auto* t_slice = tree->add_subcommand("slice", "the tree T[rho]");
  t_slice->fallthrough();
  t_slice->add_option("--input", input_path)->required();
  t_slice->add_option("--rho", rho_arg)->required();
  auto* t_leftfull = tree->add_subcommand("leftfull", "decide left-fullness below a stem");
  t_leftfull->fallthrough();
  t_leftfull->add_option("--input", input_path)->required();
  t_leftfull->add_option("--rho", rho_arg);
  t_leftfull->add_option("--sigma", sigma_arg);
  auto* t_extend = tree->add_subcommand("extend", "left-full stem extension");
  t_extend->fallthrough();
  t_extend->add_option("--input", input_path)->required();
  t_extend->add_option("--rho", rho_arg);
  t_extend->add_option("--sigma", sigma_arg);
  t_extend->add_option("--n", target)->required();
  auto* t_from = tree->add_subcommand("from-forbidden", "build a tree from a forbidden set");
  t_from->fallthrough();
  t_from->add_option("--forbidden", forbidden_path)->required();
  t_from->add_option("--height", height)->required();
  t_from->add_option("--r", arity)->required();

  auto* solve_cmd = app.add_subcommand("solve", "run the descending-condition solver");
  solve_cmd->fallthrough();
  solve_cmd->add_option("--input", input_path);
  solve_cmd->add_flag("--oracle", oracle, "cross-check against the exhaustive oracle");
  solve_cmd->add_option("--sweep", sweep, "height and arity of a sweep")->expected(2);
  solve_cmd->add_option("--samples", samples, "seeded sample count for large sweeps");

  auto* gamma = app.add_subcommand("gamma", "hierarchy and approximation operations");
  gamma->require_subcommand(1);
  gamma->fallthrough();
  auto* g_interp = gamma->add_subcommand("interpret", "interpretation of an element");
  g_interp->fallthrough();
  g_interp->add_option("--input", input_path)->required();
  auto* g_validate = gamma->add_subcommand("validate-path", "check the path invariants");
  g_validate->fallthrough();
  g_validate->add_option("--input", input_path)->required();
  auto* g_var = gamma->add_subcommand("variations", "decide the one-step variation relation");
  g_var->fallthrough();
  g_var->add_option("--input", input_path)->required();
  auto* g_chain = gamma->add_subcommand("longest-chain", "explore a bounded fragment");
  g_chain->fallthrough();
  g_chain->add_option("--m", level)->required();
  g_chain->add_option("--B", chain_b)->required();
  g_chain->add_option("--S", chain_s)->required();
  g_chain->add_option("--cap", cap);
  auto* g_diag = gamma->add_subcommand("diagonalize", "build a compatible coloring prefix");
  g_diag->fallthrough();
  g_diag->add_option("--tables", table_paths)->required()->expected(-1);
  auto* g_norm = gamma->add_subcommand("normalize", "totalize a step stream");
  g_norm->fallthrough();
  g_norm->add_option("--input", input_path)->required();
  g_norm->add_option("--m", level)->required();
  auto* g_hyp = gamma->add_subcommand("hyperimmune", "find a realized row of an array");
  g_hyp->fallthrough();
  g_hyp->add_option("--input", input_path)->required();
  g_hyp->add_option("--prefix", prefix_arg)->required();

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  try {
    if (t_validate->parsed()) {
      ctx.command = "tree validate";
      CrossTree t = crosstree_from_json(load_json(ctx, input_path));
      auto rep = validate(t);
      ctx.outcome = Json{{"valid", rep.ok()}, {"violations", rep.violations}};
      ctx.exit_code = rep.ok() ? 0 : 1;
    } else if (t_prune->parsed()) {
      ctx.command = "tree prune";
      CrossTree t = crosstree_from_json(load_json(ctx, input_path));
      ctx.outcome = to_json(right_prune(t));
    } else if (t_slice->parsed()) {
      ctx.command = "tree slice";
      CrossTree t = crosstree_from_json(load_json(ctx, input_path));
      Json arr = Json::array();
      for (const RightTuple& s : t.slice(parse_word3(rho_arg))) arr.push_back(to_json(s));
      ctx.outcome = Json{{"slice", arr}};
    } else if (t_leftfull->parsed()) {
      ctx.command = "tree leftfull";
      CrossTree t = crosstree_from_json(load_json(ctx, input_path));
      bool yes = leftfull(t, parse_word3(rho_arg), parse_tuple(sigma_arg, t.arity()));
      ctx.outcome = Json{{"leftfull", yes}};
      ctx.exit_code = yes ? 0 : 1;
    } else if (t_extend->parsed()) {
      ctx.command = "tree extend";
      CrossTree t = crosstree_from_json(load_json(ctx, input_path));
      auto [rho, sigma] =
          leftfull_extend(t, parse_word3(rho_arg), parse_tuple(sigma_arg, t.arity()), target);
      ctx.outcome = Json{{"rho", rho.str()}, {"sigma", to_json(sigma)}};
      ctx.certificate = Json{{"leftfull", leftfull(t, rho, sigma)}};
    } else if (t_from->parsed()) {
      ctx.command = "tree from-forbidden";
      ForbiddenSet w = forbidden_from_json(load_json(ctx, forbidden_path));
      ctx.outcome = to_json(from_forbidden(w, height, arity));
    } else if (solve_cmd->parsed()) {
      ctx.command = "solve";
      if (!sweep.empty()) {
        int sweep_height = sweep[0], sweep_arity = sweep[1];
        std::vector<CrossTree> trees;
        bool exhaustive = sweep_height == 1 && samples == 0;
        if (exhaustive) {
          trees = all_leftfull_trees_h1(sweep_arity);
        } else if (samples > 0) {
          Rng rng(static_cast<std::uint64_t>(ctx.seed));
          for (int i = 0; i < samples; ++i)
            trees.push_back(random_leftfull_tree(rng, sweep_height, sweep_arity));
        } else {
          throw std::invalid_argument(
              "sweep at height > 1 is not exhaustively enumerable; pass --samples");
        }
        std::size_t exclusions = 0, with_agreement = 0, solved = 0;
        for (const CrossTree& t : trees) {
          if (!leftfull_at(t, Word(3), RightTuple::empty_tuple(t.arity()))) continue;
          Solution sol = solve(t);
          ++solved;
          if (!sol.excluded.empty()) ++exclusions;
          bool all_agree = true;
          for (int s = 0; s < t.arity(); ++s)
            if (sol.excluded.count(s) == 0 && sol.agreement[s].empty()) all_agree = false;
          if (all_agree) ++with_agreement;
        }
        ctx.outcome = Json{{"trees", solved},
                           {"exhaustive", exhaustive},
                           {"exclusions", exclusions},
                           {"agreement_everywhere", with_agreement == solved}};
      } else {
        if (input_path.empty()) throw std::invalid_argument("solve: --input required");
        CrossTree t = crosstree_from_json(load_json(ctx, input_path));
        Solution sol = solve(t);
        ctx.outcome = to_json(sol);
        if (oracle) ctx.certificate = oracle_check(t, sol);
      }
    } else if (g_interp->parsed()) {
      ctx.command = "gamma interpret";
      GammaElem g = gamma_from_json(load_json(ctx, input_path));
      Json arr = Json::array();
      for (const Gamma0& f : interpret(g)) arr.push_back(to_json(f));
      ctx.outcome = Json{{"interpretation", arr}};
    } else if (g_validate->parsed()) {
      ctx.command = "gamma validate-path";
      GammaElem g = gamma_from_json(load_json(ctx, input_path));
      auto rep = validate_path(g);
      ctx.outcome = Json{{"valid", rep.ok()}, {"violations", rep.violations}};
      ctx.exit_code = rep.ok() ? 0 : 1;
    } else if (g_var->parsed()) {
      ctx.command = "gamma variations";
      Json j = load_json(ctx, input_path);
      auto parse_tree = [](const Json& tj) {
        std::set<std::vector<int>> nodes;
        for (const auto& n : tj) nodes.insert(n.get<std::vector<int>>());
        return FinTree(std::move(nodes));
      };
      bool yes = is_one_step_variation(parse_tree(j.at("t0")), parse_tree(j.at("t1")));
      ctx.outcome = Json{{"one_step_variation", yes}};
      ctx.exit_code = yes ? 0 : 1;
    } else if (g_chain->parsed()) {
      ctx.command = "gamma longest-chain";
      ChainResult res = longest_chain(level, chain_b, chain_s, cap);
      Json witness = Json::array();
      for (const GammaElem& g : res.witness) witness.push_back(to_json(g));
      ctx.outcome = Json{{"length", res.length}, {"witness", witness}};
    } else if (g_diag->parsed()) {
      ctx.command = "gamma diagonalize";
      std::vector<ApproxTable> tables;
      for (const std::string& p : table_paths) tables.push_back(table_from_json(load_json(ctx, p)));
      DiagResult res = diagonalize(tables);
      ctx.outcome = to_json(res);
      bool verified = true;
      for (const DiagEntry& e : res.entries)
        if (!compatible(res.prefix, limit(tables[e.table_index], e.row))) verified = false;
      ctx.certificate = Json{{"verified", verified}};
      if (!verified) ctx.exit_code = 1;
    } else if (g_norm->parsed()) {
      ctx.command = "gamma normalize";
      StepStream s = stream_from_json(load_json(ctx, input_path));
      ApproxTable t = normalize(s, level);
      ctx.outcome = to_json(t);
      ctx.certificate = Json{{"valid", validate_table(t).ok()}};
    } else if (g_hyp->parsed()) {
      ctx.command = "gamma hyperimmune";
      DisjointArray arr = array_from_json(load_json(ctx, input_path));
      auto row = hyperimmune_witness(parse_word3(prefix_arg), arr);
      if (row.has_value()) {
        ctx.outcome = Json{{"row", *row}};
      } else {
        ctx.outcome = Json{{"row", nullptr}, {"reason", "none within prefix"}};
        ctx.exit_code = 1;
      }
    }
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  emit(ctx, wall_ms);
  return ctx.exit_code;
}

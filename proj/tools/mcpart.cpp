#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcp/bounds.hpp"
#include "mcp/io.hpp"
#include "mcp/preprocess.hpp"
#include "mcp/solver.hpp"

namespace {

using nlohmann::json;

struct Options {
  bool preprocess = true;
  bool cuts = false;
  long long node_limit = 1'000'000;
  double time_limit = 600.0;
  std::string format = "text";
  std::string svg_path;
  std::string out_path;
  int jobs = 1;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct PipelineResult {
  std::string name;
  int n = 0;
  std::size_t faces_total = 0, faces_pruned = 0;
  bool pruned = true;
  int euler = 0;
  double lp_root = 0.0;
  int lp_ceil = 0;
  mcp::SolveResult ip;
  double gap = 0.0;
  bool valid = false;
  double t_faces = 0.0, t_solve = 0.0, t_total = 0.0;
  mcp::Partition partition;
};

// enumerate -> preprocess -> bounds -> model (+optional cut rounds) -> ip
PipelineResult run_solve(const mcp::Instance& inst, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  PipelineResult out;
  out.name = inst.name;
  out.n = inst.n();
  out.pruned = opt.preprocess;

  mcp::FaceCatalog cat = mcp::enumerate_faces(inst);
  out.faces_total = cat.size();
  if (opt.preprocess) cat = mcp::prune_dominated(cat, inst);
  out.faces_pruned = cat.size();
  out.t_faces = seconds_since(t0);

  const mcp::DegreeBounds db = mcp::degree_lower_bounds(inst);
  out.euler = mcp::euler_bound(inst, db);
  const std::vector<int> mandatory = mcp::find_mandatory(cat, inst);
  mcp::Model model = mcp::build_face_model(cat, inst, db, mandatory);

  if (opt.cuts) {
    for (int round = 0; round < 10; ++round) {
      const mcp::LPResult lp = mcp::solve_lp(model);
      if (lp.status != mcp::LpStatus::Optimal) break;
      std::vector<mcp::Row> cuts = mcp::separate_clique(cat, inst, lp.solution);
      const std::vector<mcp::Row> odd = mcp::separate_odd_cycle(cat, inst, lp.solution);
      cuts.insert(cuts.end(), odd.begin(), odd.end());
      if (cuts.empty()) break;
      for (mcp::Row& row : cuts) model.rows.push_back(std::move(row));
    }
  }

  const mcp::Partition greedy = mcp::greedy_partition(inst);
  mcp::WarmStart warm;
  warm.upper_bound = static_cast<int>(greedy.faces.size());
  bool mapped = true;
  for (const mcp::Face& f : greedy.faces) {
    const auto it = std::lower_bound(cat.faces.begin(), cat.faces.end(), f);
    if (it == cat.faces.end() || !(*it == f)) {
      mapped = false;
      break;
    }
    warm.chosen.push_back(static_cast<int>(it - cat.faces.begin()));
  }
  if (!mapped) warm.chosen.clear();

  mcp::SolveLimits limits;
  limits.node_limit = opt.node_limit;
  limits.time_limit_s = opt.time_limit;
  limits.bound_floor = std::max(1, out.euler);
  const auto t1 = std::chrono::steady_clock::now();
  out.ip = mcp::solve_ip(model, limits, &warm);
  out.t_solve = seconds_since(t1);

  out.lp_root = out.ip.lp_root_value;
  out.lp_ceil = static_cast<int>(std::ceil(out.lp_root - 1e-6));
  if (out.ip.status == mcp::SolveStatus::Optimal) {
    out.gap = mcp::lp_gap_percent(out.ip.objective, out.lp_root);
    for (int v : out.ip.chosen) out.partition.faces.push_back(cat.faces[v]);
    out.partition.source = "mcpart solve";
    out.valid = mcp::verify_partition(inst, out.partition).valid;
  }
  out.t_total = seconds_since(t0);
  return out;
}

json result_json(const PipelineResult& r) {
  return json{{"name", r.name},
              {"n", r.n},
              {"faces", r.faces_total},
              {"faces_pp", r.faces_pruned},
              {"preprocessed", r.pruned},
              {"euler", r.euler},
              {"lp", r.lp_root},
              {"lp_ceil", r.lp_ceil},
              {"objective", r.ip.objective},
              {"gap_percent", r.gap},
              {"nodes", r.ip.nodes_explored},
              {"status", mcp::to_string(r.ip.status)},
              {"valid", r.valid},
              {"t_faces_s", r.t_faces},
              {"t_solve_s", r.t_solve},
              {"t_total_s", r.t_total}};
}

void print_solve_header() {
  std::printf("%-24s %5s %8s %8s %6s %6s %6s %7s %7s %8s %7s\n", "name", "n", "|F|", "|Fpp|",
              "euler", "lp", "z*", "gap%", "nodes", "cpu(s)", "status");
}

void print_solve_row(const PipelineResult& r) {
  std::printf("%-24s %5d %8zu %8s %6d %6d %6d %7.2f %7lld %8.2f %7s\n", r.name.c_str(), r.n,
              r.faces_total, r.pruned ? std::to_string(r.faces_pruned).c_str() : "-", r.euler,
              r.lp_ceil, r.ip.objective, r.gap, r.ip.nodes_explored, r.t_total,
              mcp::to_string(r.ip.status));
}

int exit_code_of(const mcp::Error& e) {
  switch (e.code()) {
    case mcp::ErrorCode::Parse: return 2;
    case mcp::ErrorCode::LimitHit: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcpart: exact minimum convex partition solver"};
  app.require_subcommand(1);
  Options opt;

  std::vector<std::string> inputs;
  std::string sol_path, out_path;
  int gen_n = 0;
  long long gen_seed = 0;
  mcp::Coord gen_grid = 1'000'000;

  auto add_common = [&](CLI::App* cmd, bool solver_flags) {
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (solver_flags) {
      cmd->add_flag("!--no-preprocess", opt.preprocess, "skip face preprocessing");
      cmd->add_option("--node-limit", opt.node_limit, "branch and bound node limit");
      cmd->add_option("--time-limit", opt.time_limit, "solver time limit in seconds");
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "solve instances to optimality");
  solve->add_option("instance", inputs, "instance files")->required();
  add_common(solve, true);
  solve->add_flag("--cuts", opt.cuts, "add clique and odd-cycle cutting planes at the root");
  solve->add_option("--svg", opt.svg_path, "render the optimal partition to this svg file");
  solve->add_option("-o,--out", opt.out_path, "write the solution file here");
  solve->add_option("--jobs", opt.jobs, "solve instances concurrently")->check(CLI::PositiveNumber);

  CLI::App* bound = app.add_subcommand("bound", "LP relaxation and Euler lower bounds");
  bound->add_option("instance", inputs, "instance files")->required();
  add_common(bound, true);

  CLI::App* enumerate = app.add_subcommand("enumerate", "face counts before/after preprocessing");
  enumerate->add_option("instance", inputs, "instance files")->required();
  add_common(enumerate, false);

  CLI::App* verify = app.add_subcommand("verify", "check a solution file against an instance");
  verify->add_option("instance", inputs, "instance file")->required()->expected(1);
  verify->add_option("solution", sol_path, "solution file")->required();
  add_common(verify, false);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground-truth optimum (small n)");
  oracle->add_option("instance", inputs, "instance file")->required()->expected(1);
  add_common(oracle, true);

  CLI::App* gen = app.add_subcommand("gen", "generate a uniform random instance");
  gen->add_option("n", gen_n, "number of points")->required();
  gen->add_option("seed", gen_seed, "random seed")->required();
  gen->add_option("--grid", gen_grid, "coordinate grid upper bound");
  gen->add_option("-o,--out", out_path, "output file (stdout when omitted)");

  CLI::App* export_lp = app.add_subcommand("export-lp", "write the face model in LP format");
  export_lp->add_option("instance", inputs, "instance file")->required()->expected(1);
  export_lp->add_option("out", out_path, "output .lp path")->required();
  add_common(export_lp, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const mcp::Instance inst = mcp::generate_uniform(gen_n, gen_seed, gen_grid);
      if (out_path.empty())
        std::cout << mcp::instance_to_json(inst);
      else
        mcp::save_instance(inst, out_path);
      return 0;
    }

    if (solve->parsed()) {
      std::vector<PipelineResult> results(inputs.size());
      std::vector<std::string> errors(inputs.size());
      std::mutex next_mutex;
      std::size_t next = 0;
      auto worker = [&]() {
        for (;;) {
          std::size_t k;
          {
            std::lock_guard<std::mutex> lock(next_mutex);
            if (next >= inputs.size()) return;
            k = next++;
          }
          try {
            results[k] = run_solve(mcp::load_instance(inputs[k]), opt);
          } catch (const std::exception& e) {
            errors[k] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      const int jobs = std::min<std::size_t>(opt.jobs, inputs.size());
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      if (opt.format == "text") print_solve_header();
      json all = json::array();
      int rc = 0;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (!errors[k].empty()) {
          std::fprintf(stderr, "error: %s: %s\n", inputs[k].c_str(), errors[k].c_str());
          rc = std::max(rc, 1);
          continue;
        }
        const PipelineResult& r = results[k];
        if (opt.format == "text")
          print_solve_row(r);
        else
          all.push_back(result_json(r));
        if (r.ip.status != mcp::SolveStatus::Optimal)
          rc = std::max(rc, 3);
        else if (!r.valid)
          rc = std::max(rc, 1);
      }
      if (opt.format == "json") std::cout << all.dump(2) << "\n";
      if (inputs.size() == 1 && errors[0].empty() &&
          results[0].ip.status == mcp::SolveStatus::Optimal) {
        const mcp::Instance inst = mcp::load_instance(inputs[0]);
        if (!opt.svg_path.empty()) mcp::render_svg(inst, results[0].partition, opt.svg_path);
        if (!opt.out_path.empty())
          mcp::save_solution(opt.out_path, inst, results[0].partition, results[0].ip.objective);
      }
      return rc;
    }

    if (bound->parsed() || enumerate->parsed()) {
      const bool lp_too = bound->parsed();
      if (opt.format == "text") {
        if (lp_too)
          std::printf("%-24s %5s %8s %8s %6s %6s %6s %8s\n", "name", "n", "|F|", "|Fpp|", "%RF",
                      "euler", "lp", "cpu(s)");
        else
          std::printf("%-24s %5s %8s %8s %6s %8s\n", "name", "n", "|F|", "|Fpp|", "%RF", "cpu(s)");
      }
      json all = json::array();
      for (const std::string& path : inputs) {
        const auto t0 = std::chrono::steady_clock::now();
        const mcp::Instance inst = mcp::load_instance(path);
        mcp::FaceCatalog cat = mcp::enumerate_faces(inst);
        const std::size_t total = cat.size();
        if (opt.preprocess) cat = mcp::prune_dominated(cat, inst);
        const double rf = total ? 100.0 * (1.0 - double(cat.size()) / double(total)) : 0.0;
        int euler = 0, lp_ceil = 0;
        double lp_value = 0.0;
        if (lp_too) {
          const mcp::DegreeBounds db = mcp::degree_lower_bounds(inst);
          euler = mcp::euler_bound(inst, db);
          const mcp::Model model =
              mcp::build_face_model(cat, inst, db, mcp::find_mandatory(cat, inst));
          const mcp::LPResult lp = mcp::solve_lp(model);
          if (lp.status != mcp::LpStatus::Optimal)
            throw mcp::Error(mcp::ErrorCode::Infeasible, path + ": relaxation is infeasible");
          lp_value = lp.value;
          lp_ceil = static_cast<int>(std::ceil(lp.value - 1e-6));
        }
        const double cpu = seconds_since(t0);
        if (opt.format == "text") {
          if (lp_too)
            std::printf("%-24s %5d %8zu %8zu %6.1f %6d %6d %8.2f\n", inst.name.c_str(), inst.n(),
                        total, cat.size(), rf, euler, lp_ceil, cpu);
          else
            std::printf("%-24s %5d %8zu %8zu %6.1f %8.2f\n", inst.name.c_str(), inst.n(), total,
                        cat.size(), rf, cpu);
        } else {
          json j = {{"name", inst.name}, {"n", inst.n()},           {"faces", total},
                    {"faces_pp", cat.size()}, {"reduction_percent", rf}, {"t_total_s", cpu}};
          if (lp_too) {
            j["euler"] = euler;
            j["lp"] = lp_value;
            j["lp_ceil"] = lp_ceil;
          }
          all.push_back(std::move(j));
        }
      }
      if (opt.format == "json") std::cout << all.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const mcp::Instance inst = mcp::load_instance(inputs[0]);
      const mcp::Partition p = mcp::load_solution(sol_path, inst);
      const mcp::Verdict verdict = mcp::verify_partition(inst, p);
      if (opt.format == "json") {
        json v = json::array();
        for (const auto& viol : verdict.violations)
          v.push_back({{"code", mcp::to_string(viol.code)}, {"detail", viol.detail}});
        std::cout << json{{"valid", verdict.valid}, {"faces", p.faces.size()}, {"violations", v}}
                         .dump(2)
                  << "\n";
      } else {
        std::printf("%s: %s (%zu faces)\n", inst.name.c_str(),
                    verdict.valid ? "VALID" : "INVALID", p.faces.size());
        for (const auto& viol : verdict.violations)
          std::printf("  %s: %s\n", mcp::to_string(viol.code), viol.detail.c_str());
      }
      return verdict.valid ? 0 : 1;
    }

    if (oracle->parsed()) {
      const mcp::Instance inst = mcp::load_instance(inputs[0]);
      const mcp::FaceCatalog cat = mcp::enumerate_faces(inst);
      mcp::SolveLimits limits;
      limits.node_limit = opt.node_limit;
      limits.time_limit_s = opt.time_limit;
      const mcp::SolveResult res = mcp::exact_cover_oracle(inst, cat, limits, 20);
      if (opt.format == "json")
        std::cout << json{{"name", inst.name},
                          {"objective", res.objective},
                          {"status", mcp::to_string(res.status)},
                          {"nodes", res.nodes_explored}}
                         .dump(2)
                  << "\n";
      else
        std::printf("%s: optimum %d (%s, %lld placements)\n", inst.name.c_str(), res.objective,
                    mcp::to_string(res.status), res.nodes_explored);
      return res.status == mcp::SolveStatus::Optimal ? 0 : 3;
    }

    if (export_lp->parsed()) {
      const mcp::Instance inst = mcp::load_instance(inputs[0]);
      mcp::FaceCatalog cat = mcp::enumerate_faces(inst);
      if (opt.preprocess) cat = mcp::prune_dominated(cat, inst);
      const mcp::DegreeBounds db = mcp::degree_lower_bounds(inst);
      const mcp::Model model = mcp::build_face_model(cat, inst, db, mcp::find_mandatory(cat, inst));
      mcp::export_lp(model, out_path);
      return 0;
    }
  } catch (const mcp::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_of(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

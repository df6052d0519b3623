// Command-line front end: every subsystem behind one binary with
// machine-readable output. Exit codes: 0 success, 1 usage/input error,
// 2 internal bug (a proved inequality failed), 3 oracle-verified conjecture
// discovery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linext/atlas.hpp"
#include "linext/counting.hpp"
#include "linext/errors.hpp"
#include "linext/inequalities.hpp"
#include "linext/json_io.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/search.hpp"
#include "linext/sequences.hpp"
#include "linext/stats.hpp"
#include "linext/tableaux.hpp"
#include "linext/version.hpp"

using nlohmann::json;
using namespace linext;

namespace {

Poset load_poset(const std::string& text) {
  if (text.empty()) throw RangeError("missing poset");
  std::string body;
  if (text == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    body = ss.str();
  } else if (text.front() == '{') {
    body = text;
  } else {
    std::ifstream in(text);
    if (!in) throw RangeError("cannot open poset file: " + text);
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  return io::poset_from_json(json::parse(body));
}

Mask parse_mask(const std::string& csv) {
  Mask m = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) m |= Mask{1} << std::stoi(item);
  }
  return m;
}

std::vector<int> parse_perm(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::string> parse_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const json& result, const std::string& format, const std::string& command) {
  if (format == "json") {
    json envelope{{"result", result}, {"meta", {{"command", command}, {"version", kVersion}}}};
    std::cout << envelope.dump() << "\n";
  } else {
    std::cout << result.dump(2) << "\n";
  }
}

int default_workers() {
  if (const char* env = std::getenv("LINEXT_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

json verdict_counts_json(const std::map<std::string, ineq::SweepCounts>& counts) {
  json out = json::object();
  for (const auto& [id, c] : counts) {
    out[id] = {{"holds", c.holds},
               {"equality", c.equality},
               {"fails", c.fails},
               {"vacuous", c.vacuous}};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear-extension statistics, correlation-inequality checks, "
               "and counterexample search for finite posets"};
  app.require_subcommand(1);

  std::string format = "pretty";
  std::string poset_text, shape_text, shape2_text, sigma_text;
  std::string checks_csv, id, gen_name = "exhaustive", out_path;
  std::string a_csv, b_csv, c_csv;
  int n = 5, anchor = -1, value_k = -1, walk_samples = 100000;
  int px = -1, py = -1, pz = -1, pa = -1, pu = -1, pv = -1, pw = -1, pk = -1, pl = -1;
  int upto = 10, entringer_row = -1, fgh_row = -1, gen_orders = 2, gen_count = 100;
  int workers = default_workers();
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
  long budget_posets = -1;
  double budget_secs = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: pretty|json|csv");
  };

  auto* cmd_count = app.add_subcommand("count", "count linear extensions");
  cmd_count->add_option("--poset", poset_text, "poset JSON, file path, or - for stdin")->required();
  cmd_count->add_option("--anchor", anchor, "fix an element (with --value)");
  cmd_count->add_option("--value", value_k, "count only extensions giving the anchor this value");
  add_common(cmd_count);

  auto* cmd_stats = app.add_subcommand("stats", "value distributions and moments");
  cmd_stats->add_option("--poset", poset_text)->required();
  cmd_stats->add_option("--x", px, "element")->required();
  cmd_stats->add_option("--y", py, "second element (joint statistics)");
  add_common(cmd_stats);

  auto* cmd_check = app.add_subcommand("check", "evaluate one inequality instance");
  cmd_check->add_option("--id", id, "check id (see registry)")->required();
  cmd_check->add_option("--poset", poset_text);
  cmd_check->add_option("--sigma", sigma_text, "permutation (values), builds its poset");
  cmd_check->add_option("--x", px);
  cmd_check->add_option("--y", py);
  cmd_check->add_option("--z", pz);
  cmd_check->add_option("--a", pa);
  cmd_check->add_option("--u", pu);
  cmd_check->add_option("--v", pv);
  cmd_check->add_option("--w", pw);
  cmd_check->add_option("--A", a_csv, "subset, comma-separated elements");
  cmd_check->add_option("--B", b_csv);
  cmd_check->add_option("--C", c_csv);
  cmd_check->add_option("--k", pk);
  cmd_check->add_option("--l", pl);
  add_common(cmd_check);

  auto* cmd_sweep = app.add_subcommand("sweep", "run checks over all bindings of one poset");
  cmd_sweep->add_option("--poset", poset_text)->required();
  cmd_sweep->add_option("--checks", checks_csv, "comma-separated ids (default: all proved+conjectured)");
  cmd_sweep->add_option("--seed", seed, "seed for sampled subsets on large posets");
  add_common(cmd_sweep);

  auto* cmd_atlas = app.add_subcommand("atlas", "anchored count matrix and its spectrum test");
  cmd_atlas->add_option("--poset", poset_text)->required();
  cmd_atlas->add_option("--a", pa, "anchor element")->required();
  cmd_atlas->add_option("--k", pk, "anchor value, 2..n-1")->required();
  add_common(cmd_atlas);

  auto* cmd_syt = app.add_subcommand("syt", "standard Young tableau counts and shape checks");
  cmd_syt->add_option("--shape", shape_text, "partition or skew shape, e.g. 5,4,2/2,1")->required();
  cmd_syt->add_option("--shape2", shape2_text, "second shape for pair checks");
  cmd_syt->add_option("--check", id, "sweep one shape check (yt-*, fflp-corners, okounkov, fflp)");
  add_common(cmd_syt);

  auto* cmd_walk = app.add_subcommand("hookwalk", "sample corners by the hook walk");
  cmd_walk->add_option("--shape", shape_text)->required();
  cmd_walk->add_option("--samples", walk_samples);
  cmd_walk->add_option("--seed", seed);
  add_common(cmd_walk);

  auto* cmd_euler = app.add_subcommand("euler", "alternating-permutation counts and refinements");
  cmd_euler->add_option("--upto", upto);
  cmd_euler->add_option("--entringer", entringer_row, "also print this refinement row");
  cmd_euler->add_option("--fgh", fgh_row, "also print the subset-count polynomials (odd n)");
  add_common(cmd_euler);

  auto* cmd_hunt = app.add_subcommand("hunt", "counterexample search over generated posets");
  cmd_hunt->add_option("--checks", checks_csv)->required();
  cmd_hunt->add_option("--gen", gen_name, "exhaustive|kdim|bipartite|file");
  cmd_hunt->add_option("--n", n, "poset size");
  cmd_hunt->add_option("--k", gen_orders, "kdim: number of intersected orders");
  cmd_hunt->add_option("--edge-prob", edge_prob, "bipartite edge probability");
  cmd_hunt->add_option("--count", gen_count, "number of random posets");
  cmd_hunt->add_option("--file", poset_text, "file generator: JSONL of poset documents");
  cmd_hunt->add_option("--seed", seed);
  cmd_hunt->add_option("--budget-posets", budget_posets);
  cmd_hunt->add_option("--budget-secs", budget_secs);
  cmd_hunt->add_option("--out", out_path, "append oracle-verified discoveries as JSONL");
  cmd_hunt->add_option("--workers", workers);
  add_common(cmd_hunt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_count->parsed()) {
      Poset p = load_poset(poset_text);
      BigInt result;
      json r;
      if (anchor >= 0) {
        if (value_k < 0) throw RangeError("count: --anchor requires --value");
        result = counting::count_with_value(p, anchor, value_k);
        r = {{"count", result.to_string()}, {"anchor", anchor}, {"value", value_k}};
      } else {
        result = counting::count(p);
        r = {{"count", result.to_string()}};
      }
      if (format == "pretty") {
        std::cout << result.to_string() << "\n";
      } else {
        emit(r, format, "count");
      }
      return 0;
    }

    if (cmd_stats->parsed()) {
      Poset p = load_poset(poset_text);
      json r;
      auto dist = stats::value_distribution(p, px);
      json darr = json::array();
      for (const auto& q : dist) darr.push_back(q.to_string());
      r["element"] = px;
      r["distribution"] = darr;
      r["mean"] = stats::expectation(p, stats::Expr::value(px)).to_string();
      r["second_moment"] = stats::expectation(p, stats::Expr::value_square(px)).to_string();
      if (py >= 0) {
        r["y"] = py;
        r["covariance"] = stats::covariance(p, px, py).to_string();
        r["prob_x_less_y"] = stats::prob_less(p, px, py).to_string();
      }
      emit(r, format, "stats");
      return 0;
    }

    if (cmd_check->parsed()) {
      Poset p = sigma_text.empty() ? load_poset(poset_text)
                                   : Poset::from_permutation(parse_perm(sigma_text));
      ineq::CheckParams params;
      auto opt = [](int v) { return v >= 0 ? std::optional<int>(v) : std::nullopt; };
      params.x = opt(px);
      params.y = opt(py);
      params.z = opt(pz);
      params.a = opt(pa);
      params.u = opt(pu);
      params.v = opt(pv);
      params.w = opt(pw);
      params.k = opt(pk);
      params.l = opt(pl);
      if (!a_csv.empty()) params.A = parse_mask(a_csv);
      if (!b_csv.empty()) params.B = parse_mask(b_csv);
      if (!c_csv.empty()) params.C = parse_mask(c_csv);
      ineq::Verdict v = ineq::check(id, p, params);
      emit(v.to_json(), format, "check");
      if (v.status == ineq::Status::Fails) return ineq::check_info(id).conjecture ? 3 : 2;
      return 0;
    }

    if (cmd_sweep->parsed()) {
      Poset p = load_poset(poset_text);
      ineq::SweepLimits limits;
      limits.seed = seed;
      auto result = ineq::sweep(p, parse_ids(checks_csv), limits);
      json verdicts = json::array();
      for (const auto& v : result.exceptions) verdicts.push_back(v.to_json());
      json r{{"summary", verdict_counts_json(result.counts)}, {"non_holds", verdicts}};
      emit(r, format, "sweep");
      if (result.proved_failure) return 2;
      for (const auto& [cid, c] : result.counts) {
        if (c.fails > 0) return 3;
      }
      return 0;
    }

    if (cmd_atlas->parsed()) {
      Poset p = load_poset(poset_text);
      auto am = atlas::build_atlas(p, pa, pk);
      auto rep = atlas::check_hyp(am.m);
      json rows = json::array();
      for (int i = 0; i < am.d; ++i) {
        json row = json::array();
        for (int j = 0; j < am.d; ++j) row.push_back(am.m.at(i, j).to_string());
        rows.push_back(row);
      }
      json coeffs = json::array();
      for (const auto& c : rep.char_poly) coeffs.push_back(c.to_string());
      json r{{"n", am.n},
             {"anchor", am.anchor},
             {"k", am.k},
             {"d", am.d},
             {"matrix", rows},
             {"char_poly", coeffs},
             {"positive_eigenvalues", rep.positive_eigenvalues},
             {"hyperbolic", rep.is_hyperbolic},
             {"row_identities", atlas::check_row_identities(p, pa, pk)}};
      emit(r, format, "atlas");
      return 0;
    }

    if (cmd_syt->parsed()) {
      auto shape = tableaux::SkewShape::parse(shape_text);
      tableaux::SytCache cache;
      if (!id.empty()) {
        json verdicts = json::array();
        std::map<std::string, ineq::SweepCounts> counts;
        auto tally = [&](const ineq::Verdict& v) {
          auto& c = counts[v.check_id];
          switch (v.status) {
            case ineq::Status::Holds: ++c.holds; break;
            case ineq::Status::Equality: ++c.equality; break;
            case ineq::Status::Fails: ++c.fails; break;
            case ineq::Status::Vacuous: ++c.vacuous; break;
          }
          if (v.status != ineq::Status::Holds) verdicts.push_back(v.to_json());
        };
        if (id == "okounkov" || id == "fflp") {
          if (shape2_text.empty()) throw RangeError("syt: pair checks need --shape2");
          auto shape2 = tableaux::SkewShape::parse(shape2_text);
          tally(id == "okounkov" ? tableaux::check_okounkov(shape, shape2, cache)
                                 : tableaux::check_fflp(shape, shape2, cache));
        } else {
          for (const auto& v : tableaux::sweep_syt_check(id, shape, cache)) tally(v);
        }
        json r{{"summary", verdict_counts_json(counts)}, {"non_holds", verdicts}};
        emit(r, format, "syt");
        for (const auto& [cid, c] : counts) {
          if (c.fails > 0) return 2;
        }
        return 0;
      }
      json corners = json::array();
      for (auto c : shape.corners()) corners.push_back({c.row, c.col});
      json r{{"shape", shape.to_string()},
             {"cells", shape.cells()},
             {"count", tableaux::syt_count(shape).to_string()},
             {"corners", corners}};
      emit(r, format, "syt");
      return 0;
    }

    if (cmd_walk->parsed()) {
      auto shape = tableaux::SkewShape::parse(shape_text);
      if (!shape.straight()) throw RangeError("hookwalk: straight shapes only");
      auto exact = tableaux::corner_distribution(shape.outer());
      SplitMix64 rng(seed);
      std::map<tableaux::Cell, long> hits;
      for (int s = 0; s < walk_samples; ++s) ++hits[tableaux::hook_walk_sample(shape.outer(), rng)];
      Rat tv(0);
      json per_corner = json::array();
      for (const auto& [cell, prob] : exact) {
        Rat emp(hits.count(cell) ? hits[cell] : 0, walk_samples);
        Rat diff = emp - prob;
        if (diff.sign() < 0) diff = -diff;
        tv += diff;
        per_corner.push_back({{"corner", {cell.row, cell.col}},
                              {"exact", prob.to_string()},
                              {"empirical", emp.to_string()}});
      }
      tv = tv * Rat(1, 2);
      json r{{"shape", shape.to_string()},
             {"samples", walk_samples},
             {"seed", seed},
             {"corners", per_corner},
             {"tv_distance", tv.to_string()}};
      emit(r, format, "hookwalk");
      return 0;
    }

    if (cmd_euler->parsed()) {
      auto e = sequences::euler_numbers(upto);
      if (format == "csv") {
        for (std::size_t i = 0; i < e.size(); ++i)
          std::cout << (i ? "," : "") << e[i].to_string();
        std::cout << "\n";
        if (entringer_row > 0) {
          for (int k = 1; k <= entringer_row; ++k)
            std::cout << (k > 1 ? "," : "")
                      << sequences::entringer(entringer_row, k).to_string();
          std::cout << "\n";
        }
        if (fgh_row > 0) {
          std::cout << "k,F,G,H\n";
          for (int k = 0; k <= (fgh_row - 1) / 2 + 1; ++k) {
            auto fgh = sequences::fgh_polynomials(fgh_row, k);
            std::cout << k << "," << fgh.f.to_string() << "," << fgh.g.to_string() << ","
                      << fgh.h.to_string() << "\n";
          }
        }
        return 0;
      }
      json r;
      json arr = json::array();
      for (const auto& v : e) arr.push_back(v.to_string());
      r["euler"] = arr;
      if (entringer_row > 0) {
        json row = json::array();
        for (int k = 1; k <= entringer_row; ++k)
          row.push_back(sequences::entringer(entringer_row, k).to_string());
        r["entringer"] = {{"n", entringer_row}, {"row", row}};
      }
      if (fgh_row > 0) {
        int m = (fgh_row - 1) / 2;
        json rows = json::array();
        for (int k = 0; k <= m + 1; ++k) {
          auto fgh = sequences::fgh_polynomials(fgh_row, k);
          rows.push_back({{"k", k},
                          {"F", fgh.f.to_string()},
                          {"G", fgh.g.to_string()},
                          {"H", fgh.h.to_string()}});
        }
        r["fgh"] = {{"n", fgh_row}, {"rows", rows}};
      }
      emit(r, format, "euler");
      return 0;
    }

    if (cmd_hunt->parsed()) {
      search::HuntConfig config;
      config.checks = parse_ids(checks_csv);
      config.gen.seed = seed;
      config.gen.n = n;
      config.gen.orders = gen_orders;
      config.gen.edge_prob = edge_prob;
      config.gen.count = gen_count;
      config.gen.path = poset_text;
      if (gen_name == "exhaustive") {
        config.gen.kind = search::GeneratorSpec::Kind::Exhaustive;
      } else if (gen_name == "kdim") {
        config.gen.kind = search::GeneratorSpec::Kind::RandomKDim;
      } else if (gen_name == "bipartite") {
        config.gen.kind = search::GeneratorSpec::Kind::RandomBipartite;
      } else if (gen_name == "file") {
        config.gen.kind = search::GeneratorSpec::Kind::FromFile;
      } else {
        throw RangeError("hunt: unknown generator " + gen_name);
      }
      config.limits.seed = seed;
      config.workers = workers;
      if (budget_posets >= 0) config.budget_posets = budget_posets;
      if (budget_secs >= 0) config.budget_secs = budget_secs;
      config.out_path = out_path;
      auto result = search::hunt(config);
      emit(result.to_json(), format, "hunt");
      std::cerr << "hunt: " << result.processed << " posets in " << result.wall_secs << "s\n";
      return result.exit_code();
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}

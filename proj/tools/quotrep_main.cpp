// quotrep: batch CLI for exact representation-theory computations around
// cones of primitive vectors. Every command prints either a human-readable
// table or one JSON object {command, inputs, result, checks}; sweep runs emit
// a JSON array ordered by input. Exit codes: 0 success, 1 invalid input,
// 2 failed verify assertion.

#include "CLI11.hpp"
#include "json.hpp"
#include "quotrep/quotrep.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace quotrep;

namespace {

long long weyl_cap_from_env() {
  if (const char* s = std::getenv("QUOTREP_WEYL_CAP")) {
    try {
      return std::stoll(s);
    } catch (...) {
      throw std::invalid_argument("QUOTREP_WEYL_CAP is not an integer");
    }
  }
  return kDefaultWeylCap;
}

struct Args {
  std::string group, lambda, mu, nu;
  std::string format = "table";
  std::string which = "N";
  std::string lemma;
  int degree_bound = kDefaultDegreeBound;
  int max_rank = 8;
  int m = -1;            // single degree for verify 212/214; -1 = sweep
  int all_mu_upto = -1;  // sweep flag for classify/verify
  long long weyl_cap = kDefaultWeylCap;
};

json weight_json(const Weight& w) {
  json a = json::array();
  for (int x : w.c) a.push_back(x);
  return a;
}

json entries_json(const WeightMap& map) {
  std::vector<std::pair<Weight, Int>> sorted(map.begin(), map.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (const auto& [w, m] : sorted)
    out.push_back({{"weight", weight_json(w)}, {"mult", m.str()}});
  return out;
}

std::string entries_table(const WeightMap& map) {
  std::vector<std::pair<Weight, Int>> sorted(map.begin(), map.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string s;
  for (const auto& [w, m] : sorted) s += "  " + to_string(w) + "  " + m.str() + "\n";
  return s;
}

struct Context {
  Group group;
  ProductWeight lambda, mu, nu;
};

const RootSystem& single_factor(const Group& g, const std::string& command) {
  if (g.factors.size() != 1)
    throw std::invalid_argument(command + ": needs a single simple factor, got " +
                                to_string(g.spec));
  return g.factors.front();
}

ProductWeight parse_dominant(const std::string& text, const GroupSpec& spec, const char* name) {
  ProductWeight w = parse_weight(text, spec);
  if (!product_dominant(w))
    throw std::invalid_argument(std::string(name) + " " + text + " is not dominant");
  return w;
}

std::vector<Weight> dominant_box(int rank, int max_coord) {
  std::vector<Weight> out;
  std::vector<int> c(rank, 0);
  for (;;) {
    out.emplace_back(c);
    int i = 0;
    while (i < rank && c[i] == max_coord) c[i++] = 0;
    if (i == rank) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProductWeight> product_box(const Group& g, int max_coord) {
  std::vector<ProductWeight> sweep{{}};
  for (const RootSystem& rs : g.factors) {
    std::vector<ProductWeight> next;
    for (const ProductWeight& prefix : sweep) {
      for (const Weight& w : dominant_box(rs.rank, max_coord)) {
        ProductWeight p = prefix;
        p.push_back(w);
        next.push_back(std::move(p));
      }
    }
    sweep = std::move(next);
  }
  std::sort(sweep.begin(), sweep.end(), [](const ProductWeight& a, const ProductWeight& b) {
    return format_weight(a) < format_weight(b);
  });
  return sweep;
}

json check(const std::string& name, const std::string& status) {
  return {{"name", name}, {"status", status}};
}

// ---------------------------------------------------------------------------

json run_dim(const Args& args, const Context& ctx) {
  Int d = 1;
  for (std::size_t f = 0; f < ctx.group.factors.size(); ++f)
    d *= dim(ctx.group.factors[f], ctx.lambda[f]);
  if (args.format == "table")
    std::cout << "dim(" << to_string(ctx.group.spec) << ", " << format_weight(ctx.lambda)
              << ") = " << d.str() << "\n";
  return {{"dim", d.str()}};
}

json run_weights(const Args& args, const Context& ctx, json& checks) {
  const RootSystem& rs = single_factor(ctx.group, "weights");
  const Weight& lam = ctx.lambda[0];
  const WeightMultiset& wt = *weights(rs, lam);
  Int total = 0;
  for (const auto& [w, m] : wt) total += m;
  checks.push_back(check("total_equals_dim", total == dim(rs, lam) ? "pass" : "fail"));
  if (args.format == "table") {
    std::cout << "weights of V(" << format_weight(ctx.lambda) << ") in " << to_string(rs.type)
              << ": " << wt.size() << " distinct, " << total.str() << " with multiplicity\n"
              << entries_table(wt);
  }
  return {{"distinct", wt.size()}, {"total", total.str()}, {"entries", entries_json(wt)}};
}

Int decompose_checks(const RootSystem& rs, const Weight& lam, const Weight& mu,
                     const Decomposition& d, long long cap, json& checks) {
  Int lhs = 0;
  for (const auto& [nu, m] : d) lhs += m * dim(rs, nu);
  const bool conserved = lhs == dim(rs, lam) * dim(rs, mu);
  checks.push_back(check("dimension_conservation", conserved ? "pass" : "fail"));
  auto cartan = d.find(lam + mu);
  checks.push_back(
      check("cartan_component", cartan != d.end() && cartan->second == 1 ? "pass" : "fail"));
  if (weyl_group_order(rs.type) <= cap) {
    const bool agrees = d == alternating_decompose(rs, lam, mu, cap);
    checks.push_back(check("oracle_agreement", agrees ? "pass" : "fail"));
  } else {
    checks.push_back(check("oracle_agreement", "skipped"));
  }
  return lhs;
}

json run_decompose(const Args& args, const Context& ctx, json& checks) {
  const RootSystem& rs = single_factor(ctx.group, "decompose");
  const Weight &lam = ctx.lambda[0], &mu = ctx.mu[0];
  Decomposition d = decompose(rs, lam, mu);
  Int total = decompose_checks(rs, lam, mu, d, args.weyl_cap, checks);
  if (args.format == "table") {
    std::cout << "V(" << to_string(lam) << ") (x) V(" << to_string(mu) << ") in "
              << to_string(rs.type) << ":\n"
              << entries_table(d);
  }
  return {{"entries", entries_json(d)}, {"dim_product", total.str()}};
}

json run_mult(const Args& args, const Context& ctx, json& checks) {
  const RootSystem& rs = single_factor(ctx.group, "mult");
  const Weight &lam = ctx.lambda[0], &mu = ctx.mu[0], &nu = ctx.nu[0];
  if (!nu.dominant())
    throw std::invalid_argument("mult: nu " + to_string(nu) + " is not dominant");
  Int m = mult(rs, lam, mu, nu);
  if (weyl_group_order(rs.type) <= args.weyl_cap) {
    const bool agrees = m == mult_alternating(rs, lam, mu, nu, args.weyl_cap);
    checks.push_back(check("oracle_agreement", agrees ? "pass" : "fail"));
  } else {
    checks.push_back(check("oracle_agreement", "skipped"));
  }
  if (args.format == "table")
    std::cout << "mult of V(" << to_string(nu) << ") in V(" << to_string(lam) << ") (x) V("
              << to_string(mu) << ") = " << m.str() << "\n";
  return {{"mult", m.str()}};
}

json run_graded(const Args& args, const Context& ctx, json& checks) {
  const RootSystem& rs = single_factor(ctx.group, "graded");
  const GradedKind kind = static_cast<GradedKind>(args.which[0]);
  const Weight &lam = ctx.lambda[0], &mu = ctx.mu[0];
  GradedDecomposition g = graded_module(rs, lam, mu, kind, args.degree_bound);

  GradedDecomposition gm = graded_module(rs, lam, mu, GradedKind::M, args.degree_bound);
  GradedDecomposition gn = graded_module(rs, lam, mu, GradedKind::N, args.degree_bound);
  GradedDecomposition gq = graded_module(rs, lam, mu, GradedKind::Q, args.degree_bound);
  bool exact = true, strict = true;
  for (int m = 0; m <= args.degree_bound; ++m) {
    Decomposition sum = gn.per_degree[m];
    for (const auto& [w, k] : gq.per_degree[m]) sum[w] += k;
    exact = exact && sum == gm.per_degree[m];
    const Weight top = m * lam + mu;
    for (const auto& [w, k] : gn.per_degree[m])
      strict = strict && w != top && dominance_leq(rs, w, top);
  }
  checks.push_back(check("exactness", exact ? "pass" : "fail"));
  checks.push_back(check("kernel_strictly_below", strict ? "pass" : "fail"));

  json degrees = json::array();
  for (int m = 0; m <= args.degree_bound; ++m) {
    degrees.push_back({{"m", m}, {"entries", entries_json(g.per_degree[m])}});
    if (args.format == "table") {
      std::cout << args.which << "_" << m << ":\n";
      std::cout << (g.per_degree[m].empty() ? "  (empty)\n" : entries_table(g.per_degree[m]));
    }
  }
  return {{"which", args.which}, {"degree_bound", args.degree_bound}, {"degrees", degrees}};
}

json run_hilbert(const Args& args, const Context& ctx) {
  HilbertFunction h = make_hilbert(ctx.group, ctx.lambda, ctx.mu);
  if (!product_dominant(ctx.nu))
    throw std::invalid_argument("hilbert: nu " + format_weight(ctx.nu) + " is not dominant");
  std::optional<int> m = h.degree(ctx.nu);
  if (args.format == "table")
    std::cout << "h(" << format_weight(ctx.nu) << ") = " << (m ? 1 : 0)
              << (m ? " (m = " + std::to_string(*m) + ")" : "") << "\n";
  json result = {{"value", m ? 1 : 0}};
  if (m) result["m"] = *m;
  return result;
}

json run_tangent(const Args& args, const Context& ctx) {
  Int bound = tangent_upper_bound(ctx.group, ctx.lambda, ctx.mu);
  if (args.format == "table") std::cout << "tangent-space upper bound = " << bound.str() << "\n";
  return {{"bound", bound.str()}};
}

json classify_result(const Group& g, const ProductWeight& lam, const ProductWeight& mu) {
  QuotClassification c = classify_quot(g, lam, mu);
  json r = {{"kind", c.kind == QuotKind::DoublePoint ? "DoublePoint" : "ReducedPoint"},
            {"tangent_dim", c.tangent_dim}};
  if (c.witness_factor)
    r["witness_factor"] = *c.witness_factor;
  else
    r["witness_factor"] = nullptr;
  return r;
}

json run_scan_roots(const Args& args) {
  auto hits = scan_dominant_roots(args.max_rank);
  json out = json::array();
  for (const DominantRootHit& h : hits) {
    json coords = json::array();
    for (int x : h.root_coords) coords.push_back(x);
    out.push_back({{"type", to_string(h.type)},
                   {"root_coords", coords},
                   {"weight_coords", weight_json(h.weight_coords)}});
    if (args.format == "table")
      std::cout << to_string(h.type) << ": dominant root with weight coordinates "
                << to_string(h.weight_coords) << "\n";
  }
  return {{"hits", out}};
}

// --- verify ----------------------------------------------------------------

struct VerifyOutcome {
  json result;
  bool ok = false;
};

VerifyOutcome verify_one(const std::string& lemma, const Args& args, const RootSystem& rs,
                         const Weight& w) {
  VerifyOutcome out;
  if (lemma == "211") {
    Check211 r = verify_lemma_211(rs, w);
    out.ok = r.ok;
    out.result = {{"ok", r.ok},
                  {"mult", r.mult_value.str()},
                  {"coroot_pairing", r.coroot_pairing}};
  } else if (lemma == "212" || lemma == "214") {
    const int lo = args.m > 0 ? args.m : 1;
    const int hi = args.m > 0 ? args.m : args.degree_bound;
    out.ok = true;
    json per_m = json::array();
    for (int m = lo; m <= hi; ++m) {
      if (lemma == "212") {
        Check212 r = verify_lemma_212(rs, w, m);
        out.ok = out.ok && r.ok;
        json witnesses = json::array();
        for (const auto& [nu, i] : r.witnesses)
          witnesses.push_back({{"nu", weight_json(nu)}, {"i", i}});
        per_m.push_back({{"m", m}, {"ok", r.ok}, {"witnesses", witnesses}});
      } else {
        Check214 r = verify_lemma_214(rs, w, m);
        out.ok = out.ok && r.ok;
        per_m.push_back({{"m", m}, {"ok", r.ok}, {"marker_mult", r.marker_mult.str()}});
      }
    }
    out.result = {{"ok", out.ok}, {"per_degree", per_m}};
  } else if (lemma == "q1") {
    CheckQ1 r = verify_lemma_q1(rs, w);
    out.ok = r.ok;
    json cases = json::array();
    for (const auto& c : r.cases)
      cases.push_back({{"i", c.i},
                       {"sign", c.sign},
                       {"target", weight_json(c.target)},
                       {"mult", c.mult_value.str()}});
    out.result = {{"ok", r.ok}, {"cases", cases}};
  } else if (lemma == "q2") {
    CheckQ2 r = verify_lemma_q2(rs, w);
    out.ok = r.ok;
    out.result = {{"ok", r.ok}, {"mult", r.mult_value.str()}, {"expected", r.expected}};
  } else {
    throw std::invalid_argument("verify: unknown check id '" + lemma + "'");
  }
  return out;
}

int run_verify(const Args& args, const Group& group, json& output) {
  const RootSystem& rs = single_factor(group, "verify");
  json inputs = {{"group", to_string(group.spec)}, {"lemma", args.lemma}};

  if (args.lemma == "s2") {
    CheckS2 r = verify_s2(rs);
    output = {{"command", "verify"},
              {"inputs", inputs},
              {"result",
               {{"ok", r.ok},
                {"square_total", r.square_total.str()},
                {"v2lam_total", r.v2lam_total.str()}}},
              {"checks", json::array()}};
    if (args.format == "table")
      std::cout << "s2: " << (r.ok ? "ok" : "FAILED") << " (squared character total "
                << r.square_total.str() << ")\n";
    return r.ok ? 0 : 2;
  }

  const bool uses_nu = args.lemma == "q1";
  if (args.all_mu_upto >= 0) {
    json array = json::array();
    bool all_ok = true;
    for (const Weight& w : dominant_box(rs.rank, args.all_mu_upto)) {
      if (args.lemma == "q2" || args.lemma == "214") {
        if (w.c.back() < 1) continue;  // outside the standing hypothesis mu_n >= 1
      }
      VerifyOutcome one = verify_one(args.lemma, args, rs, w);
      all_ok = all_ok && one.ok;
      json in = inputs;
      in[uses_nu ? "nu" : "mu"] = format_weight({w});
      array.push_back({{"command", "verify"},
                       {"inputs", in},
                       {"result", one.result},
                       {"checks", json::array()}});
      if (args.format == "table")
        std::cout << args.lemma << " " << to_string(w) << ": " << (one.ok ? "ok" : "FAILED")
                  << "\n";
    }
    output = std::move(array);
    return all_ok ? 0 : 2;
  }

  const std::string& text = uses_nu ? args.nu : args.mu;
  if (text.empty())
    throw std::invalid_argument("verify " + args.lemma + ": needs --" +
                                (uses_nu ? std::string("nu") : std::string("mu")) +
                                " or --all-mu-upto");
  ProductWeight w = parse_dominant(text, group.spec, uses_nu ? "nu" : "mu");
  VerifyOutcome one = verify_one(args.lemma, args, rs, w[0]);
  inputs[uses_nu ? "nu" : "mu"] = format_weight(w);
  output = {{"command", "verify"},
            {"inputs", inputs},
            {"result", one.result},
            {"checks", json::array()}};
  if (args.format == "table")
    std::cout << args.lemma << " " << to_string(w[0]) << ": " << (one.ok ? "ok" : "FAILED")
              << "\n";
  return one.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  try {
    args.weyl_cap = weyl_cap_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"exact multiplicity computations for cones of primitive vectors"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool needs_lambda, bool needs_mu, bool needs_nu) {
    cmd->add_option("--group", args.group, "group, e.g. B3 or A2xB3")->required();
    auto* lam = cmd->add_option("--lambda", args.lambda, "highest weight, e.g. 1,0,2;0,1");
    auto* mu = cmd->add_option("--mu", args.mu, "second highest weight");
    auto* nu = cmd->add_option("--nu", args.nu, "probe weight");
    if (needs_lambda) lam->required();
    if (needs_mu) mu->required();
    if (needs_nu) nu->required();
    cmd->add_option("--format", args.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--weyl-cap", args.weyl_cap,
                    "cap for full Weyl enumeration (env QUOTREP_WEYL_CAP)");
    cmd->add_option("--degree-bound", args.degree_bound, "top degree for graded data (default 4)");
    cmd->add_option("--max-rank", args.max_rank, "largest rank for scans (default 8)");
  };

  CLI::App* c_dim = app.add_subcommand("dim", "dimension of V(lambda)");
  add_common(c_dim, true, false, false);
  CLI::App* c_weights = app.add_subcommand("weights", "weight system of V(lambda)");
  add_common(c_weights, true, false, false);
  CLI::App* c_dec = app.add_subcommand("decompose", "decompose V(lambda) (x) V(mu)");
  add_common(c_dec, true, true, false);
  CLI::App* c_mult = app.add_subcommand("mult", "multiplicity of V(nu) in V(lambda) (x) V(mu)");
  add_common(c_mult, true, true, true);
  CLI::App* c_graded =
      app.add_subcommand("graded", "graded module of the cone: A, M, N or Q degree by degree");
  add_common(c_graded, true, true, false);
  c_graded->add_option("--which", args.which, "module: A, M, N or Q")
      ->check(CLI::IsMember({"A", "M", "N", "Q"}));
  CLI::App* c_hil = app.add_subcommand("hilbert", "evaluate the Hilbert function at nu");
  add_common(c_hil, true, true, true);
  CLI::App* c_tan = app.add_subcommand("tangent", "tangent-space dimension upper bound");
  add_common(c_tan, true, true, false);
  CLI::App* c_cls = app.add_subcommand("classify", "reduced point or double point");
  add_common(c_cls, true, false, false);
  c_cls->add_option("--all-mu-upto", args.all_mu_upto, "sweep all dominant mu with coords <= K");
  CLI::App* c_scan = app.add_subcommand(
      "scan-roots", "scan simple types for dominant roots with a unique non-orthogonal "
                    "simple root of coefficient 1");
  c_scan->add_option("--max-rank", args.max_rank, "largest rank to scan (default 8)");
  c_scan->add_option("--format", args.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  CLI::App* c_ver = app.add_subcommand("verify", "run one of the named identity checks");
  c_ver->add_option("lemma", args.lemma, "one of 211, 212, 214, q1, q2, s2")->required();
  c_ver->add_option("--group", args.group, "group, e.g. B3")->required();
  c_ver->add_option("--mu", args.mu, "weight for 211/212/214/q2");
  c_ver->add_option("--nu", args.nu, "weight for q1");
  c_ver->add_option("--m", args.m, "single degree for 212/214 (default: sweep)");
  c_ver->add_option("--degree-bound", args.degree_bound, "degree sweep bound (default 4)");
  c_ver->add_option("--all-mu-upto", args.all_mu_upto, "sweep all dominant mu with coords <= K");
  c_ver->add_option("--format", args.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    json output;
    int exit_code = 0;

    if (app.got_subcommand(c_scan)) {
      output = {{"command", "scan-roots"},
                {"inputs", {{"max_rank", args.max_rank}}},
                {"result", run_scan_roots(args)},
                {"checks", json::array()}};
    } else if (app.got_subcommand(c_ver)) {
      Group group = build_group(parse_group(args.group));
      exit_code = run_verify(args, group, output);
    } else {
      Context ctx;
      ctx.group = build_group(parse_group(args.group));
      json inputs = {{"group", to_string(ctx.group.spec)}};
      if (!args.lambda.empty()) {
        ctx.lambda = parse_dominant(args.lambda, ctx.group.spec, "lambda");
        inputs["lambda"] = format_weight(ctx.lambda);
      }
      if (!args.mu.empty()) {
        ctx.mu = parse_dominant(args.mu, ctx.group.spec, "mu");
        inputs["mu"] = format_weight(ctx.mu);
      }
      if (!args.nu.empty()) {
        ctx.nu = parse_weight(args.nu, ctx.group.spec);
        inputs["nu"] = format_weight(ctx.nu);
      }

      json checks = json::array();
      json result;
      std::string command;
      if (app.got_subcommand(c_dim)) {
        command = "dim";
        result = run_dim(args, ctx);
      } else if (app.got_subcommand(c_weights)) {
        command = "weights";
        result = run_weights(args, ctx, checks);
      } else if (app.got_subcommand(c_dec)) {
        command = "decompose";
        result = run_decompose(args, ctx, checks);
      } else if (app.got_subcommand(c_mult)) {
        command = "mult";
        result = run_mult(args, ctx, checks);
      } else if (app.got_subcommand(c_graded)) {
        command = "graded";
        inputs["degree_bound"] = args.degree_bound;
        result = run_graded(args, ctx, checks);
      } else if (app.got_subcommand(c_hil)) {
        command = "hilbert";
        result = run_hilbert(args, ctx);
      } else if (app.got_subcommand(c_tan)) {
        command = "tangent";
        result = run_tangent(args, ctx);
      } else if (app.got_subcommand(c_cls)) {
        command = "classify";
        if (args.all_mu_upto >= 0) {
          json array = json::array();
          for (const ProductWeight& mu : product_box(ctx.group, args.all_mu_upto)) {
            json in = inputs;
            in["mu"] = format_weight(mu);
            json r = classify_result(ctx.group, ctx.lambda, mu);
            if (args.format == "table")
              std::cout << format_weight(mu) << ": " << r["kind"].get<std::string>() << "\n";
            array.push_back(
                {{"command", command}, {"inputs", in}, {"result", r}, {"checks", json::array()}});
          }
          if (args.format == "json") std::cout << array.dump(2) << "\n";
          return 0;
        }
        if (args.mu.empty()) throw std::invalid_argument("classify: needs --mu or --all-mu-upto");
        result = classify_result(ctx.group, ctx.lambda, ctx.mu);
        if (args.format == "table")
          std::cout << result["kind"].get<std::string>() << " (tangent dimension "
                    << result["tangent_dim"].get<int>() << ")\n";
      }
      output = {{"command", command}, {"inputs", inputs}, {"result", result}, {"checks", checks}};
    }

    for (const json& c : output.is_array() ? output : json::array({output}))
      if (c.contains("checks"))
        for (const json& entry : c["checks"])
          if (entry["status"] == "fail") {
            std::cerr << "error: internal cross-check '" << entry["name"].get<std::string>()
                      << "' failed\n";
            exit_code = exit_code == 0 ? 1 : exit_code;
          }

    if (args.format == "json") std::cout << output.dump(2) << "\n";
    return exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const WeylCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

// Command-line front end: graph generation, curvature, spectra, walks,
// local profiles and the three-clause far-from-expander report, with
// reproducible machine-readable outputs.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riccigap/curvature.hpp"
#include "riccigap/errors.hpp"
#include "riccigap/generators.hpp"
#include "riccigap/graph_io.hpp"
#include "riccigap/local_profile.hpp"
#include "riccigap/spectral.hpp"
#include "riccigap/trichotomy.hpp"
#include "riccigap/version.hpp"
#include "riccigap/walks.hpp"

namespace {

using namespace riccigap;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct RunContext {
  std::vector<std::string> argv;
  std::map<std::string, std::string> input_hashes;
  std::optional<std::uint64_t> seed;
  std::string arithmetic_mode = "float";
  int threads = 0;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  std::string load_input(const std::string& path) {
    const std::string content = read_file(path);
    input_hashes[path] = "fnv1a64:" + fnv1a64_hex(content);
    return content;
  }

  std::string manifest_json() const {
    std::ostringstream out;
    out << "{\n  \"tool\": \"ricci_gap\",\n  \"version\": \"" << kVersion << "\",\n";
    out << "  \"command\": [";
    for (std::size_t i = 0; i < argv.size(); ++i) {
      out << (i ? ", " : "") << "\"" << argv[i] << "\"";
    }
    out << "],\n  \"inputs\": {";
    bool first = true;
    for (const auto& [path, hash] : input_hashes) {
      out << (first ? "" : ", ") << "\"" << path << "\": \"" << hash << "\"";
      first = false;
    }
    out << "},\n";
    if (seed) {
      out << "  \"seed\": " << *seed << ",\n";
    } else {
      out << "  \"seed\": null,\n";
    }
    out << "  \"threads_requested\": " << threads << ",\n";
    out << "  \"arithmetic_mode\": \"" << arithmetic_mode << "\",\n";
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    out << "  \"wall_time_ms\": " << elapsed << "\n}\n";
    return out.str();
  }
};

void emit(const std::string& content, const std::string& path, const RunContext& ctx,
          const std::string& manifest_path) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
  std::string target = manifest_path;
  if (target.empty() && !path.empty()) target = path + ".manifest.json";
  if (!target.empty()) write_file(target, ctx.manifest_json());
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

std::vector<std::vector<int>> parse_generator_sets(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> gen;
    std::istringstream fields(group);
    std::string field;
    while (std::getline(fields, field, ',')) {
      if (!field.empty()) gen.push_back(std::stoi(field));
    }
    if (!gen.empty()) out.push_back(std::move(gen));
  }
  return out;
}

std::string curvature_summary_json(const CurvatureProfile& profile) {
  std::ostringstream out;
  out << "{\n  \"edges\": " << profile.per_edge.size() << ",\n";
  out << "  \"min\": \"" << to_fraction_string(profile.min_kappa) << "\",\n";
  // Histogram over [-2, 1] in steps of 1/10; only occupied bins appear.
  std::map<int, std::int64_t> bins;
  for (const auto& e : profile.per_edge) {
    int bin = -20;
    while (e.kappa >= Rational(bin + 1, 10) && bin < 9) ++bin;
    ++bins[bin];
  }
  out << "  \"histogram\": {";
  bool first = true;
  for (const auto& [bin, count] : bins) {
    out << (first ? "" : ", ") << "\"[" << Rational(bin, 10) << "," << Rational(bin + 1, 10)
        << ")\": " << count;
    first = false;
  }
  out << "},\n  \"negative_fraction\": {";
  first = true;
  for (const auto& [eps, fraction] : profile.negative_fraction_at) {
    out << (first ? "" : ", ") << "\"" << to_fraction_string(eps) << "\": \""
        << to_fraction_string(fraction) << "\"";
    first = false;
  }
  out << "}\n}\n";
  return out.str();
}

std::string trichotomy_report_json(const TrichotomyReport& r) {
  std::ostringstream out;
  out << "  {\n";
  out << "    \"delta\": " << r.delta << ",\n";
  out << "    \"rho\": " << fmt(r.rho) << ",\n";
  out << "    \"eps\": \"" << to_fraction_string(r.eps) << "\",\n";
  out << "    \"expansion_at_least_rho\": " << (r.at_least_rho ? "true" : "false") << ",\n";
  out << "    \"sparsity_clause\": {\"fired\": " << (r.sparsity.fired ? "true" : "false")
      << ", \"lhs\": " << fmt(r.sparsity.lhs) << ", \"rhs\": " << fmt(r.sparsity.rhs) << "},\n";
  out << "    \"expansion_clause\": {\"fired\": " << (r.expansion.fired ? "true" : "false")
      << ", \"count\": " << r.expansion.count << ", \"threshold\": \""
      << to_fraction_string(r.expansion.threshold) << "\"},\n";
  out << "    \"curvature_clause\": {\"fired\": " << (r.curvature.fired ? "true" : "false")
      << ", \"count\": " << r.curvature.count << ", \"threshold\": \""
      << to_fraction_string(r.curvature.threshold) << "\"},\n";
  out << "    \"any_clause\": " << (r.any_clause ? "true" : "false") << "\n  }";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Ollivier-Ricci curvature, lazy-walk spectra and local profiles of finite graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunContext ctx;
  for (int i = 1; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "emit a graph family instance as JSON");
  std::string family_name_arg;
  FamilySpec spec;
  std::string orders_arg, generators_arg;
  std::uint64_t seed_arg = 0;
  bool seed_given = false;
  std::string out_path, manifest_path;
  generate_cmd->add_option("--family", family_name_arg, "family name")->required();
  generate_cmd->add_option("--n", spec.n, "size parameter");
  generate_cmd->add_option("--m", spec.m, "second side (complete_bipartite)");
  generate_cmd->add_option("--d", spec.d, "degree/dimension parameter");
  generate_cmd->add_option("--depth", spec.depth, "truncation depth");
  generate_cmd->add_option("--orders", orders_arg, "cyclic factor orders, e.g. 5,5");
  generate_cmd->add_option("--generators", generators_arg,
                           "generator tuples, e.g. '1,0;4,0;0,1;0,4'");
  generate_cmd->add_option("--seed", seed_arg, "seed (required for random families)")
      ->each([&](const std::string&) { seed_given = true; });
  generate_cmd->add_option("--out", out_path, "output path (default stdout)");
  generate_cmd->add_option("--manifest", manifest_path, "run manifest path");

  // curvature
  auto* curvature_cmd = app.add_subcommand("curvature", "per-edge Ollivier-Ricci curvature");
  std::string in_path, alpha_arg, eps_arg, summary_path;
  curvature_cmd->add_option("--in", in_path, "graph file (JSON or edge list)")->required();
  curvature_cmd->add_option("--alpha", alpha_arg, "idle parameter in [0,1), default 1/2");
  curvature_cmd->add_option("--eps", eps_arg, "comma list of eps for negative fractions");
  curvature_cmd->add_option("--threads", ctx.threads, "worker cap");
  curvature_cmd->add_option("--out", out_path, "CSV path (default stdout)");
  curvature_cmd->add_option("--summary", summary_path, "JSON summary path");
  curvature_cmd->add_option("--manifest", manifest_path, "run manifest path");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "lazy-walk eigenvalues");
  int local_root = -1;
  double count_rho = 0.0;
  auto* local_opt =
      spectrum_cmd->add_option("--local-measure", local_root, "emit the local measure at this root");
  auto* count_opt =
      spectrum_cmd->add_option("--count-above", count_rho, "print card{i: lambda_i > rho}");
  spectrum_cmd->add_option("--in", in_path, "graph file")->required();
  spectrum_cmd->add_option("--out", out_path, "output path (default stdout)");
  spectrum_cmd->add_option("--manifest", manifest_path, "run manifest path");

  // walk
  auto* walk_cmd = app.add_subcommand("walk", "walk distributions, entropy, radius, meetings");
  int origin = 0, entropy_tmax = -1, radius_tmax = -1, meet_horizon = 1000;
  std::vector<int> meet_pair;
  std::int64_t meet_trials = 1000;
  std::string mode_arg;
  walk_cmd->add_option("--in", in_path, "graph file")->required();
  walk_cmd->add_option("--origin", origin, "walk origin (default 0)");
  walk_cmd->add_option("--entropy", entropy_tmax, "emit entropy series up to t_max");
  walk_cmd->add_option("--radius", radius_tmax, "emit radius estimates up to t_max");
  walk_cmd->add_option("--meet", meet_pair, "two start vertices for the coupled walk")
      ->expected(2);
  walk_cmd->add_option("--trials", meet_trials, "coupled-walk trials");
  walk_cmd->add_option("--horizon", meet_horizon, "coupled-walk horizon");
  walk_cmd->add_option("--seed", seed_arg, "seed for the coupled walk")
      ->each([&](const std::string&) { seed_given = true; });
  walk_cmd->add_option("--mode", mode_arg, "force arithmetic: rational|float");
  walk_cmd->add_option("--threads", ctx.threads, "worker cap");
  walk_cmd->add_option("--out", out_path, "output path (default stdout)");
  walk_cmd->add_option("--summary", summary_path, "JSON summary path (meet)");
  walk_cmd->add_option("--manifest", manifest_path, "run manifest path");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "rooted-ball census and profile distance");
  int census_depth = 1;
  std::string compare_path;
  profile_cmd->add_option("--in", in_path, "graph file")->required();
  profile_cmd->add_option("--depth", census_depth, "ball radius");
  profile_cmd->add_option("--compare", compare_path, "second graph: per-depth TV table");
  profile_cmd->add_option("--threads", ctx.threads, "worker cap");
  profile_cmd->add_option("--out", out_path, "output path (default stdout)");
  profile_cmd->add_option("--manifest", manifest_path, "run manifest path");

  // trichotomy
  auto* trichotomy_cmd =
      app.add_subcommand("trichotomy", "evaluate the three far-from-expander clauses");
  std::int64_t delta = 1;
  double rho = 0.9;
  std::string sweep_manifest;
  bool at_least_rho = false;
  trichotomy_cmd->add_option("--in", in_path, "graph file");
  trichotomy_cmd->add_option("--sweep", sweep_manifest, "family manifest: emit sweep CSV");
  trichotomy_cmd->add_option("--delta", delta, "degree budget")->required();
  trichotomy_cmd->add_option("--rho", rho, "spectral threshold in (0,1)")->required();
  trichotomy_cmd->add_option("--eps", eps_arg, "comma list of eps values")->required();
  trichotomy_cmd->add_flag("--at-least-rho", at_least_rho,
                           "count lambda >= rho instead of strict >");
  trichotomy_cmd->add_option("--threads", ctx.threads, "worker cap");
  trichotomy_cmd->add_option("--out", out_path, "output path (default stdout)");
  trichotomy_cmd->add_option("--manifest", manifest_path, "run manifest path");

  // report
  auto* report_cmd = app.add_subcommand("report", "family table: curvature/spectrum/clauses");
  report_cmd->add_option("--families", sweep_manifest, "family manifest JSON")->required();
  report_cmd->add_option("--delta", delta, "degree budget")->required();
  report_cmd->add_option("--rho", rho, "spectral threshold in (0,1)")->required();
  report_cmd->add_option("--eps", eps_arg, "comma list of eps values")->required();
  report_cmd->add_flag("--at-least-rho", at_least_rho,
                       "count lambda >= rho instead of strict >");
  report_cmd->add_option("--threads", ctx.threads, "worker cap");
  report_cmd->add_option("--out", out_path, "output path (default stdout)");
  report_cmd->add_option("--manifest", manifest_path, "run manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (seed_given) ctx.seed = seed_arg;

  if (generate_cmd->parsed()) {
    spec.family = family_from_name(family_name_arg);
    if (!orders_arg.empty()) {
      for (const auto& q : parse_rational_list(orders_arg)) {
        spec.orders.push_back(static_cast<int>(numerator(q).convert_to<std::int64_t>()));
      }
    }
    if (!generators_arg.empty()) spec.generators = parse_generator_sets(generators_arg);
    spec.seed = seed_arg;
    spec.has_seed = seed_given;
    ctx.arithmetic_mode = "exact";
    emit(graph_to_json(generate(spec)), out_path, ctx, manifest_path);
    return 0;
  }

  if (curvature_cmd->parsed()) {
    const Graph g = parse_graph(ctx.load_input(in_path));
    const std::vector<Rational> eps_list = parse_rational_list(eps_arg);
    ctx.arithmetic_mode = "rational";
    std::ostringstream csv;
    if (alpha_arg.empty()) {
      const CurvatureProfile profile = curvature_profile(g, eps_list, ctx.threads);
      csv << "u,v,kappa_num,kappa_den\n";
      for (const auto& e : profile.per_edge) {
        csv << e.edge.first << "," << e.edge.second << "," << numerator(e.kappa) << ","
            << denominator(e.kappa) << "\n";
      }
      if (!summary_path.empty()) write_file(summary_path, curvature_summary_json(profile));
    } else {
      const Rational alpha = parse_rational(alpha_arg);
      csv << "u,v,kappa_num,kappa_den\n";
      for (const auto& [u, v] : g.edges()) {
        const Rational k = kappa_alpha_edge(g, u, v, alpha);
        csv << u << "," << v << "," << numerator(k) << "," << denominator(k) << "\n";
      }
    }
    emit(csv.str(), out_path, ctx, manifest_path);
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    const Graph g = parse_graph(ctx.load_input(in_path));
    std::ostringstream out;
    if (*local_opt) {
      const SpectralMeasure m = local_spectral_measure(g, local_root);
      out << "lambda,weight\n";
      for (const auto& [lambda, weight] : m.atoms) {
        out << fmt(lambda) << "," << fmt(weight) << "\n";
      }
    } else if (*count_opt) {
      out << count_above(g, count_rho) << "\n";
    } else {
      out << "lambda\n";
      for (double lambda : spectrum(g).eigenvalues) out << fmt(lambda) << "\n";
    }
    emit(out.str(), out_path, ctx, manifest_path);
    return 0;
  }

  if (walk_cmd->parsed()) {
    const Graph g = parse_graph(ctx.load_input(in_path));
    std::optional<ArithmeticMode> mode;
    if (mode_arg == "rational") mode = ArithmeticMode::rational;
    else if (mode_arg == "float") mode = ArithmeticMode::floating;
    else if (!mode_arg.empty()) throw InputError("walk: unknown mode '" + mode_arg + "'");

    std::ostringstream out;
    if (entropy_tmax >= 0) {
      const EntropySeries series = entropy_series(g, origin, entropy_tmax, mode);
      ctx.arithmetic_mode =
          series.mode == ArithmeticMode::rational ? "rational" : "float";
      out << "t,entropy,rate\n";
      for (const auto& [t, h] : series.values) {
        out << t << "," << fmt(h) << "," << fmt(t > 0 ? h / t : 0.0) << "\n";
      }
    } else if (radius_tmax >= 0) {
      const RadiusSeries series = spectral_radius_estimate(g, origin, radius_tmax);
      ctx.arithmetic_mode = "float";
      out << "t,even_return,estimate\n";
      for (const auto& entry : series.entries) {
        out << entry.t << "," << fmt(entry.even_return) << "," << fmt(entry.estimate) << "\n";
      }
    } else if (!meet_pair.empty()) {
      if (!seed_given) throw InputError("walk --meet: --seed is required");
      const MeetingExperiment exp = coupled_meeting_experiment(
          g, meet_pair[0], meet_pair[1], meet_horizon, meet_trials, seed_arg, ctx.threads);
      ctx.arithmetic_mode = "float";
      out << "t,tail\n";
      for (int t = 0; t <= exp.horizon; ++t) {
        out << t << "," << fmt(exp.tail[t]) << "\n";
      }
      if (!summary_path.empty()) {
        std::ostringstream summary;
        summary << "{\"trials\": " << exp.trials << ", \"horizon\": " << exp.horizon
                << ", \"seed\": " << exp.seed << ", \"met_count\": " << exp.met_count
                << ", \"mean_met\": " << fmt(exp.mean_met)
                << ", \"max_met\": " << exp.max_met << "}\n";
        write_file(summary_path, summary.str());
      }
    } else {
      throw InputError("walk: pick one of --entropy, --radius, --meet");
    }
    emit(out.str(), out_path, ctx, manifest_path);
    return 0;
  }

  if (profile_cmd->parsed()) {
    const Graph g = parse_graph(ctx.load_input(in_path));
    ctx.arithmetic_mode = "rational";
    std::ostringstream out;
    if (compare_path.empty()) {
      const BallCensus census = ball_census(g, census_depth, ctx.threads);
      out << "{\n  \"depth\": " << census.depth << ",\n  \"n\": " << census.total
          << ",\n  \"classes\": [";
      for (std::size_t i = 0; i < census.classes.size(); ++i) {
        out << (i ? ", " : "") << "\n    {\"code\": \"" << to_hex(census.classes[i].code)
            << "\", \"count\": " << census.classes[i].count << ", \"frequency\": \""
            << to_fraction_string(census.frequency(i)) << "\"}";
      }
      out << "\n  ]\n}\n";
    } else {
      const Graph h = parse_graph(ctx.load_input(compare_path));
      const ProfileDistance pd = profile_distance(g, h, census_depth, ctx.threads);
      out << "t,tv\n";
      for (const auto& [t, tv] : pd.per_depth_tv) {
        out << t << "," << to_fraction_string(tv) << "\n";
      }
      out << "aggregate," << to_fraction_string(pd.aggregate) << "\n";
    }
    emit(out.str(), out_path, ctx, manifest_path);
    return 0;
  }

  if (trichotomy_cmd->parsed()) {
    const std::vector<Rational> eps_list = parse_rational_list(eps_arg);
    if (eps_list.empty()) throw InputError("trichotomy: --eps list is empty");
    TrichotomyOptions options{at_least_rho, ctx.threads};
    ctx.arithmetic_mode = "rational+float";
    std::ostringstream out;
    if (!sweep_manifest.empty()) {
      const auto specs = family_specs_from_json_text(ctx.load_input(sweep_manifest));
      const auto rows = sweep(specs, delta, rho, eps_list, options);
      out << "family,n,m,eps,sparsity,expansion,curvature,fired\n";
      for (const auto& row : rows) {
        out << row.label << "," << row.vertices << "," << row.edges << ","
            << to_fraction_string(row.eps) << "," << row.sparsity << "," << row.expansion << ","
            << row.curvature << "," << row.fired << "\n";
      }
    } else {
      if (in_path.empty()) throw InputError("trichotomy: need --in or --sweep");
      const Graph g = parse_graph(ctx.load_input(in_path));
      out << "[\n";
      for (std::size_t i = 0; i < eps_list.size(); ++i) {
        out << (i ? ",\n" : "")
            << trichotomy_report_json(evaluate(g, delta, rho, eps_list[i], options));
      }
      out << "\n]\n";
    }
    emit(out.str(), out_path, ctx, manifest_path);
    return 0;
  }

  if (report_cmd->parsed()) {
    const std::vector<Rational> eps_list = parse_rational_list(eps_arg);
    if (eps_list.empty()) throw InputError("report: --eps list is empty");
    const auto specs = family_specs_from_json_text(ctx.load_input(sweep_manifest));
    ctx.arithmetic_mode = "rational+float";
    std::ostringstream out;
    out << "family,n,m,max_degree,deg_log_deg,lambda2,count_above_rho,min_kappa";
    for (const auto& eps : eps_list) out << ",negfrac@" << to_fraction_string(eps);
    for (const auto& eps : eps_list) out << ",fired@" << to_fraction_string(eps);
    out << "\n";
    for (const auto& spec : specs) {
      const Graph g = generate(spec);
      const Spectrum s = spectrum(g);
      const CurvatureProfile kappa = curvature_profile(g, eps_list, ctx.threads);
      const double sparsity = sparsity_functional(g);
      out << spec.label() << "," << g.vertex_count() << "," << g.edge_count() << ","
          << g.max_degree() << "," << fmt(sparsity) << ","
          << fmt(s.size() > 1 ? s.eigenvalues[1] : 1.0) << ",";
      std::int64_t count = 0;
      for (double lambda : s.eigenvalues) {
        if (at_least_rho ? lambda >= rho : lambda > rho) ++count;
      }
      out << count << "," << to_fraction_string(kappa.min_kappa);
      for (const auto& [eps, fraction] : kappa.negative_fraction_at) {
        out << "," << to_fraction_string(fraction);
      }
      // Same degree-grouped boundary-exact comparison as the trichotomy module.
      double sparsity_lhs = 0.0;
      {
        std::vector<std::int64_t> count_by_degree(g.max_degree() + 1, 0);
        for (int v = 0; v < g.vertex_count(); ++v) ++count_by_degree[g.degree(v)];
        for (std::size_t d = 2; d < count_by_degree.size(); ++d) {
          if (count_by_degree[d] > 0) {
            sparsity_lhs += static_cast<double>(count_by_degree[d]) *
                            (static_cast<double>(d) * std::log(static_cast<double>(d)));
          }
        }
      }
      const bool sparsity_fired =
          sparsity_lhs > static_cast<double>(g.vertex_count()) *
                             (static_cast<double>(delta) * std::log(static_cast<double>(delta)));
      for (std::size_t i = 0; i < eps_list.size(); ++i) {
        const bool expansion_fired = Rational(count) >= eps_list[i] * g.vertex_count();
        const bool curvature_fired = kappa.negative_fraction_at[i].second >= eps_list[i];
        out << ","
            << (sparsity_fired    ? "sparsity"
                : expansion_fired ? "expansion"
                : curvature_fired ? "curvature"
                                  : "none");
      }
      out << "\n";
    }
    emit(out.str(), out_path, ctx, manifest_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const riccigap::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const riccigap::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const riccigap::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}

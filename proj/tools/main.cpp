#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latentfs/dataset.hpp"
#include "latentfs/errors.hpp"
#include "latentfs/graph.hpp"
#include "latentfs/jsonfmt.hpp"
#include "latentfs/plsa.hpp"
#include "latentfs/quantizer.hpp"
#include "latentfs/ranker.hpp"
#include "latentfs/rng.hpp"
#include "latentfs/synth.hpp"
#include "latentfs/verify.hpp"

namespace {

using namespace latentfs;

struct RankOptions {
  std::string input;
  std::string label_column = "label";
  int bins = 6;
  std::string phi_mode = "prose";
  double damping = 0.9;
  int em_max_iter = 100;
  double em_tol = 1e-6;
  int top = 0;  // 0 means "not set"
  std::string output;
  std::string dump_model;
  std::string dump_graph;
  bool zero_diagonal = false;
};

struct SynthOptions {
  std::size_t samples = 200;
  std::size_t informative = 5;
  std::size_t noise = 45;
  double separation = 3.0;
  std::uint64_t seed = 1;
  std::string output;
};

struct VerifyOptions {
  int trials = 50;
  std::uint64_t seed = 1234;
};

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << content;
  if (!out) throw Error("IoError", "short write to " + path);
}

std::string ranking_json(const Ranking &ranking, const RankOptions &opt) {
  std::vector<int> order = ranking.order;
  if (opt.top > 0 && static_cast<std::size_t>(opt.top) < order.size()) {
    order.resize(static_cast<std::size_t>(opt.top));
  }
  std::string json = "{\n";
  json += "  \"order\": " + fmt_int_array(order) + ",\n";
  json += "  \"scores\": " + fmt_double_array(ranking.scores) + ",\n";
  json += "  \"r\": " + fmt_double(ranking.r) + ",\n";
  json += "  \"spectral_radius\": " + fmt_double(ranking.spectral_radius) + ",\n";
  json += "  \"params\": {";
  json += "\"bins\": " + std::to_string(opt.bins);
  json += ", \"phi_mode\": \"" + opt.phi_mode + "\"";
  json += ", \"damping\": " + fmt_double(opt.damping);
  json += ", \"em_max_iter\": " + std::to_string(opt.em_max_iter);
  json += ", \"em_tol\": " + fmt_double(opt.em_tol);
  json += ", \"zero_diagonal\": " + std::string(opt.zero_diagonal ? "true" : "false");
  json += ", \"label_column\": \"" + json_escape(opt.label_column) + "\"";
  json += ", \"top\": " + (opt.top > 0 ? std::to_string(opt.top) : "null");
  json += "}\n}\n";
  return json;
}

std::string model_json(const PlsaModel &model) {
  std::string json = "{\n";
  json += "  \"p_z\": [" + fmt_double(model.p_z[0]) + ", " + fmt_double(model.p_z[1]) + "],\n";
  json += "  \"p_t_given_z\": [";
  for (int z = 0; z < kNumTopics; ++z) {
    std::vector<double> column(model.p_t_given_z.rows());
    for (std::size_t t = 0; t < column.size(); ++t) column[t] = model.p_t_given_z(t, z);
    json += (z ? ", " : "") + fmt_double_array(column);
  }
  json += "],\n";
  json += "  \"p_z_given_f\": [";
  for (std::size_t f = 0; f < model.p_z_given_f.rows(); ++f) {
    if (f) json += ", ";
    json += "[" + fmt_double(model.p_z_given_f(f, 0)) + ", " +
            fmt_double(model.p_z_given_f(f, 1)) + "]";
  }
  json += "],\n";
  json += "  \"trace\": " + fmt_double_array(model.log_likelihood_trace) + ",\n";
  json += "  \"iterations\": " + std::to_string(model.iterations_run) + ",\n";
  json += "  \"converged\": " + std::string(model.converged ? "true" : "false") + "\n";
  json += "}\n";
  return json;
}

std::string graph_csv(const Matrix &a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ",";
      out += fmt_double(a(i, j));
    }
    out += "\n";
  }
  return out;
}

int cmd_rank(const RankOptions &opt) {
  const FeatureMatrix data = load_csv(opt.input, opt.label_column);

  RankParams params;
  params.n_tokens = opt.bins;
  params.phi_mode = opt.phi_mode == "literal" ? PhiMode::kLiteral : PhiMode::kProse;
  params.em.max_iterations = opt.em_max_iter;
  params.em.rel_tolerance = opt.em_tol;
  params.damping = opt.damping;
  params.zero_diagonal = opt.zero_diagonal;

  const TokenizedFeatures tokenized = quantize_all(data, params.n_tokens, params.phi_mode);
  const PlsaModel model = fit(tokenized.counts, params.em);
  const AffinityGraph graph = build_graph(model, params.zero_diagonal);
  const Ranking ranking = rank_graph(graph, params.damping);

  if (!opt.dump_model.empty()) write_file(opt.dump_model, model_json(model));
  if (!opt.dump_graph.empty()) write_file(opt.dump_graph, graph_csv(graph.a));

  const std::string json = ranking_json(ranking, opt);
  if (opt.output.empty()) {
    std::cout << json;
  } else {
    write_file(opt.output, json);
  }

  std::fprintf(stderr, "rank: n=%zu m=%zu K=%d r=%.6g rho=%.6g iterations=%d converged=%s\n",
               data.num_features(), data.num_samples(), data.num_classes, ranking.r,
               ranking.spectral_radius, model.iterations_run,
               model.converged ? "yes" : "no");
  return 0;
}

int cmd_synth(const SynthOptions &opt) {
  SynthSpec spec;
  spec.n_samples = opt.samples;
  spec.n_informative = opt.informative;
  spec.n_noise = opt.noise;
  spec.separation = opt.separation;
  spec.seed = opt.seed;

  const SynthData result = generate(spec);
  save_csv(result.data, opt.output);

  const std::string meta_path = opt.output + ".meta.json";
  std::string meta = "{\n";
  meta += "  \"informative\": " + fmt_int_array(result.informative) + ",\n";
  meta += "  \"n_samples\": " + std::to_string(spec.n_samples) + ",\n";
  meta += "  \"n_informative\": " + std::to_string(spec.n_informative) + ",\n";
  meta += "  \"n_noise\": " + std::to_string(spec.n_noise) + ",\n";
  meta += "  \"separation\": " + fmt_double(spec.separation) + ",\n";
  meta += "  \"seed\": " + std::to_string(spec.seed) + "\n";
  meta += "}\n";
  write_file(meta_path, meta);

  std::fprintf(stderr, "synth: wrote %s and %s (m=%zu, n=%zu, informative=%zu)\n",
               opt.output.c_str(), meta_path.c_str(), spec.n_samples,
               spec.n_informative + spec.n_noise, spec.n_informative);
  return 0;
}

int cmd_verify(const VerifyOptions &opt) {
  const verify::SuiteResult suites[] = {
      verify::series_suite(opt.trials, opt.seed),
      verify::enumeration_suite(opt.trials, opt.seed + 1),
      verify::markov_suite(opt.trials, opt.seed + 2),
  };
  bool all_pass = true;
  for (const auto &suite : suites) {
    std::printf("%s: trials=%d max_deviation=%s tolerance=%s %s\n", suite.name.c_str(),
                suite.trials, fmt_double(suite.max_deviation).c_str(),
                fmt_double(suite.tolerance).c_str(), suite.pass ? "pass" : "FAIL");
    all_pass = all_pass && suite.pass;
  }
  if (!all_pass) {
    for (const auto &suite : suites) {
      if (!suite.pass) {
        std::cerr << "error:VerificationFailed: " << suite.name << " suite: "
                  << suite.first_failure << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

std::string check_open_unit_interval(const std::string &value) {
  try {
    const double v = std::stod(value);
    if (v <= 0.0 || v >= 1.0) return "value must be strictly between 0 and 1";
  } catch (...) {
    return "not a number";
  }
  return {};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"latent relevancy feature ranking"};
  app.require_subcommand(1);

  RankOptions rank_opt;
  CLI::App *rank_cmd = app.add_subcommand("rank", "rank the feature columns of a CSV table");
  rank_cmd->add_option("--input", rank_opt.input, "CSV file with a header row")
      ->required()
      ->check(CLI::ExistingFile);
  rank_cmd->add_option("--label-column", rank_opt.label_column, "name of the class column")
      ->capture_default_str();
  rank_cmd->add_option("--bins", rank_opt.bins, "number of quantization tokens")
      ->capture_default_str()
      ->check(CLI::Range(2, 4096));
  rank_cmd->add_option("--phi-mode", rank_opt.phi_mode, "class score mode")
      ->capture_default_str()
      ->check(CLI::IsMember({"prose", "literal"}));
  rank_cmd->add_option("--damping", rank_opt.damping, "walk damping, in (0, 1)")
      ->capture_default_str()
      ->check(check_open_unit_interval);
  rank_cmd->add_option("--em-max-iter", rank_opt.em_max_iter, "EM iteration cap")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  rank_cmd->add_option("--em-tol", rank_opt.em_tol, "EM relative tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  rank_cmd->add_option("--top", rank_opt.top, "truncate the order array to this many entries")
      ->check(CLI::PositiveNumber);
  rank_cmd->add_option("--output", rank_opt.output, "write the ranking JSON here instead of stdout");
  rank_cmd->add_option("--dump-model", rank_opt.dump_model, "write fitted model JSON here");
  rank_cmd->add_option("--dump-graph", rank_opt.dump_graph, "write the affinity matrix CSV here");
  rank_cmd->add_flag("--zero-diagonal", rank_opt.zero_diagonal, "drop graph self loops");

  SynthOptions synth_opt;
  CLI::App *synth_cmd = app.add_subcommand("synth", "generate a two-class benchmark CSV");
  synth_cmd->add_option("--samples", synth_opt.samples, "number of rows")
      ->capture_default_str()
      ->check(CLI::Range(2, 100000000));
  synth_cmd->add_option("--informative", synth_opt.informative, "separated feature count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--noise", synth_opt.noise, "pure noise feature count")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--separation", synth_opt.separation, "class mean gap, in sigmas")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth_opt.seed, "generator seed")->capture_default_str();
  synth_cmd->add_option("--output", synth_opt.output, "CSV path; a .meta.json sidecar is added")
      ->required();

  VerifyOptions verify_opt;
  CLI::App *verify_cmd = app.add_subcommand("verify", "run the oracle cross-check suites");
  verify_cmd->add_option("--trials", verify_opt.trials, "random cases per suite")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--seed", verify_opt.seed, "generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(rank_opt);
    if (synth_cmd->parsed()) return cmd_synth(synth_opt);
    if (verify_cmd->parsed()) return cmd_verify(verify_opt);
  } catch (const Error &e) {
    std::cerr << "error:" << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error:Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

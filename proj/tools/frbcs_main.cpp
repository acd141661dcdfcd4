#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frbcs/dataset.hpp"
#include "frbcs/eval.hpp"
#include "frbcs/report.hpp"
#include "frbcs/rule_engine.hpp"
#include "frbcs/stats.hpp"
#include "frbcs/tnorm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitDataError = 2;
constexpr int kExitNumericError = 3;

struct DataSpec {
  std::string path;
  int label_column = -1;
  bool has_header = false;
};

// "path[:label-col]" -- the suffix is a label column only when it parses
// as an integer, so paths containing ':' stay usable.
DataSpec parse_data_spec(const std::string& spec, bool header) {
  DataSpec ds;
  ds.has_header = header;
  auto pos = spec.rfind(':');
  if (pos != std::string::npos && pos + 1 < spec.size()) {
    std::string suffix = spec.substr(pos + 1);
    try {
      std::size_t used = 0;
      int col = std::stoi(suffix, &used);
      if (used == suffix.size()) {
        ds.path = spec.substr(0, pos);
        ds.label_column = col;
        return ds;
      }
    } catch (const std::exception&) {
    }
  }
  ds.path = spec;
  return ds;
}

// "name[:alpha]"
frbcs::TNorm parse_tnorm_spec(const std::string& spec) {
  auto pos = spec.rfind(':');
  std::string name = spec;
  double alpha;
  bool have_alpha = false;
  if (pos != std::string::npos) {
    name = spec.substr(0, pos);
    alpha = std::stod(spec.substr(pos + 1));
    have_alpha = true;
  }
  auto kind = frbcs::parse_kind(name);
  if (!have_alpha) alpha = frbcs::default_alpha(kind);
  return frbcs::validate(kind, alpha);
}

std::vector<frbcs::TNorm> all_default_tnorms() {
  std::vector<frbcs::TNorm> out;
  for (int i = 0; i < frbcs::kTNormKindCount; ++i) {
    auto kind = static_cast<frbcs::TNormKind>(i);
    out.push_back(frbcs::validate(kind, frbcs::default_alpha(kind)));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

struct RunSettings {
  std::vector<DataSpec> data;
  std::vector<frbcs::TNorm> tnorms;
  std::vector<std::string> tnorm_labels;
  int repeats = 5;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
  std::string formats = "csv,md";
  frbcs::EvalOptions eval;
};

void apply_json_config(const std::string& path, RunSettings& s, bool header_flag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  nlohmann::json cfg = nlohmann::json::parse(in);
  for (const auto& d : cfg.value("datasets", nlohmann::json::array())) {
    DataSpec spec;
    spec.path = d.at("path").get<std::string>();
    spec.label_column = d.value("label_column", -1);
    spec.has_header = d.value("header", header_flag);
    s.data.push_back(spec);
  }
  for (const auto& t : cfg.value("tnorms", nlohmann::json::array())) {
    auto kind = frbcs::parse_kind(t.at("kind").get<std::string>());
    double alpha = t.value("alpha", frbcs::default_alpha(kind));
    s.tnorms.push_back(frbcs::validate(kind, alpha));
  }
  s.repeats = cfg.value("repeats", s.repeats);
  s.seed = cfg.value("seed", s.seed);
  s.out_dir = cfg.value("out", s.out_dir);
  s.formats = cfg.value("format", s.formats);
  if (cfg.value("global_normalization", false)) s.eval.global_normalization = true;
  if (cfg.value("weight_scheme", std::string("cf")) == "conf-supp") {
    s.eval.scheme = frbcs::WeightScheme::ConfTimesSupp;
  }
}

int do_run(const RunSettings& settings) {
  std::vector<frbcs::Dataset> datasets;
  for (const auto& spec : settings.data) {
    frbcs::LoadOptions opts{spec.has_header, spec.label_column};
    auto ds = frbcs::load_csv(spec.path, opts);
    std::cerr << "loaded " << ds.name << ": m=" << ds.size() << " n="
              << ds.dimensionality() << " C=" << ds.class_count()
              << " dropped_rows=" << ds.dropped_rows << "\n";
    datasets.push_back(std::move(ds));
  }

  std::vector<std::vector<frbcs::CellStats>> stats;
  auto matrix = frbcs::run_matrix(datasets, settings.tnorms, settings.repeats,
                                  settings.seed, settings.eval, &stats);

  for (std::size_t i = 0; i < datasets.size(); ++i) {
    for (std::size_t j = 0; j < settings.tnorms.size(); ++j) {
      std::cerr << "cell " << matrix.dataset_names[i] << " x "
                << matrix.tnorm_names[j] << " (alpha="
                << settings.tnorms[j].alpha << ", seed=" << settings.seed
                << "): acc=" << matrix.accuracies[i][j]
                << " mean_rules=" << stats[i][j].mean_rule_count
                << " rejection_rate=" << stats[i][j].rejection_rate << "\n";
    }
  }

  std::filesystem::create_directories(settings.out_dir);
  std::filesystem::path out(settings.out_dir);
  bool csv = settings.formats.find("csv") != std::string::npos;
  bool md = settings.formats.find("md") != std::string::npos;
  if (csv) write_file(out / "accuracy.csv", frbcs::accuracy_csv(matrix));
  if (md) write_file(out / "accuracy.md", frbcs::accuracy_markdown(matrix));

  auto ranks = frbcs::rank_rows(matrix);
  if (datasets.size() >= 2 && settings.tnorms.size() >= 2) {
    auto result = frbcs::friedman(ranks);
    write_file(out / "ranks.md",
               frbcs::rank_markdown(result, ranks.algorithm_names));
    write_file(out / "friedman.md", frbcs::friedman_summary(result));
  } else {
    write_file(out / "ranks.md",
               "Ranking requires at least 2 datasets and 2 T-norms.\n");
  }
  return kExitOk;
}

int do_dump_rules(const DataSpec& spec, const frbcs::TNorm& tnorm) {
  auto ds = frbcs::load_csv(spec.path, {spec.has_header, spec.label_column});
  auto model = frbcs::NormalizationModel::fit(ds);
  auto norm = model.transform(ds);
  auto rs = frbcs::generate(norm, tnorm);
  auto rules = rs.rules;
  std::stable_sort(rules.begin(), rules.end(),
                   [](const frbcs::Rule& a, const frbcs::Rule& b) {
                     return a.weight > b.weight;
                   });
  std::cout << rules.size() << " rules (" << frbcs::kind_name(tnorm.kind)
            << ", alpha=" << tnorm.alpha << ")\n";
  for (const auto& r : rules) std::cout << frbcs::dump_rule(r) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy rule-based classification benchmark"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run the cross-validation accuracy matrix");
  std::vector<std::string> data_args, tnorm_args;
  std::string config_path;
  bool header = false, global_norm = false;
  std::string weight_scheme = "cf";
  RunSettings settings;
  run->add_option("--data", data_args, "Dataset CSV, as path[:label-col] (repeatable)");
  run->add_option("--tnorm", tnorm_args,
                  "T-norm as name[:alpha] (repeatable; default: all nine)");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--repeats", settings.repeats, "Cross-validation repetitions");
  run->add_option("--seed", settings.seed, "Base random seed");
  run->add_option("--out", settings.out_dir, "Output directory");
  run->add_option("--format", settings.formats, "Report formats: csv,md");
  run->add_flag("--header", header, "Dataset files start with a header row");
  run->add_flag("--global-norm", global_norm,
                "Fit normalization on the whole dataset instead of per fold");
  run->add_option("--weight-scheme", weight_scheme,
                  "Rule weight: 'cf' (default) or 'conf-supp'");

  auto* dump = app.add_subcommand("dump-rules", "Print the rule base for a dataset");
  std::string dump_data, dump_tnorm = "product";
  std::uint64_t dump_seed = 42;
  bool dump_header = false;
  dump->add_option("--data", dump_data, "Dataset CSV, as path[:label-col]")->required();
  dump->add_option("--tnorm", dump_tnorm, "T-norm as name[:alpha]");
  dump->add_option("--seed", dump_seed, "Seed (accepted for config traceability)");
  dump->add_flag("--header", dump_header, "Dataset file starts with a header row");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (!config_path.empty()) apply_json_config(config_path, settings, header);
      for (const auto& d : data_args) settings.data.push_back(parse_data_spec(d, header));
      for (const auto& t : tnorm_args) settings.tnorms.push_back(parse_tnorm_spec(t));
      if (settings.tnorms.empty()) settings.tnorms = all_default_tnorms();
      if (global_norm) settings.eval.global_normalization = true;
      if (weight_scheme == "conf-supp") {
        settings.eval.scheme = frbcs::WeightScheme::ConfTimesSupp;
      } else if (weight_scheme != "cf") {
        std::cerr << "error: unknown weight scheme '" << weight_scheme << "'\n";
        return kExitConfigError;
      }
      if (settings.data.empty()) {
        std::cerr << "error: no datasets given (--data or --config)\n";
        return kExitConfigError;
      }
      return do_run(settings);
    }
    return do_dump_rules(parse_data_spec(dump_data, dump_header),
                         parse_tnorm_spec(dump_tnorm));
  } catch (const frbcs::ParameterOutOfDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const frbcs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const frbcs::EmptyDataset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const frbcs::TooFewPatterns& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const frbcs::InsufficientAttributes& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
}

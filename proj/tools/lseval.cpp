// lseval: evaluates generative models by comparing a real and a generated
// sample set (likeness score, 1-NN two-sample test, sliced Wasserstein)
// plus classifier-output scores (IS, MS, AM, FID), histogram diagnostics,
// and a synthetic virtual-GAN benchmark builder.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "lsmetrics/classic_scores.hpp"
#include "lsmetrics/errors.hpp"
#include "lsmetrics/io.hpp"
#include "lsmetrics/nn_two_sample.hpp"
#include "lsmetrics/separability.hpp"
#include "lsmetrics/sliced_wasserstein.hpp"
#include "lsmetrics/synthetic.hpp"
#include "lsmetrics/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitConstraintError = 3;

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lsm::IoError("cannot open for digest: " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char b[3];
    std::snprintf(b, sizeof b, "%02x", digest[i]);
    hex += b;
  }
  return hex;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct ReportBuilder {
  json report;

  ReportBuilder(const std::string& command, std::optional<std::uint64_t> seed,
                bool with_timestamp) {
    report["tool_version"] = lsm::kVersion;
    report["command"] = command;
    if (seed) {
      report["seed"] = *seed;
    } else {
      report["seed"] = nullptr;
    }
    report["inputs"] = json::object();
    report["metrics"] = json::object();
    if (with_timestamp) report["timestamp"] = iso_timestamp();
  }

  void add_input(const fs::path& path) {
    report["inputs"][path.string()] = sha256_file(path);
  }

  void add_metric(const std::string& name, double value, json details) {
    report["metrics"][name] = {{"value", value}, {"details", details}};
  }

  void write(const fs::path& path) const {
    std::ofstream out(path);
    if (!out) throw lsm::IoError("cannot write report: " + path.string());
    out << report.dump(2) << '\n';
  }
};

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void print_metric_row(const std::string& name, double value) {
  std::printf("  %-10s %.6f\n", name.c_str(), value);
}

struct ScoreOptions {
  std::string real_path, gen_path;
  std::string format = "dsetbin";
  std::string metrics = "ls";
  std::uint64_t seed = 0;
  std::size_t swd_slices = 100;
  std::size_t swd_repeats = 10;
  bool subset_average = false;
  unsigned threads = 0;
  std::string json_path;
  bool no_timestamp = false;
};

int run_score(const ScoreOptions& opt) {
  auto format = lsm::parse_format(opt.format);
  lsm::DataSet real = lsm::load_dataset(opt.real_path, format);
  lsm::DataSet gen = lsm::load_dataset(opt.gen_path, format);

  ReportBuilder rb("score", opt.seed, !opt.no_timestamp);
  rb.add_input(opt.real_path);
  rb.add_input(opt.gen_path);

  std::printf("score: real=%s (n=%zu d=%zu)  gen=%s (n=%zu d=%zu)\n",
              opt.real_path.c_str(), real.n, real.dim, opt.gen_path.c_str(),
              gen.n, gen.dim);

  for (const auto& metric : split_csv_list(opt.metrics)) {
    if (metric == "ls") {
      lsm::LsReport r = lsm::likeness_score(real, gen, opt.threads);
      rb.add_metric("ls", r.ls,
                    {{"s_r", r.s_r},
                     {"s_g", r.s_g},
                     {"dsi", r.dsi},
                     {"ks_icd_icd", r.ks_icd_icd},
                     {"n_icd_real", r.n_icd_real},
                     {"n_icd_gen", r.n_icd_gen},
                     {"n_bcd", r.n_bcd}});
      print_metric_row("ls", r.ls);
    } else if (metric == "r1nnc") {
      if (opt.subset_average) {
        lsm::SubsetAverageResult r =
            lsm::loo_1nn_subset_average(real, gen, opt.seed, opt.threads);
        rb.add_metric("r1nnc", r.mean_r1nnc,
                      {{"mean_accuracy", r.mean_accuracy},
                       {"per_subset_accuracy", r.per_subset_accuracy}});
        print_metric_row("r1nnc", r.mean_r1nnc);
      } else {
        lsm::NnTally t = lsm::loo_1nn_accuracy(real, gen, opt.threads);
        double reg = lsm::r1nnc(t.accuracy);
        rb.add_metric("r1nnc", reg,
                      {{"accuracy", t.accuracy},
                       {"correct_real", t.correct_real},
                       {"correct_gen", t.correct_gen}});
        print_metric_row("r1nnc", reg);
      }
    } else if (metric == "swd") {
      lsm::SwdReport r = lsm::sliced_wasserstein(
          real, gen, opt.swd_slices, opt.swd_repeats, opt.seed, opt.threads);
      rb.add_metric("swd", r.mean,
                    {{"stddev", r.stddev},
                     {"per_repeat", r.per_repeat},
                     {"n_slices", opt.swd_slices},
                     {"repeats", opt.swd_repeats}});
      print_metric_row("swd", r.mean);
    } else {
      throw lsm::ParameterError("unknown metric '" + metric + "'");
    }
  }
  if (!opt.json_path.empty()) rb.write(opt.json_path);
  return 0;
}

struct ClassicOptions {
  std::string probs_gen, probs_real;
  std::string features_real, features_gen;
  std::string features_format = "dsetbin";
  std::string metrics;
  std::string json_path;
  bool no_timestamp = false;
};

int run_classic(const ClassicOptions& opt) {
  ReportBuilder rb("classic", std::nullopt, !opt.no_timestamp);

  std::optional<lsm::ProbMatrix> pg, pr;
  if (!opt.probs_gen.empty()) {
    pg = lsm::load_prob_matrix(opt.probs_gen);
    rb.add_input(opt.probs_gen);
  }
  if (!opt.probs_real.empty()) {
    pr = lsm::load_prob_matrix(opt.probs_real);
    rb.add_input(opt.probs_real);
  }
  std::optional<lsm::DataSet> fr, fg;
  if (!opt.features_real.empty() && !opt.features_gen.empty()) {
    auto ff = lsm::parse_format(opt.features_format);
    fr = lsm::load_dataset(opt.features_real, ff);
    fg = lsm::load_dataset(opt.features_gen, ff);
    rb.add_input(opt.features_real);
    rb.add_input(opt.features_gen);
  }

  std::printf("classic scores:\n");
  for (const auto& metric : split_csv_list(opt.metrics)) {
    if (metric == "is") {
      if (!pg) throw lsm::ConstraintError("is requires --probs-gen");
      double v = lsm::inception_score(*pg);
      rb.add_metric("is", v, {{"n", pg->n}, {"k", pg->k}});
      print_metric_row("is", v);
    } else if (metric == "ms") {
      if (!pg || !pr) {
        throw lsm::ConstraintError("ms requires --probs-gen and --probs-real");
      }
      double v = lsm::mode_score(*pg, *pr);
      rb.add_metric("ms", v, {{"n_gen", pg->n}, {"n_real", pr->n}});
      print_metric_row("ms", v);
    } else if (metric == "am") {
      if (!pg || !pr) {
        throw lsm::ConstraintError("am requires --probs-gen and --probs-real");
      }
      double v = lsm::am_score(*pg, *pr);
      rb.add_metric("am", v, {{"n_gen", pg->n}, {"n_real", pr->n}});
      print_metric_row("am", v);
    } else if (metric == "fid") {
      if (!fr || !fg) {
        throw lsm::ConstraintError(
            "fid requires --features-real and --features-gen");
      }
      double v = lsm::fid(*fr, *fg);
      rb.add_metric("fid", v, {{"n_real", fr->n}, {"n_gen", fg->n}});
      print_metric_row("fid", v);
    } else {
      throw lsm::ParameterError("unknown metric '" + metric + "'");
    }
  }
  if (opt.metrics.empty()) {
    throw lsm::ParameterError("no metrics requested");
  }
  if (!opt.json_path.empty()) rb.write(opt.json_path);
  return 0;
}

struct HistOptions {
  std::string real_path, gen_path;
  std::string format = "dsetbin";
  std::size_t bins = 100;
  double zoom = 0.0;  // 0 means full range
  std::string out_path;
  unsigned threads = 0;
};

int run_hist(const HistOptions& opt) {
  auto format = lsm::parse_format(opt.format);
  lsm::DataSet real = lsm::load_dataset(opt.real_path, format);
  lsm::DataSet gen = lsm::load_dataset(opt.gen_path, format);
  std::optional<double> zoom;
  if (opt.zoom > 0.0) zoom = opt.zoom;
  lsm::HistogramTriple h =
      lsm::distance_histograms(real, gen, opt.bins, zoom, opt.threads);

  std::ofstream out(opt.out_path);
  if (!out) throw lsm::IoError("cannot write " + opt.out_path);
  out << "bin_left,bin_right,icd_real,icd_gen,bcd\n";
  char buf[160];
  for (std::size_t b = 0; b < opt.bins; ++b) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  h.edges[b], h.edges[b + 1], h.icd_real[b], h.icd_gen[b],
                  h.bcd[b]);
    out << buf;
  }
  if (!out) throw lsm::IoError("write failed: " + opt.out_path);
  std::printf("hist: wrote %zu bins to %s\n", opt.bins, opt.out_path.c_str());
  return 0;
}

struct SynthOptions {
  std::string images_path, labels_path, out_dir;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
};

int run_synth(const SynthOptions& opt) {
  lsm::DataSet images = lsm::load_dataset(opt.images_path, lsm::Format::idx);
  std::vector<int> labels = lsm::load_idx_labels(opt.labels_path);

  // IDX images are square in this pipeline (28x28 for MNIST); recover the
  // side length from the flattened dimensionality.
  auto side = static_cast<std::size_t>(std::lround(std::sqrt(
      static_cast<double>(images.dim))));
  if (side * side != images.dim) {
    throw lsm::ShapeError("synth expects square images");
  }

  lsm::VirtualSets vs =
      lsm::build_virtual_sets(images, labels, side, side, opt.seed);

  fs::create_directories(opt.out_dir);
  fs::path dir(opt.out_dir);
  json manifest;
  manifest["tool_version"] = lsm::kVersion;
  manifest["seed"] = opt.seed;
  manifest["corpus"] = {{opt.images_path, sha256_file(opt.images_path)},
                        {opt.labels_path, sha256_file(opt.labels_path)}};
  if (!opt.no_timestamp) manifest["timestamp"] = iso_timestamp();
  json counts;
  auto emit = [&](const char* name, const lsm::DataSet& ds) {
    lsm::save_dataset(ds, dir / (std::string(name) + ".dsetbin"),
                      lsm::Format::dsetbin);
    counts[name] = ds.n;
  };
  emit("real", vs.real);
  emit("opt", vs.opt);
  emit("lc", vs.lc);
  emit("ld", vs.ld);
  emit("lcd", vs.lcd);
  emit("lin", vs.lin);
  manifest["counts"] = counts;
  std::ofstream mf(dir / "manifest.json");
  mf << manifest.dump(2) << '\n';
  if (!mf) throw lsm::IoError("cannot write manifest");
  std::printf("synth: wrote 6 sets + manifest to %s\n", opt.out_dir.c_str());
  return 0;
}

struct MulticlassOptions {
  std::string data_path, labels_path;
  std::string agg = "max";
  unsigned threads = 0;
  std::string json_path;
  bool no_timestamp = false;
};

int run_multiclass(const MulticlassOptions& opt) {
  lsm::DataSet data = lsm::load_dataset(opt.data_path, lsm::Format::csv);
  data.labels = lsm::load_labels_csv(opt.labels_path);
  data.validate();

  lsm::Aggregation agg;
  if (opt.agg == "max") {
    agg = lsm::Aggregation::max;
  } else if (opt.agg == "avg") {
    agg = lsm::Aggregation::avg;
  } else {
    throw lsm::ParameterError("--agg must be max or avg");
  }

  lsm::MulticlassResult res = lsm::dsi_multiclass(data, agg, opt.threads);
  std::printf("multiclass DSI (%s): %.6f\n", opt.agg.c_str(), res.overall);
  for (std::size_t i = 0; i < res.class_ids.size(); ++i) {
    std::printf("  class %d: s = %.6f\n", res.class_ids[i], res.per_class[i]);
  }

  if (!opt.json_path.empty()) {
    ReportBuilder rb("multiclass", std::nullopt, !opt.no_timestamp);
    rb.add_input(opt.data_path);
    rb.add_input(opt.labels_path);
    json per_class = json::object();
    for (std::size_t i = 0; i < res.class_ids.size(); ++i) {
      per_class[std::to_string(res.class_ids[i])] = res.per_class[i];
    }
    rb.add_metric("dsi", res.overall,
                  {{"aggregation", opt.agg}, {"per_class", per_class}});
    rb.write(opt.json_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generative-model evaluation metrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lsm::kVersion);

  ScoreOptions score;
  auto* sc = app.add_subcommand("score", "LS / r1NNC / SWD on two sample sets");
  sc->add_option("--real", score.real_path)->required();
  sc->add_option("--gen", score.gen_path)->required();
  sc->add_option("--format", score.format, "idx, csv, or dsetbin");
  sc->add_option("--metrics", score.metrics, "comma list: ls,r1nnc,swd");
  sc->add_option("--seed", score.seed);
  sc->add_option("--swd-slices", score.swd_slices);
  sc->add_option("--swd-repeats", score.swd_repeats);
  sc->add_flag("--subset-average", score.subset_average,
               "allow unequal sizes for r1nnc by subset averaging");
  sc->add_option("--threads", score.threads);
  sc->add_option("--json", score.json_path);
  sc->add_flag("--no-timestamp", score.no_timestamp);

  ClassicOptions classic;
  auto* cc = app.add_subcommand("classic", "IS / MS / AM / FID from files");
  cc->add_option("--probs-gen", classic.probs_gen);
  cc->add_option("--probs-real", classic.probs_real);
  cc->add_option("--features-real", classic.features_real);
  cc->add_option("--features-gen", classic.features_gen);
  cc->add_option("--features-format", classic.features_format);
  cc->add_option("--metrics", classic.metrics, "comma list: is,ms,am,fid")
      ->required();
  cc->add_option("--json", classic.json_path);
  cc->add_flag("--no-timestamp", classic.no_timestamp);

  HistOptions hist;
  auto* hc = app.add_subcommand("hist", "ICD/BCD histogram CSV export");
  hc->add_option("--real", hist.real_path)->required();
  hc->add_option("--gen", hist.gen_path)->required();
  hc->add_option("--format", hist.format);
  hc->add_option("--bins", hist.bins);
  hc->add_option("--zoom", hist.zoom, "restrict to the lowest fraction of range");
  hc->add_option("--out", hist.out_path)->required();
  hc->add_option("--threads", hist.threads);

  SynthOptions synth;
  auto* yc = app.add_subcommand("synth", "build virtual-GAN benchmark sets");
  yc->add_option("--images", synth.images_path)->required();
  yc->add_option("--labels", synth.labels_path)->required();
  yc->add_option("--out-dir", synth.out_dir)->required();
  yc->add_option("--seed", synth.seed);
  yc->add_flag("--no-timestamp", synth.no_timestamp);

  MulticlassOptions mc;
  auto* mcc = app.add_subcommand("multiclass", "one-versus-others DSI");
  mcc->add_option("--data", mc.data_path)->required();
  mcc->add_option("--labels", mc.labels_path)->required();
  mcc->add_option("--agg", mc.agg, "max or avg");
  mcc->add_option("--threads", mc.threads);
  mcc->add_option("--json", mc.json_path);
  mcc->add_flag("--no-timestamp", mc.no_timestamp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (sc->parsed()) return run_score(score);
    if (cc->parsed()) return run_classic(classic);
    if (hc->parsed()) return run_hist(hist);
    if (yc->parsed()) return run_synth(synth);
    if (mcc->parsed()) return run_multiclass(mc);
  } catch (const lsm::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const lsm::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const lsm::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const lsm::Error& e) {
    // constraint, degenerate-input, shape, parameter, numerical
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstraintError;
  }
  return 0;
}

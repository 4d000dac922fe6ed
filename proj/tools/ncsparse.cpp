#include "ncsparse/io.hpp"
#include "ncsparse/oracle.hpp"
#include "ncsparse/parse.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef NCSPARSE_BENCH_DIR
#define NCSPARSE_BENCH_DIR "bench"
#endif

namespace fs = std::filesystem;
using namespace ncsparse;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kNotInIdeal = 2, kResource = 3, kUsage = 64 };

struct CertifyFlags {
  std::string path;
  std::optional<int> bound;
  bool no_prune = false;
  std::optional<std::string> weights;
  bool oracle = false;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::optional<double> time_budget;
  std::string out;
  int jobs = 1;
  int oracle_cap = 200000;
};

void print_human(std::ostream& os, const SparseCertificate& cert, const GeneratorSystem& sys) {
  const auto& vars = sys.vars();
  os << "claim: " << format_poly(cert.claim, vars) << '\n';
  os << "representation: " << format_element(cert.representation, sys) << '\n';
  os << "l0: " << cert.l0_weight << "  l1: " << to_string(cert.l1_weight) << '\n';
  os << "l0 optimal up to bound: " << (cert.l0_optimal_up_to_bound ? "yes" : "no") << '\n';
  const auto& s = cert.stats;
  os << "syzygy basis: " << s.syzygy_basis_size << "  relevant: " << s.relevant_syzygies
     << "  basis: " << s.basis_before_prune << " -> " << s.basis_after_prune << '\n';
  os << "system: " << s.rows << " x " << s.cols << ", " << s.nonzeros << " nonzeros, "
     << s.lp_pivots << " pivots\n";
}

int run_certify(const CertifyFlags& fl) {
  ProblemFile pf;
  try {
    pf = load_problem(fl.path);
  } catch (const InputError& e) {
    std::cerr << fl.path << ":" << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  int bound = fl.bound.value_or(pf.bound);
  if (bound < 1) {
    std::cerr << "bound must be at least 1\n";
    return kUsage;
  }
  PipelineOptions opts;
  WeightMode mode = pf.weights;
  if (fl.weights) mode = *fl.weights == "degree" ? WeightMode::Degree : WeightMode::Uniform;
  opts.weights.mode = mode;
  opts.prune = pf.prune && !fl.no_prune;
  opts.seed = fl.seed.value_or(pf.seed);
  opts.gb.time_budget = std::chrono::duration<double>(fl.time_budget.value_or(pf.time_budget));

  const GeneratorSystem& sys = pf.system;
  SparseCertificate cert;
  try {
    cert = sparsify_pipeline(pf.claim, sys, SignatureBound::degree(bound), pf.alpha, opts);
  } catch (const NotInIdealUpToBound& e) {
    std::cerr << "not in the ideal up to the bound; remainder: " << format_poly(e.remainder(), sys.vars())
              << '\n';
    std::cout << format_poly(e.remainder(), sys.vars()) << '\n';
    return kNotInIdeal;
  } catch (const BoundTooLarge& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const Timeout& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << fl.path << ": " << e.what() << '\n';
    return kUsage;
  }

  std::string text;
  if (fl.json) {
    text = certificate_json(cert, sys);
  } else {
    std::ostringstream os;
    print_human(os, cert, sys);
    text = os.str();
  }
  if (fl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(fl.out, std::ios::binary);
    out << text;
  }

  if (fl.oracle && cert.l0_weight > 0) {
    int n = static_cast<int>(cert.l0_weight) - 1;
    try {
      auto lighter = algorithm1(pf.claim, sys, n, static_cast<std::size_t>(fl.oracle_cap));
      if (lighter) {
        std::cerr << "oracle: representation with " << lighter->l0()
                  << " terms exists: " << format_element(*lighter, sys) << '\n';
        if (cert.l0_optimal_up_to_bound && lighter->wdeg() < bound) return kVerifyFailed;
      } else {
        std::cerr << "oracle: no representation with at most " << n << " terms\n";
      }
    } catch (const BoundTooLarge& e) {
      std::cerr << "oracle skipped: " << e.what() << '\n';
    }
  }
  return kOk;
}

int run_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return kVerifyFailed;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  VerifyResult r = verify_certificate_json(ss.str());
  if (r.ok) {
    std::cout << "certificate ok\n";
    return kOk;
  }
  std::cout << "certificate rejected: " << r.reason << '\n';
  return kVerifyFailed;
}

bool long_running(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line))
    if (line.find("long-running") != std::string::npos) return true;
  return false;
}

int run_bench(const std::string& dir, bool include_long) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".prob") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int status = kOk;
  for (const auto& p : files) {
    if (!include_long && long_running(p)) {
      std::cout << p.stem().string() << ": skipped (long-running, use --long)\n";
      continue;
    }
    try {
      ProblemFile pf = load_problem(p);
      PipelineOptions opts;
      opts.weights.mode = pf.weights;
      opts.prune = pf.prune;
      opts.seed = pf.seed;
      opts.gb.time_budget = std::chrono::duration<double>(pf.time_budget);
      auto t0 = std::chrono::steady_clock::now();
      auto cert = sparsify_pipeline(pf.claim, pf.system, SignatureBound::degree(pf.bound), pf.alpha, opts);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << p.stem().string() << ": bound " << pf.bound << ", l0 " << cert.l0_weight << ", l1 "
                << to_string(cert.l1_weight) << ", optimal " << (cert.l0_optimal_up_to_bound ? "yes" : "no")
                << ", matrix " << cert.stats.rows << "x" << cert.stats.cols << ", " << secs << " s\n";
    } catch (const std::exception& e) {
      std::cout << p.stem().string() << ": failed: " << e.what() << '\n';
      status = kResource;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify noncommutative ideal membership with sparse cofactor representations"};
  app.require_subcommand(1);

  CertifyFlags fl;
  auto* certify = app.add_subcommand("certify", "Run the pipeline on a problem file");
  certify->add_option("file", fl.path, "Problem file")->required();
  certify->add_option("--bound", fl.bound, "Degree bound (overrides the file)");
  certify->add_flag("--no-prune", fl.no_prune, "Skip redundancy pruning");
  certify->add_option("--weights", fl.weights, "Objective weights")->check(CLI::IsMember({"uniform", "degree"}));
  certify->add_flag("--oracle", fl.oracle, "Cross-check with exhaustive search below the found weight");
  certify->add_option("--oracle-cap", fl.oracle_cap, "Column cap for --oracle");
  certify->add_option("--seed", fl.seed, "Pruning seed (overrides the file)");
  certify->add_flag("--json", fl.json, "Emit the JSON certificate");
  certify->add_option("--time-budget", fl.time_budget, "Seconds for the syzygy basis, 0 = unlimited");
  certify->add_option("--out", fl.out, "Write the certificate to a file");
  certify->add_option("--jobs", fl.jobs, "Worker cap")->check(CLI::PositiveNumber);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a stored JSON certificate");
  verify->add_option("certificate", verify_path, "Certificate file")->required();

  std::string bench_dir = NCSPARSE_BENCH_DIR;
  bool bench_long = false;
  auto* bench = app.add_subcommand("bench", "Run the shipped benchmark problems");
  bench->add_option("--dir", bench_dir, "Directory of .prob files");
  bench->add_flag("--long", bench_long, "Include long-running problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*certify) return run_certify(fl);
  if (*verify) return run_verify(verify_path);
  if (*bench) return run_bench(bench_dir, bench_long);
  return kUsage;
}

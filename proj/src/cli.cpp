#include "circ/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "circ/array_io.hpp"
#include "circ/oracle_harness.hpp"
#include "circ/spectral_engine.hpp"

namespace circ {

namespace {

using nlohmann::json;

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot open output file: " + out_path);
  out << text;
}

void emit(const ArrayDocument& doc, const std::string& out_path) {
  emit_text(to_json(doc), out_path);
}

Complex parse_complex(const std::string& text) {
  try {
    std::size_t used = 0;
    const double re = std::stod(text, &used);
    if (used == text.size()) return Complex{re, 0.0};
    if (text[used] != ',') throw DomainError("");
    std::size_t used2 = 0;
    const std::string rest = text.substr(used + 1);
    const double im = std::stod(rest, &used2);
    if (used2 != rest.size()) throw DomainError("");
    return Complex{re, im};
  } catch (const std::exception&) {
    throw DomainError("cannot parse complex value '" + text + "' (want re or re,im)");
  }
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("CIRC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("CIRC_SEED is not an integer: ") + env);
    }
  }
  return flag_seed;
}

json report_json(const oracle::PropertyReport& r) {
  return json{{"property", r.property},
              {"instance", r.instance},
              {"residual", r.residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

int run_verify(const std::string& suite, std::size_t n_max, std::uint64_t seed,
               const std::string& out_path) {
  if (!oracle::is_known_suite(suite))
    throw DomainError("unknown suite '" + suite +
                      "' (want lemma1|lemma2|theorem1|theorem2|exercises|all)");
  const auto reports = oracle::run_suite(suite, n_max, seed);

  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.property << "  " << r.instance
              << "  residual=" << r.residual << "  tol=" << r.tolerance << "\n";
  }
  std::cout << "verify: " << passed << "/" << reports.size()
            << " properties passed (suite=" << suite << " n-max=" << n_max
            << " seed=" << seed << ")\n";

  if (!out_path.empty()) {
    json j{{"suite", suite},
           {"n_max", n_max},
           {"seed", seed},
           {"all_pass", passed == reports.size()}};
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(report_json(r));
    j["reports"] = std::move(rows);
    emit_text(j.dump(2) + "\n", out_path);
  }
  return passed == reports.size() ? 0 : 1;
}

double median_seconds(const std::vector<double>& samples) {
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  return sorted[sorted.size() / 2];
}

int run_bench(const std::vector<std::size_t>& sizes,
              const std::vector<std::string>& methods, std::uint64_t seed,
              const std::string& out_path) {
  for (const std::string& m : methods)
    if (m != "naive" && m != "spectral")
      throw DomainError("unknown method '" + m + "' (want naive|spectral)");

  using clock = std::chrono::steady_clock;
  json rows = json::array();

  for (std::size_t n : sizes) {
    if (n == 0) throw DomainError("bench: sizes must be >= 1");
    oracle::Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    const CVector x = oracle::random_cvector(n, rng);
    const CVector y = oracle::random_cvector(n, rng);

    const CVector baseline = circular_convolve(x, y);
    const ConvolutionPlan plan = make_default_plan(n);
    const CVector spectral = convolve_spectral(plan, x, y);

    double residual = 0.0, xmax = 0.0, ymax = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      residual = std::max(residual, std::abs(baseline[k] - spectral[k]));
      xmax = std::max(xmax, std::abs(x[k]));
      ymax = std::max(ymax, std::abs(y[k]));
    }
    const double contract = 1e-9 * double(n) * double(n) * xmax * ymax;
    if (residual > contract)
      throw NumericalContractError(
          "bench: spectral and naive convolution disagree at n = " +
          std::to_string(n));

    for (const std::string& method : methods) {
      std::vector<double> samples;
      for (int run = 0; run < 5; ++run) {
        const auto start = clock::now();
        if (method == "naive") {
          volatile double sink = std::abs(circular_convolve(x, y)[0]);
          (void)sink;
        } else {
          volatile double sink = std::abs(convolve_spectral(plan, x, y)[0]);
          (void)sink;
        }
        samples.push_back(std::chrono::duration<double>(clock::now() - start).count());
      }
      rows.push_back(json{{"size", n},
                          {"method", method},
                          {"plan", plan.method() == PlanMethod::radix2 ? "radix2"
                                                                       : "naive"},
                          {"median_seconds", median_seconds(samples)},
                          {"residual_vs_naive", method == "naive" ? 0.0 : residual},
                          {"residual_tolerance", contract}});
    }
  }

  json j{{"seed", seed}, {"runs_per_case", 5}, {"results", std::move(rows)}};
  emit_text(j.dump(2) + "\n", out_path);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"spectral toolkit for circulant matrices, circular convolution "
               "and the DFT on torus arrays"};
  app.require_subcommand(1);

  std::string in_path, a_path, b_path, out_path;
  double tol = 1e-8;
  std::string method = "naive";
  std::string ordering = "standard";
  std::vector<std::string> z_flags;
  std::string suite = "all";
  std::size_t n_max = 32;
  std::uint64_t seed = 7;
  std::vector<std::size_t> bench_sizes{256, 1024, 4096};
  std::vector<std::string> bench_methods{"naive", "spectral"};

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input array document (JSON, or .csv)")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
  };

  auto* cmd_dft = app.add_subcommand("dft", "forward DFT of a 1-D array");
  add_in(cmd_dft);
  add_out(cmd_dft);

  auto* cmd_idft = app.add_subcommand("idft", "inverse DFT of a 1-D spectrum");
  add_in(cmd_idft);
  add_out(cmd_idft);

  auto* cmd_dftu = app.add_subcommand("dft-unitary", "unitary (1/sqrt n) DFT");
  add_in(cmd_dftu);
  add_out(cmd_dftu);

  auto* cmd_conv = app.add_subcommand("conv", "circular convolution of two 1-D arrays");
  cmd_conv->add_option("--a", a_path, "left input")->required();
  cmd_conv->add_option("--b", b_path, "right input")->required();
  cmd_conv->add_option("--method", method, "naive|spectral (default naive)");
  add_out(cmd_conv);

  auto* cmd_eig = app.add_subcommand("eig", "eigenvalues of C_x from its vector x");
  add_in(cmd_eig);
  cmd_eig->add_option("--ordering", ordering, "standard|alternate (default standard)");
  add_out(cmd_eig);

  auto* cmd_circmat = app.add_subcommand("circmat", "emit the dense matrix C_x");
  add_in(cmd_circmat);
  add_out(cmd_circmat);

  auto* cmd_isc = app.add_subcommand(
      "is-circulant", "test a dense square matrix for circulant structure");
  add_in(cmd_isc);
  cmd_isc->add_option("--tol", tol, "commutator tolerance (default 1e-8)");
  add_out(cmd_isc);

  auto* cmd_zt = app.add_subcommand(
      "zt-eval", "evaluate the z-transform at one point (one --z per axis)");
  add_in(cmd_zt);
  cmd_zt->add_option("--z", z_flags, "evaluation point per axis, as re or re,im")
      ->required();
  add_out(cmd_zt);

  auto* cmd_nddft = app.add_subcommand("nd-dft", "multidimensional DFT");
  add_in(cmd_nddft);
  add_out(cmd_nddft);

  auto* cmd_ndidft = app.add_subcommand("nd-idft", "inverse multidimensional DFT");
  add_in(cmd_ndidft);
  add_out(cmd_ndidft);

  auto* cmd_ndconv = app.add_subcommand("nd-conv", "n-D circular convolution");
  cmd_ndconv->add_option("--a", a_path, "left input")->required();
  cmd_ndconv->add_option("--b", b_path, "right input")->required();
  add_out(cmd_ndconv);

  auto* cmd_ndeig = app.add_subcommand(
      "nd-eig", "eigenvalues of the circulant operator with impulse response x");
  add_in(cmd_ndeig);
  add_out(cmd_ndeig);

  auto* cmd_verify = app.add_subcommand("verify", "run a property suite");
  cmd_verify->add_option("--suite", suite,
                         "lemma1|lemma2|theorem1|theorem2|exercises|all");
  cmd_verify->add_option("--n-max", n_max, "largest 1-D size (default 32)");
  cmd_verify->add_option("--seed", seed, "RNG seed (CIRC_SEED overrides)");
  add_out(cmd_verify);

  auto* cmd_bench = app.add_subcommand("bench", "time naive vs spectral convolution");
  cmd_bench->add_option("--sizes", bench_sizes, "sizes (default 256,1024,4096)")
      ->delimiter(',');
  cmd_bench->add_option("--methods", bench_methods, "methods (default naive,spectral)")
      ->delimiter(',');
  cmd_bench->add_option("--seed", seed, "RNG seed (CIRC_SEED overrides)");
  add_out(cmd_bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_dft->parsed()) {
      emit(document_from(dft(to_cvector(read_document(in_path))), "dft"), out_path);
    } else if (cmd_idft->parsed()) {
      const ArrayDocument doc = read_document(in_path);
      const Spectrum s(to_cvector(doc).entries(),
                       doc.ordering.value_or(SpectrumOrdering::standard));
      emit(document_from(idft(s), "idft"), out_path);
    } else if (cmd_dftu->parsed()) {
      emit(document_from(dft_unitary(to_cvector(read_document(in_path))),
                         "dft_unitary"),
           out_path);
    } else if (cmd_conv->parsed()) {
      const CVector a = to_cvector(read_document(a_path));
      const CVector b = to_cvector(read_document(b_path));
      if (method == "naive") {
        emit(document_from(circular_convolve(a, b), "conv"), out_path);
      } else if (method == "spectral") {
        const ConvolutionPlan plan = make_default_plan(a.size());
        emit(document_from(convolve_spectral(plan, a, b), "conv"), out_path);
      } else {
        throw DomainError("unknown --method '" + method + "' (want naive|spectral)");
      }
    } else if (cmd_eig->parsed()) {
      const CVector x = to_cvector(read_document(in_path));
      if (ordering == "standard") {
        emit(document_from(eigenvalues_of_circulant(x), "eig"), out_path);
      } else if (ordering == "alternate") {
        emit(document_from(alternate_transform(x), "eig"), out_path);
      } else {
        throw DomainError("unknown --ordering '" + ordering +
                          "' (want standard|alternate)");
      }
    } else if (cmd_circmat->parsed()) {
      const CVector x = to_cvector(read_document(in_path));
      emit(document_from(CirculantMatrix{x}.to_dense(), "circmat"), out_path);
    } else if (cmd_isc->parsed()) {
      const DenseMatrix m = to_dense_matrix(read_document(in_path));
      const CirculantDetection det = is_circulant(m, tol);
      json j{{"circulant", det.circulant},
             {"commutator_norm", det.commutator_norm},
             {"tol", tol}};
      if (det.first_column)
        j["first_column"] =
            json::parse(to_json(document_from(*det.first_column, "first_column")));
      emit_text(j.dump(2) + "\n", out_path);
      return det.circulant ? 0 : 1;
    } else if (cmd_zt->parsed()) {
      const ArrayDocument doc = read_document(in_path);
      std::vector<Complex> z;
      for (const std::string& flag : z_flags) z.push_back(parse_complex(flag));
      Complex value;
      if (doc.dims.size() == 1) {
        if (z.size() != 1) throw DomainError("zt-eval: 1-D input takes exactly one --z");
        value = z_transform_eval(to_cvector(doc), z[0]);
      } else {
        value = nd_z_transform_eval(to_ndarray(doc), z);
      }
      emit(ArrayDocument{{1}, {value}, "zt_eval", std::nullopt}, out_path);
    } else if (cmd_nddft->parsed()) {
      emit(document_from(nd_dft(to_ndarray(read_document(in_path))), "nd_dft"),
           out_path);
    } else if (cmd_ndidft->parsed()) {
      emit(document_from(nd_idft(to_ndarray(read_document(in_path))), "nd_idft"),
           out_path);
    } else if (cmd_ndconv->parsed()) {
      const NdArray a = to_ndarray(read_document(a_path));
      const NdArray b = to_ndarray(read_document(b_path));
      emit(document_from(nd_convolve(a, b), "nd_conv"), out_path);
    } else if (cmd_ndeig->parsed()) {
      const NdCirculantOp op{to_ndarray(read_document(in_path))};
      emit(document_from(nd_eigenvalues(op), "nd_eig"), out_path);
    } else if (cmd_verify->parsed()) {
      return run_verify(suite, n_max, effective_seed(seed), out_path);
    } else if (cmd_bench->parsed()) {
      return run_bench(bench_sizes, bench_methods, effective_seed(seed), out_path);
    }
  } catch (const NumericalContractError& e) {
    std::cerr << "numerical contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("circ");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace circ

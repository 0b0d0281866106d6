// Command-line front end. Exit codes: 0 ok, 1 usage, 2 dimension or cap,
// 3 singular system, 4 I/O or parse, 5 verification failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "kronperm/equations.hpp"
#include "kronperm/kron.hpp"
#include "kronperm/mtx_io.hpp"
#include "kronperm/rng.hpp"
#include "kronperm/tpm.hpp"

namespace kp = kronperm;

namespace {

void withOutput(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    std::cout.flush();
    if (!std::cout) throw kp::IoError("failed while writing to standard output");
    return;
  }
  std::ofstream out(path);
  if (!out) throw kp::IoError("cannot open " + path + " for writing");
  writer(out);
  out.flush();
  if (!out) throw kp::IoError("failed while writing " + path);
}

// Comma-separated integer list. Conversion failures propagate as usage
// errors, not dimension errors.
std::vector<kp::Index> parseIndexList(const std::string& text) {
  std::vector<kp::Index> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    out.push_back(static_cast<kp::Index>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

kp::Permutation sigmaFromFlag(const std::string& oneBased) {
  return kp::Permutation::fromOneBased(parseIndexList(oneBased));
}

kp::MixedRadix dimsFromFlag(const std::string& raw) {
  return kp::MixedRadix(parseIndexList(raw));
}

std::vector<kp::Matrixd> readMatrices(const std::vector<std::string>& paths) {
  std::vector<kp::Matrixd> ms;
  ms.reserve(paths.size());
  for (const auto& path : paths) ms.push_back(kp::readMatrixFile(path));
  return ms;
}

double msBetween(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

void runBench(const kp::Permutation& sigma, const kp::MixedRadix& dims, long long trials,
              long long seed, kp::Index maxN) {
  const kp::TpmSpec spec(sigma, dims);
  const auto t0 = std::chrono::steady_clock::now();
  const kp::ImplicitTpm indexMap(spec);
  const auto t1 = std::chrono::steady_clock::now();
  const kp::SparseTpm coords(indexMap, maxN);
  const auto t2 = std::chrono::steady_clock::now();

  kp::Rng rng(static_cast<std::uint64_t>(seed));
  double indexMapMs = 0;
  double coordsMs = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    const kp::Vectord v = rng.integerVector(spec.size());
    const auto a0 = std::chrono::steady_clock::now();
    const kp::Vectord viaIndexMap = indexMap.apply(v);
    const auto a1 = std::chrono::steady_clock::now();
    const kp::Vectord viaCoords = coords.apply(v);
    const auto a2 = std::chrono::steady_clock::now();
    indexMapMs += msBetween(a0, a1);
    coordsMs += msBetween(a1, a2);
    if (!kp::exactlyEqual(viaIndexMap, viaCoords)) {
      throw kp::VerificationError("index-map and coordinate application disagree");
    }
  }

  // Timings go to stderr so that stdout stays byte-identical across runs.
  std::cout << "bench n=" << spec.size() << " k=" << dims.rank() << " trials=" << trials
            << " seed=" << seed << " agree=1\n";
  std::fprintf(stderr, "build-index-map-ms %.3f\n", msBetween(t0, t1));
  std::fprintf(stderr, "build-coords-ms %.3f\n", msBetween(t1, t2));
  std::fprintf(stderr, "apply-index-map-mean-ms %.6f\n", indexMapMs / static_cast<double>(trials));
  std::fprintf(stderr, "apply-coords-mean-ms %.6f\n", coordsMs / static_cast<double>(trials));
}

int runGuarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const kp::SingularSystemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const kp::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const kp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const kp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const kp::VerificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker products, tensor permutation matrices, and linear matrix equations"};
  app.require_subcommand(1);

  std::string sigmaRaw;
  std::string dimsRaw;
  std::vector<std::string> files;
  std::string aPath, bPath, cPath;
  std::string outPath;
  std::string format = "dense";
  int via = 0;
  long long trials = 10;
  long long seed = 0;
  long long maxN = kp::kDefaultMaterializeCap;
  bool verify = false;

  auto* tpmCmd = app.add_subcommand("tpm", "Write an explicit tensor permutation matrix");
  tpmCmd->add_option("--sigma", sigmaRaw, "permutation as 1-based image list, e.g. 2,3,1")
      ->required();
  tpmCmd->add_option("--dims", dimsRaw, "factor dimensions, e.g. 2,3,4")->required();
  tpmCmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"dense", "coo"}));
  tpmCmd->add_option("--max-n", maxN, "materialization cap for explicit matrices");
  tpmCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* kronCmd = app.add_subcommand("kron", "Kronecker product of matrix files, in order");
  kronCmd->add_option("files", files, "matrix files")->required();
  kronCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* permuteCmd =
      app.add_subcommand("permute", "Permuted Kronecker product A_sigma(1) (x) ... (x) A_sigma(k)");
  permuteCmd->add_option("--sigma", sigmaRaw, "permutation as 1-based image list")->required();
  permuteCmd->add_option("files", files, "matrix files")->required();
  permuteCmd->add_flag("--verify", verify,
                       "also compute the product by conjugation and compare");
  permuteCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* axbCmd = app.add_subcommand("solve-axb", "Solve A*X*B = C");
  axbCmd->add_option("a", aPath, "file holding A")->required();
  axbCmd->add_option("b", bPath, "file holding B")->required();
  axbCmd->add_option("c", cPath, "file holding C")->required();
  axbCmd->add_option("--via", via, "1: solve for vec(X); 2: solve for vec(X^T)")
      ->check(CLI::IsMember({1, 2}));
  axbCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* sylCmd = app.add_subcommand("solve-sylvester", "Solve A*X + X*B = C");
  sylCmd->add_option("a", aPath, "file holding A")->required();
  sylCmd->add_option("b", bPath, "file holding B")->required();
  sylCmd->add_option("c", cPath, "file holding C")->required();
  sylCmd->add_option("--via", via, "3: solve for vec(X); 4: solve for vec(X^T)")
      ->check(CLI::IsMember({3, 4}));
  sylCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* vecCmd = app.add_subcommand("vec", "Row-major vectorization of a matrix file");
  vecCmd->add_option("file", aPath, "matrix file")->required();
  vecCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* unvecCmd = app.add_subcommand("unvec", "Fold a column vector back into a matrix");
  unvecCmd->add_option("file", aPath, "column vector file")->required();
  unvecCmd->add_option("--dims", dimsRaw, "target shape ROWS,COLS")->required();
  unvecCmd->add_option("--out", outPath, "output file (default stdout)");

  auto* benchCmd =
      app.add_subcommand("bench", "Time index-map against coordinate-list application");
  benchCmd->add_option("--sigma", sigmaRaw, "permutation as 1-based image list")->required();
  benchCmd->add_option("--dims", dimsRaw, "factor dimensions")->required();
  benchCmd->add_option("--trials", trials, "number of random vectors")
      ->check(CLI::PositiveNumber);
  benchCmd->add_option("--seed", seed, "random seed");
  benchCmd->add_option("--max-n", maxN, "materialization cap for explicit matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  return runGuarded([&] {
    if (tpmCmd->parsed()) {
      const kp::TpmSpec spec(sigmaFromFlag(sigmaRaw), dimsFromFlag(dimsRaw));
      const kp::SparseTpm u(spec, static_cast<kp::Index>(maxN));
      withOutput(outPath, [&](std::ostream& os) {
        format == "coo" ? kp::writeCoo(os, u) : kp::writeDenseTpm(os, u);
      });
    } else if (kronCmd->parsed()) {
      const auto ms = readMatrices(files);
      const kp::Matrixd product = kp::kronMany(ms);
      withOutput(outPath, [&](std::ostream& os) { kp::writeMatrix(os, product); });
    } else if (permuteCmd->parsed()) {
      const kp::Permutation sigma = sigmaFromFlag(sigmaRaw);
      const auto ms = readMatrices(files);
      if (sigma.size() != static_cast<kp::Index>(ms.size())) {
        throw kp::DimensionError("permutation of size " + std::to_string(sigma.size()) +
                                 " does not match " + std::to_string(ms.size()) + " files");
      }
      kp::Matrixd product;
      if (verify) {
        product = kp::permuteKronProduct(sigma, ms);
      } else {
        std::vector<kp::Matrixd> permuted;
        permuted.reserve(ms.size());
        for (kp::Index j = 0; j < sigma.size(); ++j) {
          permuted.push_back(ms[static_cast<std::size_t>(sigma(j))]);
        }
        product = kp::kronMany(permuted);
      }
      withOutput(outPath, [&](std::ostream& os) { kp::writeMatrix(os, product); });
    } else if (axbCmd->parsed()) {
      const kp::AxbEquation eq(kp::readMatrixFile(aPath), kp::readMatrixFile(bPath),
                               kp::readMatrixFile(cPath));
      const auto route = via == 2 ? kp::AxbRoute::Transposed : kp::AxbRoute::Primal;
      const kp::Matrixd x = kp::solveAxb(eq, route);
      withOutput(outPath, [&](std::ostream& os) { kp::writeMatrix(os, x); });
      std::fprintf(stderr, "residual %.17g\n", kp::residualInf(eq, x));
    } else if (sylCmd->parsed()) {
      const kp::SylvesterEquation eq(kp::readMatrixFile(aPath), kp::readMatrixFile(bPath),
                                     kp::readMatrixFile(cPath));
      const auto route = via == 4 ? kp::SylvesterRoute::Transposed : kp::SylvesterRoute::Primal;
      const kp::Matrixd x = kp::solveSylvester(eq, route);
      withOutput(outPath, [&](std::ostream& os) { kp::writeMatrix(os, x); });
      std::fprintf(stderr, "residual %.17g\n", kp::residualInf(eq, x));
    } else if (vecCmd->parsed()) {
      const kp::Matrixd m = kp::readMatrixFile(aPath);
      const kp::Matrixd v = kp::vecRow(m);
      withOutput(outPath, [&](std::ostream& os) { kp::writeMatrix(os, v); });
    } else if (unvecCmd->parsed()) {
      const kp::Matrixd v = kp::readMatrixFile(aPath);
      const auto shape = parseIndexList(dimsRaw);
      if (shape.size() != 2) {
        throw kp::DimensionError("unvec needs --dims ROWS,COLS");
      }
      const kp::Matrixd m = kp::unvecRow(v, shape[0], shape[1]);
      withOutput(outPath, [&](std::ostream& os) { kp::writeMatrix(os, m); });
    } else if (benchCmd->parsed()) {
      runBench(sigmaFromFlag(sigmaRaw), dimsFromFlag(dimsRaw), trials, seed,
               static_cast<kp::Index>(maxN));
    }
  });
}

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

// Sorted eigenvalues with multiplicities, complete up to lambda_trust.
// Eigenvalues above the trust threshold may be present but incomplete.
struct SpectrumTable {
  std::vector<double> eigenvalues;      // strictly increasing
  std::vector<std::int64_t> multiplicities;
  double lambda_trust = 0.0;
  std::string model_tag;

  std::int64_t total_count() const;
  void validate() const;

  // closed-interval count N(lambda) = #{ lambda_j <= lambda }, with
  // multiplicity.  Throws TrustError above lambda_trust.
  std::int64_t count_below(double lambda) const;

  std::string to_csv() const;
  std::string metadata_json() const;
  void save(const std::filesystem::path& csv_path) const;  // + .meta.json sidecar
  static SpectrumTable load(const std::filesystem::path& csv_path);

  // merge raw (value, multiplicity) pairs, combining ties at relative
  // tolerance 1e-12, and sort ascending
  static SpectrumTable from_raw(std::vector<std::pair<double, std::int64_t>> raw,
                                double lambda_trust, std::string model_tag);
};

// Exact oscillator spectrum: j + d/2 with multiplicity p(j, d), complete up
// to lambda_max.
SpectrumTable oscillator_spectrum(int d, double lambda_max);

// j + d/2 + a*sqrt(j + d/2) with multiplicity p(j, d): fully degenerate
// clusters, no improvement in the eigenvalue-count remainder.
SpectrumTable sqrt_oscillator_spectrum(int d, double lambda_max, double a = 1.0);

// Functional-calculus spectrum of the oscillator plus the Hopf-type degree-1
// term with coefficients c: lambda_alpha = (|alpha|+d/2)
//   + (sum_j c_j (alpha_j + 1/2)) / sqrt(|alpha|+d/2).
// Requires max |c_j| < 1.
SpectrumTable diagonal_model_spectrum(const Eigen::VectorXd& c, double lambda_max);

// Restriction of a flow-commuting perturbation to one oscillator level.
struct LevelBlock {
  int level = 0;
  Eigen::MatrixXd matrix;  // dim = p(level, d), symmetric
};

// Per-level eigensolve: each block eigenvalue mu contributes
// (N + d/2) + mu / sqrt(N + d/2).  epsilon_bound is the subordination
// constant used for the conservative trust threshold.
SpectrumTable block_spectrum(const std::vector<LevelBlock>& blocks, int d,
                             double epsilon_bound, double lambda_max);

// Matrix of sum_jk A_jk a_j^dagger a_k on the level-N eigenspace (basis in
// lexicographic multi-index order).  A must be symmetric (real case).
Eigen::MatrixXd number_block(const Eigen::MatrixXd& A, int level, int d);

}  // namespace isospec

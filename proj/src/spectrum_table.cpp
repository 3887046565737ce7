#include "isospec/spectrum_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "isospec/csv.hpp"
#include "isospec/hermite.hpp"

namespace isospec {

std::int64_t SpectrumTable::total_count() const {
  std::int64_t n = 0;
  for (auto m : multiplicities) n += m;
  return n;
}

void SpectrumTable::validate() const {
  if (eigenvalues.size() != multiplicities.size())
    throw PreconditionError("SpectrumTable: parallel arrays differ in length");
  for (std::size_t i = 0; i + 1 < eigenvalues.size(); ++i)
    if (!(eigenvalues[i] < eigenvalues[i + 1]))
      throw PreconditionError("SpectrumTable: eigenvalues not strictly increasing");
  for (auto m : multiplicities)
    if (m <= 0) throw PreconditionError("SpectrumTable: nonpositive multiplicity");
}

std::int64_t SpectrumTable::count_below(double lambda) const {
  if (lambda > lambda_trust) {
    std::ostringstream msg;
    msg << "count requested at lambda=" << lambda << " above lambda_trust=" << lambda_trust;
    throw TrustError(msg.str());
  }
  auto it = std::upper_bound(eigenvalues.begin(), eigenvalues.end(), lambda);
  std::int64_t n = 0;
  for (std::size_t i = 0; i < std::size_t(it - eigenvalues.begin()); ++i)
    n += multiplicities[i];
  return n;
}

std::string SpectrumTable::to_csv() const {
  CsvWriter w({"eigenvalue", "multiplicity"});
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    w.raw_row(fmt17(eigenvalues[i]) + "," + std::to_string(multiplicities[i]));
  return w.str();
}

std::string SpectrumTable::metadata_json() const {
  nlohmann::json j;
  j["model_tag"] = model_tag;
  j["lambda_trust"] = lambda_trust;
  j["entries"] = eigenvalues.size();
  j["total_count"] = total_count();
  return j.dump(2) + "\n";
}

void SpectrumTable::save(const std::filesystem::path& csv_path) const {
  write_file_atomic(csv_path, to_csv());
  std::filesystem::path meta = csv_path;
  meta += ".meta.json";
  write_file_atomic(meta, metadata_json());
}

SpectrumTable SpectrumTable::load(const std::filesystem::path& csv_path) {
  SpectrumTable t;
  std::ifstream in(csv_path);
  if (!in) throw PreconditionError("cannot open " + csv_path.string());
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    t.eigenvalues.push_back(std::stod(line.substr(0, comma)));
    t.multiplicities.push_back(std::stoll(line.substr(comma + 1)));
  }
  std::filesystem::path meta = csv_path;
  meta += ".meta.json";
  std::ifstream min(meta);
  if (min) {
    nlohmann::json j = nlohmann::json::parse(min);
    t.lambda_trust = j.value("lambda_trust", 0.0);
    t.model_tag = j.value("model_tag", "");
  }
  t.validate();
  return t;
}

SpectrumTable SpectrumTable::from_raw(std::vector<std::pair<double, std::int64_t>> raw,
                                      double lambda_trust, std::string model_tag) {
  std::sort(raw.begin(), raw.end());
  SpectrumTable t;
  t.lambda_trust = lambda_trust;
  t.model_tag = std::move(model_tag);
  t.eigenvalues.reserve(raw.size());
  t.multiplicities.reserve(raw.size());
  for (const auto& [v, m] : raw) {
    if (!t.eigenvalues.empty() &&
        v - t.eigenvalues.back() <= 1e-12 * std::max(1.0, std::abs(v))) {
      t.multiplicities.back() += m;
    } else {
      t.eigenvalues.push_back(v);
      t.multiplicities.push_back(m);
    }
  }
  t.validate();
  return t;
}

SpectrumTable oscillator_spectrum(int d, double lambda_max) {
  if (lambda_max <= 0.5 * d) throw PreconditionError("oscillator_spectrum: lambda_max must exceed d/2");
  std::vector<std::pair<double, std::int64_t>> raw;
  std::int64_t jmax = std::int64_t(std::floor(lambda_max - 0.5 * d));
  for (std::int64_t j = 0; j <= jmax; ++j)
    raw.emplace_back(double(j) + 0.5 * d, std::int64_t(multiplicity(j, d)));
  return SpectrumTable::from_raw(std::move(raw), lambda_max, "oscillator d=" + std::to_string(d));
}

SpectrumTable sqrt_oscillator_spectrum(int d, double lambda_max, double a) {
  if (!(std::isfinite(lambda_max))) throw PreconditionError("sqrt_oscillator_spectrum: lambda_max must be finite");
  if (a < 0) throw PreconditionError("sqrt_oscillator_spectrum: a >= 0");
  std::vector<std::pair<double, std::int64_t>> raw;
  for (std::int64_t j = 0;; ++j) {
    double e = j + 0.5 * d;
    double lam = e + a * std::sqrt(e);
    raw.emplace_back(lam, std::int64_t(multiplicity(j, d)));
    if (lam > lambda_max) break;
  }
  std::ostringstream tag;
  tag << "sqrt_oscillator d=" << d << " a=" << a;
  return SpectrumTable::from_raw(std::move(raw), lambda_max, tag.str());
}

SpectrumTable diagonal_model_spectrum(const Eigen::VectorXd& c, double lambda_max) {
  int d = int(c.size());
  if (d < 1) throw PreconditionError("diagonal_model_spectrum: empty coefficient vector");
  double cmax = c.cwiseAbs().maxCoeff();
  if (!(cmax < 1.0))
    throw PreconditionError("diagonal_model_spectrum: subordination requires max |c_j| < 1");

  // smallest N with N + d/2 - cmax (N + d)/sqrt(N + d/2) > lambda_max
  std::int64_t n_max = 0;
  while (true) {
    double e = n_max + 0.5 * d;
    if (e - cmax * (n_max + d) / std::sqrt(e) > lambda_max) break;
    ++n_max;
    if (n_max > 100'000'000) throw PreconditionError("diagonal_model_spectrum: lambda_max too large");
  }

  std::vector<std::pair<double, std::int64_t>> raw;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    double e = n + 0.5 * d;
    double inv_sqrt_e = 1.0 / std::sqrt(e);
    for (const auto& alpha : level_multi_indices(int(n), d)) {
      double shift = 0.0;
      for (int j = 0; j < d; ++j) shift += c[j] * (alpha[j] + 0.5);
      raw.emplace_back(e + shift * inv_sqrt_e, 1);
    }
  }
  std::ostringstream tag;
  tag << "diagonal_model d=" << d << " c=(";
  for (int j = 0; j < d; ++j) tag << (j ? "," : "") << c[j];
  tag << ")";
  return SpectrumTable::from_raw(std::move(raw), lambda_max, tag.str());
}

SpectrumTable block_spectrum(const std::vector<LevelBlock>& blocks, int d,
                             double epsilon_bound, double lambda_max) {
  std::vector<std::pair<double, std::int64_t>> raw;
  int top_level = -1;
  for (const auto& blk : blocks) {
    top_level = std::max(top_level, blk.level);
    auto dim = std::int64_t(multiplicity(blk.level, d));
    if (blk.matrix.rows() != dim || blk.matrix.cols() != dim)
      throw PreconditionError("block_spectrum: block dimension != p(level, d)");
    double asym = (blk.matrix - blk.matrix.transpose()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, blk.matrix.cwiseAbs().maxCoeff());
    if (asym > 1e-12 * scale) throw PreconditionError("block_spectrum: asymmetric block");
    double e = blk.level + 0.5 * d;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (blk.matrix + blk.matrix.transpose()));
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      raw.emplace_back(e + es.eigenvalues()[i] / std::sqrt(e), 1);
  }
  // conservative trust: every level above top_level stays above lambda_trust
  double next = (top_level + 1) + 0.5 * d;
  double trust = next - epsilon_bound * (top_level + 1 + d) / std::sqrt(next);
  trust = std::min(trust, lambda_max);
  return SpectrumTable::from_raw(std::move(raw), trust, "block_spectrum d=" + std::to_string(d));
}

Eigen::MatrixXd number_block(const Eigen::MatrixXd& A, int level, int d) {
  if (A.rows() != d || A.cols() != d) throw PreconditionError("number_block: A must be d x d");
  auto idx = level_multi_indices(level, d);
  int dim = int(idx.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  // map multi-index -> position
  auto find = [&](const Eigen::VectorXi& a) {
    for (int i = 0; i < dim; ++i)
      if (idx[i] == a) return i;
    return -1;
  };
  for (int col = 0; col < dim; ++col) {
    const auto& alpha = idx[col];
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (A(j, k) == 0.0) continue;
        // a_j^dagger a_k |alpha> = sqrt(alpha_k (alpha_j + delta_jk... )) |alpha - e_k + e_j>
        if (alpha[k] == 0) continue;
        Eigen::VectorXi beta = alpha;
        beta[k] -= 1;
        double amp = std::sqrt(double(alpha[k]));
        amp *= std::sqrt(double(beta[j] + 1));
        beta[j] += 1;
        int row = find(beta);
        if (row >= 0) out(row, col) += A(j, k) * amp;
      }
    }
  }
  return out;
}

}  // namespace isospec

#include "isospec/symbol.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace isospec {

namespace {

constexpr double kTwoPi = 6.283185307179586477;

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

Eigen::MatrixXd flow_matrix(int d, double t) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  double c = std::cos(t), s = std::sin(t);
  for (int j = 0; j < d; ++j) {
    m(j, j) = c;
    m(j, d + j) = s;
    m(d + j, j) = -s;
    m(d + j, d + j) = c;
  }
  return m;
}

// int_0^{2pi} M(t)^T Q M(t) dt.  Entries are trig polynomials of degree 2 in
// t, so an 8-node periodic trapezoid sum is already exact.
Eigen::MatrixXd averaged_quadratic(const Eigen::MatrixXd& Q) {
  int n = int(Q.rows());
  int d = n / 2;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  const int nodes = 8;
  for (int k = 0; k < nodes; ++k) {
    Eigen::MatrixXd m = flow_matrix(d, kTwoPi * k / nodes);
    acc += m.transpose() * Q * m;
  }
  return acc * (kTwoPi / nodes);
}

}  // namespace

std::string term_kind_name(TermKind k) {
  switch (k) {
    case TermKind::QuadraticForm: return "quadratic_form";
    case TermKind::LinearForm: return "linear_form";
    case TermKind::RadialPower: return "radial_power";
    case TermKind::QuadraticOverRoot: return "quadratic_over_root";
    case TermKind::Constant: return "constant";
  }
  throw PreconditionError("unknown term kind");
}

TermKind term_kind_from_name(const std::string& name) {
  if (name == "quadratic_form") return TermKind::QuadraticForm;
  if (name == "linear_form") return TermKind::LinearForm;
  if (name == "radial_power") return TermKind::RadialPower;
  if (name == "quadratic_over_root") return TermKind::QuadraticOverRoot;
  if (name == "constant") return TermKind::Constant;
  throw PreconditionError("unknown term kind: " + name);
}

void HomogeneousTerm::validate(int d) const {
  require(degree >= 0 && degree <= 2, "term degree must be in {0,1,2}");
  switch (kind) {
    case TermKind::QuadraticForm:
      require(degree == 2, "quadratic_form requires degree 2");
      break;
    case TermKind::LinearForm:
      require(degree == 1, "linear_form requires degree 1");
      break;
    case TermKind::QuadraticOverRoot:
      require(degree == 1, "quadratic_over_root requires degree 1");
      break;
    case TermKind::RadialPower:
    case TermKind::Constant:
      break;
  }
  if (kind == TermKind::QuadraticForm || kind == TermKind::QuadraticOverRoot) {
    require(Q.rows() == 2 * d && Q.cols() == 2 * d, "Q must be 2d x 2d");
    double asym = (Q - Q.transpose()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, Q.cwiseAbs().maxCoeff());
    require(asym <= 1e-14 * scale, "Q must be symmetric to 1e-14");
  }
  if (kind == TermKind::LinearForm) {
    require(b.size() == 2 * d, "b must have length 2d");
  }
  if (kind == TermKind::Constant) {
    require(degree == 0, "constant requires degree 0");
  }
}

bool HomogeneousTerm::singular_at_origin() const {
  return kind == TermKind::QuadraticOverRoot ||
         (kind == TermKind::RadialPower && degree % 2 == 1);
}

double HomogeneousTerm::value(const PhasePoint& p) const {
  switch (kind) {
    case TermKind::QuadraticForm: {
      Eigen::VectorXd w = p.packed();
      return w.dot(Q * w);
    }
    case TermKind::LinearForm:
      return b.dot(p.packed());
    case TermKind::RadialPower: {
      double p2 = oscillator_energy(p);
      if (degree == 0) return coeff;
      if (degree == 2) return coeff * p2;
      if (p2 == 0.0) throw PreconditionError("radial_power of odd degree is singular at 0");
      return coeff * std::sqrt(p2);
    }
    case TermKind::QuadraticOverRoot: {
      Eigen::VectorXd w = p.packed();
      double r = w.norm();
      if (r == 0.0) throw PreconditionError("quadratic_over_root is singular at 0");
      return w.dot(Q * w) / r;
    }
    case TermKind::Constant:
      return coeff;
  }
  throw PreconditionError("unknown term kind");
}

Eigen::VectorXd HomogeneousTerm::gradient(const PhasePoint& p) const {
  Eigen::VectorXd w = p.packed();
  switch (kind) {
    case TermKind::QuadraticForm:
      return 2.0 * (Q * w);
    case TermKind::LinearForm:
      return b;
    case TermKind::RadialPower: {
      if (degree == 0) return Eigen::VectorXd::Zero(w.size());
      if (degree == 2) return coeff * w;
      double p2 = 0.5 * w.squaredNorm();
      if (p2 == 0.0) throw PreconditionError("radial_power gradient singular at 0");
      return (coeff / (2.0 * std::sqrt(p2))) * w;
    }
    case TermKind::QuadraticOverRoot: {
      double r = w.norm();
      if (r == 0.0) throw PreconditionError("quadratic_over_root gradient singular at 0");
      Eigen::VectorXd qw = Q * w;
      return (2.0 / r) * qw - (w.dot(qw) / (r * r * r)) * w;
    }
    case TermKind::Constant:
      return Eigen::VectorXd::Zero(w.size());
  }
  throw PreconditionError("unknown term kind");
}

HomogeneousTerm HomogeneousTerm::xray() const {
  HomogeneousTerm out = *this;
  switch (kind) {
    case TermKind::QuadraticForm:
    case TermKind::QuadraticOverRoot:
      out.Q = averaged_quadratic(Q);
      return out;
    case TermKind::LinearForm:
      out.b = Eigen::VectorXd::Zero(b.size());
      return out;
    case TermKind::RadialPower:
    case TermKind::Constant:
      out.coeff = kTwoPi * coeff;
      return out;
  }
  throw PreconditionError("unknown term kind");
}

Symbol Symbol::oscillator(int d) {
  HomogeneousTerm t;
  t.degree = 2;
  t.kind = TermKind::QuadraticForm;
  t.Q = 0.5 * Eigen::MatrixXd::Identity(2 * d, 2 * d);
  Symbol s;
  s.d = d;
  s.terms = {t};
  s.refresh_flags();
  return s;
}

Symbol Symbol::oscillator_plus(int d, const HomogeneousTerm& p1) {
  Symbol s = oscillator(d);
  s.terms.push_back(p1);
  s.validate();
  return s;
}

void Symbol::refresh_flags() {
  principal_is_oscillator = false;
  Eigen::MatrixXd q2 = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  bool any2 = false;
  for (const auto& t : terms) {
    if (t.degree != 2) continue;
    any2 = true;
    if (t.kind == TermKind::QuadraticForm) q2 += t.Q;
    else if (t.kind == TermKind::RadialPower) q2 += 0.5 * t.coeff * Eigen::MatrixXd::Identity(2 * d, 2 * d);
  }
  if (any2) {
    principal_is_oscillator =
        (q2 - 0.5 * Eigen::MatrixXd::Identity(2 * d, 2 * d)).cwiseAbs().maxCoeff() == 0.0;
  }
}

void Symbol::validate() const {
  require(d >= 1, "symbol dimension must be >= 1");
  for (const auto& t : terms) t.validate(d);
}

double Symbol::value(const PhasePoint& p) const {
  double acc = 0;
  for (const auto& t : terms) acc += t.value(p);
  return acc;
}

Eigen::VectorXd Symbol::gradient(const PhasePoint& p) const {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(2 * d);
  for (const auto& t : terms) acc += t.gradient(p);
  return acc;
}

double Symbol::degree_part(int degree, const PhasePoint& p) const {
  double acc = 0;
  for (const auto& t : terms)
    if (t.degree == degree) acc += t.value(p);
  return acc;
}

Eigen::VectorXd Symbol::degree_part_gradient(int degree, const PhasePoint& p) const {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(2 * d);
  for (const auto& t : terms)
    if (t.degree == degree) acc += t.gradient(p);
  return acc;
}

bool Symbol::has_degree(int degree) const {
  for (const auto& t : terms)
    if (t.degree == degree) return true;
  return false;
}

nlohmann::json Symbol::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : terms) {
    nlohmann::json jt;
    jt["degree"] = t.degree;
    jt["kind"] = term_kind_name(t.kind);
    if (t.kind == TermKind::QuadraticForm || t.kind == TermKind::QuadraticOverRoot) {
      auto rows = nlohmann::json::array();
      for (int r = 0; r < t.Q.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < t.Q.cols(); ++c) row.push_back(t.Q(r, c));
        rows.push_back(row);
      }
      jt["Q"] = rows;
    } else if (t.kind == TermKind::LinearForm) {
      auto vec = nlohmann::json::array();
      for (int i = 0; i < t.b.size(); ++i) vec.push_back(t.b[i]);
      jt["b"] = vec;
    } else {
      jt["coeff"] = t.coeff;
    }
    j["terms"].push_back(jt);
  }
  return j;
}

Symbol Symbol::from_json(const nlohmann::json& j) {
  Symbol s;
  s.d = j.at("d").get<int>();
  for (const auto& jt : j.at("terms")) {
    HomogeneousTerm t;
    t.degree = jt.at("degree").get<int>();
    t.kind = term_kind_from_name(jt.at("kind").get<std::string>());
    if (t.kind == TermKind::QuadraticForm || t.kind == TermKind::QuadraticOverRoot) {
      const auto& rows = jt.at("Q");
      int n = int(rows.size());
      t.Q.resize(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) t.Q(r, c) = rows[r][c].get<double>();
    } else if (t.kind == TermKind::LinearForm) {
      const auto& vec = jt.at("b");
      t.b.resize(vec.size());
      for (int i = 0; i < int(vec.size()); ++i) t.b[i] = vec[i].get<double>();
    } else {
      t.coeff = jt.at("coeff").get<double>();
    }
    s.terms.push_back(t);
  }
  s.validate();
  s.refresh_flags();
  return s;
}

HomogeneousTerm hopf_pullback(const Eigen::VectorXd& c) {
  int d = int(c.size());
  if (d < 1) throw PreconditionError("hopf_pullback: need d >= 1");
  HomogeneousTerm t;
  t.degree = 1;
  t.kind = TermKind::QuadraticOverRoot;
  t.Q = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  const double inv_sqrt2 = 0.70710678118654752440;
  for (int j = 0; j < d; ++j) {
    t.Q(j, j) = c[j] * inv_sqrt2;
    t.Q(d + j, d + j) = c[j] * inv_sqrt2;
  }
  return t;
}

HomogeneousTerm radial_power(double coeff, int degree) {
  HomogeneousTerm t;
  t.degree = degree;
  t.kind = TermKind::RadialPower;
  t.coeff = coeff;
  return t;
}

}  // namespace isospec

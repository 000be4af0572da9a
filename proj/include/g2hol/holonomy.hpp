#pragma once

#include "g2hol/geometry.hpp"
#include "g2hol/lie.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace g2hol {

// "R56", "nR5_56" or "nnR4_5_56": R(b_k, b_l), (nabla_{b_z} R)(b_k, b_l), (nabla^2_{b_w, b_z} R)(b_k, b_l).
struct OperatorId {
  int order = 0;
  int w = 0, z = 0;  // 1-based; unused below the order
  int k = 0, l = 0;

  static OperatorId parse(const std::string& text);  // throws std::invalid_argument
  std::string to_string() const;
  friend bool operator==(const OperatorId&, const OperatorId&) = default;
};

// Levi-Civita data of one coframe; nabla R is built on first use.
class Pipeline {
 public:
  explicit Pipeline(const Coframe& c);

  const Coframe& coframe() const { return coframe_; }
  const ConnectionForm& theta() const { return theta_; }
  const CurvatureField& curvature() const { return curvature_; }
  const NablaRField& nabla_field();

 private:
  Coframe coframe_;
  ConnectionForm theta_;
  CurvatureField curvature_;
  std::unique_ptr<NablaRField> nabla_;
};

AlgebraElement evaluate_operator(Pipeline& p, const OperatorId& op, const Point& pt);

struct ContainmentResult {
  bool ok = false;
  std::string witness;  // first nonzero residual entry, empty when ok
};
// theta(d_k) = sum_a c_a(x) E_a with Expr coefficients, for every k.
ContainmentResult containment(const ConnectionForm& theta, const SubalgebraSpec& spec);

struct Generator {
  std::string op;  // OperatorId text
  int order;
  AlgebraElement value;
};

struct LowerBound {
  SubalgebraSpec algebra;               // bracket closure of everything up to the last order reached
  std::vector<Generator> generators;    // operators that enlarged the linear span
  std::vector<std::size_t> closure_dim; // closure dimension after each order
};

// Bracket closure of all curvature operators and covariant derivatives up to max_order at pt.
LowerBound lower_bound(Pipeline& p, const Point& pt, int max_order);

struct HolonomyVerdict {
  SubalgebraSpec claimed;
  bool containment_ok = false;
  std::string containment_witness;
  bool generation_ok = false;
  std::vector<Generator> generators;
  std::vector<std::size_t> closure_dim;  // per order tried
  int order_used = -1;                   // order at which generation succeeded
  std::size_t lower_bound_dim = 0;
  bool equal = false;

  std::string summary() const;
};

HolonomyVerdict verify(Pipeline& p, const SubalgebraSpec& claimed, const Point& pt, int max_order);
HolonomyVerdict verify(const Coframe& c, const SubalgebraSpec& claimed, int max_order);

struct LoopSpec {
  std::array<int, 2> plane;  // 1-based coordinate indices
  FloatPoint center{};
  double side = 1e-2;
};
// The 21 coordinate-plane squares around center.
std::vector<LoopSpec> default_loops(double side = 1e-2, const FloatPoint& center = {});

using FloatMatrix = std::array<double, 49>;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NumericHolonomy {
  std::size_t dimension = 0;
  std::vector<FloatMatrix> logs;   // one per loop
  std::vector<FloatMatrix> basis;  // orthonormal basis of the log span (Frobenius)
};

// RK4 transport of dV/dt = -theta(gamma') V around each loop, matrix log, SVD rank (1e-7 relative).
// step <= 0 uses side/20.
NumericHolonomy numeric_holonomy(const ConnectionForm& theta, const std::vector<LoopSpec>& loops, double step = 0);

// Largest per-entry distance of max-normalized logs from the span of the given exact elements.
double span_deviation(const std::vector<FloatMatrix>& logs, const std::vector<AlgebraElement>& span);

}  // namespace g2hol

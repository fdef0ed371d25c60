#include "noneuclid/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "noneuclid/errors.hpp"

namespace noneuclid::quadrature {
namespace {

constexpr int kMaxLevel = 7;
constexpr int kMinAcceptLevel = 3;
constexpr double kTMax = 4.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// One abscissa pair of the tanh-sinh rule on [-1, 1]: the nodes sit at
// -1 + dist and 1 - dist; dist is kept separately so nodes near an endpoint
// keep full relative precision.
struct Node {
  double dist;
  double weight;
};

struct NodeTable {
  double center_weight;
  std::vector<std::vector<Node>> levels;  // levels[k]: nodes new at step 2^-k
};

Node make_node(double t) {
  const double u = std::numbers::pi / 2 * std::sinh(t);
  const double cu = std::cosh(u);
  return {std::exp(-u) / cu, std::numbers::pi / 2 * std::cosh(t) / (cu * cu)};
}

const NodeTable& node_table() {
  static const NodeTable table = [] {
    NodeTable tbl;
    tbl.center_weight = std::numbers::pi / 2;
    tbl.levels.resize(kMaxLevel + 1);
    for (int j = 1; j <= static_cast<int>(kTMax); ++j) tbl.levels[0].push_back(make_node(j));
    for (int k = 1; k <= kMaxLevel; ++k) {
      const double h = std::ldexp(1.0, -k);
      for (int j = 1;; j += 2) {
        const double t = j * h;
        if (t > kTMax) break;
        tbl.levels[k].push_back(make_node(t));
      }
    }
    return tbl;
  }();
  return table;
}

std::size_t level_cost(int level) {
  const auto& tbl = node_table();
  return 2 * tbl.levels[level].size() + (level == 0 ? 1 : 0);
}

struct Segment {
  double a;
  double b;
  double value;
  double err;
};

class SegmentIntegrator {
 public:
  SegmentIntegrator(const Integrand& f, std::size_t max_evals) : f_(f), max_evals_(max_evals) {}

  std::size_t evals() const { return evals_; }
  // Room for one more bisection: two segments at their coarsest.
  bool can_bisect() const { return evals_ + 2 * kMinEvals <= max_evals_; }

  // Runs levels until the level-to-level change drops below `target` or the
  // levels (or the evaluation budget) are exhausted.
  Segment run(double a, double b, double target) {
    const auto& tbl = node_table();
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);

    double sum = tbl.center_weight * sample(c);
    double abs_sum = std::abs(sum);
    accumulate(tbl.levels[0], a, b, r, sum, abs_sum);
    double prev = r * sum;
    double err = std::numeric_limits<double>::infinity();
    double value = prev;

    for (int k = 1; k <= kMaxLevel; ++k) {
      if (k > 1 && evals_ + level_cost(k) > max_evals_) break;
      accumulate(tbl.levels[k], a, b, r, sum, abs_sum);
      const double h = std::ldexp(1.0, -k);
      value = r * h * sum;
      const double roundoff = 8 * kEps * r * h * abs_sum;
      err = std::abs(value - prev) + roundoff;
      prev = value;
      if (k >= kMinAcceptLevel && err <= target) break;
    }
    return {a, b, value, err};
  }

 private:
  double sample(double x) {
    ++evals_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand is not finite at x = " << x;
      throw NonFiniteIntegrand(msg.str(), x);
    }
    return y;
  }

  void accumulate(const std::vector<Node>& nodes, double a, double b, double r, double& sum,
                  double& abs_sum) {
    for (const Node& n : nodes) {
      const double offset = r * n.dist;
      const double xl = a + offset;
      const double xr = b - offset;
      if (xl > a && xl < b) {
        const double term = n.weight * sample(xl);
        sum += term;
        abs_sum += std::abs(term);
      }
      if (xr > a && xr < b) {
        const double term = n.weight * sample(xr);
        sum += term;
        abs_sum += std::abs(term);
      }
    }
  }

  const Integrand& f_;
  std::size_t max_evals_;
  std::size_t evals_ = 0;
};

// Neumaier-compensated sum of segment values.
double total_value(const std::vector<Segment>& segs) {
  double s = 0.0, comp = 0.0;
  for (const auto& seg : segs) {
    const double t = s + seg.value;
    comp += std::abs(s) >= std::abs(seg.value) ? (s - t) + seg.value : (seg.value - t) + s;
    s = t;
  }
  return s + comp;
}

double total_err(const std::vector<Segment>& segs) {
  double e = 0.0;
  for (const auto& seg : segs) e += seg.err;
  return e;
}

void validate(const IntegrationProblem& p) {
  if (!p.integrand) throw DomainError("integrate: empty integrand");
  if (!(p.abs_tol > 0.0)) throw DomainError("integrate: abs_tol must be positive");
  if (p.max_evals < kMinEvals) throw DomainError("integrate: max_evals must be at least 17");
  if (!std::isfinite(p.lower) || !std::isfinite(p.upper))
    throw DomainError("integrate: bounds must be finite");
}

}  // namespace

QuadResult try_integrate(const IntegrationProblem& problem) {
  validate(problem);
  if (problem.lower == problem.upper) return {0.0, 0.0, 0, true};

  const double sign = problem.lower < problem.upper ? 1.0 : -1.0;
  const double a = std::min(problem.lower, problem.upper);
  const double b = std::max(problem.lower, problem.upper);
  const double width = b - a;
  const double tol = problem.abs_tol;

  SegmentIntegrator integrator(problem.integrand, problem.max_evals);
  auto by_err = [](const Segment& x, const Segment& y) { return x.err < y.err; };

  std::vector<Segment> active{integrator.run(a, b, tol)};
  std::vector<Segment> frozen;  // too narrow to bisect further

  bool converged = false;
  while (true) {
    const double err = total_err(active) + total_err(frozen);
    if (err <= tol) {
      converged = true;
      break;
    }
    if (!integrator.can_bisect() || active.empty()) break;

    std::pop_heap(active.begin(), active.end(), by_err);
    const Segment worst = active.back();
    active.pop_back();

    const double mid = worst.a + 0.5 * (worst.b - worst.a);
    if (!(mid > worst.a && mid < worst.b)) {
      frozen.push_back(worst);
      continue;
    }
    const double target = tol * 0.5 * (worst.b - worst.a) / width;
    for (const Segment& half :
         {integrator.run(worst.a, mid, target), integrator.run(mid, worst.b, target)}) {
      active.push_back(half);
      std::push_heap(active.begin(), active.end(), by_err);
    }
  }

  active.insert(active.end(), frozen.begin(), frozen.end());
  return {sign * total_value(active), total_err(active), integrator.evals(), converged};
}

QuadResult integrate(const IntegrationProblem& problem) {
  QuadResult r = try_integrate(problem);
  if (!r.converged) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "integrate: no convergence after " << r.evals << " evaluations (err estimate "
        << r.err_estimate << " > tol " << problem.abs_tol << ")";
    throw NonConvergence(msg.str(), r.value, r.err_estimate, r.evals);
  }
  return r;
}

QuadResult integrate_semiinfinite(const Integrand& integrand, double bound, Tail tail,
                                  double abs_tol, std::size_t max_evals) {
  if (!std::isfinite(bound)) throw DomainError("integrate_semiinfinite: bound must be finite");
  const double dir = tail == Tail::kUpward ? 1.0 : -1.0;
  IntegrationProblem p;
  p.integrand = [&integrand, bound, dir](double u) {
    const double w = 1.0 - u;
    const double t = bound + dir * (u / w);
    return integrand(t) / (w * w);
  };
  p.lower = 0.0;
  p.upper = 1.0;
  p.abs_tol = abs_tol;
  p.max_evals = max_evals;
  return integrate(p);
}

}  // namespace noneuclid::quadrature

// Copyright 2026 The coordplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coordplan/nmpc.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "coordplan/error.h"

namespace coordplan {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kStateDim = 5;  // x, y, psi, v, delta
constexpr int kInputDim = 2;  // a, delta_rate

// Armijo constant and smallest step tried by the line search.
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-12;
// Levenberg damping added to the reduced Gauss-Newton matrix.
constexpr double kDamping = 1e-9;

struct Rollout {
  std::vector<VehicleState> states;
  std::vector<MatrixXd> sens;  // d state_k / d z, kStateDim x n
};

// Residual vector r with cost r^T r and its Jacobian.
struct Residuals {
  VectorXd r;
  MatrixXd jac;
  double cost() const { return r.squaredNorm(); }
};

class Problem {
 public:
  Problem(const VehicleState& x0, const std::vector<ReferenceState>& refs,
          const VehicleParams& params, const NmpcConfig& config,
          const ControlInput& last_input)
      : x0_(x0),
        refs_(refs),
        p_(params),
        c_(config),
        last_(last_input),
        h_(config.horizon),
        n_(kInputDim * config.horizon) {
    lb_.resize(n_);
    ub_.resize(n_);
    for (int k = 0; k < h_; ++k) {
      lb_[2 * k] = p_.a_min;
      ub_[2 * k] = p_.a_max;
      lb_[2 * k + 1] = p_.delta_rate_min;
      ub_[2 * k + 1] = p_.delta_rate_max;
    }
    // Keep the next steering angle admissible.
    const double d0 = std::clamp(x0_.delta, p_.delta_min, p_.delta_max);
    lb_[1] = std::min(std::max(lb_[1], (p_.delta_min - d0) / c_.dt), ub_[1]);
    ub_[1] = std::max(std::min(ub_[1], (p_.delta_max - d0) / c_.dt), lb_[1]);
  }

  int size() const { return n_; }
  const VectorXd& lb() const { return lb_; }
  const VectorXd& ub() const { return ub_; }

  VectorXd Project(const VectorXd& z) const {
    return z.cwiseMax(lb_).cwiseMin(ub_);
  }

  // States with the steering angle left unclamped; its bounds are enforced
  // through the penalty instead so the map stays smooth.
  Rollout Simulate(const VectorXd& z, bool with_sens) const {
    Rollout out;
    out.states.reserve(h_ + 1);
    out.states.push_back(x0_);
    MatrixXd g = MatrixXd::Zero(kStateDim, n_);
    if (with_sens) out.sens.push_back(g);
    const double dt = c_.dt;
    const double L = p_.wheelbase;
    for (int k = 0; k < h_; ++k) {
      const VehicleState& s = out.states.back();
      VehicleState nx;
      nx.x = s.x + s.v * std::cos(s.psi) * dt;
      nx.y = s.y + s.v * std::sin(s.psi) * dt;
      nx.psi = s.psi + s.v / L * std::tan(s.delta) * dt;
      nx.v = s.v + z[2 * k] * dt;
      nx.delta = s.delta + z[2 * k + 1] * dt;
      if (with_sens) {
        Eigen::Matrix<double, kStateDim, kStateDim> a =
            Eigen::Matrix<double, kStateDim, kStateDim>::Identity();
        const double cd = std::cos(s.delta);
        a(0, 2) = -s.v * std::sin(s.psi) * dt;
        a(0, 3) = std::cos(s.psi) * dt;
        a(1, 2) = s.v * std::cos(s.psi) * dt;
        a(1, 3) = std::sin(s.psi) * dt;
        a(2, 3) = std::tan(s.delta) / L * dt;
        a(2, 4) = s.v / (L * cd * cd) * dt;
        g = a * g;
        g(3, 2 * k) += dt;
        g(4, 2 * k + 1) += dt;
        out.sens.push_back(g);
      }
      out.states.push_back(nx);
    }
    return out;
  }

  Residuals Evaluate(const VectorXd& z, bool with_jac) const {
    const Rollout ro = Simulate(z, with_jac);
    const int rows = 12 * h_;
    Residuals res;
    res.r = VectorXd::Zero(rows);
    if (with_jac) res.jac = MatrixXd::Zero(rows, n_);
    int row = 0;

    for (int k = 1; k <= h_; ++k) {
      const VehicleState& s = ro.states[k];
      const ReferenceState& ref = refs_[k];
      const bool terminal = k == h_;
      const double wp = terminal ? c_.w_terminal_position : c_.w_position;
      const double wv = terminal ? c_.w_terminal_velocity : c_.w_velocity;
      const double wh = terminal ? c_.w_terminal_heading : c_.w_heading;
      const MatrixXd* g = with_jac ? &ro.sens[k] : nullptr;
      Row(res, row++, wp, s.x - ref.x, g, 0);
      Row(res, row++, wp, s.y - ref.y, g, 1);
      Row(res, row++, wh, WrapAngle(s.psi - ref.psi), g, 2);
      Row(res, row++, wv, s.v - ref.v, g, 3);

      // Steering-angle bound.
      const double over_d = std::max(0.0, s.delta - p_.delta_max) +
                            std::min(0.0, s.delta - p_.delta_min);
      Row(res, row++, c_.penalty, over_d, over_d != 0.0 ? g : nullptr, 4);

      // Lateral acceleration v^2 tan(delta) / L.
      const double td = std::tan(s.delta);
      const double lat = s.v * s.v * td / p_.wheelbase;
      const double over_l = std::max(0.0, lat - p_.lat_acc_max) +
                            std::min(0.0, lat - p_.lat_acc_min);
      const double w = std::sqrt(c_.penalty);
      res.r[row] = w * over_l;
      if (with_jac && over_l != 0.0) {
        const double cd = std::cos(s.delta);
        const double dv = 2.0 * s.v * td / p_.wheelbase;
        const double dd = s.v * s.v / (p_.wheelbase * cd * cd);
        res.jac.row(row) = w * (dv * g->row(3) + dd * g->row(4));
      }
      ++row;
    }

    const double ra = std::sqrt(c_.w_effort);
    const double sa = std::sqrt(c_.w_smoothness);
    const double sr = std::sqrt(c_.w_smoothness + c_.w_steering_smoothness);
    for (int k = 0; k < h_; ++k) {
      for (int m = 0; m < kInputDim; ++m) {
        const int col = 2 * k + m;
        res.r[row] = ra * z[col];
        if (with_jac) res.jac(row, col) = ra;
        ++row;
        const double prev =
            k == 0 ? (m == 0 ? last_.a : last_.delta_rate) : z[col - 2];
        const double s = m == 0 ? sa : sr;
        res.r[row] = s * (z[col] - prev);
        if (with_jac) {
          res.jac(row, col) = s;
          if (k > 0) res.jac(row, col - 2) = -s;
        }
        ++row;
      }
    }
    return res;
  }

  std::vector<VehicleState> States(const VectorXd& z) const {
    return Simulate(z, false).states;
  }

 private:
  static void Row(Residuals& res, int row, double weight, double value,
                  const MatrixXd* g, int state) {
    const double w = std::sqrt(weight);
    res.r[row] = w * value;
    if (g != nullptr) res.jac.row(row) = w * g->row(state);
  }

  const VehicleState& x0_;
  const std::vector<ReferenceState>& refs_;
  const VehicleParams& p_;
  const NmpcConfig& c_;
  ControlInput last_;
  int h_;
  int n_;
  VectorXd lb_;
  VectorXd ub_;
};

}  // namespace

void NmpcConfig::Validate() const {
  const double weights[] = {w_position,          w_velocity,
                            w_heading,           w_effort,
                            w_smoothness,        w_steering_smoothness,
                            w_terminal_position, w_terminal_velocity,
                            w_terminal_heading,  penalty};
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "NMPC weights must be >= 0");
    }
  }
  if (horizon < 1 || !(dt > 0.0) || !(v_max > 0.0) || max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "NMPC needs horizon >= 1, dt > 0, v_max > 0 and iterations");
  }
}

std::vector<ReferenceState> ReferenceForHorizon(const PolylinePath& path,
                                                const Schedule& schedule,
                                                std::size_t axis, double t,
                                                const NmpcConfig& config) {
  std::vector<ReferenceState> out;
  out.reserve(config.horizon + 1);
  for (int k = 0; k <= config.horizon; ++k) {
    const double tk = t + k * config.dt;
    const double s = std::clamp(schedule.PositionAt(axis, tk), 0.0,
                                path.length());
    const Point2 p = path.PointAt(s);
    const Point2 tan = path.TangentAt(s);
    out.push_back({p.x, p.y, std::atan2(tan.y, tan.x),
                   schedule.SpeedAt(axis, tk), s});
  }
  return out;
}

NmpcSolution NmpcSolve(const VehicleState& state,
                       const std::vector<ReferenceState>& refs,
                       const VehicleParams& params, const NmpcConfig& config,
                       const std::vector<ControlInput>& warm_start,
                       const ControlInput& last_input) {
  if (static_cast<int>(refs.size()) != config.horizon + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "NMPC needs horizon + 1 reference states");
  }
  const Problem prob(state, refs, params, config, last_input);
  const int n = prob.size();
  const int h = config.horizon;

  VectorXd z = VectorXd::Zero(n);
  if (!warm_start.empty()) {
    for (int k = 0; k < h; ++k) {
      const std::size_t src = std::min<std::size_t>(k + 1, warm_start.size() - 1);
      z[2 * k] = warm_start[src].a;
      z[2 * k + 1] = warm_start[src].delta_rate;
    }
  }
  z = prob.Project(z);

  NmpcSolution sol;
  Residuals res = prob.Evaluate(z, true);
  double cost = res.cost();
  for (;;) {
    const VectorXd grad = 2.0 * res.jac.transpose() * res.r;
    const VectorXd step = prob.Project(z - grad) - z;
    sol.stationarity = step.lpNorm<Eigen::Infinity>();
    if (sol.stationarity <= config.stationarity_tolerance) {
      sol.converged = true;
      break;
    }
    if (sol.iterations >= config.max_iterations) break;
    ++sol.iterations;

    // Variables pinned at a bound with the gradient pushing outward.
    const double eps = std::min(1e-6, sol.stationarity);
    std::vector<int> free;
    std::vector<bool> pinned(n, false);
    for (int i = 0; i < n; ++i) {
      const bool at_lo = z[i] <= prob.lb()[i] + eps && grad[i] > 0.0;
      const bool at_hi = z[i] >= prob.ub()[i] - eps && grad[i] < 0.0;
      pinned[i] = at_lo || at_hi;
      if (!pinned[i]) free.push_back(i);
    }
    const MatrixXd hess = 2.0 * res.jac.transpose() * res.jac;
    VectorXd dir = VectorXd::Zero(n);
    if (!free.empty()) {
      const int m = static_cast<int>(free.size());
      MatrixXd hf(m, m);
      VectorXd gf(m);
      for (int a = 0; a < m; ++a) {
        gf[a] = grad[free[a]];
        for (int b = 0; b < m; ++b) hf(a, b) = hess(free[a], free[b]);
      }
      hf.diagonal().array() += kDamping * (1.0 + hf.diagonal().maxCoeff());
      const VectorXd df = hf.ldlt().solve(-gf);
      for (int a = 0; a < m; ++a) dir[free[a]] = df[a];
    }
    for (int i = 0; i < n; ++i) {
      if (pinned[i]) dir[i] = -grad[i] / std::max(hess(i, i), 1e-12);
    }

    bool accepted = false;
    for (double alpha = 1.0; alpha >= kMinStep; alpha *= 0.5) {
      const VectorXd trial = prob.Project(z + alpha * dir);
      const double decrease = grad.dot(trial - z);
      const Residuals tr = prob.Evaluate(trial, false);
      if (tr.cost() <= cost + kArmijo * decrease) {
        z = trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      sol.stalled = true;
      break;
    }
    res = prob.Evaluate(z, true);
    cost = res.cost();
  }

  // The steering bound is only penalized inside the horizon. Clamp later
  // steering rates so every predicted angle is admissible; the first rate
  // already satisfies this through its bounds.
  double delta = std::clamp(state.delta, params.delta_min, params.delta_max);
  bool repaired = false;
  for (int k = 0; k < h; ++k) {
    const double lo = std::max(prob.lb()[2 * k + 1],
                               (params.delta_min - delta) / config.dt);
    const double hi = std::min(prob.ub()[2 * k + 1],
                               (params.delta_max - delta) / config.dt);
    const double r = std::clamp(z[2 * k + 1], std::min(lo, hi), hi);
    repaired = repaired || r != z[2 * k + 1];
    z[2 * k + 1] = r;
    delta = std::clamp(delta + r * config.dt, params.delta_min,
                       params.delta_max);
  }
  sol.cost = repaired ? prob.Evaluate(z, false).cost() : cost;
  sol.inputs.resize(h);
  for (int k = 0; k < h; ++k) {
    sol.inputs[k] = ClampInput({z[2 * k], z[2 * k + 1]}, params);
  }
  sol.predicted = prob.States(z);
  return sol;
}

}  // namespace coordplan

#include "tropctl/network.hpp"

#include <stdexcept>

namespace tropctl {

NetworkSpec NetworkSpec::uniform(std::size_t n, std::vector<std::int64_t> travel,
                                 std::vector<std::size_t> pred,
                                 std::vector<std::vector<std::size_t>> connections,
                                 std::int64_t headway, std::int64_t connection) {
  NetworkSpec spec;
  spec.directions = n;
  spec.travel = std::move(travel);
  spec.pred = std::move(pred);
  spec.connections = std::move(connections);
  spec.headway_bound.assign(n, headway);
  spec.connection_bound.assign(n, std::vector<std::int64_t>(n, connection));
  spec.validate();
  return spec;
}

void NetworkSpec::validate() const {
  const std::size_t n = directions;
  if (n == 0) throw std::invalid_argument("network needs at least one direction");
  if (travel.size() != n || pred.size() != n || connections.size() != n ||
      headway_bound.size() != n || connection_bound.size() != n) {
    throw std::invalid_argument("network field lengths disagree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (travel[i] < 0) throw std::invalid_argument("travel times must be >= 0");
    if (pred[i] >= n) throw std::invalid_argument("pred index out of range");
    if (headway_bound[i] < 0) {
      throw std::invalid_argument("headway bounds must be >= 0");
    }
    if (connection_bound[i].size() != n) {
      throw std::invalid_argument("connection bound grid must be n x n");
    }
    for (std::int64_t m : connection_bound[i]) {
      if (m < 0) throw std::invalid_argument("connection bounds must be >= 0");
    }
    for (std::size_t j : connections[i]) {
      if (j >= n) throw std::invalid_argument("connection index out of range");
    }
  }
}

TropMatrix build_dynamics(const NetworkSpec& spec) {
  spec.validate();
  const std::size_t n = spec.directions;
  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a.at(i, spec.pred[i]) = Scalar::finite(spec.travel[spec.pred[i]]);
    for (std::size_t j : spec.connections[i]) {
      a.at(i, j) = Scalar::finite(spec.travel[j]);
    }
  }
  return a;
}

TropMatrix extended_dynamics(const TropMatrix& a) {
  const std::size_t n = a.rows();
  TropMatrix abar(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) abar.at(i, j) = a.at(i, j);
    abar.at(n + i, i) = Scalar::finite(0);
  }
  return abar;
}

TropMatrix extended_control(std::size_t n) {
  TropMatrix bbar(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) bbar.at(i, i) = Scalar::finite(0);
  return bbar;
}

BuildSpecResult build_spec(const NetworkSpec& spec) {
  const TropMatrix a = build_dynamics(spec);
  const std::size_t n = spec.directions;

  TropMatrix e(2 * n, 2 * n);
  // Physical block: x(k-1) <= x(k) and A x(k-1) <= x(k).
  for (std::size_t i = 0; i < n; ++i) {
    e.at(i, n + i) = Scalar::finite(0);
    for (std::size_t j = 0; j < n; ++j) {
      e.at(i, n + j) = trop_add(e.at(i, n + j), a.at(i, j));
    }
  }
  // Headway block (-L)I and connection block (-M)S with s_ij = -a_ji.
  for (std::size_t i = 0; i < n; ++i) {
    e.at(n + i, i) = Scalar::finite(-spec.headway_bound[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(j, i).is_neg_inf()) continue;
      const Scalar entry =
          Scalar::finite(-spec.connection_bound[i][j] - a.at(j, i).value());
      e.at(n + i, j) = trop_add(e.at(n + i, j), entry);
    }
  }

  BuildSpecResult result{e, std::nullopt, std::nullopt};
  StarResult star = kleene_star(e);
  if (!star.diverged()) {
    result.e_star = *star.star;
    result.k = Semimodule::from_columns(*star.star);
  }
  return result;
}

SynthesisOutput synthesize(const NetworkSpec& spec, std::size_t cap) {
  BuildSpecResult built = build_spec(spec);
  const std::size_t n = spec.directions;
  const TropMatrix a = build_dynamics(spec);
  SynthesisOutput out{.status = SynthesisOutput::Status::infeasible_spec,
                      .a = a,
                      .abar = extended_dynamics(a),
                      .bbar = extended_control(n),
                      .e = built.e};
  if (!built.feasible()) return out;
  out.e_star = built.e_star;
  out.k = built.k;

  out.invariance = max_invariant(*built.k, out.abar, out.bbar, cap);
  if (out.invariance->cap_exceeded) {
    out.status = SynthesisOutput::Status::cap_exceeded;
    return out;
  }
  out.k_star = out.invariance->result;

  out.feedback = solve_feedback(out.abar, out.bbar, *out.k_star);
  if (!out.feedback->found()) {
    out.status = SynthesisOutput::Status::not_algebraically_invariant;
    return out;
  }
  out.status = SynthesisOutput::Status::synthesized;
  if (out.k_star->trivial_module()) return out;  // nothing to schedule

  const TropMatrix closed = oplus(out.abar, mat_mul(out.bbar, *out.feedback->f));
  if (!spectral_radius(closed).has_value()) return out;  // acyclic loop
  const EigenResult ev = eigen(closed);
  if (!ev.lambda.is_integer()) return out;
  for (const Vec& v : ev.eigenvectors) {
    if (!membership(v, *out.k_star)) continue;
    SynthesisOutput::Periodic periodic;
    periodic.lambda = ev.lambda.num;
    periodic.xbar0 = v;
    periodic.u0 =
        scale_vec(Scalar::finite(-ev.lambda.num), mat_vec(*out.feedback->f, v));
    out.periodic = std::move(periodic);
    break;
  }
  return out;
}

SimControl SimControl::none() { return SimControl{}; }

SimControl SimControl::with_feedback(TropMatrix f) {
  SimControl c;
  c.kind = Kind::feedback;
  c.f = std::move(f);
  return c;
}

SimControl SimControl::with_timetable(std::vector<Vec> u) {
  SimControl c;
  c.kind = Kind::timetable;
  c.timetable = std::move(u);
  return c;
}

SimControl SimControl::with_periodic(std::int64_t lambda, Vec u0) {
  SimControl c;
  c.kind = Kind::periodic;
  c.lambda = lambda;
  c.u0 = std::move(u0);
  return c;
}

namespace {

void check_transition(const NetworkSpec& spec, const TropMatrix& a,
                      const Vec& next, const Vec& prev, std::size_t step,
                      std::vector<Violation>& out) {
  const std::size_t n = spec.directions;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t gap = next[i].value() - prev[i].value();
    if (gap > spec.headway_bound[i]) {
      out.push_back({Violation::Kind::headway, step, i, i, gap,
                     spec.headway_bound[i]});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(j, i).is_neg_inf()) continue;
      const std::int64_t wait =
          next[j].value() - a.at(j, i).value() - prev[i].value();
      if (wait > spec.connection_bound[i][j]) {
        out.push_back({Violation::Kind::connection, step, i, j, wait,
                       spec.connection_bound[i][j]});
      }
    }
  }
}

}  // namespace

SimulationResult simulate(const NetworkSpec& spec, const SimControl& control,
                          const Vec& xbar0, std::size_t steps) {
  spec.validate();
  const std::size_t n = spec.directions;
  if (xbar0.size() != 2 * n) {
    throw std::invalid_argument("extended initial state must have length 2n");
  }
  for (Scalar s : xbar0) {
    if (!s.is_finite()) {
      throw std::invalid_argument("initial departure times must be finite");
    }
  }
  const TropMatrix a = build_dynamics(spec);
  Vec cur(xbar0.begin(), xbar0.begin() + static_cast<std::ptrdiff_t>(n));
  Vec prev(xbar0.begin() + static_cast<std::ptrdiff_t>(n), xbar0.end());

  // Realistic initial states: x(k-1) <= x(k) and A x(k-1) <= x(k).
  if (!entrywise_le(prev, cur) || !entrywise_le(mat_vec(a, prev), cur)) {
    throw std::invalid_argument(
        "initial state violates the physical constraints");
  }
  if (control.kind == SimControl::Kind::feedback) {
    if (!control.f || control.f->rows() != n || control.f->cols() != 2 * n) {
      throw std::invalid_argument("feedback must map the extended state");
    }
  }
  if (control.kind == SimControl::Kind::timetable &&
      control.timetable.size() < steps) {
    throw std::invalid_argument("timetable is shorter than the simulation");
  }
  if (control.kind == SimControl::Kind::periodic && control.u0.size() != n) {
    throw std::invalid_argument("periodic timetable base has length n");
  }

  SimulationResult result;
  result.states.push_back(cur);
  check_transition(spec, a, cur, prev, 0, result.violations);

  for (std::size_t k = 1; k <= steps; ++k) {
    Vec u(n, Scalar::neg_inf());
    switch (control.kind) {
      case SimControl::Kind::none:
        break;
      case SimControl::Kind::feedback: {
        Vec xbar = cur;
        xbar.insert(xbar.end(), prev.begin(), prev.end());
        u = mat_vec(*control.f, xbar);
        break;
      }
      case SimControl::Kind::timetable:
        u = control.timetable[k - 1];
        if (u.size() != n) {
          throw std::invalid_argument("timetable entry has the wrong length");
        }
        break;
      case SimControl::Kind::periodic: {
        std::int64_t shift;
        if (__builtin_mul_overflow(static_cast<std::int64_t>(k),
                                   control.lambda, &shift)) {
          throw std::overflow_error("periodic timetable overflows");
        }
        u = scale_vec(Scalar::finite(shift), control.u0);
        break;
      }
    }
    Vec next = oplus_vec(mat_vec(a, cur), u);
    check_transition(spec, a, next, cur, k, result.violations);
    prev = cur;
    cur = std::move(next);
    result.states.push_back(cur);
  }
  return result;
}

}  // namespace tropctl

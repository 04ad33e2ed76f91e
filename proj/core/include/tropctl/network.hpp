#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropctl/feedback.hpp"
#include "tropctl/invariance.hpp"
#include "tropctl/semimodule.hpp"

namespace tropctl {

/// Transportation network with one train per direction: travel times,
/// the predecessor map r(i) (which arriving train serves direction i),
/// connection sets C(i), and the headway / connection-wait bounds.
/// Bounds are stored per direction / per ordered pair; the uniform case
/// just repeats one value.
struct NetworkSpec {
  std::size_t directions = 0;
  std::vector<std::int64_t> travel;
  std::vector<std::size_t> pred;                       // 0-based
  std::vector<std::vector<std::size_t>> connections;   // 0-based
  std::vector<std::int64_t> headway_bound;             // L_i
  std::vector<std::vector<std::int64_t>> connection_bound;  // M_ij

  static NetworkSpec uniform(std::size_t n, std::vector<std::int64_t> travel,
                             std::vector<std::size_t> pred,
                             std::vector<std::vector<std::size_t>> connections,
                             std::int64_t headway, std::int64_t connection);

  void validate() const;
};

/// a_ij = t_j when j feeds direction i (j in C(i) u {r(i)}), -inf
/// otherwise; the dynamics x(k) = A x(k-1) (+) u(k).
TropMatrix build_dynamics(const NetworkSpec& spec);

/// Extended-state matrices for x-bar = (x(k), x(k-1)).
TropMatrix extended_dynamics(const TropMatrix& a);       // [[A e],[I e]]
TropMatrix extended_control(std::size_t n);              // [[I],[e]]

/// Constraint matrix E over the extended state (headway block, connection
/// block, physical block) plus its star.  K = Im E* when the star
/// converges; a Diverged star means the bounds are infeasible.
struct BuildSpecResult {
  TropMatrix e;
  std::optional<TropMatrix> e_star;
  std::optional<Semimodule> k;

  bool feasible() const { return e_star.has_value(); }
};

BuildSpecResult build_spec(const NetworkSpec& spec);

/// Full pipeline: K from the bounds, the invariance iteration, feedback
/// synthesis on K*, and a periodic timetable from an eigenvector of the
/// closed loop lying in K* (u(k) = lambda^k (x) u0).
struct SynthesisOutput {
  enum class Status {
    synthesized,
    infeasible_spec,
    cap_exceeded,
    not_algebraically_invariant,
  };

  struct Periodic {
    std::int64_t lambda = 0;
    Vec u0;
    Vec xbar0;
  };

  Status status = Status::infeasible_spec;
  TropMatrix a;
  TropMatrix abar;
  TropMatrix bbar;
  TropMatrix e;
  std::optional<TropMatrix> e_star;
  std::optional<Semimodule> k;
  std::optional<InvarianceReport> invariance;
  std::optional<Semimodule> k_star;
  std::optional<FeedbackResult> feedback;
  std::optional<Periodic> periodic;
};

SynthesisOutput synthesize(const NetworkSpec& spec, std::size_t cap);

/// How the departure times are driven during simulation.
struct SimControl {
  enum class Kind { none, feedback, timetable, periodic };

  Kind kind = Kind::none;
  std::optional<TropMatrix> f;     // n x 2n, over the extended state
  std::vector<Vec> timetable;      // u(1), u(2), ...
  std::int64_t lambda = 0;         // periodic: u(k) = lambda^k (x) u0
  Vec u0;

  static SimControl none();
  static SimControl with_feedback(TropMatrix f);
  static SimControl with_timetable(std::vector<Vec> u);
  static SimControl with_periodic(std::int64_t lambda, Vec u0);
};

struct Violation {
  enum class Kind { headway, connection };

  Kind kind = Kind::headway;
  std::size_t step = 0;      // transition x(step-1) -> x(step); 0 = initial
  std::size_t from_dir = 0;  // 0-based
  std::size_t to_dir = 0;
  std::int64_t amount = 0;
  std::int64_t bound = 0;
};

struct SimulationResult {
  std::vector<Vec> states;  // x(0) .. x(steps)
  std::vector<Violation> violations;
};

/// Iterates the chosen dynamics from a physically valid extended initial
/// state (x(k-1) <= x(k) and A x(k-1) <= x(k), else a hard error) and
/// checks every headway and connection bound along the way.
SimulationResult simulate(const NetworkSpec& spec, const SimControl& control,
                          const Vec& xbar0, std::size_t steps);

}  // namespace tropctl

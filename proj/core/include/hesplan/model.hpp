#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Physical and economic model of a hybrid micro-grid: storage devices,
// diesel units, renewable generators, per-period cost terms, and pointwise
// constraint evaluation. Everything here is a pure function of its inputs.
//
// Unit conventions:
//   energy        MWh per period (dispatch, demand, state of charge)
//   capacity      MWh for storage and diesel, MW installed for renewables
//   dt            period length in hours
//   costs         currency; investment per unit capacity, O/M per MWh
// Renewable output during a period is per_unit * capacity_mw * dt (MWh).

namespace hesplan::model {

using Series = std::vector<double>;

struct StorageSpec {
  std::string id;
  double eta = 1.0;       // one-way efficiency, in (0, 1]
  double delta = 1.0;     // rated power / rated energy, 1/h
  double xi = 0.0;        // stored-energy loss ratio per period, in [0, 1)
  double inv_cost = 0.0;  // currency per MWh of capacity
  double amort = 0.0;     // fraction of investment charged per period
  double om_coeff = 0.0;  // currency per MWh of charge+discharge throughput
  double cap_min = 0.0;
  double cap_max = 0.0;   // capacity bounds, MWh

  void validate() const;
  bool operator==(const StorageSpec&) const = default;
};

struct DieselSpec {
  std::string id;
  double inv_cost = 0.0;  // currency per MWh-equivalent capacity
  double amort = 0.0;
  double q2 = 0.0, q1 = 0.0, q0 = 0.0;  // quadratic O/M cost in H_t
  double ramp_up = 0.0;                 // MWh/period, >= 0
  double ramp_down = 0.0;               // MWh/period, <= 0
  double cap_min = 0.0;
  double cap_max = 0.0;

  void validate() const;
  bool operator==(const DieselSpec&) const = default;
};

enum class RenewableKind { solar, wind };

struct RenewableSpec {
  std::string id;
  RenewableKind kind = RenewableKind::solar;
  double inv_cost = 0.0;  // currency per MW installed
  double amort = 0.0;
  double om_coeff = 0.0;  // currency per MWh generated
  double cap_min = 0.0;
  double cap_max = 0.0;   // MW

  void validate() const;
  bool operator==(const RenewableSpec&) const = default;
};

struct SystemSpec {
  std::vector<StorageSpec> storages;
  std::vector<RenewableSpec> renewables;
  std::vector<DieselSpec> diesels;

  int n_storage() const { return static_cast<int>(storages.size()); }
  int n_renewable() const { return static_cast<int>(renewables.size()); }
  int n_diesel() const { return static_cast<int>(diesels.size()); }
  // Number of design parameters: one capacity per technology.
  int n_design() const { return n_storage() + n_renewable() + n_diesel(); }

  void validate() const;
  bool operator==(const SystemSpec&) const = default;
};

// One sub-horizon of demand and per-unit renewable traces. In sampled
// (i.i.d.) mode a scenario also carries its drawn initial state of charge:
// the random realization is (load, renewable generation, initial
// conditions), so the draw travels with the data. Empty means the initial
// state is a free decision variable.
struct ScenarioData {
  int index = 0;
  Series demand;                      // MWh per period, length T
  std::vector<Series> per_unit_gen;   // one series per renewable, length T
  double dt = 1.0;                    // hours
  std::vector<double> initial_soc;    // per storage, MWh; empty = free

  int periods() const { return static_cast<int>(demand.size()); }
  void validate(int n_renewable) const;
};

// The full local decision vector of one scenario. The consensus sub-vector
// x = [x_d; x_b] is ordered as:
//   x_d = [S_max per storage; R_max per renewable; H_max per diesel]
//   x_b = [soc at t=0 per storage; soc at t=T per storage]
// with technologies in SystemSpec order. Boundary entries alias the soc
// endpoints; they are not separate variables.
struct ScenarioVariables {
  std::vector<Series> discharge;  // P+ per storage, length T, >= 0
  std::vector<Series> charge;     // P- per storage, length T, >= 0
  std::vector<Series> soc;        // per storage, length T+1, >= 0
  std::vector<Series> diesel;     // per diesel, length T, >= 0
  Series shortage;                // G_t, length T, signed
  std::vector<double> storage_cap, renewable_cap, diesel_cap;  // local copies

  int periods() const { return static_cast<int>(shortage.size()); }
  void validate(const SystemSpec& specs) const;

  std::vector<double> design_vector() const;
  std::vector<double> boundary_vector() const;
  // [design_vector; boundary_vector]
  std::vector<double> consensus_vector() const;

  static ScenarioVariables zeros(const SystemSpec& specs, int periods);
};

// Consensus target: global capacities plus one boundary state per
// (scenario edge, storage) pair.
struct GlobalPlan {
  std::vector<double> storage_cap;    // MWh
  std::vector<double> renewable_cap;  // MW
  std::vector<double> diesel_cap;     // MWh
  std::vector<double> boundary;       // z_b, MWh; empty when not tracked

  std::vector<double> design_vector() const;
};

struct RatioPolicy {
  double r_sd = 0.0;  // shortfall-to-demand ratio
  double r_dc = 0.0;  // diesel capacity ratio
  // Optional constant shortage threshold overriding r_sd * D_t.
  std::optional<double> g_th_constant;

  void validate() const;
};

// Next-period stored energy: S' = S - P+/eta + eta*P- - xi*S. No clipping;
// range feasibility is enforced by the planning constraints.
double storage_step(double soc, double discharge, double charge,
                    const StorageSpec& spec);

// (P+_max, P-_max) in MWh per period for a given capacity:
// P+_max = eta*delta*s_max*dt, P-_max = delta*s_max*dt.
std::pair<double, double> storage_power_limits(const StorageSpec& spec,
                                               double s_max, double dt);

// Sum of storage, renewable, and diesel costs in period t evaluated at the
// scenario's local capacities and dispatch. Convex in all decisions.
double period_cost(const ScenarioVariables& vars, const ScenarioData& data,
                   int t, const SystemSpec& specs);

// Total cost over the scenario (sum of period_cost over t).
double scenario_cost(const ScenarioVariables& vars, const ScenarioData& data,
                     const SystemSpec& specs);

// D_t minus all generation, net discharge, and shortage; zero iff the
// balance holds at t.
double load_balance_residual(const ScenarioVariables& vars,
                             const ScenarioData& data, int t);

// Shortage threshold at a given demand: g_th_constant if configured,
// otherwise r_sd * demand_t.
double shortage_threshold(const RatioPolicy& policy, double demand_t);

// Diesel capacity implied by the policy: r_dc * max(demand).
double diesel_cap_from_ratio(const RatioPolicy& policy, const Series& demand);

struct ConstraintCheck {
  std::string family;
  double max_violation = 0.0;  // absolute, worst over all rows in the family
  double scale = 1.0;          // max(1, characteristic magnitude)
};

struct FeasibilityReport {
  std::vector<ConstraintCheck> checks;
  double tol = 0.0;
  bool feasible = true;  // all families within tol * scale

  const ConstraintCheck* worst() const;
  std::string to_string() const;
};

// Pointwise evaluation of every planning constraint family on a candidate
// point: storage dynamics, soc range, power limits, diesel range, ramps,
// load balance, shortage threshold, capacity boxes, sign constraints, and
// the pinned initial state when the scenario carries one.
FeasibilityReport check_feasible(const ScenarioVariables& vars,
                                 const ScenarioData& data,
                                 const SystemSpec& specs,
                                 const RatioPolicy& policy, double tol);

}  // namespace hesplan::model

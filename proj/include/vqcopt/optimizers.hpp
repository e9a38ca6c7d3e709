#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqcopt/circuit.hpp"
#include "vqcopt/gate_params.hpp"
#include "vqcopt/jacobi.hpp"
#include "vqcopt/pauli.hpp"
#include "vqcopt/rng.hpp"

namespace vqcopt {

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("circuit evaluation budget exhausted") {}
};

// Counted circuit evaluations; the budget unit every algorithm is
// compared against.
struct EvalBudget {
    long used = 0;
    long limit = std::numeric_limits<long>::max();

    bool can_afford(long evals) const { return used + evals <= limit; }
};

// Evaluates the cost of a circuit, charging one budget unit per call.
// instrument() is the bookkeeping read used to record convergence traces:
// always exact and never charged.
class CostOracle {
  public:
    CostOracle(const Observable& obs, long shots = 0, Rng* rng = nullptr)
        : obs_(&obs), shots_(shots), rng_(rng) {
        if (shots_ > 0 && rng_ == nullptr) {
            throw std::invalid_argument("CostOracle: shot mode needs a generator");
        }
    }

    EvalBudget budget;

    double evaluate(const AnsatzCircuit& c) {
        if (!budget.can_afford(1)) {
            throw BudgetExhausted{};
        }
        prepare_state(c, scratch_);
        ++budget.used;
        if (shots_ > 0) {
            return estimate_with_shots(scratch_, *obs_, shots_, *rng_);
        }
        return expectation(scratch_, *obs_);
    }

    double instrument(const AnsatzCircuit& c) {
        prepare_state(c, scratch_);
        return expectation(scratch_, *obs_);
    }

    const Observable& observable() const { return *obs_; }
    long shots() const { return shots_; }

  private:
    const Observable* obs_;
    long shots_;
    Rng* rng_;
    StateVector scratch_;
};

// <M>(theta) = amplitude * sin(theta + phase) + offset.
struct SinusoidFit {
    double amplitude = 0.0;
    double phase = 0.0;
    double offset = 0.0;

    double value(double theta) const {
        return amplitude * std::sin(theta + phase) + offset;
    }

    double minimum_theta() const { return wrap_angle(-0.5 * pi - phase); }
    double minimum_value() const { return offset - amplitude; }
};

// Reconstructs the sinusoid from three evaluations at phi, phi + pi/2,
// phi - pi/2. A flat landscape degenerates to amplitude 0 with phase 0
// by the atan2(0, 0) convention.
inline SinusoidFit fit_sinusoid(double m_phi, double m_plus, double m_minus, double phi) {
    const double sin_part = 2.0 * m_phi - m_plus - m_minus;
    const double cos_part = m_plus - m_minus;
    SinusoidFit fit;
    fit.amplitude = 0.5 * std::sqrt(sin_part * sin_part + cos_part * cos_part);
    fit.phase = std::atan2(sin_part, cos_part) - phi;
    fit.offset = 0.5 * (m_plus + m_minus);
    return fit;
}

inline double& angle_of(GateParam& slot) {
    if (auto* fixed = std::get_if<FixedAngleGate>(&slot)) {
        return fixed->theta;
    }
    if (auto* haar = std::get_if<HaarAngleGate>(&slot)) {
        return haar->theta;
    }
    throw std::invalid_argument("slot does not hold an angle parameterization");
}

// Closed-form single-angle minimization from three evaluations at
// theta = 0, +pi/2, -pi/2 (phi fixed to zero).
inline void rotosolve_step(AnsatzCircuit& c, int slot, CostOracle& oracle) {
    if (!oracle.budget.can_afford(3)) {
        throw BudgetExhausted{};
    }
    double& theta = angle_of(c.slots[static_cast<std::size_t>(slot)]);
    constexpr double phi = 0.0;
    theta = phi;
    const double m_phi = oracle.evaluate(c);
    theta = phi + 0.5 * pi;
    const double m_plus = oracle.evaluate(c);
    theta = phi - 0.5 * pi;
    const double m_minus = oracle.evaluate(c);
    theta = wrap_angle(phi - 0.5 * pi -
                       std::atan2(2.0 * m_phi - m_plus - m_minus, m_plus - m_minus));
}

// The 3x3 quadratic form R with cost(n) = n^T R n over unit axes at
// fixed rotation angle pi, probed at the three basis axes and the three
// pairwise midpoints (6 evaluations). The probed slot is restored before
// returning.
inline SymMat<3> fraxis_build_r_matrix(AnsatzCircuit& c, int slot, CostOracle& oracle) {
    if (!oracle.budget.can_afford(6)) {
        throw BudgetExhausted{};
    }
    auto* gate = std::get_if<AxisGate>(&c.slots[static_cast<std::size_t>(slot)]);
    if (gate == nullptr) {
        throw std::invalid_argument("fraxis_build_r_matrix: slot does not hold an axis");
    }
    const Axis3 original = gate->axis;
    static const Axis3 basis[3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    SymMat<3> r{};
    for (int k = 0; k < 3; ++k) {
        gate->axis = basis[k];
        r[k][k] = oracle.evaluate(c);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < 3; ++j) {
        for (int k = j + 1; k < 3; ++k) {
            gate->axis = {(basis[j].x + basis[k].x) * inv_sqrt2,
                          (basis[j].y + basis[k].y) * inv_sqrt2,
                          (basis[j].z + basis[k].z) * inv_sqrt2};
            const double mid = oracle.evaluate(c);
            r[j][k] = mid - 0.5 * (r[j][j] + r[k][k]);
            r[k][j] = r[j][k];
        }
    }
    gate->axis = original;
    return r;
}

inline void fraxis_step(AnsatzCircuit& c, int slot, CostOracle& oracle) {
    const auto r = fraxis_build_r_matrix(c, slot, oracle);
    const auto lowest = lowest_eigenpair_sym<3>(r);
    auto& gate = std::get<AxisGate>(c.slots[static_cast<std::size_t>(slot)]);
    gate.axis = {lowest.vector[0], lowest.vector[1], lowest.vector[2]};
}

// The 4x4 quadratic form S with cost(q) = q^T S q over unit quaternions,
// probed at the four basis quaternions and the six pairwise midpoints
// (10 evaluations). The probed slot is restored before returning.
inline SymMat<4> fqs_build_s_matrix(AnsatzCircuit& c, int slot, CostOracle& oracle) {
    if (!oracle.budget.can_afford(10)) {
        throw BudgetExhausted{};
    }
    auto* gate = std::get_if<QuatGate>(&c.slots[static_cast<std::size_t>(slot)]);
    if (gate == nullptr) {
        throw std::invalid_argument("fqs_build_s_matrix: slot does not hold a quaternion");
    }
    const Quaternion original = gate->q;
    static const Quaternion basis[4] = {{1.0, 0.0, 0.0, 0.0},
                                        {0.0, 1.0, 0.0, 0.0},
                                        {0.0, 0.0, 1.0, 0.0},
                                        {0.0, 0.0, 0.0, 1.0}};
    SymMat<4> s{};
    for (int k = 0; k < 4; ++k) {
        gate->q = basis[k];
        s[k][k] = oracle.evaluate(c);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            gate->q = {(basis[j].w + basis[k].w) * inv_sqrt2,
                       (basis[j].x + basis[k].x) * inv_sqrt2,
                       (basis[j].y + basis[k].y) * inv_sqrt2,
                       (basis[j].z + basis[k].z) * inv_sqrt2};
            const double mid = oracle.evaluate(c);
            s[j][k] = mid - 0.5 * (s[j][j] + s[k][k]);
            s[k][j] = s[j][k];
        }
    }
    gate->q = original;
    return s;
}

inline void fqs_step(AnsatzCircuit& c, int slot, CostOracle& oracle) {
    const auto s = fqs_build_s_matrix(c, slot, oracle);
    const auto lowest = lowest_eigenpair_sym<4>(s);
    auto& gate = std::get<QuatGate>(c.slots[static_cast<std::size_t>(slot)]);
    gate.q = {lowest.vector[0], lowest.vector[1], lowest.vector[2], lowest.vector[3]};
}

// Representation bridges used by the hybrids. Conversions preserve the
// gate matrix exactly, so switching the optimizer never moves the state.
inline void ensure_angle_form(AnsatzCircuit& c, int slot) {
    GateParam& p = c.slots[static_cast<std::size_t>(slot)];
    if (std::holds_alternative<FixedAngleGate>(p) || std::holds_alternative<HaarAngleGate>(p)) {
        return;
    }
    const auto dec = decompose_unitary(gate_matrix(p));
    p = HaarAngleGate{dec.theta, dec.conjugator};
}

inline void ensure_quaternion_form(AnsatzCircuit& c, int slot) {
    GateParam& p = c.slots[static_cast<std::size_t>(slot)];
    if (std::holds_alternative<QuatGate>(p)) {
        return;
    }
    p = QuatGate{quaternion_from_matrix(gate_matrix(p))};
}

// Called after every completed gate optimization; run_trial uses it to
// record the convergence trace.
using GateHook = std::function<void()>;

struct SweepOutcome {
    bool completed = false;
    int gates_done = 0;
};

namespace detail {

inline SweepOutcome sweep_with(AnsatzCircuit& c, CostOracle& oracle, const GateHook& hook,
                               long per_gate_cost,
                               const std::function<void(int)>& step_gate) {
    SweepOutcome out;
    const int slots = c.slot_count();
    for (int d = 0; d < slots; ++d) {
        if (!oracle.budget.can_afford(per_gate_cost)) {
            return out;
        }
        step_gate(d);
        ++out.gates_done;
        if (hook) {
            hook();
        }
    }
    out.completed = true;
    return out;
}

} // namespace detail

inline SweepOutcome rotosolve_sweep(AnsatzCircuit& c, CostOracle& oracle,
                                    const GateHook& hook = {}) {
    return detail::sweep_with(c, oracle, hook, 3,
                              [&](int d) { rotosolve_step(c, d, oracle); });
}

inline SweepOutcome fraxis_sweep(AnsatzCircuit& c, CostOracle& oracle,
                                 const GateHook& hook = {}) {
    return detail::sweep_with(c, oracle, hook, 6,
                              [&](int d) { fraxis_step(c, d, oracle); });
}

inline SweepOutcome fqs_sweep(AnsatzCircuit& c, CostOracle& oracle,
                              const GateHook& hook = {}) {
    return detail::sweep_with(c, oracle, hook, 10, [&](int d) {
        ensure_quaternion_form(c, d);
        fqs_step(c, d, oracle);
    });
}

inline SweepOutcome rotosolve_haar_sweep(AnsatzCircuit& c, CostOracle& oracle,
                                         const GateHook& hook = {}) {
    return detail::sweep_with(c, oracle, hook, 3, [&](int d) {
        ensure_angle_form(c, d);
        rotosolve_step(c, d, oracle);
    });
}

// d<M>/dtheta = (<M>_{theta+pi/2} - <M>_{theta-pi/2}) / 2, exact for
// involutory generators; 2 evaluations. Restores the slot angle.
inline double parameter_shift_gradient(AnsatzCircuit& c, int slot, CostOracle& oracle) {
    if (!oracle.budget.can_afford(2)) {
        throw BudgetExhausted{};
    }
    double& theta = angle_of(c.slots[static_cast<std::size_t>(slot)]);
    const double center = theta;
    theta = center + 0.5 * pi;
    const double m_plus = oracle.evaluate(c);
    theta = center - 0.5 * pi;
    const double m_minus = oracle.evaluate(c);
    theta = center;
    return 0.5 * (m_plus - m_minus);
}

// Adam over the parameter-shift gradient, one slot at a time. Moment
// vectors persist across sweeps; the bias-correction step count advances
// once per sweep.
struct AdamState {
    double learning_rate = 0.1;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long step_count = 0;
    std::vector<double> first_moment;
    std::vector<double> second_moment;
};

inline SweepOutcome adam_parameter_shift_sweep(AnsatzCircuit& c, AdamState& state,
                                               CostOracle& oracle, const GateHook& hook = {}) {
    const auto slots = static_cast<std::size_t>(c.slot_count());
    state.first_moment.resize(slots, 0.0);
    state.second_moment.resize(slots, 0.0);
    ++state.step_count;
    const double bias1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step_count));
    const double bias2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step_count));
    return detail::sweep_with(c, oracle, hook, 2, [&](int d) {
        const double grad = parameter_shift_gradient(c, d, oracle);
        double& theta = angle_of(c.slots[static_cast<std::size_t>(d)]);
        const double center = theta;
        const auto di = static_cast<std::size_t>(d);
        state.first_moment[di] = state.beta1 * state.first_moment[di] + (1.0 - state.beta1) * grad;
        state.second_moment[di] =
            state.beta2 * state.second_moment[di] + (1.0 - state.beta2) * grad * grad;
        const double m_hat = state.first_moment[di] / bias1;
        const double v_hat = state.second_moment[di] / bias2;
        theta = wrap_angle(center - state.learning_rate * m_hat / (std::sqrt(v_hat) + state.epsilon));
    });
}

// Per-gate coin flip between the 3-evaluation angle step (probability p)
// and the 10-evaluation quaternion step, converting the slot
// representation just in time.
inline SweepOutcome gate_specific_sweep(AnsatzCircuit& c, double mix_p, Rng& rng,
                                        CostOracle& oracle, const GateHook& hook = {}) {
    if (mix_p < 0.0 || mix_p > 1.0) {
        throw std::invalid_argument("gate_specific_sweep: probability must be in [0, 1]");
    }
    SweepOutcome out;
    const int slots = c.slot_count();
    for (int d = 0; d < slots; ++d) {
        const bool use_angle = rng.uniform() < mix_p;
        const long cost = use_angle ? 3 : 10;
        if (!oracle.budget.can_afford(cost)) {
            return out;
        }
        if (use_angle) {
            ensure_angle_form(c, d);
            rotosolve_step(c, d, oracle);
        } else {
            ensure_quaternion_form(c, d);
            fqs_step(c, d, oracle);
        }
        ++out.gates_done;
        if (hook) {
            hook();
        }
    }
    out.completed = true;
    return out;
}

enum class IterationHybrid {
    FqsEveryN,           // quaternion sweeps on every N-th iteration
    RotosolveHaarEveryN, // angle sweeps on every N-th iteration
};

// Whole-sweep alternation: iteration indices are 1-based and the chosen
// algorithm switches whenever the index is a multiple of the period.
inline SweepOutcome iteration_specific_sweep(AnsatzCircuit& c, int period, long iteration,
                                             IterationHybrid which, CostOracle& oracle,
                                             const GateHook& hook = {}) {
    if (period < 1) {
        throw std::invalid_argument("iteration_specific_sweep: period must be >= 1");
    }
    if (iteration < 1) {
        throw std::invalid_argument("iteration_specific_sweep: iteration must be >= 1");
    }
    const bool on_period = iteration % period == 0;
    const bool use_fqs = which == IterationHybrid::FqsEveryN ? on_period : !on_period;
    return use_fqs ? fqs_sweep(c, oracle, hook) : rotosolve_haar_sweep(c, oracle, hook);
}

enum class Algorithm {
    Adam,
    Rotosolve,
    RotosolveHaar,
    Fraxis,
    Fqs,
    GateHybrid,
    IterHybridFqs,
    IterHybridRotosolveHaar,
};

inline std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Adam:
        return "adam";
    case Algorithm::Rotosolve:
        return "rotosolve";
    case Algorithm::RotosolveHaar:
        return "rotosolve_haar";
    case Algorithm::Fraxis:
        return "fraxis";
    case Algorithm::Fqs:
        return "fqs";
    case Algorithm::GateHybrid:
        return "gate_hybrid";
    case Algorithm::IterHybridFqs:
        return "iter_hybrid_fqs";
    case Algorithm::IterHybridRotosolveHaar:
        return "iter_hybrid_rotosolve_haar";
    }
    return "unknown";
}

// Draws the initial slot parameterization each algorithm starts from:
// uniform angles with a random Pauli generator for the fixed-generator
// optimizers, uniform angles with Haar conjugators for the randomized
// ones, uniform axes for the axis optimizer and Haar gates for the
// quaternion optimizer.
inline GateParam initial_slot(Algorithm algorithm, Rng& rng) {
    switch (algorithm) {
    case Algorithm::Adam:
    case Algorithm::Rotosolve: {
        const double theta = rng.uniform_open_closed(-pi, pi);
        static constexpr PauliAxis axes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
        return FixedAngleGate{theta, axes[rng.below(3)]};
    }
    case Algorithm::RotosolveHaar:
    case Algorithm::GateHybrid:
    case Algorithm::IterHybridFqs:
    case Algorithm::IterHybridRotosolveHaar: {
        const double theta = rng.uniform_open_closed(-pi, pi);
        return HaarAngleGate{theta, haar_random_u2(rng)};
    }
    case Algorithm::Fraxis:
        return AxisGate{random_unit_axis(rng)};
    case Algorithm::Fqs:
        return QuatGate{haar_random_su2_quaternion(rng)};
    }
    throw std::invalid_argument("initial_slot: unknown algorithm");
}

struct TrialConfig {
    Algorithm algorithm = Algorithm::Rotosolve;
    double gate_mix_p = 0.5; // gate-specific hybrid only
    int every_n = 2;         // iteration-specific hybrids only
    long shots = 0;          // 0 = exact expectation values
    int rotosolve_iterations = 50;
    double adam_learning_rate = 0.1;
    bool record_trace_distance = false;
};

struct TrialRecord {
    long evals_used = 0;
    double cost = 0.0;
};

struct TrialTrace {
    std::uint64_t seed = 0;
    std::string algorithm;
    std::optional<double> hyperparam;
    long budget_limit = 0;
    long sweeps_completed = 0;
    bool truncated_final_sweep = false;
    std::vector<TrialRecord> records;
};

inline std::optional<double> algorithm_hyperparam(const TrialConfig& cfg) {
    switch (cfg.algorithm) {
    case Algorithm::GateHybrid:
        return cfg.gate_mix_p;
    case Algorithm::IterHybridFqs:
    case Algorithm::IterHybridRotosolveHaar:
        return static_cast<double>(cfg.every_n);
    default:
        return std::nullopt;
    }
}

// One seeded optimization run. The evaluation budget is 3 * slots *
// rotosolve_iterations for every algorithm, so all of them receive the
// same number of circuit evaluations; a sweep that does not fit the
// remaining budget is truncated and the trial ends there. The recorded
// cost after each gate optimization is an exact instrumentation read
// that does not consume budget.
inline TrialTrace run_trial(int n_qubits, int layers, const Observable& obs,
                            const TrialConfig& cfg, std::uint64_t seed) {
    if (cfg.rotosolve_iterations < 1) {
        throw std::invalid_argument("run_trial: iteration count must be >= 1");
    }
    if (cfg.shots < 0) {
        throw std::invalid_argument("run_trial: shot count must be >= 0");
    }
    if (cfg.algorithm == Algorithm::GateHybrid &&
        (cfg.gate_mix_p < 0.0 || cfg.gate_mix_p > 1.0)) {
        throw std::invalid_argument("run_trial: hybrid probability must be in [0, 1]");
    }
    if ((cfg.algorithm == Algorithm::IterHybridFqs ||
         cfg.algorithm == Algorithm::IterHybridRotosolveHaar) &&
        cfg.every_n < 1) {
        throw std::invalid_argument("run_trial: hybrid period must be >= 1");
    }

    AnsatzCircuit circuit = make_ansatz(n_qubits, layers);
    Rng rng(seed);
    for (GateParam& slot : circuit.slots) {
        slot = initial_slot(cfg.algorithm, rng);
    }

    CostOracle oracle(obs, cfg.shots, &rng);
    oracle.budget.limit = 3L * circuit.slot_count() * cfg.rotosolve_iterations;

    TrialTrace trace;
    trace.seed = seed;
    trace.algorithm = algorithm_name(cfg.algorithm);
    trace.hyperparam = algorithm_hyperparam(cfg);
    trace.budget_limit = oracle.budget.limit;

    const auto record = [&] {
        const double cost = oracle.instrument(circuit);
        const double metric =
            cfg.record_trace_distance
                ? std::sqrt(std::clamp(1.0 + cost, 0.0, 1.0))
                : cost;
        trace.records.push_back({oracle.budget.used, metric});
    };
    record();

    AdamState adam;
    adam.learning_rate = cfg.adam_learning_rate;

    for (long iteration = 1;; ++iteration) {
        SweepOutcome outcome;
        switch (cfg.algorithm) {
        case Algorithm::Adam:
            outcome = adam_parameter_shift_sweep(circuit, adam, oracle, record);
            break;
        case Algorithm::Rotosolve:
        case Algorithm::RotosolveHaar:
            outcome = rotosolve_sweep(circuit, oracle, record);
            break;
        case Algorithm::Fraxis:
            outcome = fraxis_sweep(circuit, oracle, record);
            break;
        case Algorithm::Fqs:
            outcome = fqs_sweep(circuit, oracle, record);
            break;
        case Algorithm::GateHybrid:
            outcome = gate_specific_sweep(circuit, cfg.gate_mix_p, rng, oracle, record);
            break;
        case Algorithm::IterHybridFqs:
            outcome = iteration_specific_sweep(circuit, cfg.every_n, iteration,
                                               IterationHybrid::FqsEveryN, oracle, record);
            break;
        case Algorithm::IterHybridRotosolveHaar:
            outcome = iteration_specific_sweep(circuit, cfg.every_n, iteration,
                                               IterationHybrid::RotosolveHaarEveryN, oracle,
                                               record);
            break;
        }
        if (!outcome.completed) {
            trace.truncated_final_sweep = outcome.gates_done > 0;
            break;
        }
        trace.sweeps_completed = iteration;
    }
    return trace;
}

} // namespace vqcopt

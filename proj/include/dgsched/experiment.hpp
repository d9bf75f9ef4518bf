#ifndef DGSCHED_EXPERIMENT_HPP
#define DGSCHED_EXPERIMENT_HPP

#include "dgsched/chain_builder.hpp"
#include "dgsched/generator.hpp"
#include "dgsched/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgsched {

// One evaluated algorithm: sequencer x (semi-partitioned | partitioned) x
// (preemptive | non-preemptive second sections). Labels follow the
// "JKS-SP-P" pattern; the partitioned side uses the simple two-phase
// heuristic.
struct AlgorithmSpec {
    Sequencer sequencer = Sequencer::JKS;
    bool semi_partitioned = true;
    bool preemptive = true;

    std::string label() const;
};

std::optional<AlgorithmSpec> algorithm_from_label(std::string_view label);
std::vector<AlgorithmSpec> all_algorithms();

struct PointConfig {
    int processors = 8;
    int semaphores = 8;
    Rational beta_low = rational_of(1, 10);
    Rational beta_high = rational_of(2, 5);
    int sets = 200;
    std::uint64_t seed = 1;
    int tasks_per_processor = 10;
    Rational per_task_cap = rational_of(1, 2);
};

struct ExperimentRow {
    std::string algorithm;
    int processors = 0;
    int semaphores = 0;
    Rational beta_low, beta_high;
    Rational multiplier;
    int accepted = 0;
    int total = 0;
};

struct SweepConfig {
    std::vector<int> processors{8};
    std::vector<int> semaphores{8};
    std::vector<std::pair<Rational, Rational>> beta_ranges{
        {rational_of(1, 10), rational_of(2, 5)}};
    int sets_per_point = 200;
    std::vector<Rational> multipliers; // within [1, 9/5]; default 0.05 grid
    std::vector<AlgorithmSpec> algorithms = all_algorithms();
    std::uint64_t seed = 1;
    int tasks_per_processor = 10;
    Rational per_task_cap = rational_of(1, 2);
    int threads = 1;
};

std::vector<Rational> default_multiplier_grid(); // 1.00, 1.05, ..., 1.80

// Per-set result of one algorithm: the deadline-independent makespan, the
// validator verdict, and the bounds needed for reporting. A set is accepted
// at deadline D = multiplier * lb_fast iff valid and makespan <= D.
struct SetOutcome {
    TimeValue lower_bound;  // lb_fast of the generated set
    TimeValue makespan;
    TimeValue list_bound;
    bool valid = false;

    bool accepted_at(const Rational& multiplier) const
    {
        return valid && makespan <= multiplier * lower_bound;
    }
};

// Outcomes for all requested algorithms on the point's generated task sets;
// outcome[a][s] pairs algorithm a with set s. Task sets are shared across
// algorithms and derived deterministically from the point seed, so results
// do not depend on `threads`.
std::vector<std::vector<SetOutcome>> evaluate_point(const PointConfig& point,
                                                    const std::vector<AlgorithmSpec>& algorithms,
                                                    int threads = 1);

ExperimentRow run_point(const PointConfig& point, const AlgorithmSpec& algorithm,
                        const Rational& multiplier);

// Cross-product of processors x semaphores x beta ranges x algorithms x
// multipliers, with paired task sets per point. Rows come back sorted by
// (algorithm, M, z, beta, multiplier).
std::vector<ExperimentRow> run_sweep(const SweepConfig& config);

// CSV columns: algorithm,M,z,beta_low,beta_high,multiplier,accepted,total,ratio
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

SweepConfig sweep_config_from_json(const std::string& text);

} // namespace dgsched

#endif

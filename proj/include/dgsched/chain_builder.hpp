#ifndef DGSCHED_CHAIN_BUILDER_HPP
#define DGSCHED_CHAIN_BUILDER_HPP

#include "dgsched/model.hpp"

#include <optional>
#include <vector>

namespace dgsched {

// Single-machine job in the delivery-time model: released at `release`,
// needs `processing` on the machine, and its result takes `delivery`
// after completion. One job per task sharing a semaphore, with
// (r, p, q) = (c1, a1, c2).
struct DeliveryJob {
    int job_id = 0;
    TimeValue release;
    TimeValue processing;
    TimeValue delivery;
};

// Non-preemptive schedule of delivery jobs on one machine. Jobs run in
// `order` as early as possible: each starts at max(previous finish, own
// release). No idle time is ever inserted beyond release waits.
struct SingleMachineSchedule {
    std::vector<int> order;        // job ids in processing order
    std::vector<TimeValue> start;  // parallel to order
    std::vector<TimeValue> finish; // parallel to order
    TimeValue delivered_by;        // max over jobs of finish + delivery
};

// The critical job realizes delivered_by; the critical sequence is the
// maximal idle-free run of jobs ending at it. The interference job is the
// last job in that run whose delivery time is smaller than the critical
// job's; if there is none, the schedule is optimal for the instance.
struct CriticalSequenceInfo {
    int critical_job = 0;
    int first_busy_job = 0;
    std::optional<int> interference_job;
};

enum class Sequencer { JKS, Potts, BruteForce };

const char* sequencer_name(Sequencer sequencer);
std::optional<Sequencer> sequencer_from_name(std::string_view name);

// One DeliveryJob per task, (r, p, q) = (c1, a1, c2).
std::vector<DeliveryJob> reduce_to_delivery(const std::vector<Task>& tasks_of_semaphore);

// Earliest-start simulation of a fixed order under the true releases.
SingleMachineSchedule simulate_order(const std::vector<DeliveryJob>& jobs,
                                     const std::vector<int>& order);

// Extended Jackson's rule: whenever the machine is free, run an available
// job with the largest delivery time (ties: smallest job id). If no job is
// available, jump to the next release. 2-approximation.
SingleMachineSchedule jks(const std::vector<DeliveryJob>& jobs);

// Critical job = first job in processing order attaining delivered_by.
// Requires a schedule produced with earliest-start semantics.
CriticalSequenceInfo critical_sequence(const SingleMachineSchedule& schedule,
                                       const std::vector<DeliveryJob>& jobs);

// Potts' iterative improvement: run JKS; while an interference job J_b
// exists (at most n iterations), delay its release to the critical job's
// release and re-run JKS. Every candidate order is re-simulated under the
// true releases and the best schedule is returned. 1.5-approximation;
// never worse than jks() on the same instance.
SingleMachineSchedule potts(const std::vector<DeliveryJob>& jobs);

inline constexpr int kBruteForceCap = 9;

// Exhaustive minimization of delivered_by over all permutations under
// earliest-start semantics. Ties resolve to the lexicographically smallest
// order of job ids. Throws std::invalid_argument if jobs.size() > cap.
SingleMachineSchedule brute_force_optimal(const std::vector<DeliveryJob>& jobs,
                                          int cap = kBruteForceCap);

// Graph construction: per semaphore, sequence that semaphore's tasks on a
// single machine in the delivery-time model and chain the critical
// sections in the resulting order; intra-task edges are always present.
DependencyGraph build_graph(const TaskSet& tasks, Sequencer sequencer,
                            int brute_force_cap = kBruteForceCap);

// Maximum over all directed paths of the sum of vertex durations.
// Throws std::invalid_argument if the graph is cyclic.
TimeValue critical_path_length(const DependencyGraph& graph, const TaskSet& tasks);

// For each vertex, the longest path starting at it (own duration included).
// Used as the dispatch priority in the schedulers.
std::vector<TimeValue> longest_path_from_vertex(const DependencyGraph& graph,
                                                const TaskSet& tasks);

} // namespace dgsched

#endif

#ifndef DGSCHED_ANALYSIS_HPP
#define DGSCHED_ANALYSIS_HPP

#include "dgsched/chain_builder.hpp"
#include "dgsched/list_scheduler.hpp"
#include "dgsched/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgsched {

struct BoundsReport {
    std::optional<TimeValue> lb_exact; // max{W/M, len(G*)}, absent beyond the brute-force cap
    TimeValue lb_fast;                 // max{W/M, min c1 + min c2 + max_k CriticalSum_k}
    TimeValue list_bound;              // (W - len(G))/M + len(G)
    TimeValue achieved_makespan;
    Rational ratio_vs_lb;              // makespan over the strongest available bound
    bool ratio_uses_exact = false;     // which bound the ratio was computed against
};

enum class ViolationKind {
    Overlap,           // two segments on one processor overlap
    IntraTaskParallel, // one task runs on two processors at the same time
    PrecedenceBroken,  // a subjob starts before a graph predecessor finishes
    MutexBroken,       // same-semaphore critical sections overlap or ignore the chain order
    PolicyBroken,      // placement/contiguity rules of the declared policy violated
    WorkMismatch,      // scheduled time of a subjob differs from its declared length
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

// max{W/M, len(G*)} with len(G*) obtained by brute-force sequencing of every
// semaphore chain. Throws std::invalid_argument when a chain exceeds `cap`.
TimeValue lower_bound_exact(const TaskSet& tasks, int processors,
                            int cap = kBruteForceCap);

// Evaluation-protocol bound: max{W/M, min_i c1 + min_i c2 + max_k CriticalSum_k}
// where CriticalSum_k sums the critical sections sharing semaphore k. A safe
// approximation of len(G*) from below; never exceeds lower_bound_exact.
TimeValue lower_bound_fast(const TaskSet& tasks, int processors);

// List-schedule makespan bound (W - len(G))/M + len(G).
TimeValue list_schedule_bound(const DependencyGraph& graph, const TaskSet& tasks,
                              int processors);

// Checks a schedule against the task set, the dependency graph, and the
// declared policy. Returns one entry per detected violation; an empty result
// certifies: no per-processor overlap, no intra-task parallelism, exact
// per-subjob work, precedence respected, same-semaphore critical sections
// mutually exclusive in chain order, critical sections never preempted, and
// the placement rules of the policy (partitioned: whole task on one
// processor; semi-partitioned non-preemptive: every subjob contiguous;
// semi-partitioned preemptive: only second sections may split).
std::vector<Violation> validate(const Schedule& schedule, const TaskSet& tasks,
                                const DependencyGraph& graph,
                                const SchedulerConfig& config);
std::vector<Violation> validate(const Schedule& schedule, const TaskSet& tasks,
                                const DependencyGraph& graph);

// Worst-case family for the two-step approach: N = M^2 - M + 1 tasks share
// one semaphore; task 1 is (delta, Q - Q/M, Q/M + N*delta), the others are
// (delta, delta, Q/M). Scheduling even the best dependency graph needs at
// least delta + (2 - 1/M) * Q under (semi-)partitioned policies, while the
// reference schedule below finishes at (2N + M) * delta + Q.
// Requires M >= 2, Q > 0 and 0 < delta < Q / (M * N).
TaskSet gap_instance(int processors, const TimeValue& big_q, const TimeValue& delta);

// The hand-crafted partitioned schedule of the gap instance with makespan
// exactly (2N + M) * delta + Q: task 1 lives alone on processor M, the
// other N - 1 first sections are list-scheduled on processors 1..M-1,
// critical sections run in reversed index order from time M*delta, second
// sections from time (M + N) * delta.
Schedule gap_instance_reference_schedule(const TaskSet& instance, int processors);

// Dependency graph whose chain matches the reference schedule (reversed
// index order); the reference schedule validates against it.
DependencyGraph gap_instance_reference_graph(const TaskSet& instance);

BoundsReport make_bounds_report(const TaskSet& tasks, const DependencyGraph& graph,
                                const Schedule& schedule, int processors,
                                int cap = kBruteForceCap);
std::string bounds_report_json(const BoundsReport& report);

} // namespace dgsched

#endif

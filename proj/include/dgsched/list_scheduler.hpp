#ifndef DGSCHED_LIST_SCHEDULER_HPP
#define DGSCHED_LIST_SCHEDULER_HPP

#include "dgsched/model.hpp"

#include <string>

namespace dgsched {

// Dispatch priority among eligible subjobs. The single built-in rule runs
// eligible critical sections before non-critical ones and orders subjobs of
// the same class by the longest path starting at their vertex (descending),
// then by task id.
enum class PriorityRule { LongestChainFirst };

struct SchedulerConfig {
    int processors = 1;
    Policy policy = Policy::SemiPartitionedNP;
    // Only meaningful for the semi-partitioned and partitioned-simple
    // policies: allows an eligible critical section (semi-partitioned) or
    // background padding (partitioned) to preempt second non-critical
    // sections. Critical sections themselves are never preempted.
    bool preempt_second_sections = false;
    PriorityRule priority_rule = PriorityRule::LongestChainFirst;
};

// One processor per task (requires processors >= task count): non-critical
// sections run on the task's own processor, critical sections as early as
// the graph permits. Makespan equals the critical path length.
// Throws std::invalid_argument when processors < task count; use one of the
// list-scheduling policies in that case.
Schedule schedule_dedicated(const DependencyGraph& graph, const TaskSet& tasks,
                            int processors);

// Event-driven list schedule where each subjob is placed individually.
// Subjobs run non-preemptively unless preempt_second_sections is set, in
// which case an eligible critical section may preempt a running second
// non-critical section; the preempted remainder may resume on any
// processor. Makespan <= (W - len(G))/M + len(G).
Schedule schedule_semi_partitioned(const DependencyGraph& graph, const TaskSet& tasks,
                                   int processors, bool preempt_second_sections);

// Tied list scheduling: one task is seeded per processor; whenever a
// processor idles it runs an eligible critical section of a task tied to
// it, else pulls a new task (largest remaining work first) and runs its
// first section. Second non-critical sections are padded into idle time as
// early as possible, never before their critical section finishes, and may
// be split around later subjobs of the same processor.
// Falls back to schedule_dedicated when task count <= processors.
Schedule schedule_partitioned_tied(const DependencyGraph& graph, const TaskSet& tasks,
                                   int processors);

// Two-phase heuristic: all first non-critical sections are list-scheduled
// before any critical section starts; a task is tied to the processor that
// ran its first section. Critical sections then run on tied processors in
// chain order, and second sections are padded as in the tied scheduler
// (contiguously when preempt_second_sections is false).
Schedule schedule_partitioned_simple(const DependencyGraph& graph, const TaskSet& tasks,
                                     int processors, bool preempt_second_sections = true);

Schedule run_scheduler(const DependencyGraph& graph, const TaskSet& tasks,
                       const SchedulerConfig& config);

// CSV with header "task,kind,processor,start,end"; times are exact
// rationals in num/den form. Lines starting with '#' are ignored on read.
std::string schedule_to_csv(const Schedule& schedule);
Schedule schedule_from_csv(const std::string& text, int processors, Policy policy);

// Per-processor textual time line, for humans.
std::string gantt_text(const Schedule& schedule);

} // namespace dgsched

#endif

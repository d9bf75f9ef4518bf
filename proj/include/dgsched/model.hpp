#ifndef DGSCHED_MODEL_HPP
#define DGSCHED_MODEL_HPP

#include "dgsched/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgsched {

// One frame-based task: first non-critical section, at most one critical
// section guarded by a binary semaphore, second non-critical section.
// All tasks release at time 0.
struct Task {
    int id = 0;
    TimeValue c1;      // first non-critical section
    TimeValue a1;      // critical section
    TimeValue c2;      // second non-critical section
    std::optional<int> semaphore; // dense index; present iff a1 > 0

    TimeValue total() const { return c1 + a1 + c2; }
};

enum class SubjobKind { FirstNonCritical = 0, Critical = 1, SecondNonCritical = 2 };

const char* subjob_kind_name(SubjobKind kind);               // "c1" / "a1" / "c2"
std::optional<SubjobKind> subjob_kind_from_name(std::string_view name);

struct SubjobRef {
    int task_id = 0;
    SubjobKind kind = SubjobKind::FirstNonCritical;

    friend bool operator==(const SubjobRef&, const SubjobRef&) = default;
};

// Input form of a task; semaphores are opaque strings in I/O and are mapped
// to dense indices when the TaskSet is built.
struct TaskInput {
    int id = 0;
    TimeValue c1, a1, c2;
    std::optional<std::string> semaphore;
};

// Immutable task set. Task ids are contiguous from 1; the semaphore count z
// equals the number of distinct semaphore names appearing in the tasks.
class TaskSet {
public:
    TaskSet() = default;
    TaskSet(const std::vector<TaskInput>& inputs,
            std::optional<TimeValue> deadline = std::nullopt);

    int task_count() const { return static_cast<int>(tasks_.size()); }
    const std::vector<Task>& tasks() const { return tasks_; }
    const Task& task(int id) const { return tasks_.at(id - 1); }

    int semaphore_count() const { return static_cast<int>(semaphore_names_.size()); }
    const std::string& semaphore_name(int index) const { return semaphore_names_.at(index); }
    const std::vector<std::string>& semaphore_names() const { return semaphore_names_; }
    // Task ids using semaphore `index`, in ascending id order.
    std::vector<int> tasks_of_semaphore(int index) const;

    const std::optional<TimeValue>& deadline() const { return deadline_; }

    TimeValue subjob_duration(int task_id, SubjobKind kind) const;

private:
    std::vector<Task> tasks_;
    std::vector<std::string> semaphore_names_;
    std::optional<TimeValue> deadline_;
};

// DAG over subjob vertices: per task the chain c1 -> a1 -> c2, plus one
// chain per semaphore over the critical sections in a chosen total order.
// Every task contributes three vertices; zero-duration vertices carry
// precedence but never produce schedule segments.
class DependencyGraph {
public:
    static int vertex_id(int task_id, SubjobKind kind)
    {
        return 3 * (task_id - 1) + static_cast<int>(kind);
    }
    static SubjobRef vertex_ref(int vertex)
    {
        return SubjobRef{vertex / 3 + 1, static_cast<SubjobKind>(vertex % 3)};
    }

    // Builds the graph for a task set given, per semaphore index, the total
    // order of that semaphore's task ids. Every semaphore user must appear
    // exactly once in its chain.
    static DependencyGraph for_taskset(const TaskSet& tasks,
                                       std::vector<std::vector<int>> chains);

    // Arbitrary edge set over the subjob vertices of `n_tasks` tasks.
    // Used by tests and the validator's negative fixtures; may be cyclic.
    static DependencyGraph from_edges(int n_tasks,
                                      const std::vector<std::pair<int, int>>& edges,
                                      std::vector<std::vector<int>> chains = {});

    int task_count() const { return n_tasks_; }
    int vertex_count() const { return 3 * n_tasks_; }
    const std::vector<int>& predecessors(int vertex) const { return preds_.at(vertex); }
    const std::vector<int>& successors(int vertex) const { return succs_.at(vertex); }
    // Per-semaphore total orders over task ids.
    const std::vector<std::vector<int>>& chains() const { return chains_; }

    std::vector<std::pair<int, int>> edges() const;

    // Vertices in topological order; throws std::invalid_argument on a cycle.
    std::vector<int> topological_order() const;

    // "t3.a1 -> t4.a1" edge list, one edge per line, for debugging.
    std::string edge_list_text() const;

private:
    int n_tasks_ = 0;
    std::vector<std::vector<int>> preds_;
    std::vector<std::vector<int>> succs_;
    std::vector<std::vector<int>> chains_;

    void add_edge(int from, int to);
};

enum class Policy {
    SemiPartitionedNP,
    SemiPartitionedP,
    PartitionedTied,
    PartitionedSimple,
};

const char* policy_name(Policy policy);
std::optional<Policy> policy_from_name(std::string_view name);

struct ScheduleSegment {
    int task_id = 0;
    SubjobKind kind = SubjobKind::FirstNonCritical;
    int processor = 1; // 1-based
    TimeValue start;
    TimeValue end;
};

struct Schedule {
    int processors = 1;
    Policy policy = Policy::SemiPartitionedNP;
    std::vector<ScheduleSegment> segments;
};

// Latest completion time over all segments; 0 for an empty schedule.
TimeValue makespan(const Schedule& schedule);

// Sum over tasks of c1 + a1 + c2.
TimeValue total_work(const TaskSet& tasks);

} // namespace dgsched

#endif

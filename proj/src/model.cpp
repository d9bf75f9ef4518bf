#include "dgsched/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dgsched {

const char* subjob_kind_name(SubjobKind kind)
{
    switch (kind) {
    case SubjobKind::FirstNonCritical: return "c1";
    case SubjobKind::Critical: return "a1";
    case SubjobKind::SecondNonCritical: return "c2";
    }
    return "?";
}

std::optional<SubjobKind> subjob_kind_from_name(std::string_view name)
{
    if (name == "c1")
        return SubjobKind::FirstNonCritical;
    if (name == "a1")
        return SubjobKind::Critical;
    if (name == "c2")
        return SubjobKind::SecondNonCritical;
    return std::nullopt;
}

TaskSet::TaskSet(const std::vector<TaskInput>& inputs, std::optional<TimeValue> deadline)
    : deadline_(std::move(deadline))
{
    tasks_.reserve(inputs.size());
    std::map<std::string, int> name_to_index;
    int next_id = 1;
    for (const TaskInput& in : inputs) {
        if (in.id != next_id)
            throw std::invalid_argument("task ids must be contiguous from 1, got id "
                                        + std::to_string(in.id) + " at position "
                                        + std::to_string(next_id));
        ++next_id;
        if (in.c1 < 0 || in.a1 < 0 || in.c2 < 0)
            throw std::invalid_argument("negative segment length in task "
                                        + std::to_string(in.id));
        Task task;
        task.id = in.id;
        task.c1 = in.c1;
        task.a1 = in.a1;
        task.c2 = in.c2;
        if (in.a1 > 0) {
            if (!in.semaphore || in.semaphore->empty())
                throw std::invalid_argument("task " + std::to_string(in.id)
                                            + " has a critical section but no semaphore");
            auto [it, inserted] = name_to_index.try_emplace(
                *in.semaphore, static_cast<int>(semaphore_names_.size()));
            if (inserted)
                semaphore_names_.push_back(*in.semaphore);
            task.semaphore = it->second;
        } else if (in.semaphore && !in.semaphore->empty()) {
            throw std::invalid_argument("task " + std::to_string(in.id)
                                        + " has a semaphore but no critical section");
        }
        tasks_.push_back(std::move(task));
    }
    if (deadline_ && *deadline_ < 0)
        throw std::invalid_argument("negative deadline");
}

std::vector<int> TaskSet::tasks_of_semaphore(int index) const
{
    std::vector<int> ids;
    for (const Task& t : tasks_)
        if (t.semaphore && *t.semaphore == index)
            ids.push_back(t.id);
    return ids;
}

TimeValue TaskSet::subjob_duration(int task_id, SubjobKind kind) const
{
    const Task& t = task(task_id);
    switch (kind) {
    case SubjobKind::FirstNonCritical: return t.c1;
    case SubjobKind::Critical: return t.a1;
    case SubjobKind::SecondNonCritical: return t.c2;
    }
    throw std::logic_error("bad subjob kind");
}

void DependencyGraph::add_edge(int from, int to)
{
    succs_.at(from).push_back(to);
    preds_.at(to).push_back(from);
}

DependencyGraph DependencyGraph::for_taskset(const TaskSet& tasks,
                                             std::vector<std::vector<int>> chains)
{
    DependencyGraph g;
    g.n_tasks_ = tasks.task_count();
    g.preds_.resize(g.vertex_count());
    g.succs_.resize(g.vertex_count());

    for (const Task& t : tasks.tasks()) {
        g.add_edge(vertex_id(t.id, SubjobKind::FirstNonCritical),
                   vertex_id(t.id, SubjobKind::Critical));
        g.add_edge(vertex_id(t.id, SubjobKind::Critical),
                   vertex_id(t.id, SubjobKind::SecondNonCritical));
    }

    if (static_cast<int>(chains.size()) != tasks.semaphore_count())
        throw std::invalid_argument("expected one chain per semaphore");
    for (int k = 0; k < tasks.semaphore_count(); ++k) {
        std::vector<int> expected = tasks.tasks_of_semaphore(k);
        std::vector<int> sorted = chains[k];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected)
            throw std::invalid_argument("chain for semaphore " + tasks.semaphore_name(k)
                                        + " is not a permutation of its tasks");
        for (size_t i = 0; i + 1 < chains[k].size(); ++i)
            g.add_edge(vertex_id(chains[k][i], SubjobKind::Critical),
                       vertex_id(chains[k][i + 1], SubjobKind::Critical));
    }
    g.chains_ = std::move(chains);
    return g;
}

DependencyGraph DependencyGraph::from_edges(int n_tasks,
                                            const std::vector<std::pair<int, int>>& edges,
                                            std::vector<std::vector<int>> chains)
{
    DependencyGraph g;
    g.n_tasks_ = n_tasks;
    g.preds_.resize(g.vertex_count());
    g.succs_.resize(g.vertex_count());
    for (auto [from, to] : edges) {
        if (from < 0 || from >= g.vertex_count() || to < 0 || to >= g.vertex_count())
            throw std::invalid_argument("edge endpoint out of range");
        g.add_edge(from, to);
    }
    g.chains_ = std::move(chains);
    return g;
}

std::vector<std::pair<int, int>> DependencyGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vertex_count(); ++v)
        for (int s : succs_[v])
            out.emplace_back(v, s);
    return out;
}

std::vector<int> DependencyGraph::topological_order() const
{
    std::vector<int> indegree(vertex_count(), 0);
    for (int v = 0; v < vertex_count(); ++v)
        indegree[v] = static_cast<int>(preds_[v].size());

    std::vector<int> order;
    order.reserve(vertex_count());
    std::vector<int> stack;
    for (int v = vertex_count() - 1; v >= 0; --v)
        if (indegree[v] == 0)
            stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int s : succs_[v])
            if (--indegree[s] == 0)
                stack.push_back(s);
    }
    if (static_cast<int>(order.size()) != vertex_count())
        throw std::invalid_argument("dependency graph contains a cycle");
    return order;
}

std::string DependencyGraph::edge_list_text() const
{
    std::ostringstream out;
    for (auto [from, to] : edges()) {
        SubjobRef u = vertex_ref(from), v = vertex_ref(to);
        out << 't' << u.task_id << '.' << subjob_kind_name(u.kind) << " -> "
            << 't' << v.task_id << '.' << subjob_kind_name(v.kind) << '\n';
    }
    return out.str();
}

const char* policy_name(Policy policy)
{
    switch (policy) {
    case Policy::SemiPartitionedNP: return "sp-np";
    case Policy::SemiPartitionedP: return "sp-p";
    case Policy::PartitionedTied: return "p-tied";
    case Policy::PartitionedSimple: return "p-simple";
    }
    return "?";
}

std::optional<Policy> policy_from_name(std::string_view name)
{
    if (name == "sp-np")
        return Policy::SemiPartitionedNP;
    if (name == "sp-p")
        return Policy::SemiPartitionedP;
    if (name == "p-tied")
        return Policy::PartitionedTied;
    if (name == "p-simple")
        return Policy::PartitionedSimple;
    return std::nullopt;
}

TimeValue makespan(const Schedule& schedule)
{
    TimeValue latest = 0;
    for (const ScheduleSegment& seg : schedule.segments)
        if (seg.end > latest)
            latest = seg.end;
    return latest;
}

TimeValue total_work(const TaskSet& tasks)
{
    TimeValue sum = 0;
    for (const Task& t : tasks.tasks())
        sum += t.total();
    return sum;
}

} // namespace dgsched

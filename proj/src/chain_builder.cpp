#include "dgsched/chain_builder.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dgsched {

const char* sequencer_name(Sequencer sequencer)
{
    switch (sequencer) {
    case Sequencer::JKS: return "jks";
    case Sequencer::Potts: return "potts";
    case Sequencer::BruteForce: return "brute";
    }
    return "?";
}

std::optional<Sequencer> sequencer_from_name(std::string_view name)
{
    if (name == "jks")
        return Sequencer::JKS;
    if (name == "potts")
        return Sequencer::Potts;
    if (name == "brute")
        return Sequencer::BruteForce;
    return std::nullopt;
}

std::vector<DeliveryJob> reduce_to_delivery(const std::vector<Task>& tasks_of_semaphore)
{
    std::vector<DeliveryJob> jobs;
    jobs.reserve(tasks_of_semaphore.size());
    for (const Task& t : tasks_of_semaphore)
        jobs.push_back(DeliveryJob{t.id, t.c1, t.a1, t.c2});
    return jobs;
}

namespace {

const DeliveryJob& job_by_id(const std::vector<DeliveryJob>& jobs, int job_id)
{
    for (const DeliveryJob& j : jobs)
        if (j.job_id == job_id)
            return j;
    throw std::invalid_argument("unknown job id " + std::to_string(job_id));
}

} // namespace

SingleMachineSchedule simulate_order(const std::vector<DeliveryJob>& jobs,
                                     const std::vector<int>& order)
{
    SingleMachineSchedule s;
    s.order = order;
    s.start.reserve(order.size());
    s.finish.reserve(order.size());
    s.delivered_by = 0;
    TimeValue now = 0;
    for (int id : order) {
        const DeliveryJob& j = job_by_id(jobs, id);
        TimeValue begin = std::max(now, j.release);
        TimeValue end = begin + j.processing;
        s.start.push_back(begin);
        s.finish.push_back(end);
        now = end;
        TimeValue delivered = end + j.delivery;
        if (delivered > s.delivered_by)
            s.delivered_by = delivered;
    }
    return s;
}

SingleMachineSchedule jks(const std::vector<DeliveryJob>& jobs)
{
    std::vector<int> remaining(jobs.size());
    for (size_t i = 0; i < jobs.size(); ++i)
        remaining[i] = static_cast<int>(i);

    std::vector<int> order;
    order.reserve(jobs.size());
    TimeValue now = 0;
    while (!remaining.empty()) {
        // next decision time: now, or the earliest release if nothing is ready
        TimeValue earliest = jobs[remaining.front()].release;
        for (int idx : remaining)
            if (jobs[idx].release < earliest)
                earliest = jobs[idx].release;
        if (now < earliest)
            now = earliest;

        int pick = -1;
        for (size_t pos = 0; pos < remaining.size(); ++pos) {
            const DeliveryJob& j = jobs[remaining[pos]];
            if (j.release > now)
                continue;
            if (pick < 0)
                pick = static_cast<int>(pos);
            else {
                const DeliveryJob& best = jobs[remaining[pick]];
                if (j.delivery > best.delivery
                    || (j.delivery == best.delivery && j.job_id < best.job_id))
                    pick = static_cast<int>(pos);
            }
        }
        const DeliveryJob& j = jobs[remaining[pick]];
        order.push_back(j.job_id);
        now += j.processing;
        remaining.erase(remaining.begin() + pick);
    }
    return simulate_order(jobs, order);
}

CriticalSequenceInfo critical_sequence(const SingleMachineSchedule& schedule,
                                       const std::vector<DeliveryJob>& jobs)
{
    if (schedule.order.empty())
        throw std::invalid_argument("critical sequence of an empty schedule");

    size_t n = schedule.order.size();
    std::vector<TimeValue> delivery(n);
    for (size_t pos = 0; pos < n; ++pos)
        delivery[pos] = job_by_id(jobs, schedule.order[pos]).delivery;

    size_t c_pos = 0;
    TimeValue best = schedule.finish[0] + delivery[0];
    for (size_t pos = 1; pos < n; ++pos) {
        TimeValue delivered = schedule.finish[pos] + delivery[pos];
        if (delivered > best) {
            best = delivered;
            c_pos = pos;
        }
    }

    size_t a_pos = c_pos;
    while (a_pos > 0 && schedule.start[a_pos] == schedule.finish[a_pos - 1])
        --a_pos;

    CriticalSequenceInfo info;
    info.critical_job = schedule.order[c_pos];
    info.first_busy_job = schedule.order[a_pos];
    for (size_t pos = a_pos; pos <= c_pos; ++pos)
        if (delivery[pos] < delivery[c_pos])
            info.interference_job = schedule.order[pos];
    return info;
}

SingleMachineSchedule potts(const std::vector<DeliveryJob>& jobs)
{
    if (jobs.empty())
        return SingleMachineSchedule{};

    std::vector<DeliveryJob> working = jobs;
    SingleMachineSchedule trial = jks(working);
    SingleMachineSchedule best = simulate_order(jobs, trial.order);

    size_t iterations = jobs.size();
    for (size_t i = 0; i < iterations; ++i) {
        CriticalSequenceInfo info = critical_sequence(trial, working);
        if (!info.interference_job)
            break;
        const DeliveryJob& critical = job_by_id(working, info.critical_job);
        for (DeliveryJob& j : working)
            if (j.job_id == *info.interference_job)
                j.release = critical.release;
        trial = jks(working);
        SingleMachineSchedule rescored = simulate_order(jobs, trial.order);
        if (rescored.delivered_by < best.delivered_by)
            best = rescored;
    }
    return best;
}

namespace {

struct BruteForceState {
    const std::vector<DeliveryJob>* jobs;
    std::vector<int> chosen;          // positions into jobs
    std::vector<bool> used;
    std::vector<int> best_order;      // job ids
    TimeValue best_value;
    bool have_best = false;

    void search(TimeValue machine_free, TimeValue delivered)
    {
        const auto& all = *jobs;
        if (chosen.size() == all.size()) {
            if (!have_best || delivered < best_value) {
                have_best = true;
                best_value = delivered;
                best_order.clear();
                for (int pos : chosen)
                    best_order.push_back(all[pos].job_id);
            }
            return;
        }
        if (have_best) {
            // cheap lower bounds on the final delivery of any completion
            TimeValue tail_work = 0;
            bool first = true;
            TimeValue min_release, min_delivery;
            TimeValue per_job = 0;
            for (size_t i = 0; i < all.size(); ++i) {
                if (used[i])
                    continue;
                const DeliveryJob& j = all[i];
                tail_work += j.processing;
                TimeValue alone = std::max(machine_free, j.release) + j.processing + j.delivery;
                if (alone > per_job)
                    per_job = alone;
                if (first) {
                    min_release = j.release;
                    min_delivery = j.delivery;
                    first = false;
                } else {
                    min_release = std::min(min_release, j.release);
                    min_delivery = std::min(min_delivery, j.delivery);
                }
            }
            TimeValue block = std::max(machine_free, min_release) + tail_work + min_delivery;
            TimeValue lower = std::max({delivered, per_job, block});
            if (lower >= best_value)
                return;
        }
        for (size_t i = 0; i < all.size(); ++i) {
            if (used[i])
                continue;
            const DeliveryJob& j = all[i];
            TimeValue begin = std::max(machine_free, j.release);
            TimeValue end = begin + j.processing;
            used[i] = true;
            chosen.push_back(static_cast<int>(i));
            search(end, std::max(delivered, end + j.delivery));
            chosen.pop_back();
            used[i] = false;
        }
    }
};

} // namespace

SingleMachineSchedule brute_force_optimal(const std::vector<DeliveryJob>& jobs, int cap)
{
    if (static_cast<int>(jobs.size()) > cap)
        throw std::invalid_argument("brute force refused: " + std::to_string(jobs.size())
                                    + " jobs exceed the cap of " + std::to_string(cap));
    if (jobs.empty())
        return SingleMachineSchedule{};

    // jobs must be visited in ascending id order so that ties resolve to the
    // lexicographically smallest order
    std::vector<DeliveryJob> sorted = jobs;
    std::sort(sorted.begin(), sorted.end(),
              [](const DeliveryJob& a, const DeliveryJob& b) { return a.job_id < b.job_id; });

    BruteForceState state;
    state.jobs = &sorted;
    state.used.assign(sorted.size(), false);
    state.search(0, 0);
    return simulate_order(jobs, state.best_order);
}

DependencyGraph build_graph(const TaskSet& tasks, Sequencer sequencer, int brute_force_cap)
{
    std::vector<std::vector<int>> chains;
    chains.reserve(tasks.semaphore_count());
    for (int k = 0; k < tasks.semaphore_count(); ++k) {
        std::vector<Task> group;
        for (int id : tasks.tasks_of_semaphore(k))
            group.push_back(tasks.task(id));
        std::vector<DeliveryJob> jobs = reduce_to_delivery(group);
        SingleMachineSchedule schedule;
        switch (sequencer) {
        case Sequencer::JKS: schedule = jks(jobs); break;
        case Sequencer::Potts: schedule = potts(jobs); break;
        case Sequencer::BruteForce: schedule = brute_force_optimal(jobs, brute_force_cap); break;
        }
        chains.push_back(schedule.order);
    }
    return DependencyGraph::for_taskset(tasks, std::move(chains));
}

TimeValue critical_path_length(const DependencyGraph& graph, const TaskSet& tasks)
{
    std::vector<int> topo = graph.topological_order();
    std::vector<TimeValue> dist(graph.vertex_count());
    TimeValue best = 0;
    for (int v : topo) {
        SubjobRef ref = DependencyGraph::vertex_ref(v);
        TimeValue incoming = 0;
        for (int p : graph.predecessors(v))
            if (dist[p] > incoming)
                incoming = dist[p];
        dist[v] = incoming + tasks.subjob_duration(ref.task_id, ref.kind);
        if (dist[v] > best)
            best = dist[v];
    }
    return best;
}

std::vector<TimeValue> longest_path_from_vertex(const DependencyGraph& graph,
                                                const TaskSet& tasks)
{
    std::vector<int> topo = graph.topological_order();
    std::vector<TimeValue> rank(graph.vertex_count());
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        SubjobRef ref = DependencyGraph::vertex_ref(v);
        TimeValue outgoing = 0;
        for (int s : graph.successors(v))
            if (rank[s] > outgoing)
                outgoing = rank[s];
        rank[v] = outgoing + tasks.subjob_duration(ref.task_id, ref.kind);
    }
    return rank;
}

} // namespace dgsched

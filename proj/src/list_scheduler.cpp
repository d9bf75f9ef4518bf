#include "dgsched/list_scheduler.hpp"

#include "dgsched/chain_builder.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dgsched {

namespace {

struct RawSegment {
    int vertex;
    int processor;
    TimeValue start;
    TimeValue end;
};

Schedule finalize(const TaskSet&, int processors, Policy policy,
                  std::vector<RawSegment> raw)
{
    Schedule s;
    s.processors = processors;
    s.policy = policy;
    s.segments.reserve(raw.size());
    for (const RawSegment& seg : raw) {
        SubjobRef ref = DependencyGraph::vertex_ref(seg.vertex);
        s.segments.push_back(ScheduleSegment{ref.task_id, ref.kind, seg.processor,
                                             seg.start, seg.end});
    }
    std::sort(s.segments.begin(), s.segments.end(),
              [](const ScheduleSegment& a, const ScheduleSegment& b) {
                  if (a.start != b.start)
                      return a.start < b.start;
                  if (a.processor != b.processor)
                      return a.processor < b.processor;
                  if (a.task_id != b.task_id)
                      return a.task_id < b.task_id;
                  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
              });
    return s;
}

// Precedence bookkeeping shared by the schedulers. Zero-duration vertices
// complete instantly once their predecessors have finished and never enter
// the ready set.
struct SimCore {
    const DependencyGraph& graph;
    const TaskSet& tasks;
    std::vector<TimeValue> duration;
    std::vector<TimeValue> rank; // longest path starting at the vertex
    std::vector<int> pending;
    std::vector<char> settled;
    std::vector<char> done;
    std::vector<TimeValue> completion;
    std::vector<int> ready;

    SimCore(const DependencyGraph& g, const TaskSet& ts) : graph(g), tasks(ts)
    {
        int n = g.vertex_count();
        duration.resize(n);
        pending.resize(n);
        settled.assign(n, 0);
        done.assign(n, 0);
        completion.assign(n, TimeValue(0));
        for (int v = 0; v < n; ++v) {
            SubjobRef ref = DependencyGraph::vertex_ref(v);
            duration[v] = ts.subjob_duration(ref.task_id, ref.kind);
            pending[v] = static_cast<int>(g.predecessors(v).size());
        }
        rank = longest_path_from_vertex(g, ts);
    }

    static SubjobKind kind_of(int v) { return static_cast<SubjobKind>(v % 3); }
    static int task_of(int v) { return v / 3 + 1; }
    static bool is_critical(int v) { return kind_of(v) == SubjobKind::Critical; }

    void settle(int v, const TimeValue& t)
    {
        if (settled[v])
            return;
        settled[v] = 1;
        if (duration[v] == 0)
            complete(v, t);
        else
            ready.push_back(v);
    }

    void complete(int v, const TimeValue& t)
    {
        done[v] = 1;
        completion[v] = t;
        for (int s : graph.successors(v))
            if (--pending[s] == 0)
                settle(s, t);
    }

    void seed()
    {
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (pending[v] == 0)
                settle(v, TimeValue(0));
    }

    bool higher_priority(int a, int b) const
    {
        bool crit_a = is_critical(a), crit_b = is_critical(b);
        if (crit_a != crit_b)
            return crit_a;
        if (rank[a] != rank[b])
            return rank[a] > rank[b];
        if (task_of(a) != task_of(b))
            return task_of(a) < task_of(b);
        return a < b;
    }

    // Highest-priority ready vertex matching `accept`, removed from the
    // ready set; -1 if none.
    template <typename Filter>
    int take_best(Filter accept)
    {
        int best_pos = -1;
        for (size_t pos = 0; pos < ready.size(); ++pos) {
            int v = ready[pos];
            if (!accept(v))
                continue;
            if (best_pos < 0 || higher_priority(v, ready[best_pos]))
                best_pos = static_cast<int>(pos);
        }
        if (best_pos < 0)
            return -1;
        int v = ready[best_pos];
        ready.erase(ready.begin() + best_pos);
        return v;
    }

    bool all_done() const
    {
        for (char d : done)
            if (!d)
                return false;
        return true;
    }
};

struct Running {
    int vertex;
    TimeValue seg_start;
    TimeValue finish;
};

// Idle gaps of one processor, the tail gap being unbounded.
struct GapList {
    struct Gap {
        TimeValue start;
        std::optional<TimeValue> end; // nullopt = unbounded
    };
    std::vector<Gap> gaps;

    static GapList from_busy(std::vector<std::pair<TimeValue, TimeValue>> busy)
    {
        std::sort(busy.begin(), busy.end());
        GapList list;
        TimeValue cursor = 0;
        for (const auto& [b, e] : busy) {
            if (b > cursor)
                list.gaps.push_back(Gap{cursor, b});
            if (e > cursor)
                cursor = e;
        }
        list.gaps.push_back(Gap{cursor, std::nullopt});
        return list;
    }

    // Carves [from, from + amount) out of gap `pos`; the caller guarantees
    // the range lies inside the gap.
    void carve(size_t pos, const TimeValue& from, const TimeValue& amount)
    {
        Gap gap = gaps[pos];
        std::vector<Gap> replacement;
        if (from > gap.start)
            replacement.push_back(Gap{gap.start, from});
        TimeValue upto = from + amount;
        if (!gap.end)
            replacement.push_back(Gap{upto, std::nullopt});
        else if (upto < *gap.end)
            replacement.push_back(Gap{upto, *gap.end});
        gaps.erase(gaps.begin() + pos);
        gaps.insert(gaps.begin() + pos, replacement.begin(), replacement.end());
    }
};

// Background padding of second non-critical sections into the idle time of
// their tied processor, never before `earliest`, split across gaps when
// `preemptive`, first contiguous fit otherwise.
void pad_second_section(GapList& gaps, int vertex, int processor,
                        const TimeValue& duration, const TimeValue& earliest,
                        bool preemptive, std::vector<RawSegment>& out)
{
    if (duration == 0)
        return;
    if (preemptive) {
        TimeValue left = duration;
        size_t pos = 0;
        while (left > 0) {
            if (pos >= gaps.gaps.size())
                throw std::logic_error("gap list exhausted while padding");
            auto gap = gaps.gaps[pos];
            TimeValue from = std::max(gap.start, earliest);
            if (gap.end && from >= *gap.end) {
                ++pos;
                continue;
            }
            TimeValue take = left;
            if (gap.end && *gap.end - from < take)
                take = *gap.end - from;
            out.push_back(RawSegment{vertex, processor, from, from + take});
            gaps.carve(pos, from, take);
            left -= take;
            // restart: carve may have split the current gap
            pos = 0;
        }
    } else {
        for (size_t pos = 0; pos < gaps.gaps.size(); ++pos) {
            auto gap = gaps.gaps[pos];
            TimeValue from = std::max(gap.start, earliest);
            if (gap.end && (from >= *gap.end || *gap.end - from < duration))
                continue;
            out.push_back(RawSegment{vertex, processor, from, from + duration});
            gaps.carve(pos, from, duration);
            return;
        }
        throw std::logic_error("no gap found for non-preemptive padding");
    }
}

} // namespace

Schedule schedule_dedicated(const DependencyGraph& graph, const TaskSet& tasks,
                            int processors)
{
    int n = tasks.task_count();
    if (processors < n)
        throw std::invalid_argument(
            "dedicated schedule requires at least one processor per task ("
            + std::to_string(n) + " tasks, " + std::to_string(processors)
            + " processors); use a list-scheduling policy instead");

    std::vector<TimeValue> completion(graph.vertex_count());
    std::vector<RawSegment> raw;
    for (int v : graph.topological_order()) {
        TimeValue begin = 0;
        for (int p : graph.predecessors(v))
            if (completion[p] > begin)
                begin = completion[p];
        SubjobRef ref = DependencyGraph::vertex_ref(v);
        TimeValue dur = tasks.subjob_duration(ref.task_id, ref.kind);
        completion[v] = begin + dur;
        if (dur > 0)
            raw.push_back(RawSegment{v, ref.task_id, begin, completion[v]});
    }
    return finalize(tasks, processors, Policy::PartitionedTied, std::move(raw));
}

Schedule schedule_semi_partitioned(const DependencyGraph& graph, const TaskSet& tasks,
                                   int processors, bool preempt_second_sections)
{
    if (processors < 1)
        throw std::invalid_argument("processor count must be >= 1");

    SimCore core(graph, tasks);
    core.seed();
    std::vector<TimeValue> remaining = core.duration;
    std::vector<std::optional<Running>> running(processors + 1); // 1-based
    std::vector<RawSegment> raw;

    auto dispatch = [&](const TimeValue& t) {
        // eligible subjobs onto idle processors, critical sections first
        for (int m = 1; m <= processors; ++m) {
            if (running[m])
                continue;
            int v = core.take_best([](int) { return true; });
            if (v < 0)
                break;
            running[m] = Running{v, t, t + remaining[v]};
        }
        if (!preempt_second_sections)
            return;
        // remaining eligible critical sections may preempt running second
        // non-critical sections
        for (;;) {
            int victim_proc = 0;
            for (int m = 1; m <= processors; ++m) {
                if (!running[m] || SimCore::kind_of(running[m]->vertex)
                                       != SubjobKind::SecondNonCritical)
                    continue;
                if (victim_proc == 0)
                    victim_proc = m;
                else {
                    int v = running[m]->vertex, w = running[victim_proc]->vertex;
                    if (core.rank[v] < core.rank[w]
                        || (core.rank[v] == core.rank[w]
                            && SimCore::task_of(v) > SimCore::task_of(w)))
                        victim_proc = m;
                }
            }
            if (victim_proc == 0)
                break;
            int crit = core.take_best([](int v) { return SimCore::is_critical(v); });
            if (crit < 0)
                break;
            Running victim = *running[victim_proc];
            raw.push_back(RawSegment{victim.vertex, victim_proc, victim.seg_start, t});
            remaining[victim.vertex] -= t - victim.seg_start;
            core.ready.push_back(victim.vertex);
            running[victim_proc] = Running{crit, t, t + remaining[crit]};
        }
    };

    dispatch(TimeValue(0));
    for (;;) {
        int earliest_proc = 0;
        for (int m = 1; m <= processors; ++m) {
            if (!running[m])
                continue;
            if (earliest_proc == 0 || running[m]->finish < running[earliest_proc]->finish)
                earliest_proc = m;
        }
        if (earliest_proc == 0) {
            if (!core.all_done())
                throw std::logic_error("scheduler stalled with unfinished subjobs");
            break;
        }
        TimeValue now = running[earliest_proc]->finish;
        for (int m = 1; m <= processors; ++m) {
            if (!running[m] || running[m]->finish != now)
                continue;
            Running r = *running[m];
            raw.push_back(RawSegment{r.vertex, m, r.seg_start, now});
            remaining[r.vertex] = 0;
            running[m].reset();
            core.complete(r.vertex, now);
        }
        dispatch(now);
    }

    return finalize(tasks, processors,
                    preempt_second_sections ? Policy::SemiPartitionedP
                                            : Policy::SemiPartitionedNP,
                    std::move(raw));
}

Schedule schedule_partitioned_tied(const DependencyGraph& graph, const TaskSet& tasks,
                                   int processors)
{
    if (processors < 1)
        throw std::invalid_argument("processor count must be >= 1");
    int n = tasks.task_count();
    if (n <= processors)
        return schedule_dedicated(graph, tasks, processors);

    SimCore core(graph, tasks);
    core.seed();

    // pull order: largest total work first, ties by id
    std::vector<int> unassigned;
    for (const Task& t : tasks.tasks())
        unassigned.push_back(t.id);
    std::stable_sort(unassigned.begin(), unassigned.end(), [&](int a, int b) {
        return tasks.task(a).total() > tasks.task(b).total();
    });

    std::vector<int> tied(n + 1, 0);
    std::vector<std::optional<Running>> running(processors + 1);
    std::vector<RawSegment> raw;

    auto front_done = [&]() {
        for (int v = 0; v < core.graph.vertex_count(); ++v)
            if (SimCore::kind_of(v) != SubjobKind::SecondNonCritical && !core.done[v])
                return false;
        return true;
    };

    auto scan = [&](const TimeValue& t) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int m = 1; m <= processors; ++m) {
                if (running[m])
                    continue;
                int crit = core.take_best([&](int v) {
                    return SimCore::is_critical(v) && tied[SimCore::task_of(v)] == m;
                });
                if (crit >= 0) {
                    running[m] = Running{crit, t, t + core.duration[crit]};
                    changed = true;
                    continue;
                }
                int first = core.take_best([&](int v) {
                    return SimCore::kind_of(v) == SubjobKind::FirstNonCritical
                           && tied[SimCore::task_of(v)] == m;
                });
                if (first >= 0) {
                    running[m] = Running{first, t, t + core.duration[first]};
                    changed = true;
                    continue;
                }
                if (!unassigned.empty()) {
                    int task = unassigned.front();
                    unassigned.erase(unassigned.begin());
                    tied[task] = m;
                    int c1 = DependencyGraph::vertex_id(task, SubjobKind::FirstNonCritical);
                    if (core.duration[c1] > 0) {
                        auto it = std::find(core.ready.begin(), core.ready.end(), c1);
                        core.ready.erase(it);
                        running[m] = Running{c1, t, t + core.duration[c1]};
                    }
                    changed = true;
                }
            }
        }
    };

    TimeValue now = 0;
    scan(now);
    while (!front_done()) {
        int earliest_proc = 0;
        for (int m = 1; m <= processors; ++m) {
            if (!running[m])
                continue;
            if (earliest_proc == 0 || running[m]->finish < running[earliest_proc]->finish)
                earliest_proc = m;
        }
        if (earliest_proc == 0)
            throw std::logic_error("tied scheduler stalled with unfinished subjobs");
        now = running[earliest_proc]->finish;
        for (int m = 1; m <= processors; ++m) {
            if (!running[m] || running[m]->finish != now)
                continue;
            Running r = *running[m];
            raw.push_back(RawSegment{r.vertex, m, r.seg_start, now});
            running[m].reset();
            core.complete(r.vertex, now);
        }
        scan(now);
    }

    // tasks whose first and critical sections are both empty may still be
    // unassigned: tie each to the processor with the least busy time
    if (!unassigned.empty()) {
        std::vector<TimeValue> load(processors + 1, TimeValue(0));
        for (const RawSegment& seg : raw)
            load[seg.processor] += seg.end - seg.start;
        for (int task : unassigned) {
            int best = 1;
            for (int m = 2; m <= processors; ++m)
                if (load[m] < load[best])
                    best = m;
            tied[task] = best;
            load[best] += tasks.task(task).c2;
        }
        unassigned.clear();
    }

    // third block: pad the second non-critical sections into idle time
    std::vector<std::vector<std::pair<TimeValue, TimeValue>>> busy(processors + 1);
    for (const RawSegment& seg : raw)
        busy[seg.processor].emplace_back(seg.start, seg.end);
    std::vector<int> order;
    for (const Task& t : tasks.tasks())
        if (t.c2 > 0)
            order.push_back(t.id);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int va = DependencyGraph::vertex_id(a, SubjobKind::Critical);
        int vb = DependencyGraph::vertex_id(b, SubjobKind::Critical);
        if (core.completion[va] != core.completion[vb])
            return core.completion[va] < core.completion[vb];
        return a < b;
    });
    std::vector<GapList> gaps(processors + 1);
    for (int m = 1; m <= processors; ++m)
        gaps[m] = GapList::from_busy(busy[m]);
    for (int task : order) {
        int m = tied[task];
        int crit = DependencyGraph::vertex_id(task, SubjobKind::Critical);
        int c2 = DependencyGraph::vertex_id(task, SubjobKind::SecondNonCritical);
        pad_second_section(gaps[m], c2, m, tasks.task(task).c2, core.completion[crit],
                           /*preemptive=*/true, raw);
    }

    return finalize(tasks, processors, Policy::PartitionedTied, std::move(raw));
}

Schedule schedule_partitioned_simple(const DependencyGraph& graph, const TaskSet& tasks,
                                     int processors, bool preempt_second_sections)
{
    if (processors < 1)
        throw std::invalid_argument("processor count must be >= 1");
    int n = tasks.task_count();

    std::vector<TimeValue> rank = longest_path_from_vertex(graph, tasks);
    std::vector<int> tied(n + 1, 0);
    std::vector<TimeValue> c1_finish(n + 1, TimeValue(0));
    std::vector<RawSegment> raw;

    // phase 1: list-schedule all first non-critical sections; the processor
    // that runs c1 becomes the task's tied processor. Tasks with an empty
    // first section are tied round-robin.
    int next_rr = 1;
    std::vector<int> phase1;
    for (const Task& t : tasks.tasks()) {
        if (t.c1 == 0) {
            tied[t.id] = next_rr;
            next_rr = next_rr % processors + 1;
        } else {
            phase1.push_back(t.id);
        }
    }
    std::stable_sort(phase1.begin(), phase1.end(), [&](int a, int b) {
        int va = DependencyGraph::vertex_id(a, SubjobKind::FirstNonCritical);
        int vb = DependencyGraph::vertex_id(b, SubjobKind::FirstNonCritical);
        if (rank[va] != rank[vb])
            return rank[va] > rank[vb];
        return a < b;
    });
    std::vector<TimeValue> proc_free(processors + 1, TimeValue(0));
    TimeValue barrier = 0;
    for (int task : phase1) {
        int m = 1;
        for (int p = 2; p <= processors; ++p)
            if (proc_free[p] < proc_free[m])
                m = p;
        TimeValue begin = proc_free[m];
        TimeValue end = begin + tasks.task(task).c1;
        raw.push_back(RawSegment{
            DependencyGraph::vertex_id(task, SubjobKind::FirstNonCritical), m, begin, end});
        proc_free[m] = end;
        tied[task] = m;
        c1_finish[task] = end;
        if (end > barrier)
            barrier = end;
    }

    // phase 2: critical sections on tied processors, in chain order, no
    // earlier than the end of phase 1
    std::vector<int> chain_pred(n + 1, 0);
    for (const auto& chain : graph.chains())
        for (size_t i = 1; i < chain.size(); ++i)
            chain_pred[chain[i]] = chain[i - 1];

    std::vector<char> crit_done(n + 1, 0);
    std::vector<TimeValue> crit_finish(n + 1, TimeValue(0));
    std::vector<int> pending_crits;
    for (const Task& t : tasks.tasks()) {
        if (t.a1 == 0) {
            crit_done[t.id] = 1;
            crit_finish[t.id] = c1_finish[t.id];
        } else {
            pending_crits.push_back(t.id);
        }
    }

    struct RunningCrit {
        int task;
        TimeValue start;
        TimeValue finish;
    };
    std::vector<std::optional<RunningCrit>> running(processors + 1);
    TimeValue now = barrier;
    auto eligible = [&](int task) {
        return !crit_done[task] && (chain_pred[task] == 0 || crit_done[chain_pred[task]]);
    };
    while (!pending_crits.empty()
           || std::any_of(running.begin(), running.end(),
                          [](const auto& r) { return r.has_value(); })) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int m = 1; m <= processors; ++m) {
                if (running[m])
                    continue;
                int best = 0;
                for (int task : pending_crits) {
                    if (tied[task] != m || !eligible(task))
                        continue;
                    if (best == 0)
                        best = task;
                    else {
                        int va = DependencyGraph::vertex_id(task, SubjobKind::Critical);
                        int vb = DependencyGraph::vertex_id(best, SubjobKind::Critical);
                        if (rank[va] > rank[vb] || (rank[va] == rank[vb] && task < best))
                            best = task;
                    }
                }
                if (best != 0) {
                    running[m] = RunningCrit{best, now, now + tasks.task(best).a1};
                    pending_crits.erase(
                        std::find(pending_crits.begin(), pending_crits.end(), best));
                    changed = true;
                }
            }
        }
        int earliest_proc = 0;
        for (int m = 1; m <= processors; ++m) {
            if (!running[m])
                continue;
            if (earliest_proc == 0 || running[m]->finish < running[earliest_proc]->finish)
                earliest_proc = m;
        }
        if (earliest_proc == 0) {
            if (!pending_crits.empty())
                throw std::logic_error("partitioned-simple stalled on critical sections");
            break;
        }
        now = running[earliest_proc]->finish;
        for (int m = 1; m <= processors; ++m) {
            if (!running[m] || running[m]->finish != now)
                continue;
            RunningCrit r = *running[m];
            raw.push_back(RawSegment{
                DependencyGraph::vertex_id(r.task, SubjobKind::Critical), m, r.start, now});
            crit_done[r.task] = 1;
            crit_finish[r.task] = now;
            running[m].reset();
        }
    }

    // phase 3: pad second non-critical sections
    std::vector<std::vector<std::pair<TimeValue, TimeValue>>> busy(processors + 1);
    for (const RawSegment& seg : raw)
        busy[seg.processor].emplace_back(seg.start, seg.end);
    std::vector<GapList> gaps(processors + 1);
    for (int m = 1; m <= processors; ++m)
        gaps[m] = GapList::from_busy(busy[m]);
    std::vector<int> order;
    for (const Task& t : tasks.tasks())
        if (t.c2 > 0)
            order.push_back(t.id);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (crit_finish[a] != crit_finish[b])
            return crit_finish[a] < crit_finish[b];
        return a < b;
    });
    for (int task : order)
        pad_second_section(gaps[tied[task]],
                           DependencyGraph::vertex_id(task, SubjobKind::SecondNonCritical),
                           tied[task], tasks.task(task).c2, crit_finish[task],
                           preempt_second_sections, raw);

    return finalize(tasks, processors, Policy::PartitionedSimple, std::move(raw));
}

Schedule run_scheduler(const DependencyGraph& graph, const TaskSet& tasks,
                       const SchedulerConfig& config)
{
    switch (config.policy) {
    case Policy::SemiPartitionedNP:
        return schedule_semi_partitioned(graph, tasks, config.processors, false);
    case Policy::SemiPartitionedP:
        return schedule_semi_partitioned(graph, tasks, config.processors, true);
    case Policy::PartitionedTied:
        return schedule_partitioned_tied(graph, tasks, config.processors);
    case Policy::PartitionedSimple:
        return schedule_partitioned_simple(graph, tasks, config.processors,
                                           config.preempt_second_sections);
    }
    throw std::logic_error("bad policy");
}

std::string schedule_to_csv(const Schedule& schedule)
{
    std::ostringstream out;
    out << "task,kind,processor,start,end\n";
    for (const ScheduleSegment& seg : schedule.segments)
        out << seg.task_id << ',' << subjob_kind_name(seg.kind) << ',' << seg.processor
            << ',' << fraction_string(seg.start) << ',' << fraction_string(seg.end)
            << '\n';
    return out.str();
}

Schedule schedule_from_csv(const std::string& text, int processors, Policy policy)
{
    Schedule s;
    s.processors = processors;
    s.policy = policy;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true; // "task,kind,processor,start,end"
            continue;
        }
        std::istringstream fields(line);
        std::string task, kind, proc, start, end;
        if (!std::getline(fields, task, ',') || !std::getline(fields, kind, ',')
            || !std::getline(fields, proc, ',') || !std::getline(fields, start, ',')
            || !std::getline(fields, end, ','))
            throw std::invalid_argument("malformed schedule CSV line: " + line);
        auto k = subjob_kind_from_name(kind);
        if (!k)
            throw std::invalid_argument("unknown subjob kind: " + kind);
        s.segments.push_back(ScheduleSegment{std::stoi(task), *k, std::stoi(proc),
                                             rational_from_string(start),
                                             rational_from_string(end)});
    }
    return s;
}

std::string gantt_text(const Schedule& schedule)
{
    std::vector<std::vector<const ScheduleSegment*>> per_proc(schedule.processors + 1);
    for (const ScheduleSegment& seg : schedule.segments)
        if (seg.processor >= 1 && seg.processor <= schedule.processors)
            per_proc[seg.processor].push_back(&seg);
    std::ostringstream out;
    for (int m = 1; m <= schedule.processors; ++m) {
        out << "P" << m << ":";
        std::sort(per_proc[m].begin(), per_proc[m].end(),
                  [](const ScheduleSegment* a, const ScheduleSegment* b) {
                      return a->start < b->start;
                  });
        for (const ScheduleSegment* seg : per_proc[m])
            out << "  [" << compact_string(seg->start) << ", " << compact_string(seg->end)
                << ") t" << seg->task_id << "." << subjob_kind_name(seg->kind);
        out << '\n';
    }
    return out.str();
}

} // namespace dgsched

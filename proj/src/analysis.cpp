#include "dgsched/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dgsched {

const char* violation_kind_name(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::IntraTaskParallel: return "IntraTaskParallel";
    case ViolationKind::PrecedenceBroken: return "PrecedenceBroken";
    case ViolationKind::MutexBroken: return "MutexBroken";
    case ViolationKind::PolicyBroken: return "PolicyBroken";
    case ViolationKind::WorkMismatch: return "WorkMismatch";
    }
    return "?";
}

TimeValue lower_bound_exact(const TaskSet& tasks, int processors, int cap)
{
    DependencyGraph best = build_graph(tasks, Sequencer::BruteForce, cap);
    TimeValue len = critical_path_length(best, tasks);
    TimeValue average = total_work(tasks) / processors;
    return std::max(average, len);
}

TimeValue lower_bound_fast(const TaskSet& tasks, int processors)
{
    if (tasks.task_count() == 0)
        throw std::invalid_argument("lower_bound_fast needs at least one task");
    TimeValue min_c1 = tasks.tasks().front().c1;
    TimeValue min_c2 = tasks.tasks().front().c2;
    for (const Task& t : tasks.tasks()) {
        min_c1 = std::min(min_c1, t.c1);
        min_c2 = std::min(min_c2, t.c2);
    }
    TimeValue max_chain = 0;
    std::vector<TimeValue> chain_sum(tasks.semaphore_count(), TimeValue(0));
    for (const Task& t : tasks.tasks())
        if (t.semaphore)
            chain_sum[*t.semaphore] += t.a1;
    for (const TimeValue& sum : chain_sum)
        max_chain = std::max(max_chain, sum);
    TimeValue path_estimate = min_c1 + min_c2 + max_chain;
    TimeValue average = total_work(tasks) / processors;
    return std::max(average, path_estimate);
}

TimeValue list_schedule_bound(const DependencyGraph& graph, const TaskSet& tasks,
                              int processors)
{
    TimeValue len = critical_path_length(graph, tasks);
    return (total_work(tasks) - len) / processors + len;
}

namespace {

std::string segment_text(const ScheduleSegment& seg)
{
    std::ostringstream out;
    out << 't' << seg.task_id << '.' << subjob_kind_name(seg.kind) << "@P" << seg.processor
        << '[' << compact_string(seg.start) << ',' << compact_string(seg.end) << ')';
    return out.str();
}

bool intervals_overlap(const TimeValue& a_start, const TimeValue& a_end,
                       const TimeValue& b_start, const TimeValue& b_end)
{
    return a_start < b_end && b_start < a_end;
}

} // namespace

std::vector<Violation> validate(const Schedule& schedule, const TaskSet& tasks,
                                const DependencyGraph& graph,
                                const SchedulerConfig& config)
{
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, const std::string& detail) {
        out.push_back(Violation{kind, detail});
    };

    int n = tasks.task_count();
    std::vector<const ScheduleSegment*> ok;
    for (const ScheduleSegment& seg : schedule.segments) {
        if (seg.task_id < 1 || seg.task_id > n) {
            report(ViolationKind::PolicyBroken, "segment for unknown task: " + segment_text(seg));
            continue;
        }
        if (!(seg.start < seg.end)) {
            report(ViolationKind::PolicyBroken, "segment with start >= end: " + segment_text(seg));
            continue;
        }
        if (seg.processor < 1 || seg.processor > config.processors) {
            report(ViolationKind::PolicyBroken,
                   "segment on unknown processor: " + segment_text(seg));
            continue;
        }
        ok.push_back(&seg);
    }

    // per-processor overlap
    {
        std::map<int, std::vector<const ScheduleSegment*>> per_proc;
        for (const ScheduleSegment* seg : ok)
            per_proc[seg->processor].push_back(seg);
        for (auto& [proc, segs] : per_proc) {
            std::sort(segs.begin(), segs.end(),
                      [](auto* a, auto* b) { return a->start < b->start; });
            for (size_t i = 0; i + 1 < segs.size(); ++i)
                if (segs[i + 1]->start < segs[i]->end)
                    report(ViolationKind::Overlap, "processor " + std::to_string(proc)
                           + ": " + segment_text(*segs[i]) + " overlaps "
                           + segment_text(*segs[i + 1]));
        }
    }

    // intra-task parallelism (overlap across different processors)
    {
        std::map<int, std::vector<const ScheduleSegment*>> per_task;
        for (const ScheduleSegment* seg : ok)
            per_task[seg->task_id].push_back(seg);
        for (auto& [task, segs] : per_task) {
            for (size_t i = 0; i < segs.size(); ++i)
                for (size_t j = i + 1; j < segs.size(); ++j) {
                    if (segs[i]->processor == segs[j]->processor)
                        continue;
                    if (intervals_overlap(segs[i]->start, segs[i]->end, segs[j]->start,
                                          segs[j]->end))
                        report(ViolationKind::IntraTaskParallel,
                               segment_text(*segs[i]) + " parallel to "
                               + segment_text(*segs[j]));
                }
        }
    }

    // per-subjob bookkeeping: merged pieces, total work, first start, last end
    struct SubjobRun {
        std::vector<ScheduleSegment> merged;
        TimeValue work;
        bool ran = false;
    };
    std::vector<SubjobRun> runs(3 * n);
    for (const ScheduleSegment* seg : ok) {
        SubjobRun& run = runs[DependencyGraph::vertex_id(seg->task_id, seg->kind)];
        run.merged.push_back(*seg);
        run.ran = true;
    }
    for (SubjobRun& run : runs) {
        std::sort(run.merged.begin(), run.merged.end(),
                  [](const ScheduleSegment& a, const ScheduleSegment& b) {
                      return a.start < b.start;
                  });
        // stitch abutting same-processor pieces; a seam is not a preemption
        std::vector<ScheduleSegment> stitched;
        for (const ScheduleSegment& seg : run.merged) {
            if (!stitched.empty() && stitched.back().processor == seg.processor
                && stitched.back().end == seg.start)
                stitched.back().end = seg.end;
            else
                stitched.push_back(seg);
        }
        run.merged = std::move(stitched);
        run.work = 0;
        for (const ScheduleSegment& seg : run.merged)
            run.work += seg.end - seg.start;
    }

    for (int v = 0; v < 3 * n; ++v) {
        SubjobRef ref = DependencyGraph::vertex_ref(v);
        TimeValue declared = tasks.subjob_duration(ref.task_id, ref.kind);
        if (runs[v].work != declared)
            report(ViolationKind::WorkMismatch,
                   std::string("t") + std::to_string(ref.task_id) + "."
                   + subjob_kind_name(ref.kind) + " scheduled for "
                   + compact_string(runs[v].work) + ", declared "
                   + compact_string(declared));
    }

    // contiguity and placement rules
    bool partitioned = config.policy == Policy::PartitionedTied
                       || config.policy == Policy::PartitionedSimple;
    for (int v = 0; v < 3 * n; ++v) {
        const SubjobRun& run = runs[v];
        if (!run.ran)
            continue;
        SubjobRef ref = DependencyGraph::vertex_ref(v);
        bool needs_one_piece = ref.kind == SubjobKind::Critical
                               || ref.kind == SubjobKind::FirstNonCritical
                               || config.policy == Policy::SemiPartitionedNP;
        if (needs_one_piece && run.merged.size() > 1)
            report(ViolationKind::PolicyBroken,
                   std::string("t") + std::to_string(ref.task_id) + "."
                   + subjob_kind_name(ref.kind) + " is split but must run in one piece");
    }
    if (partitioned) {
        for (int task = 1; task <= n; ++task) {
            int proc = 0;
            bool moved = false;
            for (int k = 0; k < 3; ++k)
                for (const ScheduleSegment& seg :
                     runs[DependencyGraph::vertex_id(task, static_cast<SubjobKind>(k))].merged) {
                    if (proc == 0)
                        proc = seg.processor;
                    else if (seg.processor != proc)
                        moved = true;
                }
            if (moved)
                report(ViolationKind::PolicyBroken,
                       "task " + std::to_string(task)
                       + " uses several processors under a partitioned policy");
        }
    }

    // completion times; zero-duration subjobs finish when their predecessors do
    std::vector<TimeValue> completion(3 * n, TimeValue(0));
    std::vector<int> topo = graph.topological_order();
    for (int v : topo) {
        TimeValue preds_done = 0;
        for (int p : graph.predecessors(v))
            preds_done = std::max(preds_done, completion[p]);
        if (runs[v].ran)
            completion[v] = runs[v].merged.back().end;
        else
            completion[v] = preds_done;
    }

    // precedence: a subjob may not start before every predecessor finished
    for (int v : topo) {
        if (!runs[v].ran)
            continue;
        TimeValue first_start = runs[v].merged.front().start;
        for (int p : graph.predecessors(v))
            if (first_start < completion[p]) {
                SubjobRef rv = DependencyGraph::vertex_ref(v);
                SubjobRef rp = DependencyGraph::vertex_ref(p);
                report(ViolationKind::PrecedenceBroken,
                       std::string("t") + std::to_string(rv.task_id) + "."
                       + subjob_kind_name(rv.kind) + " starts at "
                       + compact_string(first_start) + " before t"
                       + std::to_string(rp.task_id) + "." + subjob_kind_name(rp.kind)
                       + " finishes at " + compact_string(completion[p]));
            }
    }

    // mutual exclusion: same-semaphore critical sections never overlap ...
    for (int k = 0; k < tasks.semaphore_count(); ++k) {
        std::vector<int> users = tasks.tasks_of_semaphore(k);
        for (size_t i = 0; i < users.size(); ++i)
            for (size_t j = i + 1; j < users.size(); ++j) {
                const auto& left =
                    runs[DependencyGraph::vertex_id(users[i], SubjobKind::Critical)].merged;
                const auto& right =
                    runs[DependencyGraph::vertex_id(users[j], SubjobKind::Critical)].merged;
                for (const ScheduleSegment& a : left)
                    for (const ScheduleSegment& b : right)
                        if (intervals_overlap(a.start, a.end, b.start, b.end))
                            report(ViolationKind::MutexBroken, segment_text(a)
                                   + " overlaps " + segment_text(b)
                                   + " on semaphore " + tasks.semaphore_name(k));
            }
    }
    // ... and respect the chain order
    for (const auto& chain : graph.chains()) {
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            int before = DependencyGraph::vertex_id(chain[i], SubjobKind::Critical);
            int after = DependencyGraph::vertex_id(chain[i + 1], SubjobKind::Critical);
            if (!runs[after].ran)
                continue;
            if (runs[after].merged.front().start < completion[before])
                report(ViolationKind::MutexBroken,
                       "critical section of task " + std::to_string(chain[i + 1])
                       + " starts before its chain predecessor task "
                       + std::to_string(chain[i]) + " finishes");
        }
    }

    return out;
}

std::vector<Violation> validate(const Schedule& schedule, const TaskSet& tasks,
                                const DependencyGraph& graph)
{
    SchedulerConfig config;
    config.processors = schedule.processors;
    config.policy = schedule.policy;
    return validate(schedule, tasks, graph, config);
}

TaskSet gap_instance(int processors, const TimeValue& big_q, const TimeValue& delta)
{
    if (processors < 2)
        throw std::invalid_argument("gap instance requires at least 2 processors");
    if (big_q <= 0 || delta <= 0)
        throw std::invalid_argument("gap instance requires Q > 0 and delta > 0");
    int n = processors * processors - processors + 1;
    if (delta >= big_q / (processors * n))
        throw std::invalid_argument("gap instance requires delta < Q / (M * N)");

    std::vector<TaskInput> inputs;
    TimeValue share = big_q / processors;
    inputs.push_back(TaskInput{1, delta, big_q - share, share + n * delta, "s1"});
    for (int i = 2; i <= n; ++i)
        inputs.push_back(TaskInput{i, delta, delta, share, "s1"});
    return TaskSet(inputs);
}

Schedule gap_instance_reference_schedule(const TaskSet& instance, int processors)
{
    int n = instance.task_count();
    if (n != processors * processors - processors + 1)
        throw std::invalid_argument("task set is not a gap instance for this processor count");
    const Task& head = instance.task(1);
    TimeValue delta = head.c1;
    TimeValue share = instance.task(n).c2; // Q/M

    Schedule s;
    s.processors = processors;
    s.policy = Policy::PartitionedTied;

    auto add = [&](int task, SubjobKind kind, int proc, const TimeValue& start,
                   const TimeValue& dur) {
        if (dur > 0)
            s.segments.push_back(ScheduleSegment{task, kind, proc, start, start + dur});
    };

    // task 1 alone on the last processor
    add(1, SubjobKind::FirstNonCritical, processors, TimeValue(0), head.c1);
    TimeValue crit1_start = (processors + n) * delta;
    add(1, SubjobKind::Critical, processors, crit1_start, head.a1);
    add(1, SubjobKind::SecondNonCritical, processors, crit1_start + head.a1, head.c2);

    // remaining first sections packed onto processors 1..M-1, M tasks each
    for (int i = 2; i <= n; ++i) {
        int proc = (i - 2) % (processors - 1) + 1;
        int slot = (i - 2) / (processors - 1);
        add(i, SubjobKind::FirstNonCritical, proc, slot * delta, instance.task(i).c1);
    }
    // critical sections in reversed index order from time M*delta
    for (int i = n; i >= 2; --i) {
        int proc = (i - 2) % (processors - 1) + 1;
        int slot = n - i;
        add(i, SubjobKind::Critical, proc, processors * delta + slot * delta,
            instance.task(i).a1);
    }
    // second sections in parallel from time (M+N)*delta, M per processor
    std::vector<int> stacked(processors, 0);
    for (int i = 2; i <= n; ++i) {
        int proc = (i - 2) % (processors - 1) + 1;
        TimeValue start = (processors + n) * delta + stacked[proc] * share;
        ++stacked[proc];
        add(i, SubjobKind::SecondNonCritical, proc, start, instance.task(i).c2);
    }

    std::sort(s.segments.begin(), s.segments.end(),
              [](const ScheduleSegment& a, const ScheduleSegment& b) {
                  if (a.start != b.start)
                      return a.start < b.start;
                  if (a.processor != b.processor)
                      return a.processor < b.processor;
                  return a.task_id < b.task_id;
              });
    return s;
}

DependencyGraph gap_instance_reference_graph(const TaskSet& instance)
{
    std::vector<int> chain;
    for (int i = instance.task_count(); i >= 1; --i)
        chain.push_back(i);
    return DependencyGraph::for_taskset(instance, {chain});
}

BoundsReport make_bounds_report(const TaskSet& tasks, const DependencyGraph& graph,
                                const Schedule& schedule, int processors, int cap)
{
    BoundsReport report;
    bool within_cap = true;
    for (int k = 0; k < tasks.semaphore_count(); ++k)
        if (static_cast<int>(tasks.tasks_of_semaphore(k).size()) > cap)
            within_cap = false;
    if (within_cap)
        report.lb_exact = lower_bound_exact(tasks, processors, cap);
    report.lb_fast = lower_bound_fast(tasks, processors);
    report.list_bound = list_schedule_bound(graph, tasks, processors);
    report.achieved_makespan = makespan(schedule);
    report.ratio_uses_exact = report.lb_exact.has_value();
    TimeValue lb = report.lb_exact ? *report.lb_exact : report.lb_fast;
    if (lb > 0)
        report.ratio_vs_lb = report.achieved_makespan / lb;
    else
        report.ratio_vs_lb = report.achieved_makespan == 0 ? Rational(1) : Rational(0);
    return report;
}

std::string bounds_report_json(const BoundsReport& report)
{
    nlohmann::ordered_json doc;
    if (report.lb_exact)
        doc["lb_exact"] = fraction_string(*report.lb_exact);
    else
        doc["lb_exact"] = nullptr;
    doc["lb_fast"] = fraction_string(report.lb_fast);
    doc["list_bound"] = fraction_string(report.list_bound);
    doc["makespan"] = fraction_string(report.achieved_makespan);
    doc["ratio_vs_lb"] = fraction_string(report.ratio_vs_lb);
    doc["ratio_uses"] = report.ratio_uses_exact ? "exact" : "fast";
    return doc.dump(2) + "\n";
}

} // namespace dgsched

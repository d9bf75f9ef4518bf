#include "dgsched/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace dgsched {

namespace {

constexpr long kGrid = 1000000;

double next_unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0, 1)
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound)
{
    // rejection sampling keeps the draw exactly uniform
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                          - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit)
            return v % bound;
    }
}

Rational grid_fraction(std::mt19937_64& rng)
{
    return Rational(static_cast<long>(uniform_index(rng, kGrid + 1)), kGrid);
}

// Uniform point of the simplex {x in [0,1]^n : sum x = s}, after Stafford's
// randfixedsum construction: a table of simplex volumes drives a randomized
// walk that picks the integer cell, then the fractional offsets.
std::vector<double> unit_fixed_sum(int n, double s, std::mt19937_64& rng)
{
    if (n == 1)
        return {s};

    int k = std::max(std::min(static_cast<int>(std::floor(s)), n - 1), 0);
    s = std::max(std::min(s, static_cast<double>(k) + 1), static_cast<double>(k));

    std::vector<double> s1(n), s2(n);
    for (int i = 0; i < n; ++i) {
        s1[i] = s - (k - i);
        s2[i] = (k + n - i) - s;
    }

    const double huge = std::numeric_limits<double>::max();
    const double tiny = std::numeric_limits<double>::denorm_min();
    std::vector<std::vector<double>> w(n + 1, std::vector<double>(n + 2, 0.0));
    std::vector<std::vector<double>> t(n, std::vector<double>(n + 1, 0.0));
    w[1][2] = huge;
    for (int i = 2; i <= n; ++i) {
        for (int idx = 1; idx <= i; ++idx) {
            double tmp1 = w[i - 1][idx + 1] * s1[idx - 1] / i;
            double tmp2 = w[i - 1][idx] * s2[n - i + idx - 1] / i;
            w[i][idx + 1] = tmp1 + tmp2;
            double tmp3 = w[i][idx + 1] + tiny;
            if (s2[n - i + idx - 1] > s1[idx - 1])
                t[i - 1][idx] = tmp2 / tmp3;
            else
                t[i - 1][idx] = 1.0 - tmp1 / tmp3;
        }
    }

    std::vector<double> x(n, 0.0);
    double rest = s;
    int j = k + 1;
    double sm = 0.0, pr = 1.0;
    for (int i = n - 1; i >= 1; --i) {
        double rt = next_unit(rng);
        double rs = next_unit(rng);
        bool e = rt <= t[i][j];
        double sx = std::pow(rs, 1.0 / i);
        sm += (1 - sx) * pr * rest / (i + 1);
        pr *= sx;
        x[n - i - 1] = sm + (e ? pr : 0.0);
        if (e) {
            rest -= 1.0;
            --j;
        }
    }
    x[n - 1] = sm + pr * rest;

    for (int i = n - 1; i > 0; --i) {
        int swap_with = static_cast<int>(uniform_index(rng, i + 1));
        std::swap(x[i], x[swap_with]);
    }
    return x;
}

std::vector<TimeValue> fixed_sum_with_rng(int n, const TimeValue& total,
                                          const TimeValue& cap, std::mt19937_64& rng)
{
    if (n < 1)
        throw std::invalid_argument("random_fixed_sum needs n >= 1");
    if (total <= 0)
        throw std::invalid_argument("random_fixed_sum needs a positive total");
    if (cap <= 0 || n * cap < total)
        throw std::invalid_argument("random_fixed_sum infeasible: n * cap < total");

    Rational min_step(1, kGrid);
    if (total < n * min_step) {
        // too small for the grid: equal split keeps everything positive
        std::vector<TimeValue> flat(n, total / n);
        return flat;
    }

    double unit_sum = mpq_get_d(Rational(total / cap).get_mpq_t());
    std::vector<double> unit = unit_fixed_sum(n, unit_sum, rng);

    mpz_class cap_units = floor_to_int(cap * kGrid);
    if (cap_units < 1)
        cap_units = 1;
    double cap_d = mpq_get_d(cap.get_mpq_t());

    std::vector<TimeValue> values(n);
    TimeValue partial = 0;
    for (int i = 0; i + 1 < n; ++i) {
        double scaled = unit[i] * cap_d * kGrid;
        mpz_class units(std::llround(std::min(std::max(scaled, 0.0), 9e15)));
        if (units < 1)
            units = 1;
        if (units > cap_units)
            units = cap_units;
        values[i] = Rational(units, mpz_class(kGrid));
        values[i].canonicalize();
        partial += values[i];
    }
    values[n - 1] = total - partial;

    // the adjusted tail may drift outside (0, cap]; repair against the
    // elements with slack
    if (values[n - 1] > cap) {
        TimeValue excess = values[n - 1] - cap;
        values[n - 1] = cap;
        for (int i = 0; i + 1 < n && excess > 0; ++i) {
            TimeValue slack = cap - values[i];
            TimeValue shift = std::min(slack, excess);
            values[i] += shift;
            excess -= shift;
        }
        if (excess > 0)
            throw std::logic_error("fixed-sum repair failed"); // n*cap >= total rules this out
    } else if (values[n - 1] < min_step) {
        TimeValue deficit = min_step - values[n - 1];
        for (int i = 0; i + 1 < n && deficit > 0; ++i) {
            TimeValue spare = values[i] - min_step;
            if (spare <= 0)
                continue;
            TimeValue shift = std::min(spare, deficit);
            values[i] -= shift;
            deficit -= shift;
        }
        values[n - 1] = min_step - deficit;
        if (values[n - 1] <= 0)
            throw std::logic_error("fixed-sum repair failed");
    }
    return values;
}

} // namespace

std::vector<TimeValue> random_fixed_sum(int n, const TimeValue& total,
                                        const TimeValue& cap, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return fixed_sum_with_rng(n, total, cap, rng);
}

TaskSet generate_taskset(const GenConfig& config)
{
    if (config.processors < 1 || config.n_tasks < 1 || config.semaphores < 1)
        throw std::invalid_argument("generator config needs M, n, z >= 1");
    if (config.beta_low < 0 || config.beta_high > 1 || config.beta_low > config.beta_high)
        throw std::invalid_argument("beta range must satisfy 0 <= low <= high <= 1");
    Rational total(config.processors);
    if (config.n_tasks * config.per_task_cap < total)
        throw std::invalid_argument("per-task cap too small for the required total");

    std::mt19937_64 rng(config.seed);
    std::vector<TimeValue> totals =
        fixed_sum_with_rng(config.n_tasks, total, config.per_task_cap, rng);

    std::vector<TaskInput> inputs(config.n_tasks);
    for (int i = 0; i < config.n_tasks; ++i) {
        TaskInput& in = inputs[i];
        in.id = i + 1;
        Rational beta =
            config.beta_low + (config.beta_high - config.beta_low) * grid_fraction(rng);
        in.a1 = beta * totals[i];
        Rational rest = totals[i] - in.a1;
        in.c1 = grid_fraction(rng) * rest;
        in.c2 = rest - in.c1;
    }

    // spread semaphore users uniformly, one pinned per semaphore first
    std::vector<int> users;
    for (int i = 0; i < config.n_tasks; ++i)
        if (inputs[i].a1 > 0)
            users.push_back(i);
    for (size_t i = users.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(uniform_index(rng, i));
        std::swap(users[i - 1], users[j]);
    }
    int sem_count = std::min<int>(config.semaphores, static_cast<int>(users.size()));
    for (size_t pos = 0; pos < users.size(); ++pos) {
        int sem = pos < static_cast<size_t>(sem_count)
                      ? static_cast<int>(pos)
                      : static_cast<int>(uniform_index(rng, sem_count));
        inputs[users[pos]].semaphore = "s" + std::to_string(sem + 1);
    }

    return TaskSet(inputs);
}

} // namespace dgsched

#ifndef DGSCHED_GENERATOR_HPP
#define DGSCHED_GENERATOR_HPP

#include "dgsched/model.hpp"

#include <cstdint>
#include <vector>

namespace dgsched {

struct GenConfig {
    int processors = 4;
    int n_tasks = 40;               // protocol default: 10 per processor
    int semaphores = 4;             // z
    Rational beta_low = rational_of(1, 20);
    Rational beta_high = rational_of(1, 2);
    Rational per_task_cap = rational_of(1, 2);
    std::uint64_t seed = 1;
};

// n values in (0, cap] summing exactly to `total`, drawn uniformly from the
// cap-constrained simplex (the RandomFixedSum construction) and then
// quantized to the 10^-6 grid with the last element adjusted so the sum is
// exact. Deterministic for a given seed.
// Throws std::invalid_argument when n * cap < total or total <= 0.
std::vector<TimeValue> random_fixed_sum(int n, const TimeValue& total,
                                        const TimeValue& cap, std::uint64_t seed);

// Synthetic task set: per-task totals from random_fixed_sum with
// sum = processors; a1 = beta_i * total_i with beta_i uniform in
// [beta_low, beta_high]; the rest split uniformly between c1 and c2.
// Tasks with a critical section are spread over the semaphores uniformly
// at random, one task pinned to each semaphore first so none is empty.
TaskSet generate_taskset(const GenConfig& config);

} // namespace dgsched

#endif

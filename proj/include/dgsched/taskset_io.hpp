#ifndef DGSCHED_TASKSET_IO_HPP
#define DGSCHED_TASKSET_IO_HPP

#include "dgsched/model.hpp"

#include <iosfwd>
#include <string>

namespace dgsched {

// JSON task-set document:
//   { "tasks": [ { "id": 1, "c1": "0.25", "a1": [1, 3], "c2": "2",
//                  "semaphore": "s1" }, ... ],
//     "deadline": "4.5" }
// Times are decimal strings or [num, den] integer pairs; plain JSON
// integers are accepted as well. Non-integer JSON numbers are rejected:
// parsing must be exact. "semaphore" is absent (or null) for tasks
// without a critical section; "deadline" is optional.

TaskSet taskset_from_json(const std::string& text);
TaskSet load_taskset(std::istream& in);
TaskSet load_taskset_file(const std::string& path);

std::string taskset_to_json(const TaskSet& tasks);

} // namespace dgsched

#endif

#pragma once

#include <string>
#include <vector>

#include "symtor/field.hpp"
#include "symtor/ideals.hpp"

namespace symtor {

enum class Task {
    betti,
    equivariant,
    invariant,
    dual,
    extremal,
    reg_pdim,
    propagate,
    verify,
};

std::string task_name(Task t);

// A validated analysis request: the ideal data plus the tasks to run.
struct JobSpec {
    int n = 0;
    std::vector<Partition> generators; // sorted; may still be redundant
    FieldSpec field;
    std::vector<Task> tasks;
    int propagate_target = -1; // variable count m for Task::propagate
    int threads = 0;           // 0 = machine parallelism
    bool generators_reordered = false;
};

// Parse and validate the JSON job document.  Throws std::invalid_argument
// with a human-readable message on any malformed input.
JobSpec parse_job(const std::string& json_text);

// Replace the job's task list with the given task names (e.g. "betti",
// "propagate:5").  Throws std::invalid_argument on unknown names.
void override_tasks(JobSpec& job, const std::vector<std::string>& names);

struct Report {
    std::string text;
    std::string json; // serialized structured results; key order is fixed
    bool verify_failed = false;
};

// Execute every requested task.  Domain errors (zero ideal where it is not
// allowed, and so on) surface as std::invalid_argument.
Report run(const JobSpec& job);

} // namespace symtor

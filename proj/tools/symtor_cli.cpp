// Command-line front end; talks to the library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symtor.h"

namespace {

int fail(const char* stage) {
    std::cerr << "symtor: " << stage << ": " << symtor_last_error() << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Equivariant Betti numbers, dual generators and stability data of\n"
        "symmetric-group-invariant monomial ideals.  Reads a JSON job\n"
        "document and prints the requested analyses."};

    std::string input = "-";
    std::string format = "table";
    int threads = -1;
    std::vector<std::string> task_override;

    app.add_option("job", input, "job file (JSON); '-' reads stdin")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = machine parallelism)");
    app.add_option("--task", task_override,
                   "run these tasks instead of the document's (repeatable; "
                   "e.g. --task betti --task propagate:5)");

    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "symtor: cannot open '" << input << "'\n";
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    symtor_job* job = nullptr;
    if (symtor_job_parse(text.c_str(), &job) != SYMTOR_OK) return fail("parse");

    if (threads >= 0 && symtor_job_set_threads(job, threads) != SYMTOR_OK) {
        symtor_job_free(job);
        return fail("threads");
    }
    if (!task_override.empty()) {
        std::string joined;
        for (size_t i = 0; i < task_override.size(); ++i) {
            if (i > 0) joined += ',';
            joined += task_override[i];
        }
        if (symtor_job_set_tasks(job, joined.c_str()) != SYMTOR_OK) {
            symtor_job_free(job);
            return fail("tasks");
        }
    }

    symtor_report* report = nullptr;
    const symtor_status rc = symtor_run(job, &report);
    symtor_job_free(job);
    if (rc == SYMTOR_ERR_INPUT) return fail("run");
    if (rc != SYMTOR_OK) {
        std::cerr << "symtor: internal error: " << symtor_last_error() << "\n";
        return 3;
    }

    std::cout << (format == "json" ? symtor_report_json(report)
                                   : symtor_report_text(report));
    const bool verify_failed = symtor_report_verify_failed(report) != 0;
    symtor_report_free(report);
    return verify_failed ? 2 : 0;
}

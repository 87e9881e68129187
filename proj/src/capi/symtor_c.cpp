#include "symtor.h"

#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>

#include "symtor/report.hpp"

struct symtor_job {
    symtor::JobSpec spec;
};

struct symtor_report {
    symtor::Report report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
symtor_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SYMTOR_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return SYMTOR_ERR_INPUT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SYMTOR_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return SYMTOR_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

symtor_status symtor_job_parse(const char* json_text, symtor_job** out_job) {
    if (json_text == nullptr || out_job == nullptr) {
        set_error("null argument");
        return SYMTOR_ERR_INPUT;
    }
    *out_job = nullptr;
    return guarded([&] {
        auto* job = new symtor_job{symtor::parse_job(json_text)};
        *out_job = job;
    });
}

symtor_status symtor_job_set_threads(symtor_job* job, int threads) {
    if (job == nullptr || threads < 0) {
        set_error("invalid threads argument");
        return SYMTOR_ERR_INPUT;
    }
    job->spec.threads = threads;
    return SYMTOR_OK;
}

symtor_status symtor_job_set_tasks(symtor_job* job, const char* tasks) {
    if (job == nullptr || tasks == nullptr) {
        set_error("null argument");
        return SYMTOR_ERR_INPUT;
    }
    return guarded([&] {
        std::vector<std::string> names;
        std::istringstream is(tasks);
        std::string item;
        while (std::getline(is, item, ','))
            if (!item.empty()) names.push_back(item);
        symtor::override_tasks(job->spec, names);
    });
}

void symtor_job_free(symtor_job* job) { delete job; }

symtor_status symtor_run(const symtor_job* job, symtor_report** out_report) {
    if (job == nullptr || out_report == nullptr) {
        set_error("null argument");
        return SYMTOR_ERR_INPUT;
    }
    *out_report = nullptr;
    return guarded([&] {
        auto* rep = new symtor_report{symtor::run(job->spec)};
        *out_report = rep;
    });
}

const char* symtor_report_text(const symtor_report* report) {
    return report == nullptr ? "" : report->report.text.c_str();
}

const char* symtor_report_json(const symtor_report* report) {
    return report == nullptr ? "" : report->report.json.c_str();
}

int symtor_report_verify_failed(const symtor_report* report) {
    return report != nullptr && report->report.verify_failed ? 1 : 0;
}

void symtor_report_free(symtor_report* report) { delete report; }

const char* symtor_last_error(void) { return g_last_error.c_str(); }

const char* symtor_version(void) { return "0.1.0"; }

} // extern "C"

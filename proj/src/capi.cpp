#include "hsikit.h"

#include <cstring>
#include <string>

#include "jobs.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct hsk_job {
  std::string text;
};

extern "C" {

hsk_job* hsk_job_parse(const char* job_json) {
  if (!job_json) {
    g_last_error = "null job document";
    return nullptr;
  }
  // full validation happens at run time; reject nothing but null here
  return new hsk_job{job_json};
}

void hsk_job_free(hsk_job* job) { delete job; }

hsk_status hsk_job_run(const hsk_job* job, char** out_json) {
  if (!job) {
    g_last_error = "null job";
    return HSK_INVALID_INPUT;
  }
  hsikit::JobResult res = hsikit::run_job_text(job->text);
  g_last_error = res.code == 0 ? "" : res.body;
  if (out_json) *out_json = dup_string(res.body);
  switch (res.code) {
    case 0: return HSK_OK;
    case 2: return HSK_INVALID_INPUT;
    case 3: return HSK_NO_CONVERGENCE;
    default: return HSK_INTERNAL;
  }
}

hsk_status hsk_run_json(const char* job_json, char** out_json) {
  hsk_job* job = hsk_job_parse(job_json);
  if (!job) return HSK_INVALID_INPUT;
  hsk_status status = hsk_job_run(job, out_json);
  hsk_job_free(job);
  return status;
}

const char* hsk_last_error(void) { return g_last_error.c_str(); }

void hsk_string_free(char* s) { delete[] s; }

const char* hsk_version(void) { return "0.1.0"; }

}  // extern "C"

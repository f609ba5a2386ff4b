#include "thetaslope.h"

#include <string>
#include <vector>

#include "core/commands.hpp"
#include "core/num.hpp"

struct ts_report {
  int status = 0;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

std::vector<const char*> build_command_table() {
  std::vector<const char*> table;
  for (const std::string& name : ts::command_names()) table.push_back(name.c_str());
  table.push_back(nullptr);
  return table;
}

}  // namespace

extern "C" {

const char* ts_version(void) { return "0.1.0"; }

const char* const* ts_commands(void) {
  static const std::vector<const char*> table = build_command_table();
  return table.data();
}

ts_status ts_run(const char* subcommand, const char* const* keys,
                 const char* const* values, int nparams, int jobs,
                 ts_report** out) {
  if (out == nullptr) return TS_USAGE_ERROR;
  *out = nullptr;
  try {
    if (subcommand == nullptr) throw ts::UsageError("subcommand is null");
    if (nparams < 0) throw ts::UsageError("nparams is negative");
    if (nparams > 0 && (keys == nullptr || values == nullptr))
      throw ts::UsageError("parameter arrays are null");
    ts::CommandRequest req;
    req.subcommand = subcommand;
    req.jobs = jobs < 1 ? 1 : jobs;
    for (int i = 0; i < nparams; ++i) {
      if (keys[i] == nullptr || values[i] == nullptr)
        throw ts::UsageError("parameter " + std::to_string(i) + " is null");
      req.params[keys[i]] = values[i];
    }
    ts::CommandOutcome outcome = ts::run_command(req);
    auto* rep = new ts_report;
    rep->status = outcome.exit_code;
    rep->json = ts::render_json(outcome.report);
    rep->text = ts::render_text(outcome.report);
    *out = rep;
    return outcome.exit_code == 0 ? TS_OK : TS_MATH_FAIL;
  } catch (const ts::UsageError& e) {
    g_last_error = e.what();
    return TS_USAGE_ERROR;
  } catch (const ts::InternalError& e) {
    g_last_error = e.what();
    return TS_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_INTERNAL_ERROR;
  }
}

int ts_report_status(const ts_report* rep) { return rep ? rep->status : TS_USAGE_ERROR; }

const char* ts_report_json(const ts_report* rep) {
  return rep ? rep->json.c_str() : "";
}

const char* ts_report_text(const ts_report* rep) {
  return rep ? rep->text.c_str() : "";
}

void ts_report_free(ts_report* rep) { delete rep; }

const char* ts_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"

#include <cstdio>
#include <string>
#include <vector>

#include "gnorm/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gnorm::CommandResult r = gnorm::run_command(args);
  std::fputs(gnorm::emit_report(r.report, gnorm::ReportFormat::text).c_str(), stdout);
  return r.exit_code;
}

#ifndef METAQA_APP_CLI_H_
#define METAQA_APP_CLI_H_

#include <iosfwd>

namespace metaqa::app {

// Parses arguments, runs one subcommand and returns the exit code
// (0 success, 1 data error, 2 config error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metaqa::app

#endif  // METAQA_APP_CLI_H_

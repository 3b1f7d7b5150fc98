#ifndef EXPLORE_CLI_HPP_
#define EXPLORE_CLI_HPP_

namespace explore {

/// Command-line entry point. Returns 0 on success, 2 on usage errors, and 1
/// on pipeline errors (with a diagnostic on stderr).
int run_cli(int argc, const char* const* argv);

} // namespace explore

#endif // EXPLORE_CLI_HPP_

// Command-line front end; returns the process exit code.
//
// Exit codes: 0 success, 1 verification mismatch, 2 malformed input,
// 3 inhomogeneous (or constant) generators, 4 internal invariant failure
// (a repro bundle directory is written and its path printed to stderr).

#ifndef LYUCALC_CLI_HPP
#define LYUCALC_CLI_HPP

namespace lyu {

int run_cli(int argc, char** argv);

} // namespace lyu

#endif

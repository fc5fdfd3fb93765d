#pragma once

#include <string>
#include <vector>

namespace nwl::cli {

/// Grid specification: either an inclusive linspace "start:stop:count" or an
/// explicit comma-separated list "v1,v2,...". Throws OutOfRange on bad input.
std::vector<double> parse_grid(const std::string& spec);

/// Entry point shared by the nwl binary and the in-process CLI tests.
/// Returns the process exit code: 0 on success (including --help), 2 on any
/// usage or runtime error. All human-readable diagnostics go to stderr;
/// results go to stdout or to the --out file.
int run(int argc, const char* const* argv);

} // namespace nwl::cli

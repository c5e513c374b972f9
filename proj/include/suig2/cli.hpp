#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suig2 {

// Command-line front end (recognize / verify / oracle / crosscheck).
// `args` excludes the program name. Returns the process exit code:
//   0  accepted / verified / all agree
//   1  rejected / verification failed / mismatch found
//   2  usage error or unreadable, malformed input
//   3  search budget exceeded before a decision
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace suig2

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infotile {

// Exit codes: 0 success, 1 domain failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace infotile

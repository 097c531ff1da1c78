#pragma once

#include <iosfwd>

namespace netmap {

// Exit codes: 0 success, 2 input error, 3 geometric failure, 4 unsupported affine map.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace netmap

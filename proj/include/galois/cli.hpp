#pragma once

#include <iosfwd>

namespace galois {

  // Exit codes: 0 success, 1 other errors, 2 parse errors, 3 size or bound
  // errors, 4 an unidentified result under --require-identified.
  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galois

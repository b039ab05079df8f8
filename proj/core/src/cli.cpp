#include "crosskit/cli.hpp"

#include <cstdio>

namespace crosskit {

int cli_main(int, const char* const*) {
  std::fprintf(stderr, "crosskit: not wired up yet\n");
  return 2;
}

}  // namespace crosskit

#include <iostream>

#include "wildpi/cli.hpp"

int main(int argc, char **argv) {
  const auto r = wildpi::cli::run_command({argv + 1, argv + argc});
  auto &out = r.status == 0 ? std::cout : std::cerr;
  if (r.json)
    out << r.payload.dump() << '\n';
  else
    out << r.summary << '\n';
  return r.status;
}

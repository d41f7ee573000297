// Standalone acceptance battery: one pass/fail line per criterion.
// Exit codes: 0 all pass, 2 config problem, 4 any criterion failed.
#include <iostream>

#include "rydssh/commands.hpp"
#include "rydssh/config.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <config.json> [out_dir]\n";
    return 2;
  }
  try {
    const ryd::Params p = ryd::load_params(argv[1]);
    const int failed = ryd::run_acceptance(p, std::cout, argc > 2 ? argv[2] : "");
    return failed == 0 ? 0 : 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

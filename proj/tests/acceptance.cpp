// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "gentle/golden.hpp"
#include "gentle/parallel.hpp"

int main(int argc, char** argv) {
  gentle::PropertyOptions opt;
  opt.threads = gentle::configured_threads();
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-v" || a == "--verbose") verbose = true;
    else if (a == "--seed" && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (a == "--algebras" && i + 1 < argc) opt.algebras = std::atoi(argv[++i]);
  }
  int failed = 0;
  for (const auto& r : gentle::run_all_criteria(opt)) {
    bool ok = r.pass();
    failed += !ok;
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
    for (const auto& c : r.checks)
      if (verbose || !c.pass)
        std::printf("    %s %s%s%s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.detail.empty() ? "" : ": ",
                    c.detail.c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}

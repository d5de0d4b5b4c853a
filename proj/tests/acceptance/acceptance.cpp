// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <thread>

#include "criteria.hpp"

int main(int argc, char** argv) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) threads = std::max(1, std::atoi(argv[++i]));
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--threads N] [--only ID]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : confdesign::acceptance::criteria()) {
    if (only && c.id != only) continue;
    const auto o = confdesign::acceptance::run(c, threads);
    std::printf("[%s] %2d %s (%.1f s)\n", o.pass() ? "PASS" : "FAIL", o.id, o.title.c_str(), o.seconds);
    if (!o.pass()) {
      ++failed;
      std::fputs(o.diff().c_str(), stdout);
    }
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}

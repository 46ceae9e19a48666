#include <iostream>

#include <stacklab/verify.hpp>

int main() {
  int failed = 0;
  stacklab::run_reproduction_suite({}, [&failed](const stacklab::CheckResult& r) {
    std::cout << stacklab::format_result(r) << "  (" << r.seconds << " s)\n";
    for (const auto& d : r.details) std::cout << "        " << d << "\n";
    std::cout.flush();
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}

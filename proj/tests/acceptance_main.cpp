// Runs every acceptance criterion at full scale and prints one line each.
// Exit status is nonzero if any criterion fails or is skipped.

#include <cstdlib>
#include <iostream>

#include "rankone/acceptance.hpp"

int main(int argc, char** argv) {
  rankone::SuiteContext ctx;
  if (argc > 1 && std::string(argv[1]) == "smoke") ctx.scale = rankone::Scale::smoke;
  if (const char* s = std::getenv("RANKONE_SEED")) ctx.seed = std::strtoull(s, nullptr, 10);
  bool all = true;
  rankone::run_suite(ctx, [&](const rankone::CriterionResult& r) {
    std::cout << rankone::summary_line(r) << std::endl;
    all = all && r.pass();
  });
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}

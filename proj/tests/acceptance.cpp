// One line per acceptance criterion; a criterion passes when every check
// whose id starts with its acNN prefix passes.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "adisc/verify.hpp"

namespace {

struct Criterion {
  const char* prefix;
  const char* title;
};

constexpr Criterion kCriteria[] = {
    {"ac01", "Duhamel monomial rule and quadrature oracle"},
    {"ac02", "z^2 composition is not Duhamel multiplicative"},
    {"ac03", "phi(0) = 0 is necessary"},
    {"ac04", "Duhamel multiplicative symbols are exactly a z"},
    {"ac05", "Bergman norm quadrature and monomial decay"},
    {"ac06", "Besov norm quadrature"},
    {"ac07", "Hardy partial sums of log(1/(1 - conj(c) z))"},
    {"ac08", "Bloch test polynomials"},
    {"ac09", "Bloch space under the Duhamel product"},
    {"ac10", "Beta function asymptotics"},
    {"ac11", "adjoint evaluation of composition operators"},
    {"ac12", "boundary evaluation functional"},
    {"ac13", "Bloch and Besov growth bounds"},
    {"ac14", "property suites"},
};

}  // namespace

int main(int argc, char** argv) {
  adisc::VerifyOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) opt.degree = std::atoi(argv[2]);
  const adisc::VerificationReport rep = adisc::run_verification(opt);

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    int n = 0, bad = 0;
    std::string first_bad;
    for (const adisc::CheckResult& r : rep.checks) {
      if (r.id.rfind(c.prefix, 0) != 0) continue;
      ++n;
      if (r.status != adisc::CheckStatus::Pass) {
        if (bad++ == 0) first_bad = r.id;
      }
    }
    const bool ok = n > 0 && bad == 0;
    if (!ok) ++failed;
    std::printf("%s %s  %s (%d checks)", ok ? "PASS" : "FAIL", c.prefix, c.title, n);
    if (!ok) std::printf("  first failure: %s", n == 0 ? "no checks ran" : first_bad.c_str());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria pass, %.1f s\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria),
              rep.wall_time_ms / 1000.0);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

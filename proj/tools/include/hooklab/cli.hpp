#pragma once

#include <cstddef>
#include <iosfwd>

#include <mpfr.h>

namespace hooklab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::size_t order = 40;
  mpfr_prec_t prec = 128;
  int enumeration_cap = 80;
  bool json = false;
};

// Largest residual magnitude accepted as a pass at this precision:
// 1e-50 from 256 bits, 1e-25 from 128 bits, 1e-10 below.
double residual_tolerance(mpfr_prec_t prec);

// Parses the command line and runs one subcommand. Returns 0 iff every
// executed check passed, 1 if a check failed, 2 on usage or domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hooklab::cli

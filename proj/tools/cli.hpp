// mvzeta command-line front end.
//
//   mvzeta eval        one zeta value
//   mvzeta meansquare  mean-square integrals, optionally against a prediction
//   mvzeta verify      property suites
//
// Exit codes: 0 ok, 1 verification failed, 2 domain, 3 accuracy,
// 4 resource budget, 5 I/O.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvzeta::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kDomain = 2,
  kAccuracy = 3,
  kResource = 4,
  kIo = 5,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvzeta::cli

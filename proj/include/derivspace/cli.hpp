#ifndef DERIVSPACE_CLI_HPP
#define DERIVSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace derivspace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
/// A certified hypothesis did not lead to recovery up to scalar.
inline constexpr int kExitTheoremViolation = 3;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace derivspace::cli

#endif // DERIVSPACE_CLI_HPP

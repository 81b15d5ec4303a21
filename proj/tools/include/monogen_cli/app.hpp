#ifndef MONOGEN_CLI_APP_HPP_
#define MONOGEN_CLI_APP_HPP_

#include <ostream>

namespace monogen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotMonogenic = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

/* The monogen command line: analyze, polygon, dissect, orbit, factor.
 *
 * analyze exits 0 when every row is monogenic, 1 when some row is not,
 * 2 when some row is unknown and none failed; usage errors (including a
 * reducible x^p - a) exit 64. The other commands exit 0 or 64.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monogen::cli

#endif  // MONOGEN_CLI_APP_HPP_

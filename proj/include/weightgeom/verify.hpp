#ifndef WEIGHTGEOM_VERIFY_HPP
#define WEIGHTGEOM_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace wg {

struct CheckResult {
    std::string id;     // "1", "7", ...
    std::string name;   // "dims", "triality", ...
    bool pass = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct Check {
    std::string id;
    std::string name;
    std::string title;
    std::function<CheckResult()> run;
};

// The acceptance suite, in order.
const std::vector<Check>& checks();
// Runs one check by id or name, or all of them for "all". Throws
// InvalidArgument on an unknown selector.
std::vector<CheckResult> run_checks(const std::string& selector);

}  // namespace wg

#endif

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ltistab {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDomain = 2,    // parse or domain error
    kExitRefusal = 3,   // analysis refused, e.g. no Fourier transform
    kExitInternal = 4,  // internal invariant violated
};

using EnvLookup = std::function<const char*(const char*)>;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`. LTISTAB_EPSILON is read through `env`; an
/// explicit --epsilon flag wins over it.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                 const EnvLookup& env = nullptr);

}  // namespace ltistab

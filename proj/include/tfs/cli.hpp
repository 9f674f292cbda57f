#ifndef TFS_CLI_HPP
#define TFS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tfs {

/// Batch front end. Verbs: validate, refine, zassenhaus, factors, jh-check,
/// demo-transfinite; flags: --format text|machine, --seed <nat>. Reports go
/// to `out`, diagnostics to `err`. Exit code 0 for success / true verdicts,
/// 1 for mathematical failures (invalid series, unmet preconditions, false
/// verdicts), 2 for input errors (unreadable file, syntax, unknown verb).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfs

#endif

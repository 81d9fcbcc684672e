#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cusp {

// Command-line surface. Subcommands:
//   theta --group <T> --p <p> --class <label> [--phi <label>]
//   deduce --row <n>
//   verify [--all | --rows a..b] [--format human|tsv]
//   distinct [--group <T> --p <p> | --all] [--format human|tsv]
//   tmatrix --group <spec>
//   chartable --group <spec>
//   selftest
// Global: --dataset <path> (else env THETA_DATASET, else the embedded copy).
// Exit codes: 0 success, 1 verification failure, 2 argument/parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cusp

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "alexbq/diagram.hpp"

namespace alexbq::cli {

enum ExitCode : int { ok = 0, usage = 1, parse = 2, budget = 3 };

/// Input source written as `catalog:NAME`, `file:PATH`, `braid:WORD` or
/// `gauss:CODE`; a bare word is a catalog name.
Diagram load_source(std::string_view spec);

/// Full command line (argv[0] included); output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexbq::cli

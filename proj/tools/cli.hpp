#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eocd::cli {

/// Exit codes: 0 decided true / verified, 1 decided false / no
/// certificate, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default for --max-vertices: $EOCD_MAX_VERTICES, else 4096.
long default_max_vertices();

} // namespace eocd::cli

#pragma once

#include <map>
#include <string>

namespace galpoint {

/// File name to JSON text, generated from fixtures/ at configure time.
const std::map<std::string, std::string>& bundled_fixture_table();

}  // namespace galpoint

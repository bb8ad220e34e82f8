#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "gentle/algebra.hpp"

namespace gentle {

// Example algebras shipped in fixtures/, compiled into the library.
const std::map<std::string, std::string>& bundled_fixtures();
Algebra bundled_algebra(const std::string& name);

}  // namespace gentle

#pragma once

// Named reference assemblies.

#include "foliate/assembly.hpp"

#include <string>
#include <vector>

namespace foliate {

std::vector<std::string> catalog_names();

// Throws Error(UnknownName).
Assembly catalog_assembly(const std::string& name);

// fg_good / fg_bad family for arbitrary genus.
Assembly fg_good(int genus);
Assembly fg_bad(int genus);

}  // namespace foliate

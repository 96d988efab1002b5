#pragma once

#include "catalog.hpp"
#include "flags.hpp"
#include "geom.hpp"
#include "identity.hpp"
#include "jordan.hpp"
#include "liealg.hpp"
#include "matrix.hpp"
#include "multilinear.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "serialize.hpp"
#include "states.hpp"
#include "subspace.hpp"
#include "suites.hpp"

namespace jgl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jgl

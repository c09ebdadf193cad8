#pragma once

#include "audit.hpp"
#include "cartan.hpp"
#include "control.hpp"
#include "error.hpp"
#include "geodesics.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "pauli.hpp"
#include "random.hpp"
#include "report.hpp"

namespace liectl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace liectl

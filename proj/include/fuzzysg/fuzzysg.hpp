#pragma once

// Umbrella header.

#include "chain.hpp"
#include "congruence.hpp"
#include "correspondence.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "fuzzy.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "semigroup.hpp"

#pragma once

// Umbrella header.

#include "enumerate.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "pcongruence.hpp"
#include "relations.hpp"
#include "semigroup.hpp"
#include "separator.hpp"
#include "subset.hpp"
#include "theorems.hpp"

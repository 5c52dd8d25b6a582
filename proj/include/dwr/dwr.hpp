#pragma once

// Umbrella header.

#include "dwr/blockops.hpp"
#include "dwr/bounds.hpp"
#include "dwr/io.hpp"
#include "dwr/linalg.hpp"
#include "dwr/matrix.hpp"
#include "dwr/radius.hpp"
#include "dwr/random.hpp"
#include "dwr/verify.hpp"

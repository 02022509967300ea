#pragma once

// Umbrella header.

#include "weilcheck/artin_tate.hpp"
#include "weilcheck/compose.hpp"
#include "weilcheck/cyclotomic.hpp"
#include "weilcheck/factor.hpp"
#include "weilcheck/json_io.hpp"
#include "weilcheck/linalg.hpp"
#include "weilcheck/newton_polygon.hpp"
#include "weilcheck/numeric.hpp"
#include "weilcheck/pairing_lab.hpp"
#include "weilcheck/parity.hpp"
#include "weilcheck/poly.hpp"
#include "weilcheck/reconstruct.hpp"
#include "weilcheck/resultant.hpp"
#include "weilcheck/rng.hpp"
#include "weilcheck/smith.hpp"
#include "weilcheck/squareclass.hpp"
#include "weilcheck/weil.hpp"

// Umbrella header.

#pragma once

#include "f2iso/bitmatrix.hpp"
#include "f2iso/classify.hpp"
#include "f2iso/dsum.hpp"
#include "f2iso/invariants.hpp"
#include "f2iso/isometry.hpp"
#include "f2iso/mat8.hpp"
#include "f2iso/semidirect.hpp"
#include "f2iso/space.hpp"
#include "f2iso/verify.hpp"

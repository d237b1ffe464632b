#pragma once

#include "hnlab/numeric.hpp"
#include "hnlab/lattice.hpp"
#include "hnlab/lift.hpp"
#include "hnlab/autoeq.hpp"
#include "hnlab/objects.hpp"
#include "hnlab/tstruct.hpp"
#include "hnlab/stabcond.hpp"
#include "hnlab/multicurve.hpp"
#include "hnlab/shadow.hpp"

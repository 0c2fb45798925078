#pragma once

#include "qslice/entire.hpp"
#include "qslice/jet.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/star_exp.hpp"
#include "qslice/star_log.hpp"
#include "qslice/zeros.hpp"

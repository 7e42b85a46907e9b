#pragma once

#include "lfpscsc/duality.hpp"
#include "lfpscsc/error.hpp"
#include "lfpscsc/interior.hpp"
#include "lfpscsc/lfp_model.hpp"
#include "lfpscsc/linear_program.hpp"
#include "lfpscsc/scsc.hpp"

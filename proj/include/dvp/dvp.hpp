#pragma once

#include "dvp/errors.hpp"
#include "dvp/exactnorm.hpp"
#include "dvp/kernels.hpp"
#include "dvp/quadrature.hpp"
#include "dvp/summation.hpp"
#include "dvp/trig_series.hpp"
#include "dvp/zeros.hpp"

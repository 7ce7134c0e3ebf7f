#ifndef REMIXED_REMIXED_HPP
#define REMIXED_REMIXED_HPP

#include "remixed/config.hpp"
#include "remixed/engine.hpp"
#include "remixed/error.hpp"
#include "remixed/formulas.hpp"
#include "remixed/io.hpp"
#include "remixed/qcalc.hpp"
#include "remixed/qpoly.hpp"
#include "remixed/qrat.hpp"
#include "remixed/simulate.hpp"
#include "remixed/tseries.hpp"
#include "remixed/verify.hpp"

#endif  // REMIXED_REMIXED_HPP

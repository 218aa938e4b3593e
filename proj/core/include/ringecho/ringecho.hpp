#pragma once

#include "ringecho/cavity.hpp"
#include "ringecho/dynamics.hpp"
#include "ringecho/errors.hpp"
#include "ringecho/fourier.hpp"
#include "ringecho/grid.hpp"
#include "ringecho/metrics.hpp"
#include "ringecho/propagation.hpp"
#include "ringecho/pulse.hpp"
#include "ringecho/scenario.hpp"
#include "ringecho/signal.hpp"
#include "ringecho/transfer.hpp"
#include "ringecho/units.hpp"
#include "ringecho/version.hpp"

#pragma once

#include "specfun/elliptic.hpp"
#include "specfun/errors.hpp"
#include "specfun/gamma.hpp"
#include "specfun/hypergeometric.hpp"
#include "specfun/means.hpp"
#include "specfun/series.hpp"
#include "specfun/verify/checks.hpp"
#include "specfun/verify/grid.hpp"
#include "specfun/verify/report.hpp"
#include "specfun/verify/suites.hpp"

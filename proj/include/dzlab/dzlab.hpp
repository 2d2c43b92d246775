#pragma once

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/dd.hpp"
#include "dzlab/gauss.hpp"
#include "dzlab/moments.hpp"
#include "dzlab/quadruples.hpp"
#include "dzlab/report.hpp"
#include "dzlab/special_sums.hpp"
#include "dzlab/trig.hpp"
#include "dzlab/voronoi.hpp"
#include "dzlab/zeta.hpp"

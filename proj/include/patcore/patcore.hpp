#pragma once

#include "common.hpp"
#include "perm.hpp"
#include "grids.hpp"
#include "graph.hpp"
#include "cores.hpp"
#include "polygon.hpp"
#include "series.hpp"
#include "oracle.hpp"
#include "io.hpp"

#pragma once

#include "mse/distance.hpp"
#include "mse/embedding.hpp"
#include "mse/error.hpp"
#include "mse/expand.hpp"
#include "mse/flow.hpp"
#include "mse/graph.hpp"
#include "mse/grid.hpp"
#include "mse/holey.hpp"
#include "mse/io.hpp"
#include "mse/normalize.hpp"
#include "mse/reductions.hpp"
#include "mse/render.hpp"
#include "mse/solver.hpp"
#include "mse/vc.hpp"
#include "mse/verify.hpp"

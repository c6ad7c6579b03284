#pragma once

#include "hopbound/bench.hpp"
#include "hopbound/convolution.hpp"
#include "hopbound/generators.hpp"
#include "hopbound/graph.hpp"
#include "hopbound/io.hpp"
#include "hopbound/reductions.hpp"
#include "hopbound/solvers.hpp"
#include "hopbound/triangle.hpp"

#pragma once

#include "sdr/core.hpp"
#include "sdr/exact.hpp"
#include "sdr/generators.hpp"
#include "sdr/graph.hpp"
#include "sdr/io.hpp"
#include "sdr/lll.hpp"
#include "sdr/solver.hpp"

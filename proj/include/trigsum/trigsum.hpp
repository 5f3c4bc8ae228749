#pragma once

#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"
#include "trigsum/bigfloat.hpp"
#include "trigsum/laurent.hpp"
#include "trigsum/power_sums.hpp"
#include "trigsum/trig_sums.hpp"
#include "trigsum/derivations.hpp"
#include "trigsum/verlinde.hpp"
#include "trigsum/resistor.hpp"
#include "trigsum/graph_io.hpp"

#pragma once

#include "scfc/error.hpp"
#include "scfc/graph.hpp"
#include "scfc/canonical.hpp"
#include "scfc/families.hpp"
#include "scfc/coloring.hpp"
#include "scfc/solver.hpp"
#include "scfc/enumeration.hpp"
#include "scfc/constructions.hpp"
#include "scfc/io.hpp"
#include "scfc/parallel.hpp"
#include "scfc/harness.hpp"

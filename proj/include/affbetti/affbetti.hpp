#pragma once

#include "affbetti/numeric.hpp"
#include "affbetti/rootsys.hpp"
#include "affbetti/laurent.hpp"
#include "affbetti/finiteweyl.hpp"
#include "affbetti/domlattice.hpp"
#include "affbetti/affineoracle.hpp"
#include "affbetti/polytope.hpp"
#include "affbetti/measures.hpp"
#include "affbetti/harness.hpp"

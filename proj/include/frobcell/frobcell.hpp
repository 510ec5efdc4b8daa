#pragma once

// Umbrella header.

#include "frobcell/algebra.hpp"
#include "frobcell/cell_checks.hpp"
#include "frobcell/cellular.hpp"
#include "frobcell/centers.hpp"
#include "frobcell/fixture_files.hpp"
#include "frobcell/fixtures.hpp"
#include "frobcell/frobenius.hpp"
#include "frobcell/matrix.hpp"
#include "frobcell/quiver.hpp"
#include "frobcell/report.hpp"
#include "frobcell/scalar.hpp"
#include "frobcell/spec_io.hpp"
#include "frobcell/subspace.hpp"
#include "frobcell/verify.hpp"

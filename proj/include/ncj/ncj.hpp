#pragma once

// Umbrella header for the exact noncommutative Jordan superalgebra toolkit.

#include "ncj/scalar.hpp"
#include "ncj/matrix.hpp"
#include "ncj/subspace.hpp"
#include "ncj/report.hpp"
#include "ncj/superalgebra.hpp"
#include "ncj/identities.hpp"
#include "ncj/constructions.hpp"
#include "ncj/bimodule.hpp"
#include "ncj/catalog.hpp"
#include "ncj/peirce.hpp"
#include "ncj/representations.hpp"
#include "ncj/structure.hpp"
#include "ncj/io.hpp"
#include "ncj/suite.hpp"

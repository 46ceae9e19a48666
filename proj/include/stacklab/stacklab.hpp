#pragma once

#include "asympt.hpp"
#include "bivariate.hpp"
#include "contactmap.hpp"
#include "decompose.hpp"
#include "diagram.hpp"
#include "enumerate.hpp"
#include "equations.hpp"
#include "generating.hpp"
#include "holonomic.hpp"
#include "limits.hpp"
#include "polynomial.hpp"
#include "ratfunc.hpp"
#include "reduction.hpp"
#include "schroeder.hpp"
#include "series.hpp"
#include "structure.hpp"
#include "table.hpp"
#include "verify.hpp"

#pragma once

#include "akc/asp.hpp"
#include "akc/bench.hpp"
#include "akc/formula.hpp"
#include "akc/literal.hpp"
#include "akc/plan.hpp"
#include "akc/plan_grid.hpp"
#include "akc/planner.hpp"
#include "akc/reduct.hpp"
#include "akc/semantics.hpp"
#include "akc/theory.hpp"
#include "akc/theory_io.hpp"

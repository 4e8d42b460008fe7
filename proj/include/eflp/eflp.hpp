#pragma once

#include "eflp/truth_value.hpp"
#include "eflp/lattice.hpp"
#include "eflp/program.hpp"
#include "eflp/parser.hpp"
#include "eflp/interpretation.hpp"
#include "eflp/semantics.hpp"
#include "eflp/fixpoint.hpp"
#include "eflp/oracles.hpp"
#include "eflp/translate.hpp"

#pragma once

#include "hooklab/bigfloat.hpp"
#include "hooklab/brackets.hpp"
#include "hooklab/chowla_selberg.hpp"
#include "hooklab/errors.hpp"
#include "hooklab/json_io.hpp"
#include "hooklab/modeval.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/qseries.hpp"
#include "hooklab/rational.hpp"

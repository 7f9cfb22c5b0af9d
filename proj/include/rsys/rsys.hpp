#pragma once

#include "rsys/alphabet.hpp"
#include "rsys/analysis.hpp"
#include "rsys/constructions.hpp"
#include "rsys/error.hpp"
#include "rsys/mask.hpp"
#include "rsys/system.hpp"
#include "rsys/table.hpp"
#include "rsys/text.hpp"
#include "rsys/verify.hpp"

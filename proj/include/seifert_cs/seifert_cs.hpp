#pragma once

#include "seifert_cs/catalog.hpp"
#include "seifert_cs/dedekind.hpp"
#include "seifert_cs/errors.hpp"
#include "seifert_cs/homology.hpp"
#include "seifert_cs/invariants.hpp"
#include "seifert_cs/json_io.hpp"
#include "seifert_cs/parse.hpp"
#include "seifert_cs/rational.hpp"
#include "seifert_cs/report.hpp"
#include "seifert_cs/seifert.hpp"
#include "seifert_cs/snf.hpp"

#pragma once

#include "bigint.hpp"
#include "disk_cache.hpp"
#include "gysin.hpp"
#include "int_linalg.hpp"
#include "int_poly.hpp"
#include "lie_data.hpp"
#include "parallel.hpp"
#include "presentation.hpp"
#include "presets.hpp"
#include "report.hpp"
#include "schubert_engine.hpp"
#include "weyl_coset.hpp"

#pragma once

#include "apnle/gf2_poly.hpp"
#include "apnle/bit_system.hpp"
#include "apnle/gf2_matrix.hpp"
#include "apnle/linalg.hpp"
#include "apnle/field.hpp"
#include "apnle/lut.hpp"
#include "apnle/fingerprint.hpp"
#include "apnle/fixtures.hpp"
#include "apnle/reference_data.hpp"
#include "apnle/classify.hpp"
#include "apnle/prune.hpp"
#include "apnle/checkpoint.hpp"
#include "apnle/search.hpp"
#include "apnle/dedup.hpp"
#include "apnle/io.hpp"
#include "apnle/pipeline.hpp"

#pragma once

#include "tsallis/entropy.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/family.hpp"
#include "tsallis/linalg.hpp"
#include "tsallis/measures.hpp"
#include "tsallis/search.hpp"
#include "tsallis/sweep.hpp"
#include "tsallis/verify.hpp"

#pragma once

#include "flatsurf/corpus.hpp"

// Convenience aliases shared by the unit tests.
namespace ct = flatsurf::corpus;

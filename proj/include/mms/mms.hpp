#pragma once

// Umbrella header.

#include "mms/bfactor.hpp"
#include "mms/blossom.hpp"
#include "mms/degseq.hpp"
#include "mms/error.hpp"
#include "mms/graph.hpp"
#include "mms/matching.hpp"
#include "mms/mu.hpp"
#include "mms/odd_cycles.hpp"
#include "mms/regular.hpp"

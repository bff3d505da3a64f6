#pragma once

#include "udcount/bigint.hpp"
#include "udcount/blocks.hpp"
#include "udcount/brute.hpp"
#include "udcount/cactus.hpp"
#include "udcount/class_vector.hpp"
#include "udcount/count.hpp"
#include "udcount/digraph.hpp"
#include "udcount/error.hpp"
#include "udcount/generate.hpp"
#include "udcount/sp.hpp"
#include "udcount/validity.hpp"

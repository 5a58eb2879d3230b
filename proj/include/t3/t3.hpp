#pragma once

// Umbrella header: the whole calculator toolkit.

#include "t3/category.hpp"
#include "t3/checked.hpp"
#include "t3/lr.hpp"
#include "t3/partition.hpp"
#include "t3/poset.hpp"
#include "t3/sym.hpp"
#include "t3/sym_element.hpp"
#include "t3/verify.hpp"

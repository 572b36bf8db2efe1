#pragma once

#include "cm2/claims.hpp"
#include "cm2/graph.hpp"
#include "cm2/indices.hpp"
#include "cm2/io.hpp"
#include "cm2/orientation.hpp"
#include "cm2/rewrites.hpp"
#include "cm2/search.hpp"

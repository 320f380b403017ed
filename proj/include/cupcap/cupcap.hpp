#pragma once

#include "cupcap/bound.hpp"
#include "cupcap/chains.hpp"
#include "cupcap/claims.hpp"
#include "cupcap/error.hpp"
#include "cupcap/extended.hpp"
#include "cupcap/extremal.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/pair_function.hpp"
#include "cupcap/random.hpp"
#include "cupcap/rational.hpp"
#include "cupcap/words.hpp"

#pragma once

#include "frob/instance.hpp"
#include "frob/oracle.hpp"
#include "frob/minconv.hpp"
#include "frob/ntt.hpp"
#include "frob/sumset.hpp"
#include "frob/reductions.hpp"
#include "frob/engines.hpp"
#include "frob/io.hpp"

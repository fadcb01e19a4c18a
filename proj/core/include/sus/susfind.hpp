#pragma once

#include "sus/io.hpp"
#include "sus/lsus.hpp"
#include "sus/oracle.hpp"
#include "sus/pipeline.hpp"
#include "sus/sls.hpp"
#include "sus/suffix_array.hpp"
#include "sus/types.hpp"

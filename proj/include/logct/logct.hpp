#pragma once

#include "logct/cache.hpp"
#include "logct/commands.hpp"
#include "logct/ct.hpp"
#include "logct/digest.hpp"
#include "logct/exact.hpp"
#include "logct/identities.hpp"
#include "logct/laurent.hpp"
#include "logct/report.hpp"
#include "logct/spectrum.hpp"
#include "logct/verdict.hpp"
#include "logct/virasoro.hpp"

#pragma once

#include "palwidth/error.hpp"
#include "palwidth/group.hpp"
#include "palwidth/oracle.hpp"
#include "palwidth/quasihom.hpp"
#include "palwidth/report.hpp"
#include "palwidth/segments.hpp"
#include "palwidth/witnesses.hpp"
#include "palwidth/word.hpp"

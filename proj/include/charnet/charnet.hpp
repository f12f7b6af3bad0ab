#pragma once

#include "charnet/centrality.hpp"
#include "charnet/corpus_format.hpp"
#include "charnet/distribution.hpp"
#include "charnet/error.hpp"
#include "charnet/format.hpp"
#include "charnet/global_stats.hpp"
#include "charnet/graph.hpp"
#include "charnet/lexical.hpp"
#include "charnet/report.hpp"
#include "charnet/svg.hpp"

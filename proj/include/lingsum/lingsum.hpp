#pragma once

// Umbrella header for the lingsum library: fuzzy linguistic
// summarization of daily time series rendered as natural-language
// weather reports.

#include "lingsum/aggregator.hpp"
#include "lingsum/config.hpp"
#include "lingsum/content.hpp"
#include "lingsum/date.hpp"
#include "lingsum/document_plan.hpp"
#include "lingsum/error.hpp"
#include "lingsum/fuzzy.hpp"
#include "lingsum/ingestion.hpp"
#include "lingsum/knowledge_base.hpp"
#include "lingsum/lexicalizer.hpp"
#include "lingsum/lexicon.hpp"
#include "lingsum/phrase.hpp"
#include "lingsum/pipeline.hpp"
#include "lingsum/protoform.hpp"
#include "lingsum/realizer.hpp"
#include "lingsum/referring.hpp"
#include "lingsum/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "wordlecast/calendar.hpp"
#include "wordlecast/csv.hpp"
#include "wordlecast/dataset.hpp"
#include "wordlecast/difficulty.hpp"
#include "wordlecast/error.hpp"
#include "wordlecast/io.hpp"
#include "wordlecast/neural.hpp"
#include "wordlecast/optim.hpp"
#include "wordlecast/pipeline.hpp"
#include "wordlecast/pos_words.hpp"
#include "wordlecast/rng.hpp"
#include "wordlecast/svg.hpp"
#include "wordlecast/timeseries.hpp"
#include "wordlecast/wordfeat.hpp"

TEST_CASE("headers compose into one translation unit", "[smoke]") {
    SUCCEED();
}

#include <catch2/catch_amalgamated.hpp>
#include "tern/json_io.hpp"
TEST_CASE("smoke"){ CHECK(tern::registry().size()==54); }

#include <catch2/catch_amalgamated.hpp>
#include "hyperbessel/hyperbessel.hpp"

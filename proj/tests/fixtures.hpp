#pragma once

#include "beacon/synthesis.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fixtures {

struct Fixture {
    std::string name;
    std::vector<beacon::Point> vertices;
    std::optional<beacon::CaseId> exercises;  // reduction or basis case the trace must contain
    int exact_beacons = -1;                   // -1: only the budget bound is asserted
};

// Hand fixtures: small polygons reaching each case family, plus the basis shapes.
const std::vector<Fixture>& hand_fixtures();
const Fixture& fixture(const std::string& name);

inline void PrintTo(const Fixture& f, std::ostream* os) { *os << f.name; }

}  // namespace fixtures

#pragma once

#include <string>

#include "toricapolar/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline toricapolar::CoxRing f1() { return toricapolar::load_fan(path("f1.fan")); }
inline toricapolar::CoxRing p114() { return toricapolar::load_fan(path("p114.fan")); }
inline toricapolar::CoxRing fake_plane() { return toricapolar::load_fan(path("fake_plane.fan")); }

inline toricapolar::DegreeClass deg(const toricapolar::CoxRing& ring, const std::string& text) {
  return ring.group().parse(text);
}

}  // namespace fixtures

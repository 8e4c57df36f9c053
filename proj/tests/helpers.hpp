#pragma once

#include <string>

#include "glin/document.hpp"
#include "glin/groupoid.hpp"

namespace glin::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(GLIN_FIXTURES_DIR) + "/" + name;
}

inline DocumentModel load_fixture(const std::string& name) {
    return parse_document(fixture_path(name));
}

inline uint64_t seed_from_fixture(const std::string& key) {
    std::ifstream in(fixture_path("seeds.json"));
    Json j = Json::parse(in);
    return j.at(key).get<uint64_t>();
}

/// BG for a 2-element group with the generator's parity as given.
inline ParityGroupoid bc2(Sign generator_parity) {
    ParityGroupoid pg;
    int o = pg.g.add_object("*");
    int e = pg.g.add_morphism("e", o, o);
    int t = pg.g.add_morphism("t", o, o);
    pg.g.set_compose(e, e, e);
    pg.g.set_compose(e, t, t);
    pg.g.set_compose(t, e, t);
    pg.g.set_compose(t, t, e);
    pg.g.set_identity(o, e);
    pg.g.set_inverse(e, e);
    pg.g.set_inverse(t, t);
    pg.parity = {Sign::plus(), generator_parity};
    pg.g.finalize();
    return pg;
}

}  // namespace glin::test

#pragma once

#include <string>
#include <variant>

#include "arfkit/enhanced.hpp"
#include "arfkit/lattice.hpp"
#include "arfkit/quadspace.hpp"
#include "arfkit/rochlin.hpp"
#include "arfkit/seifert.hpp"

namespace arfkit {

struct QuadraticSpaceDoc {
    QuadraticSpace space;
    friend bool operator==(const QuadraticSpaceDoc&, const QuadraticSpaceDoc&) = default;
};
struct EnhancedSpaceDoc {
    EnhancedSpace space;
    friend bool operator==(const EnhancedSpaceDoc&, const EnhancedSpaceDoc&) = default;
};
struct SeifertDoc {
    SeifertData data;
    friend bool operator==(const SeifertDoc&, const SeifertDoc&) = default;
};
struct SurfaceDoc {
    SurfaceData data;
    friend bool operator==(const SurfaceDoc&, const SurfaceDoc&) = default;
};
struct LatticeDoc {
    IntLattice lattice;
    friend bool operator==(const LatticeDoc&, const LatticeDoc&) = default;
};
struct EvenPresentationDoc {
    EvenPresentation presentation;
    friend bool operator==(const EvenPresentationDoc&, const EvenPresentationDoc&) = default;
};
struct ScenarioDoc {
    RelativeScenario scenario;
    friend bool operator==(const ScenarioDoc&, const ScenarioDoc&) = default;
};

using InputDocument = std::variant<QuadraticSpaceDoc, EnhancedSpaceDoc, SeifertDoc, SurfaceDoc,
                                   LatticeDoc, EvenPresentationDoc, ScenarioDoc>;

// Total parser: every failure surfaces as InputError with a distinct message
// (syntax, unknown kind, missing field, malformed entry, violated invariant).
// Integer entries are JSON numbers restricted to exact integers; entries beyond
// 64 bits may be given as quoted decimal strings. Floating point is rejected.
InputDocument parse_document(const std::string& text);

InputDocument parse_document_file(const std::string& path);

// Canonical serialization; parse(serialize(d)) == d.
std::string serialize_document(const InputDocument& doc);

std::string kind_of(const InputDocument& doc);

} // namespace arfkit

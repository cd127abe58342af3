#pragma once

#include <optional>
#include <string>

#include "boltcheb/bolt.hpp"
#include "boltcheb/space.hpp"

namespace boltcheb {

// Space files are JSON objects {"s": [...], "p": [...]} with optional "f"
// (sampled values) and "coords" (one coordinate vector per point). Labels are
// densified on load; unknown keys are ignored.
struct SpaceFile {
    FiniteQuotientSpace space;
    std::optional<SampledFunction> f;
};

SpaceFile load_space_file(const std::string& path);
void save_space_file(const std::string& path, const FiniteQuotientSpace& space,
                     const std::optional<SampledFunction>& f);

// Bolt files are JSON objects {"points": [...], "closed": bool}; loading
// validates the bolt against the space.
Bolt load_bolt_file(const std::string& path, const FiniteQuotientSpace& space);
void save_bolt_file(const std::string& path, const Bolt& bolt);

// Sum-element files are JSON objects {"g": [...], "h": [...]} with one value
// per class.
SumElement load_sum_file(const std::string& path, const FiniteQuotientSpace& space);
void save_sum_file(const std::string& path, const SumElement& u);

}  // namespace boltcheb

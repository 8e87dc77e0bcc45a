#pragma once

#include <string>

#include "prefcone/extension.hpp"
#include "prefcone/oracle.hpp"
#include "prefcone/weak.hpp"

namespace prefcone {

// JSON instance contract: {"name"?: str, "dim": int, "A": [[rat, ...], ...],
// "cells": ["+0-", ...]} with rationals as strings "p" or "p/q". Every
// serializer below emits deterministic, re-parseable output.

SignCone instance_from_json(const std::string& text);
std::string instance_to_json(const SignCone& cone);

Cortege cortege_from_json(const std::string& text);
std::string cortege_to_json(const Cortege& c);

/// Comma-separated rationals, e.g. "1,-1/2,0".
RatVector point_from_string(const std::string& text, int expected_dim);
std::string point_to_string(const RatVector& v);

std::string validation_to_json(const SignCone& cone, const ValidationReport& report);
std::string components_to_json(const SignCone& cone, const ComponentLattice& l,
                               const std::optional<int>& strong, bool relatively_open);
std::string components_to_dot(const ComponentLattice& l);
std::string lineality_to_json(const Subspace& l);
std::string weak_to_json(const WeakAnalysis& analysis, const ComponentLattice& l);
std::string witness_to_json(const Witness& w);
std::string extension_to_json(const ExtensionResult& r);
std::string axiom_report_to_json(const AxiomReport& report);

} // namespace prefcone

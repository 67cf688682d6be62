// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "qaoa/maxcut_analysis.hpp"
#include "qaoa/mis_variant.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/qaoa.hpp"

namespace qaoa {

using Json = nlohmann::ordered_json;

Json to_json(const SubgraphDecomposition& d);
Json to_json(const FpEvaluation& ev, bool variant = false);
Json to_json(const OptimizationResult& r, int p);
Json to_json(const RatioCertificate& cert);
Json to_json(const mis::IndependentSetBasis& basis);

}  // namespace qaoa

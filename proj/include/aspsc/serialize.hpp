// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "aspsc/analysis.hpp"
#include "aspsc/embedding.hpp"
#include "aspsc/qbf.hpp"
#include "aspsc/semantics.hpp"
#include "aspsc/supercoherence.hpp"

namespace aspsc {

/// Machine-readable JSON forms. Key order is fixed, so equal values always
/// serialize to identical bytes.
std::string to_json(const AnswerSetReport& r);
std::string to_json(const ClassReport& r);
std::string to_json(const ScVerdict& v);
std::string to_json(const EquivVerdict& v);
std::string to_json(const ReductionReport& r);
std::string to_json(const EmbeddingArtifact& a);

/// `{a, b}` form (names sorted lexicographically).
std::string to_text(const Interpretation& i, const AtomTable& table);

}  // namespace aspsc

/*
 * Copyright 2026 The spinquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "spinquot/pfaffian.hpp"
#include "spinquot/rewrite.hpp"
#include "spinquot/ringcheck.hpp"
#include "spinquot/straighten.hpp"
#include "spinquot/tableau.hpp"
#include "spinquot/weyl.hpp"

namespace spinquot::io {

using Json = nlohmann::ordered_json;

/// Parses "2,4,7,8,10,12", "(2,4,7,8,10,12)" or "2 4 7 8 10 12".
CosetTuple parse_tuple(const std::string& text);

Json to_json(const CosetTuple& t);
CosetTuple tuple_from_json(const Json& j);

/// {"rows": [[...], ...], "compressed": [[...], ...]}.
Json to_json(const Tableau& t);
/// Accepts {"compressed": [...]} or {"rows": [...]}, or a bare array of
/// compressed rows.
Tableau tableau_from_json(const Json& j, const RankParam& p);

/// Array of rows of rational strings "p/q".
Json to_json(const SkewMatrix& a);
SkewMatrix matrix_from_json(const Json& j);

Json to_json(const GradedDims& d);
/// "k,dim" header and one line per degree.
std::string hilbert_csv(const GradedDims& d);

Json to_json(const Prop11Report& r);
Json to_json(const Lemma51Report& r);
Json to_json(const Thm51Report& r);
Json to_json(const RelationReport& r);
Json to_json(const Thm23Report& r);
Json to_json(const rewrite::DiamondReport& r, const rewrite::ReductionSystem& s);
Json to_json(const rewrite::VeroneseReport& r);
Json to_json(const rewrite::ReductionSystem& s);

}  // namespace spinquot::io

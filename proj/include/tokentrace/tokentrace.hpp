/*
   Copyright 2026 The tokentrace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include "chain/erc20.hpp"
#include "chain/ledger.hpp"
#include "chain/types.hpp"
#include "detect/lexical.hpp"
#include "detect/scan.hpp"
#include "graph/creator_graph.hpp"
#include "graph/money_flow.hpp"
#include "graph/token_stats.hpp"
#include "pipeline.hpp"
#include "scam/aggregate.hpp"
#include "scam/airdrop.hpp"
#include "scam/arbitrage.hpp"
#include "scam/config.hpp"
#include "scam/history.hpp"
#include "synth/generator.hpp"
#include "synth/scenario.hpp"
#include "version.hpp"

#pragma once

#include <string>

#include "json.hpp"

#include "chainlocal/localfn.hpp"
#include "chainlocal/triples.hpp"

namespace chainlocal {

using Json = nlohmann::ordered_json;

// {group, prime, block_id, degrees, defect, defect_group_order, am, k1, principal}
Json block_records(const std::string& group_name, Engine& eng);

// {rep_id, length, subgroup_orders, stabilizer_order}
Json chain_records(Engine& eng);

// {chain_rep, P_order, X_order, orbit_size, sign, paired_orbit}
Json triple_records(Engine& eng, const TripleOrbitSet& orbits,
                    const std::vector<int>& pairing);

Json chain_sum_json(const ChainSumReport& report);

// {group, prime, function, blocks: [...], verdict}
Json localfn_bundle(const std::string& group_name, int p, const std::string& function,
                    const std::vector<ChainSumReport>& reports);

// group,prime,block,function,total,verdict
std::string csv_summary_line(const std::string& group_name, int p,
                             const ChainSumReport& report);

// Write via a temporary file in the same directory, then rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace chainlocal

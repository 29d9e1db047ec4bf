#include "chainlocal/report.hpp"

#include <cstdio>
#include <fstream>

namespace chainlocal {

Json block_records(const std::string& group_name, Engine& eng) {
  Json out = Json::array();
  const SubgroupData& amb = eng.ambient();
  for (int b = 0; b < amb.blocks->count(); ++b) {
    const Block& blk = amb.blocks->blocks[b];
    Json rec;
    rec["group"] = group_name;
    rec["prime"] = eng.p();
    rec["block_id"] = b;
    Json degrees = Json::array();
    for (int chi : blk.chars) degrees.push_back(amb.table->degrees[chi]);
    rec["degrees"] = degrees;
    rec["defect"] = blk.defect;
    rec["defect_group_order"] = blk.defect_group->order();
    rec["am"] = height_zero_count(*amb.blocks, b);
    rec["k1"] = defect_one_count(*amb.blocks, b);
    rec["principal"] = blk.principal;
    out.push_back(std::move(rec));
  }
  return out;
}

Json chain_records(Engine& eng) {
  Json out = Json::array();
  const ChainOrbitSet& chains = eng.chain_orbits();
  const PSubgroupPoset& poset = eng.poset();
  for (int r = 0; r < chains.count(); ++r) {
    Json rec;
    rec["rep_id"] = r;
    rec["length"] = chains.reps[r].length();
    Json orders = Json::array();
    for (int id : chains.reps[r].ids) orders.push_back(poset.subgroups[id].order());
    rec["subgroup_orders"] = orders;
    rec["stabilizer_order"] = eng.stabilizer(r).order();
    rec["orbit_size"] = chains.orbit_sizes[r];
    out.push_back(std::move(rec));
  }
  return out;
}

Json triple_records(Engine& eng, const TripleOrbitSet& orbits,
                    const std::vector<int>& pairing) {
  Json out = Json::array();
  const PSubgroupPoset& poset = eng.poset();
  for (int i = 0; i < orbits.count(); ++i) {
    const TripleOrbit& o = orbits.orbits[i];
    SubgroupRef stab = chain_stabilizer(eng.group(), poset, o.rep.chain);
    SubgroupRef p_in_stab =
        SubgroupRef::from_elements(*eng.data_for(stab.elements()).group,
                                   poset.subgroups[o.rep.p_id].elements());
    Json rec;
    rec["chain_rep"] = o.rep.chain.ids;
    rec["P_order"] = poset.subgroups[o.rep.p_id].order();
    rec["X_order"] =
        normalizer(*eng.data_for(stab.elements()).group, p_in_stab).order();
    rec["orbit_size"] = o.size;
    rec["sign"] = o.sign;
    rec["paired_orbit"] = pairing[i];
    out.push_back(std::move(rec));
  }
  return out;
}

Json chain_sum_json(const ChainSumReport& report) {
  Json rec;
  rec["block"] = report.block;
  Json terms = Json::array();
  for (const ChainTerm& t : report.terms) {
    Json term;
    term["chain_rep"] = t.chain_rep;
    term["sign"] = t.sign;
    term["summands"] = t.summands;
    term["values"] = t.values;
    terms.push_back(std::move(term));
  }
  rec["terms"] = terms;
  rec["total"] = report.total;
  rec["verdict"] = report.zero() ? "zero" : "nonzero";
  return rec;
}

Json localfn_bundle(const std::string& group_name, int p, const std::string& function,
                    const std::vector<ChainSumReport>& reports) {
  Json out;
  out["group"] = group_name;
  out["prime"] = p;
  out["function"] = function;
  Json blocks = Json::array();
  bool all_zero = true;
  for (const ChainSumReport& r : reports) {
    all_zero = all_zero && r.zero();
    blocks.push_back(chain_sum_json(r));
  }
  out["blocks"] = blocks;
  out["verdict"] = all_zero ? "pass" : "fail";
  return out;
}

std::string csv_summary_line(const std::string& group_name, int p,
                             const ChainSumReport& report) {
  return group_name + "," + std::to_string(p) + "," + std::to_string(report.block) +
         "," + report.function + "," + std::to_string(report.total) + "," +
         (report.zero() ? "zero" : "nonzero");
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw InputError("cannot move report into place at " + path);
}

}  // namespace chainlocal

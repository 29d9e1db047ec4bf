#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chainlocal/catalog.hpp"
#include "chainlocal/report.hpp"

using namespace chainlocal;

namespace {

struct Options {
  std::vector<std::string> groups;
  int p = 2;
  std::uint64_t seed = 12345;
  std::string format = "json";
  std::string out;
  bool positive_defect = false;
  bool stretch = false;
  std::string fn = "am";
};

GroupHandle resolve_group(const std::string& spec, bool stretch) {
  if (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec))
    return group_from_file(spec);
  auto stretch_names = catalog_stretch_names();
  if (std::find(stretch_names.begin(), stretch_names.end(), spec) !=
          stretch_names.end() &&
      !stretch)
    throw InputError("group '" + spec + "' requires --stretch");
  return resolve_catalog(spec);
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--group", opt.groups, "catalog name or generator file")->required();
  cmd->add_option("--p", opt.p, "prime")->required();
  cmd->add_option("--seed", opt.seed, "seed for randomized functions");
  cmd->add_option("--format", opt.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", opt.out, "report file (default stdout)");
  cmd->add_flag("--positive-defect", opt.positive_defect,
                "restrict to positive-defect blocks");
  cmd->add_flag("--stretch", opt.stretch, "allow the larger stretch catalog entries");
}

Json chain_audit(Engine& eng) {
  std::map<int, int> by_length;
  const ChainOrbitSet& chains = eng.chain_orbits();
  for (const Chain& c : chains.reps) ++by_length[c.length()];
  Json audit;
  for (const auto& [len, count] : by_length)
    audit[std::to_string(len)] = count;
  return audit;
}

BlockFunction parse_function(const std::string& spec, std::uint64_t seed, bool stretch,
                             int index) {
  if (spec == "am") return fn_am();
  if (spec == "k1") return fn_k1();
  if (spec == "am0") return fn_am0();
  if (spec == "normsum")
    return fn_normalizer_sum(fn_am(), NormalizerSumMode::AllPSubgroups);
  if (spec == "normsum:radical")
    return fn_normalizer_sum(fn_am(), NormalizerSumMode::RadicalOnly);
  if (spec.rfind("const:", 0) == 0) {
    try {
      return fn_constant(std::stoll(spec.substr(6)));
    } catch (const std::exception&) {
      throw InputError("bad constant in '" + spec + "'");
    }
  }
  if (spec.rfind("omegaN:", 0) == 0) {
    auto n = std::make_shared<GroupHandle>(resolve_group(spec.substr(7), stretch));
    return fn_omega_N(std::move(n));
  }
  if (spec.rfind("random:", 0) == 0) return fn_random_conjugacy(seed, index);
  throw InputError("unknown function '" + spec +
                   "'; use am, k1, am0, const:<c>, omegaN:<name>, normsum, "
                   "normsum:radical or random:<count>");
}

int random_count(const std::string& spec) {
  if (spec.rfind("random:", 0) != 0) return 1;
  try {
    int n = std::stoi(spec.substr(7));
    if (n < 1) throw InputError("random count must be positive");
    return n;
  } catch (const std::exception&) {
    throw InputError("bad count in '" + spec + "'");
  }
}

void emit(const Options& opt, const Json& doc, const std::vector<std::string>& csv_lines) {
  std::string text;
  if (opt.format == "csv" && !csv_lines.empty()) {
    text = "group,prime,block,function,total,verdict\n";
    for (const std::string& line : csv_lines) text += line + "\n";
  } else if (opt.format == "table") {
    text = doc.dump(2) + "\n";  // the JSON document doubles as the table view
  } else {
    text = doc.dump(2) + "\n";
  }
  if (opt.out.empty())
    std::cout << text;
  else
    write_atomic(opt.out, text);
}

int run_blocks(const Options& opt) {
  Json doc;
  doc["command"] = "blocks";
  doc["prime"] = opt.p;
  Json results = Json::array();
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    results.push_back(block_records(name, eng));
  }
  doc["results"] = results;
  doc["verdict"] = "pass";
  emit(opt, doc, {});
  return 0;
}

int run_chains(const Options& opt) {
  Json doc;
  doc["command"] = "chains";
  doc["prime"] = opt.p;
  Json results = Json::array();
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    Json entry;
    entry["group"] = name;
    entry["chains"] = chain_records(eng);
    entry["orbits_by_length"] = chain_audit(eng);
    results.push_back(std::move(entry));
  }
  doc["results"] = results;
  doc["verdict"] = "pass";
  emit(opt, doc, {});
  return 0;
}

int run_triples(const Options& opt) {
  Json doc;
  doc["command"] = "triples";
  doc["prime"] = opt.p;
  Json results = Json::array();
  bool failed = false;
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    Json entry;
    entry["group"] = name;
    entry["X"] = "N_{G_C}(P)";
    try {
      TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
      std::vector<int> pairing = orbit_pairing(eng, orbits);
      entry["orbits"] = triple_records(eng, orbits, pairing);
      entry["verdict"] = "pass";
    } catch (const InternalError& e) {
      entry["verdict"] = "fail";
      entry["witness"] = e.what();
      failed = true;
    }
    results.push_back(std::move(entry));
  }
  doc["results"] = results;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(opt, doc, {});
  return failed ? 1 : 0;
}

int run_verify_am(const Options& opt) {
  Json doc;
  doc["command"] = "verify am";
  doc["prime"] = opt.p;
  Json results = Json::array();
  bool failed = false;
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    Json entry;
    entry["group"] = name;
    Json blocks = Json::array();
    for (const AmReport& r : verify_am_equality(eng)) {
      Json rec;
      rec["block"] = r.block;
      rec["defect"] = r.defect;
      rec["normalizer_order"] = r.normalizer_order;
      rec["am_G"] = r.am_g;
      rec["am_N"] = r.am_n;
      rec["equal"] = r.equal;
      if (!r.equal) failed = true;
      blocks.push_back(std::move(rec));
    }
    entry["blocks"] = blocks;
    results.push_back(std::move(entry));
  }
  doc["results"] = results;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(opt, doc, {});
  return failed ? 1 : 0;
}

int run_verify_local(const Options& opt) {
  Json doc;
  doc["command"] = "verify local";
  doc["prime"] = opt.p;
  doc["seed"] = opt.seed;
  Json results = Json::array();
  std::vector<std::string> csv_lines;
  bool failed = false;
  int count = random_count(opt.fn);
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    for (int i = 0; i < count; ++i) {
      BlockFunction f = parse_function(opt.fn, opt.seed, opt.stretch, i);
      std::vector<ChainSumReport> reports =
          verify_block_chain_local(eng, f, opt.positive_defect);
      for (const ChainSumReport& r : reports) {
        if (!r.zero()) failed = true;
        csv_lines.push_back(csv_summary_line(name, opt.p, r));
      }
      Json bundle = localfn_bundle(name, opt.p, f.name, reports);
      bundle["chain_orbits_by_length"] = chain_audit(eng);
      results.push_back(std::move(bundle));
    }
  }
  doc["results"] = results;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(opt, doc, csv_lines);
  return failed ? 1 : 0;
}

int run_verify_tau(const Options& opt) {
  Json doc;
  doc["command"] = "verify tau";
  doc["prime"] = opt.p;
  Json results = Json::array();
  bool failed = false;
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
    Json entry;
    entry["group"] = name;
    Json reps = Json::array();
    for (int r = 0; r < eng.chain_orbits().count(); ++r) {
      TauReport report = verify_tau_bijection(eng, orbits, accept_all_triples(), r);
      Json rec;
      rec["chain_rep"] = r;
      rec["gc_orbits"] = report.gc_orbit_count;
      rec["g_orbits"] = report.g_orbit_count;
      rec["pass"] = report.pass;
      if (!report.pass) {
        rec["witnesses"] = report.witnesses;
        failed = true;
      }
      reps.push_back(std::move(rec));
    }
    entry["chain_reps"] = reps;
    results.push_back(std::move(entry));
  }
  doc["results"] = results;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(opt, doc, {});
  return failed ? 1 : 0;
}

int run_verify_involution(const Options& opt) {
  Json doc;
  doc["command"] = "verify involution";
  doc["prime"] = opt.p;
  Json results = Json::array();
  bool failed = false;
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    TripleOrbitSet orbits = enumerate_triple_orbits(eng, accept_all_triples());
    Json entry;
    entry["group"] = name;
    int checked = 0;
    bool group_failed = false;
    for (const TripleOrbit& o : orbits.orbits) {
      NormalisingTriple star = triple_involution(eng, o.rep);
      bool ok = (std::abs(star.chain.length() - o.rep.chain.length()) == 1) &&
                (triple_involution(eng, star) == o.rep);
      if (!ok) {
        group_failed = true;
        Json w;
        w["chain"] = o.rep.chain.ids;
        w["P_id"] = o.rep.p_id;
        entry["witness"] = w;
      }
      ++checked;
    }
    failed = failed || group_failed;
    entry["orbits_checked"] = checked;
    entry["verdict"] = group_failed ? "fail" : "pass";
    results.push_back(std::move(entry));
  }
  doc["results"] = results;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(opt, doc, {});
  return failed ? 1 : 0;
}

int run_verify_star_block(const Options& opt) {
  Json doc;
  doc["command"] = "verify star-block";
  doc["prime"] = opt.p;
  Json results = Json::array();
  bool failed = false;
  for (const std::string& name : opt.groups) {
    Engine eng(resolve_group(name, opt.stretch), opt.p);
    const PSubgroupPoset& poset = eng.poset();
    const ChainOrbitSet& chains = eng.chain_orbits();
    Json entry;
    entry["group"] = name;
    int checked = 0;
    Json witnesses = Json::array();
    for (int r = 0; r < chains.count(); ++r) {
      const Chain& c = chains.reps[r];
      const SubgroupData& data = eng.data_for(eng.stabilizer(r).elements());
      for (int b = 0; b < data.blocks->count(); ++b) {
        const Block& blk = data.blocks->blocks[b];
        if (blk.defect == 0) continue;
        auto induced = block_induction(*eng.ambient().blocks, *data.blocks, b);
        if (!induced.has_value()) continue;
        int pid = poset.id_of(blk.defect_group->elements());
        try {
          StarBlock star = star_block_correspondent(eng, *induced, c, b, pid);
          StarBlock back = star_block_correspondent(eng, *induced, star.star_chain,
                                                    star.block, pid);
          if (!(back.star_chain == c) || back.block != b)
            throw InternalError("double star is not the identity");
          ++checked;
        } catch (const InternalError& e) {
          failed = true;
          Json w;
          w["chain_rep"] = r;
          w["block"] = b;
          w["reason"] = e.what();
          witnesses.push_back(std::move(w));
        }
      }
    }
    entry["checked"] = checked;
    if (!witnesses.empty()) entry["witnesses"] = witnesses;
    results.push_back(std::move(entry));
  }
  doc["results"] = results;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(opt, doc, {});
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-block chain locality toolkit"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* blocks = app.add_subcommand("blocks", "block data per (group, prime)");
  add_common(blocks, opt);
  CLI::App* chains = app.add_subcommand("chains", "chain orbit dump");
  add_common(chains, opt);
  CLI::App* triples = app.add_subcommand("triples", "triple orbits and pairing");
  add_common(triples, opt);
  CLI::App* verify = app.add_subcommand("verify", "theorem verifiers");
  verify->require_subcommand(1);
  CLI::App* vam = verify->add_subcommand("am", "Alperin-McKay equality");
  add_common(vam, opt);
  CLI::App* vlocal = verify->add_subcommand("local", "alternating chain sums");
  add_common(vlocal, opt);
  vlocal->add_option("--fn", opt.fn,
                     "am | k1 | am0 | const:<c> | omegaN:<name> | normsum | "
                     "normsum:radical | random:<count>");
  CLI::App* vtau = verify->add_subcommand("tau", "tau bijection per chain rep");
  add_common(vtau, opt);
  CLI::App* vinv = verify->add_subcommand("involution", "chain involution checks");
  add_common(vinv, opt);
  CLI::App* vstar = verify->add_subcommand("star-block", "star block correspondents");
  add_common(vstar, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!is_prime(opt.p)) throw InputError("p must be a prime");
    if (blocks->parsed()) return run_blocks(opt);
    if (chains->parsed()) return run_chains(opt);
    if (triples->parsed()) return run_triples(opt);
    if (vam->parsed()) return run_verify_am(opt);
    if (vlocal->parsed()) return run_verify_local(opt);
    if (vtau->parsed()) return run_verify_tau(opt);
    if (vinv->parsed()) return run_verify_involution(opt);
    if (vstar->parsed()) return run_verify_star_block(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

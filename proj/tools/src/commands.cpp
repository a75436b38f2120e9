#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "fusionkit/catalog.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/experiments.hpp"
#include "fusionkit/fusion_subsystems.hpp"
#include "fusionkit/group_ops.hpp"
#include "fusionkit/local_analysis.hpp"
#include "fusionkit/theorem_a.hpp"

namespace fusionkit::cli {

namespace {

using Clock = std::chrono::steady_clock;
using ItemFn = std::function<ItemResult(std::string const&)>;

std::mutex log_mutex;

void log_timing(std::string const& item, double secs) {
  std::lock_guard lock(log_mutex);
  std::cerr << "[fusionkit] " << item << ": " << secs << " s\n";
}

/// Sets pass/fail from the checks unless the item was skipped.
ItemResult finish(ItemResult r, std::string const& kind) {
  if (r.status == ItemStatus::skipped || r.status == ItemStatus::error) return r;
  bool const ok = all_passed(r.checks);
  r.status = ok ? ItemStatus::pass : ItemStatus::fail;
  if (!ok) r.violation_kind = kind;
  return r;
}

ItemResult skipped(std::string item, std::string why) {
  ItemResult r;
  r.item = std::move(item);
  r.status = ItemStatus::skipped;
  r.message = std::move(why);
  return r;
}

std::vector<ItemResult> run_items(std::vector<std::string> items, ItemFn const& fn,
                                  RunConfig const& config) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  std::vector<ItemResult> results(items.size());
  auto const start = Clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      std::string const& item = items[i];
      double const elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (config.time_budget_secs > 0 && elapsed > config.time_budget_secs) {
        results[i] = skipped(item, "time budget exhausted");
        results[i].status = ItemStatus::error;
        continue;
      }
      auto const t0 = Clock::now();
      ItemResult r;
      try {
        r = fn(item);
      } catch (VerificationError const& e) {
        r.status = ItemStatus::fail;
        r.violation_kind = "finding";
        r.message = e.what();
      } catch (std::exception const& e) {
        r.status = ItemStatus::error;
        r.message = e.what();
      }
      r.item = item;
      log_timing(item, std::chrono::duration<double>(Clock::now() - t0).count());
      results[i] = std::move(r);
    }
  };
  unsigned const n = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(items.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return results;
}

Json caps_json(Caps const& c) {
  return Json{{"max_group_order", c.max_group_order},
              {"max_p_group_order", c.max_p_group_order},
              {"max_subgroups", c.max_subgroups},
              {"max_automorphism_domain", c.max_automorphism_domain},
              {"max_automorphisms", c.max_automorphisms},
              {"functor_objects", c.functor_objects},
              {"functor_candidates", c.functor_candidates},
              {"natural_iso_nodes", c.natural_iso_nodes}};
}

Report make_report(std::string command, std::string selector, RunConfig const& config) {
  Report r{std::move(command), std::move(selector), Json::object(), {}};
  r.config["caps"] = caps_json(config.caps);
  if (config.prime) r.config["prime"] = *config.prime;
  if (config.widen) r.config["widen"] = true;
  if (config.time_budget_secs > 0) r.config["time_budget_secs"] = config.time_budget_secs;
  return r;
}

std::vector<std::string> pair_items(RunConfig const& config) {
  if (!config.pairs.empty()) return config.pairs;
  return default_pairs();
}

/// Group items are labelled "spec p=N".
struct GroupItems {
  std::vector<std::string> labels;
  std::map<std::string, CatalogGroup> lookup;
};

GroupItems group_items(RunConfig const& config) {
  std::vector<CatalogGroup> groups;
  if (config.specs.empty()) {
    groups = default_groups();
  } else {
    if (!config.prime) throw ParseError("--spec needs --prime");
    for (auto const& s : config.specs) groups.push_back({s, *config.prime});
  }
  GroupItems out;
  for (auto const& g : groups) {
    auto label = g.spec + " p=" + std::to_string(g.p);
    out.labels.push_back(label);
    out.lookup.emplace(label, g);
  }
  return out;
}

Subgroup const& trivial_of(Subgroup const& S, std::optional<Subgroup>& holder) {
  holder = Subgroup::trivial(S.parent());
  return *holder;
}

ItemResult analyze_pair(RealizedPair const& pr, RunConfig const& config) {
  ItemResult r;
  auto const t0 = Clock::now();
  auto const desc = pr.descriptor();
  auto& d = r.data;
  d["p"] = pr.p;
  d["orders"] = {{"G", pr.G.order()}, {"H", pr.H.order()}, {"S", pr.S.order()}, {"T", pr.T.order()}};
  d["classification"] = to_json(desc.report);
  d["C_S_T"] = to_json(centralizer(pr.S, pr.T));
  auto const direct = centralizer_subgroup_direct(pr.F, pr.E);
  d["C_S_E_direct"] = to_json(direct);
  log_timing("  classification and direct C_S(E)",
             std::chrono::duration<double>(Clock::now() - t0).count());

  FusionSystem const CFT = centralizer_system(pr.F, pr.T).system;
  d["hyp_C_F_T"] = to_json(hyperfocal(CFT));
  d["Z_F"] = to_json(center_of_fusion_system(pr.F));

  if (desc.level() == NormalityLevel::normal) {
    auto const t1 = Clock::now();
    auto local = centralizer_subgroup_local(pr, config.widen);
    d["C_S_E_local"] = to_json(local);
    r.checks.push_back(Check::of("local pipeline = direct pipeline", local.matches_direct,
                                 "local " + local.result.to_string()));
    log_timing("  local pipeline", std::chrono::duration<double>(Clock::now() - t1).count());

    Json chains = Json::array();
    std::optional<Subgroup> holder;
    Subgroup const& one = trivial_of(pr.S, holder);
    for (auto const& U : centric_family(desc)) {
      Json c{{"U", to_json(U)}};
      try {
        auto chain = strongly_normalized_chain(desc, U, one);
        c["chain"] = chain ? to_json(*chain) : Json(nullptr);
        r.checks.push_back(Check::of("normalized chain exists at U = " + U.to_string(),
                                     chain.has_value()));
      } catch (InvalidInput const& e) {
        c["precondition"] = e.what();
      }
      chains.push_back(std::move(c));
    }
    d["chains"] = std::move(chains);
  } else {
    d["C_S_E_local"] = {{"skipped", "the pair is not normal"}};
  }
  return finish(std::move(r), "likely-bug");
}

ItemResult analyze_item(std::string const& item, RunConfig const& config) {
  if (item == "example:weakly-normal") {
    ItemResult r;
    auto reg = regression_example_weakly_normal(config.caps);
    r.checks = reg.checks;
    r.data = to_json(reg);
    return finish(std::move(r), "likely-bug");
  }
  if (item.starts_with("pair:")) return analyze_pair(build_pair(item, config.caps), config);
  if (!config.prime) throw ParseError("--spec needs --prime");
  return analyze_pair(build_pair(PairSpec{item, item, *config.prime}, config.caps), config);
}

ItemResult verify_pair_item(std::string const& suite, std::string const& item,
                            RunConfig const& config) {
  auto pr = build_pair(item, config.caps);
  ItemResult r;
  if (suite == "theorem-a") {
    auto rep = verify_theorem_a(pr, config.caps);
    r.checks = rep.checks;
    r.data = to_json(rep);
  } else if (suite == "theorem-b") {
    auto desc = pr.descriptor();
    if (desc.level() != NormalityLevel::normal) return skipped(item, "the pair is not normal");
    auto rep = verify_theorem_b(desc);
    r.checks = rep.checks;
    r.data = to_json(rep);
  } else if (suite == "local") {
    auto rep = centralizer_subgroup_local(pr, config.widen);
    r.checks.push_back(Check::of("local pipeline = direct pipeline", rep.matches_direct,
                                 "local " + rep.result.to_string()));
    r.data = to_json(rep);
  } else {
    auto rep = verify_prop_hyp_containment(pr);
    r.checks = rep.checks;
    r.data = to_json(rep);
  }
  return finish(std::move(r), "likely-bug");
}

ItemResult verify_group_item(std::string const& suite, CatalogGroup const& g,
                             RunConfig const& config) {
  Subgroup const G = Subgroup::whole(build_group(g.spec, config.caps));
  ItemResult r;
  if (suite == "gross") {
    if (G.order() > config.caps.max_automorphism_domain) {
      return skipped("", "|G| = " + std::to_string(G.order()) + " exceeds the automorphism cap");
    }
    auto rep = verify_gross(G, g.p, config.caps);
    r.data = to_json(rep);
    if (!rep.applicable) {
      r.status = ItemStatus::skipped;
      r.message = rep.reason;
      return r;
    }
    r.checks.push_back(Check::of("C_Aut(G)(S) has a normal p-complement", rep.holds,
                                 "|C| = " + std::to_string(rep.C_order)));
  } else if (suite == "hyperfocal") {
    r.checks.push_back(verify_hyperfocal_oracle(G, g.p, config.caps));
  } else {
    r.checks.push_back(verify_zstar(G, g.p, config.caps));
    if (r.checks.back().status == CheckStatus::skipped) {
      r.status = ItemStatus::skipped;
      r.message = r.checks.back().detail;
    }
  }
  return finish(std::move(r), "likely-bug");
}

std::vector<std::string> n_range_pairs(RunConfig const& config) {
  std::string range = config.n_range.empty() ? "6..7" : config.n_range;
  auto sep = range.find("..");
  std::size_t width = 2;
  if (sep == std::string::npos) {
    sep = range.find('-');
    width = 1;
  }
  unsigned lo = 0, hi = 0;
  try {
    if (sep == std::string::npos) {
      lo = hi = static_cast<unsigned>(std::stoul(range));
    } else {
      lo = static_cast<unsigned>(std::stoul(range.substr(0, sep)));
      hi = static_cast<unsigned>(std::stoul(range.substr(sep + width)));
    }
  } catch (std::exception const&) {
    throw ParseError("bad --n-range '" + range + "'");
  }
  if (lo < 2 || hi < lo) throw ParseError("bad --n-range '" + range + "'");
  unsigned const p = config.prime.value_or(2);
  std::vector<std::string> out;
  for (unsigned n = lo; n <= hi; ++n) {
    out.push_back(PairSpec{"sym:" + std::to_string(n), "alt:" + std::to_string(n), p}.to_string());
  }
  return out;
}

}  // namespace

Report cmd_analyze(RunConfig const& config) {
  Report report = make_report("analyze", "", config);
  std::vector<std::string> items = config.pairs;
  items.insert(items.end(), config.specs.begin(), config.specs.end());
  if (items.empty()) throw ParseError("analyze needs --pair or --spec");
  report.items = run_items(items, [&](std::string const& item) { return analyze_item(item, config); },
                           config);
  return report;
}

Report cmd_verify(RunConfig const& config) {
  std::string const& suite = config.suite;
  Report report = make_report("verify", suite, config);
  if (suite == "theorem-a" || suite == "theorem-b" || suite == "local" || suite == "op-containment") {
    report.items = run_items(
        pair_items(config),
        [&](std::string const& item) { return verify_pair_item(suite, item, config); }, config);
  } else if (suite == "gross" || suite == "hyperfocal" || suite == "zstar") {
    auto groups = group_items(config);
    report.items = run_items(
        groups.labels,
        [&](std::string const& item) { return verify_group_item(suite, groups.lookup.at(item), config); },
        config);
  } else if (suite == "example") {
    report.items = run_items(
        {"example:weakly-normal"},
        [&](std::string const&) {
          ItemResult r;
          auto reg = regression_example_weakly_normal(config.caps);
          r.checks = reg.checks;
          r.data = to_json(reg);
          return finish(std::move(r), "likely-bug");
        },
        config);
  } else {
    throw ParseError("unknown suite '" + suite + "'");
  }
  return report;
}

Report cmd_conjecture(RunConfig const& config) {
  if (config.which != "5.2" && config.which != "5.3") {
    throw ParseError("--which must be 5.2 or 5.3");
  }
  Report report = make_report("conjecture", config.which, config);
  auto items = config.pairs.empty() ? n_range_pairs(config) : config.pairs;
  report.items = run_items(
      items,
      [&](std::string const& item) {
        auto pr = build_pair(item, config.caps);
        ItemResult r;
        Verdict verdict;
        std::string reason;
        if (config.which == "5.2") {
          auto res = run_conjecture_52(pr);
          verdict = res.verdict;
          reason = res.reason;
          r.data = to_json(res);
          if (verdict != Verdict::skipped) {
            r.checks.push_back(Check::of("C_S(E) = C_G(H) n S", verdict == Verdict::holds));
          }
        } else {
          auto res = run_conjecture_53(pr);
          verdict = res.verdict;
          reason = res.reason;
          r.data = to_json(res);
          if (verdict != Verdict::skipped) {
            r.checks.push_back(Check::of("C_F(E) = F_{C_S(H)}(C_G(H))", verdict == Verdict::holds,
                                         res.witness));
            if (res.p_power_index) {
              r.checks.push_back(Check::of("F_{C_S(H)}(C_G(H)) has p-power index in C_F(T)",
                                           *res.p_power_index));
            }
          }
        }
        if (verdict == Verdict::skipped) return skipped(item, reason);
        r.message = to_string(verdict);
        return finish(std::move(r), "finding");
      },
      config);
  return report;
}

}  // namespace fusionkit::cli

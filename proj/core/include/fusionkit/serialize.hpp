#pragma once

#include <nlohmann/json.hpp>

#include "fusionkit/catalog.hpp"
#include "fusionkit/experiments.hpp"
#include "fusionkit/fusion_system.hpp"
#include "fusionkit/local_analysis.hpp"
#include "fusionkit/theorem_a.hpp"

namespace fusionkit {

using Json = nlohmann::json;

/// Subgroups are written as {"order", "members", "generators"}: the
/// sorted element indices plus readable generator labels.  Invalid
/// (unset) subgroups become null.
Json to_json(Subgroup const& sub);
Json elements_json(GroupTable const& group, std::span<Elem const> elems);
Json to_json(Morphism const& phi);
/// Objects in lattice order, each with its hom-set as image tables.
Json to_json(FusionSystem const& F);
Json to_json(Check const& check);
Json to_json(std::vector<Check> const& checks);
Json to_json(NormalityReport const& r);
Json to_json(CentralizerSet const& c);
Json to_json(TheoremAReport const& r);
Json to_json(TheoremBReport const& r);
Json to_json(HypContainmentReport const& r);
Json to_json(LocalCentralizerReport const& r);
Json to_json(OpContainment const& r);
Json to_json(GrossReport const& r);
Json to_json(Chain const& c);
Json to_json(ExampleRegression const& r);
Json to_json(Conjecture52Result const& r);
Json to_json(Conjecture53Result const& r);

}  // namespace fusionkit

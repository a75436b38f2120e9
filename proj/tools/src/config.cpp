#include "config.hpp"

#include <nlohmann/json.hpp>

#include "fusionkit/error.hpp"

namespace fusionkit::cli {

void apply_caps_json(Caps& caps, std::string const& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("FUSIONKIT_CAPS is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("FUSIONKIT_CAPS must be a JSON object");
  std::pair<char const*, std::size_t*> const fields[] = {
      {"max_group_order", &caps.max_group_order},
      {"max_p_group_order", &caps.max_p_group_order},
      {"max_subgroups", &caps.max_subgroups},
      {"max_automorphism_domain", &caps.max_automorphism_domain},
      {"max_automorphisms", &caps.max_automorphisms},
      {"functor_objects", &caps.functor_objects},
      {"functor_candidates", &caps.functor_candidates},
      {"natural_iso_nodes", &caps.natural_iso_nodes},
  };
  for (auto const& [key, value] : doc.items()) {
    auto it = std::find_if(std::begin(fields), std::end(fields),
                           [&](auto const& f) { return key == f.first; });
    if (it == std::end(fields)) throw ParseError("unknown cap '" + key + "'");
    if (!value.is_number_integer() || value.get<long long>() <= 0) {
      throw ParseError("cap '" + key + "' must be a positive integer");
    }
    *it->second = value.get<std::size_t>();
  }
}

}  // namespace fusionkit::cli

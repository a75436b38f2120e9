#include "fusionkit/group_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fusionkit/error.hpp"

namespace fusionkit {

GroupPtr parse_group_json(std::string const& text, Caps const& caps) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("group file must be a JSON object");

  try {
    if (doc.contains("table")) {
      auto rows = doc.at("table").get<std::vector<std::vector<Elem>>>();
      return GroupTable::from_table(rows, caps);
    }
    if (doc.contains("degree") && doc.contains("generators")) {
      auto degree = doc.at("degree").get<std::size_t>();
      if (degree == 0) throw ParseError("degree must be positive");
      std::vector<Permutation> gens;
      for (auto const& g : doc.at("generators")) {
        auto cycles = g.get<std::vector<std::vector<std::uint32_t>>>();
        gens.push_back(perm::from_cycles(degree, cycles));
      }
      return GroupTable::from_generators(degree, gens, caps);
    }
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("malformed group file: ") + e.what());
  }
  throw ParseError(R"(group file needs "table" or "degree" + "generators")");
}

GroupPtr load_group_file(std::string const& path, Caps const& caps) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str(), caps);
}

}  // namespace fusionkit

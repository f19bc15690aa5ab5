#include "simforest/complex_io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace simforest {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw ParseError("complex file: " + message);
}

Complex parse_simplicial(const ordered_json& doc) {
  if (!doc.contains("facets") || !doc["facets"].is_array())
    fail("simplicial complex needs a \"facets\" array");
  std::vector<std::vector<int>> facets;
  for (const auto& item : doc["facets"]) {
    if (!item.is_array()) fail("each facet must be an array of vertex labels");
    std::vector<int> f;
    for (const auto& v : item) {
      if (!v.is_number_integer()) fail("vertex labels must be integers");
      f.push_back(v.get<int>());
    }
    facets.push_back(std::move(f));
  }
  try {
    return SimplicialComplex::from_facets(std::move(facets));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Complex parse_cell(const ordered_json& doc) {
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    fail("cell complex needs an integer \"dimension\"");
  const int dim = doc["dimension"].get<int>();
  if (dim < 1) fail("cell complex dimension must be at least 1");
  if (!doc.contains("faces") || !doc["faces"].is_object())
    fail("cell complex needs a \"faces\" object keyed by grade");
  if (!doc.contains("incidence") || !doc["incidence"].is_object())
    fail("cell complex needs an \"incidence\" object keyed by grade");

  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) {
    const std::string key = std::to_string(k);
    if (!doc["faces"].contains(key) || !doc["faces"][key].is_array())
      fail("missing face id list for grade " + key);
    for (const auto& id : doc["faces"][key]) {
      if (!id.is_string()) fail("face ids must be strings");
      ids[static_cast<std::size_t>(k)].push_back(id.get<std::string>());
    }
  }

  std::vector<IntMatrix> incidence;
  for (int k = 1; k <= dim; ++k) {
    const std::string key = std::to_string(k);
    if (!doc["incidence"].contains(key) || !doc["incidence"][key].is_array())
      fail("missing incidence triplet list for grade " + key);
    const auto rows = ids[static_cast<std::size_t>(k - 1)].size();
    const auto cols = ids[static_cast<std::size_t>(k)].size();
    IntMatrix m(rows, cols);
    std::vector<bool> seen(rows * cols, false);
    for (const auto& triplet : doc["incidence"][key]) {
      if (!triplet.is_array() || triplet.size() != 3 ||
          !triplet[0].is_number_integer() || !triplet[1].is_number_integer() ||
          !triplet[2].is_number_integer())
        fail("incidence entries must be [row, col, value] integer triplets");
      const long long r = triplet[0].get<long long>();
      const long long c = triplet[1].get<long long>();
      if (r < 0 || static_cast<std::size_t>(r) >= rows || c < 0 ||
          static_cast<std::size_t>(c) >= cols)
        fail("incidence triplet index out of range in grade " + key);
      const auto flat = static_cast<std::size_t>(r) * cols +
                        static_cast<std::size_t>(c);
      if (seen[flat]) fail("duplicate incidence triplet in grade " + key);
      seen[flat] = true;
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          triplet[2].get<long long>();
    }
    incidence.push_back(std::move(m));
  }

  try {
    return CellComplexData(std::move(ids), std::move(incidence));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

}  // namespace

Complex parse_complex_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
    fail("top level must be an object with a \"type\" string");
  const std::string type = doc["type"].get<std::string>();
  if (type == "simplicial") return parse_simplicial(doc);
  if (type == "cell") return parse_cell(doc);
  fail("unknown complex type \"" + type + "\" (expected simplicial or cell)");
}

Complex read_complex(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex_json(buffer.str());
}

Complex read_complex_file(const std::string& path) {
  if (path == "-") return read_complex(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file: " + path);
  return read_complex(in);
}

std::string complex_to_json(const Complex& g) {
  ordered_json doc;
  if (g.is_simplicial()) {
    doc["type"] = "simplicial";
    auto facets = ordered_json::array();
    for (const Face& f : g.simplicial().maximal_faces())
      facets.push_back(f.vertices);
    doc["facets"] = std::move(facets);
  } else {
    const CellComplexData& cc = g.cell();
    doc["type"] = "cell";
    doc["dimension"] = cc.dimension();
    auto faces = ordered_json::object();
    for (int k = 0; k <= cc.dimension(); ++k)
      faces[std::to_string(k)] = cc.face_ids(k);
    doc["faces"] = std::move(faces);
    auto incidence = ordered_json::object();
    for (int k = 1; k <= cc.dimension(); ++k) {
      const IntMatrix& m = cc.boundary_matrix(k);
      auto triplets = ordered_json::array();
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const BigInt& v = m(r, c);
          if (v == 0) continue;
          if (v > std::numeric_limits<long long>::max() ||
              v < std::numeric_limits<long long>::min())
            throw std::invalid_argument(
                "complex_to_json: incidence entry too large to serialize");
          triplets.push_back({r, c, v.convert_to<long long>()});
        }
      incidence[std::to_string(k)] = std::move(triplets);
    }
    doc["incidence"] = std::move(incidence);
  }
  return doc.dump(2) + "\n";
}

void write_complex(std::ostream& out, const Complex& g) {
  out << complex_to_json(g);
}

}  // namespace simforest

#include "mtutte/jsonio.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mtutte {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw InputError("spec: " + what); }

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.contains(it.key())) bad("unknown field '" + it.key() + "' in " + where);
}

int get_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) bad("missing field '" + key + "' in " + where);
  const json& v = obj.at(key);
  if (!v.is_number_integer()) bad("field '" + key + "' in " + where + " must be an integer");
  return v.get<int>();
}

// Accepts decimal strings (the canonical form) and plain JSON integers.
mpz_class get_big(const json& v, const std::string& where) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return mpz_class(s);
    } catch (const std::invalid_argument&) {
      bad("'" + s + "' in " + where + " is not a decimal integer");
    }
  }
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  bad(where + " entries must be decimal strings or integers");
}

Matroid parse_description(const json& desc, int max_n, std::string& type_out) {
  if (!desc.is_object()) bad("'description' must be an object");
  if (!desc.contains("type")) bad("'description' needs a 'type'");
  const std::string type = desc.at("type").get<std::string>();
  type_out = type;

  if (type == "rank_table") {
    reject_unknown_fields(desc, {"type", "n", "rank"}, "rank_table");
    const int n = get_int(desc, "n", "rank_table");
    if (n < 0) bad("rank_table: n must be non-negative");
    check_size_guard("dense rank table", n, max_n);
    if (!desc.contains("rank") || !desc.at("rank").is_array()) bad("rank_table needs 'rank'");
    std::vector<int> table;
    for (const json& v : desc.at("rank")) {
      if (!v.is_number_integer()) bad("rank_table: entries must be integers");
      table.push_back(v.get<int>());
    }
    if (table.size() != num_subsets(n)) bad("rank_table: 'rank' must have 2^n entries");
    return from_rank_table(n, table);
  }
  if (type == "uniform") {
    reject_unknown_fields(desc, {"type", "r", "n"}, "uniform");
    const int n = get_int(desc, "n", "uniform");
    check_size_guard("dense rank table", n, max_n);
    return uniform_matroid(get_int(desc, "r", "uniform"), n);
  }
  if (type == "graphic") {
    reject_unknown_fields(desc, {"type", "vertices", "edges"}, "graphic");
    MultigraphSpec g;
    g.vertices = get_int(desc, "vertices", "graphic");
    if (!desc.contains("edges") || !desc.at("edges").is_array()) bad("graphic needs 'edges'");
    for (const json& e : desc.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        bad("graphic: each edge must be a pair [u, v]");
      g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    check_size_guard("dense rank table", static_cast<int>(g.edges.size()), max_n);
    return graphic_matroid(g);
  }
  if (type == "integer_matrix") {
    bad("integer_matrix descriptions are parsed by the caller");  // unreachable
  }
  bad("unknown description type '" + type + "'");
}

IntegerMatrixSpec parse_matrix(const json& desc) {
  reject_unknown_fields(desc, {"type", "matrix"}, "integer_matrix");
  if (!desc.contains("matrix") || !desc.at("matrix").is_array())
    bad("integer_matrix needs 'matrix'");
  IntegerMatrixSpec spec;
  for (const json& row : desc.at("matrix")) {
    if (!row.is_array()) bad("integer_matrix: rows must be arrays");
    std::vector<mpz_class> parsed;
    for (const json& v : row) parsed.push_back(get_big(v, "matrix"));
    spec.rows.push_back(std::move(parsed));
  }
  for (const auto& row : spec.rows)
    if (row.size() != spec.rows.front().size()) bad("integer_matrix: ragged rows");
  return spec;
}

}  // namespace

ParsedSpec parse_spec(const std::string& json_text, int max_n) {
  if (max_n > kEnumGuard)
    throw InputError("spec: max-n " + std::to_string(max_n) + " exceeds the hard ceiling " +
                     std::to_string(kEnumGuard));
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) bad("top level must be an object");
  reject_unknown_fields(root, {"description", "multiplicity"}, "spec");
  if (!root.contains("description")) bad("missing 'description'");

  const json& desc = root.at("description");
  std::string type = desc.is_object() && desc.contains("type") && desc.at("type").is_string()
                         ? desc.at("type").get<std::string>()
                         : std::string{};

  Matroid matroid(0, std::vector<int>{0});
  std::vector<mpz_class> from_matrix_mult;
  if (type == "integer_matrix") {
    IntegerMatrixSpec spec = parse_matrix(desc);
    check_size_guard("dense rank table", spec.col_count(), max_n);
    MultiplicityMatroid realized = from_integer_matrix(spec);
    matroid = realized.matroid();
    from_matrix_mult = realized.table();
  } else {
    matroid = parse_description(desc, max_n, type);
  }

  std::string mult_type = "trivial";
  if (root.contains("multiplicity")) {
    const json& mult = root.at("multiplicity");
    if (!mult.is_object() || !mult.contains("type")) bad("'multiplicity' needs a 'type'");
    mult_type = mult.at("type").get<std::string>();
    if (mult_type == "trivial") {
      reject_unknown_fields(mult, {"type"}, "multiplicity");
    } else if (mult_type == "table") {
      reject_unknown_fields(mult, {"type", "values"}, "multiplicity");
      if (!mult.contains("values") || !mult.at("values").is_array())
        bad("multiplicity table needs 'values'");
    } else if (mult_type == "from_matrix") {
      reject_unknown_fields(mult, {"type"}, "multiplicity");
      if (type != "integer_matrix")
        bad("'from_matrix' multiplicity requires an integer_matrix description");
    } else {
      bad("unknown multiplicity type '" + mult_type + "'");
    }
  }

  std::vector<mpz_class> values;
  if (mult_type == "table") {
    for (const json& v : root.at("multiplicity").at("values"))
      values.push_back(get_big(v, "multiplicity values"));
    if (values.size() != num_subsets(matroid.size()))
      bad("multiplicity table must have 2^n entries");
  } else if (mult_type == "from_matrix") {
    values = std::move(from_matrix_mult);
  } else {
    values.assign(num_subsets(matroid.size()), mpz_class{1});
  }

  ParsedSpec out{MultiplicityMatroid(std::move(matroid), std::move(values)), type, false};
  out.trivial_multiplicity = out.instance.is_trivial();
  return out;
}

ParsedSpec load_spec_file(const std::string& path, int max_n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str(), max_n);
}

std::string poly_to_json(const BivarPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : p.terms()) {
    ordered_json term;
    term["x"] = key.first;
    term["y"] = key.second;
    term["c"] = c.get_str();
    terms.push_back(std::move(term));
  }
  ordered_json root;
  root["terms"] = std::move(terms);
  return root.dump();
}

BivarPoly poly_from_json(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("polynomial: not valid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("terms") || !root.at("terms").is_array())
    throw InputError("polynomial: expected {\"terms\": [...]}");
  BivarPoly out;
  for (const json& term : root.at("terms")) {
    if (!term.is_object() || !term.contains("x") || !term.contains("y") || !term.contains("c"))
      throw InputError("polynomial: each term needs x, y, c");
    out.add_term(term.at("x").get<int>(), term.at("y").get<int>(),
                 get_big(term.at("c"), "terms"));
  }
  return out;
}

}  // namespace mtutte

#include "stratsym/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stratsym/errors.hpp"

namespace stratsym {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::pair<std::string, std::string>> significant_lines(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;  // (keyword, rest)
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto start = rest.find_first_not_of(" \t");
    rest = start == std::string::npos ? "" : rest.substr(start);
    out.emplace_back(keyword, rest);
  }
  return out;
}

ModelCatalogEntry parse_symplectic(const std::vector<std::pair<std::string, std::string>>& lines,
                                   const std::string& name) {
  std::string chart_kind;
  int dim = 0;
  std::vector<std::string> names;
  std::vector<std::tuple<int, int, int, Scalar>> constants;
  std::vector<std::tuple<int, int, Scalar>> omega_entries;

  for (const auto& [keyword, rest] : lines) {
    if (keyword == "kind") continue;
    if (keyword == "chart") {
      chart_kind = rest;
    } else if (keyword == "dim") {
      dim = std::stoi(rest);
    } else if (keyword == "names") {
      names = split_ws(rest);
    } else if (keyword == "struct") {
      auto parts = split_ws(rest);
      if (parts.size() != 4)
        throw DomainError(ErrorKind::ParseError, "struct line needs k i j value");
      constants.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]),
                             scalar_from_string(parts[3]));
    } else if (keyword == "omega") {
      auto parts = split_ws(rest);
      if (parts.size() != 3)
        throw DomainError(ErrorKind::ParseError, "omega line needs i j value");
      omega_entries.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]),
                                 scalar_from_string(parts[2]));
    } else {
      throw DomainError(ErrorKind::ParseError, "unknown symplectic model line: " + keyword);
    }
  }
  if (static_cast<int>(names.size()) != dim)
    throw DomainError(ErrorKind::InvalidModel, "names count does not match dim");

  ChartPtr chart;
  if (chart_kind == "coordinate") {
    if (!constants.empty())
      throw DomainError(ErrorKind::InvalidModel, "coordinate charts take no structure constants");
    chart = make_coordinate_chart(names);
  } else if (chart_kind == "ce") {
    chart = make_ce_chart(names, constants);
  } else {
    throw DomainError(ErrorKind::ParseError, "chart must be 'coordinate' or 'ce'");
  }

  MatQ omega(dim, dim);
  for (const auto& [i, j, value] : omega_entries) {
    if (i < 1 || j < 1 || i > dim || j > dim || i == j)
      throw DomainError(ErrorKind::InvalidModel, "omega entry index out of range");
    omega.at(i - 1, j - 1) = value;
    omega.at(j - 1, i - 1) = -value;
  }

  ModelCatalogEntry entry;
  entry.name = name;
  entry.symplectic = SymplecticModel(chart, omega);
  return entry;
}

ModelCatalogEntry parse_poisson(const std::vector<std::pair<std::string, std::string>>& lines,
                                const std::string& name) {
  std::vector<std::string> generators, priority;
  std::vector<int> weights;
  std::vector<std::string> relation_texts;
  std::vector<std::tuple<std::string, std::string, std::string>> brackets;

  for (const auto& [keyword, rest] : lines) {
    if (keyword == "kind") continue;
    if (keyword == "generators") {
      generators = split_ws(rest);
    } else if (keyword == "weights") {
      for (const auto& w : split_ws(rest)) weights.push_back(std::stoi(w));
    } else if (keyword == "order") {
      priority = split_ws(rest);
    } else if (keyword == "relation") {
      relation_texts.push_back(rest);
    } else if (keyword == "bracket") {
      auto parts = split_ws(rest);
      if (parts.size() < 3)
        throw DomainError(ErrorKind::ParseError, "bracket line needs g1 g2 poly");
      std::string poly_text;
      for (std::size_t i = 2; i < parts.size(); ++i) poly_text += parts[i] + " ";
      brackets.emplace_back(parts[0], parts[1], poly_text);
    } else {
      throw DomainError(ErrorKind::ParseError, "unknown poisson model line: " + keyword);
    }
  }
  if (generators.empty())
    throw DomainError(ErrorKind::InvalidModel, "poisson model needs generators");

  std::vector<Poly> relations;
  for (const auto& t : relation_texts) relations.push_back(Poly::parse(t, generators));
  AlgebraPresentation pres(generators, relations, weights, priority);

  auto index_of = [&](const std::string& g) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == g) return static_cast<int>(i);
    throw DomainError(ErrorKind::UnknownVariable, "bracket names unknown generator '" + g + "'");
  };
  std::map<std::pair<int, int>, Poly> table;
  for (const auto& [g1, g2, poly_text] : brackets) {
    int i = index_of(g1), j = index_of(g2);
    Poly value = Poly::parse(poly_text, generators);
    if (i < j)
      table[{i, j}] = value;
    else
      table[{j, i}] = -value;
  }

  ModelCatalogEntry entry;
  entry.name = name;
  entry.poisson = PoissonPresentation(std::move(pres), std::move(table));
  return entry;
}

ModelCatalogEntry parse_stratified(const std::vector<std::pair<std::string, std::string>>& lines,
                                   const std::string& name) {
  std::vector<StratumRecord> strata;
  std::vector<FrontierPair> frontier;
  bool compact = false;
  SmoothPresentation pres;
  std::vector<std::string> samplecoords;

  for (const auto& [keyword, rest] : lines) {
    if (keyword == "kind") continue;
    if (keyword == "compact") {
      compact = rest == "true";
    } else if (keyword == "stratum") {
      auto parts = split_ws(rest);
      if (parts.size() != 3)
        throw DomainError(ErrorKind::ParseError, "stratum line needs id dim regular|singular");
      strata.push_back({parts[0], std::stoi(parts[1]), parts[2] == "regular"});
    } else if (keyword == "order") {
      auto parts = split_ws(rest);
      if (parts.size() < 3)
        throw DomainError(ErrorKind::ParseError, "order line needs lower upper witness...");
      std::string witness = rest;
      witness = witness.substr(witness.find(parts[1]) + parts[1].size());
      auto start = witness.find_first_not_of(" \t");
      witness = start == std::string::npos ? "" : witness.substr(start);
      frontier.push_back({parts[0], parts[1], witness});
    } else if (keyword == "presentation") {
      auto parts = split_ws(rest);
      if (parts.empty())
        throw DomainError(ErrorKind::ParseError, "presentation line needs a kind");
      if (parts[0] == "embedded")
        pres.kind = PresentationKind::Embedded;
      else if (parts[0] == "quotient")
        pres.kind = PresentationKind::Quotient;
      else if (parts[0] == "resolvable")
        pres.kind = PresentationKind::Resolvable;
      else
        throw DomainError(ErrorKind::ParseError, "unknown presentation kind " + parts[0]);
      pres.description = rest.substr(parts[0].size());
      auto start = pres.description.find_first_not_of(" \t");
      pres.description = start == std::string::npos ? "" : pres.description.substr(start);
    } else if (keyword == "samplecoords") {
      samplecoords = split_ws(rest);
    } else {
      throw DomainError(ErrorKind::ParseError, "unknown stratified model line: " + keyword);
    }
  }

  ModelCatalogEntry entry;
  entry.name = name;
  entry.stratified =
      StratifiedModel::make(strata, frontier, compact, pres, samplecoords);
  return entry;
}

}  // namespace

ModelCatalogEntry load_model_text(const std::string& text, const std::string& name) {
  auto lines = significant_lines(text);
  if (lines.empty() || lines.front().first != "kind")
    throw DomainError(ErrorKind::ParseError, "model file must start with a kind line");

  // A file may carry several sections (e.g. a Poisson presentation plus
  // the stratified poset); each starts with its own kind line.
  std::vector<std::vector<std::pair<std::string, std::string>>> sections;
  for (const auto& line : lines) {
    if (line.first == "kind") sections.emplace_back();
    sections.back().push_back(line);
  }

  ModelCatalogEntry entry;
  entry.name = name;
  for (const auto& section : sections) {
    const std::string& kind = section.front().second;
    ModelCatalogEntry part;
    if (kind == "symplectic")
      part = parse_symplectic(section, name);
    else if (kind == "poisson")
      part = parse_poisson(section, name);
    else if (kind == "stratified")
      part = parse_stratified(section, name);
    else
      throw DomainError(ErrorKind::ParseError, "unknown model kind '" + kind + "'");
    if (part.symplectic) entry.symplectic = std::move(part.symplectic);
    if (part.poisson) entry.poisson = std::move(part.poisson);
    if (part.stratified) entry.stratified = std::move(part.stratified);
  }
  return entry;
}

ModelCatalogEntry load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError(ErrorKind::InvalidModel, "cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_model_text(buffer.str(), path);
}

ModelCatalogEntry load_model(const std::string& source) {
  try {
    return load_builtin(source);
  } catch (const DomainError& e) {
    if (e.kind() != ErrorKind::UnknownModel) throw;
  }
  return load_model_file(source);
}

std::string symplectic_model_text(const SymplecticModel& model) {
  std::ostringstream os;
  os << "kind symplectic\n";
  os << "chart "
     << (model.chart()->kind() == ChartKind::Coordinate ? "coordinate" : "ce") << "\n";
  os << "dim " << model.dimension() << "\n";
  os << "names";
  for (const auto& n : model.chart()->names()) os << " " << n;
  os << "\n";
  for (const auto& [key, value] : model.chart()->structure_constants())
    os << "struct " << std::get<0>(key) << " " << std::get<1>(key) << " "
       << std::get<2>(key) << " " << scalar_to_string(value) << "\n";
  for (int i = 0; i < model.dimension(); ++i)
    for (int j = i + 1; j < model.dimension(); ++j)
      if (model.omega_matrix().at(i, j) != 0)
        os << "omega " << i + 1 << " " << j + 1 << " "
           << scalar_to_string(model.omega_matrix().at(i, j)) << "\n";
  return os.str();
}

std::string poisson_text(const PoissonPresentation& pres) {
  std::ostringstream os;
  const auto& p = pres.presentation();
  os << "kind poisson\n";
  os << "generators";
  for (const auto& g : p.generators()) os << " " << g;
  os << "\n";
  os << "weights";
  for (int w : p.weights()) os << " " << w;
  os << "\n";
  os << "order";
  for (const auto& g : p.order_priority_names()) os << " " << g;
  os << "\n";
  for (const auto& rel : p.relations()) os << "relation " << rel.str() << "\n";
  int n = static_cast<int>(p.generators().size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly b = pres.generator_bracket(i, j);
      if (!b.is_zero())
        os << "bracket " << p.generators()[i] << " " << p.generators()[j] << " " << b.str()
           << "\n";
    }
  return os.str();
}

std::string stratified_text(const StratifiedModel& model) {
  std::ostringstream os;
  os << "kind stratified\n";
  os << "compact " << (model.is_compact() ? "true" : "false") << "\n";
  for (const auto& s : model.strata())
    os << "stratum " << s.id << " " << s.dimension << " "
       << (s.is_regular ? "regular" : "singular") << "\n";
  for (const auto& f : model.frontier())
    os << "order " << f.lower << " " << f.upper << " " << f.witness << "\n";
  switch (model.presentation().kind) {
    case PresentationKind::Embedded: os << "presentation embedded "; break;
    case PresentationKind::Quotient: os << "presentation quotient "; break;
    case PresentationKind::Resolvable: os << "presentation resolvable "; break;
  }
  os << model.presentation().description << "\n";
  if (!model.sample_coordinates().empty()) {
    os << "samplecoords";
    for (const auto& c : model.sample_coordinates()) os << " " << c;
    os << "\n";
  }
  return os.str();
}

std::string export_model_text(const ModelCatalogEntry& entry) {
  std::ostringstream os;
  if (entry.symplectic) os << symplectic_model_text(*entry.symplectic);
  if (entry.poisson) os << poisson_text(*entry.poisson);
  if (entry.stratified) os << stratified_text(*entry.stratified);
  return os.str();
}

// ---------------------------------------------------------------------------
// Reports

std::string to_json(const HomologyReport& report) {
  json j;
  j["schema_version"] = 1;
  j["command"] = "homology";
  j["model"] = report.model;
  if (report.total_degree) j["total_degree"] = *report.total_degree;
  j["betti_d"] = report.betti_d;
  j["betti_delta"] = report.betti_delta;
  json duality = json::array();
  for (const auto& [k, ranks] : report.duality_ranks)
    duality.push_back({{"k", k},
                       {"rank_delta", ranks.first},
                       {"rank_d_dual", ranks.second},
                       {"match", ranks.first == ranks.second}});
  j["duality"] = duality;
  j["duality_holds"] = report.duality_holds;
  json witnesses = json::object();
  for (const auto& [k, forms] : report.witnesses)
    witnesses[std::to_string(k)] = forms;
  j["witnesses"] = witnesses;
  return j.dump(2) + "\n";
}

std::string to_csv(const HomologyReport& report) {
  std::ostringstream os;
  os << "degree,rank_d,rank_delta,duality_match\n";
  for (std::size_t k = 0; k < report.betti_d.size(); ++k) {
    os << k << "," << report.betti_d[k] << "," << report.betti_delta[k];
    auto it = report.duality_ranks.find(static_cast<int>(k));
    if (it != report.duality_ranks.end())
      os << "," << (it->second.first == it->second.second ? "true" : "false");
    else
      os << ",";
    os << "\n";
  }
  return os.str();
}

std::string to_json(const LefschetzReport& report) {
  json j;
  j["schema_version"] = 1;
  j["command"] = "lefschetz";
  j["model"] = report.model;
  json hl = json::array();
  for (const auto& [k, ok] : report.hard_lefschetz) hl.push_back({{"k", k}, {"surjective", ok}});
  j["hard_lefschetz"] = hl;
  j["hard_lefschetz_all"] = report.hard_lefschetz_all;
  json hr = json::object();
  for (const auto& [deg, found] : report.harmonic_found) hr[std::to_string(deg)] = found;
  j["harmonic_representatives"] = hr;
  j["harmonic_all"] = report.harmonic_all;
  j["equivalence_consistent"] = report.equivalence_consistent;
  json cav = json::object();
  for (const auto& [deg, ok] : report.cavalcanti) cav[std::to_string(deg)] = ok;
  j["cavalcanti"] = cav;
  return j.dump(2) + "\n";
}

std::string to_csv(const LefschetzReport& report) {
  std::ostringstream os;
  os << "k,hard_lefschetz\n";
  for (const auto& [k, ok] : report.hard_lefschetz)
    os << k << "," << (ok ? "true" : "false") << "\n";
  os << "degree,cavalcanti\n";
  for (const auto& [deg, ok] : report.cavalcanti)
    os << deg << "," << (ok ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace stratsym

#include "gradedlc/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gradedlc {

using nlohmann::json;

CMonomialIdeal ideal_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("ideal must be a JSON object");
    const json& dj = j.at("d");
    if (!dj.is_number_integer() || dj.get<long long>() < 1) throw InputError("\"d\" must be a positive integer");
    const auto d = dj.get<std::size_t>();
    const std::string base_name = j.value("base", std::string("field"));
    BaseRing base;
    if (base_name == "field")
      base = BaseRing::Field;
    else if (base_name == "graded_pid")
      base = BaseRing::GradedPID;
    else
      throw InputError("\"base\" must be \"field\" or \"graded_pid\", got \"" + base_name + "\"");
    const json& gj = j.at("generators");
    if (!gj.is_array() || gj.empty()) throw InputError("\"generators\" must be a nonempty array");
    std::vector<CMonomial> gens;
    for (const auto& g : gj) {
      if (!g.is_object()) throw InputError("each generator must be an object");
      CMonomial m;
      if (g.contains("y")) {
        if (!g["y"].is_number_integer() || g["y"].get<long long>() < 0) throw InputError("\"y\" must be a nonnegative integer");
        m.y_pow = g["y"].get<std::uint32_t>();
      }
      const json& xj = g.at("x");
      if (!xj.is_array() || xj.size() != d) throw InputError("\"x\" must be an array of " + std::to_string(d) + " exponents");
      for (const auto& e : xj) {
        if (!e.is_number_integer() || e.get<long long>() < 0) throw InputError("exponents must be nonnegative integers");
        m.x_exps.push_back(e.get<std::uint32_t>());
      }
      gens.push_back(std::move(m));
    }
    return CMonomialIdeal(d, base, std::move(gens));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ideal: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

CMonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ideal file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("ideal file " + path + " is not valid JSON: " + e.what());
  }
  return ideal_from_json(j);
}

json to_json(const CMonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back({{"y", g.y_pow}, {"x", g.x_exps}});
  return {{"d", ideal.d()}, {"base", to_string(ideal.base())}, {"generators", gens}};
}

std::string ideal_hash(const CMonomialIdeal& ideal) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_json(ideal).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

MultiDegree parse_degree(std::string_view text) {
  std::string s(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.erase(0, 1);
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
  std::vector<std::int64_t> coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      coords.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw InputError("bad degree coordinate '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw InputError("bad degree coordinate '" + item + "'");
  }
  if (coords.empty()) throw InputError("empty degree");
  return MultiDegree(std::move(coords));
}

json to_json(const MultiDegree& u) { return json(std::vector<std::int64_t>(u.coords().begin(), u.coords().end())); }

json to_json(const CheckReport& r) {
  return {{"name", r.name}, {"status", r.status()}, {"checked", r.checked}, {"witness", r.witness}};
}

json to_json(const BlockTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"membership", e.pattern.membership_string()}, {"corner", to_json(e.pattern.corner)}, {"dim", e.dim}});
  json mismatches = json::array();
  for (const auto& u : t.mismatches) mismatches.push_back(to_json(u));
  return {{"ideal", t.ideal_id},
          {"i", t.i},
          {"radius", t.radius},
          {"blocks", entries},
          {"samples_checked", t.sample_log.size()},
          {"mismatches", mismatches},
          {"consistent", t.consistent()}};
}

std::string to_text(const BlockTable& t) {
  std::size_t width = 6;
  for (const auto& e : t.entries) width = std::max(width, e.pattern.corner.to_string().size());
  std::ostringstream os;
  os << "H^" << t.i << " of " << t.ideal_id << '\n';
  os << std::left << std::setw(static_cast<int>(std::max<std::size_t>(10, t.entries.empty() ? 0 : t.entries[0].pattern.size()) + 2))
     << "membership" << std::setw(static_cast<int>(width + 2)) << "corner" << "dim\n";
  for (const auto& e : t.entries)
    os << std::setw(static_cast<int>(std::max<std::size_t>(10, e.pattern.size()) + 2)) << e.pattern.membership_string()
       << std::setw(static_cast<int>(width + 2)) << e.pattern.corner.to_string() << e.dim << '\n';
  os << "samples checked: " << t.sample_log.size() << " (radius " << t.radius << "), mismatches: " << t.mismatches.size()
     << '\n';
  return os.str();
}

json to_json(const StructureTriple& t) { return {{"s", t.s}, {"v", t.v}, {"r", t.r}}; }

json to_json(const BassTable& b) {
  return {{"mu0_Y", b.mu0_maximal}, {"mu1_Y", b.mu1_maximal}, {"mu0_0", b.mu0_zero}, {"mu1_0", b.mu1_zero}};
}

json to_json(const YProfile& p) {
  json dims = json::object();
  for (const auto& [j, dim] : p.dims) dims[std::to_string(j)] = dim;
  json checks = json::array();
  for (const auto& c : p.stability_checks)
    checks.push_back({{"j", c.j}, {"map", c.multiply ? "Y" : "dY"}, {"bijective", c.bijective}});
  return {{"u", to_json(p.u)},       {"dims", dims},   {"delta_minus", p.delta_minus},
          {"delta_plus", p.delta_plus}, {"rho", p.rho}, {"stability_checks", checks}};
}

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

json to_json(const BlockStructure& b) {
  return {{"membership", b.pattern.membership_string()},
          {"corner", to_json(b.pattern.corner)},
          {"s", b.triple.s},
          {"v", b.triple.v},
          {"r", b.triple.r},
          {"bass", to_json(b.bass)},
          {"injdim", optional_int(b.bass.injdim)},
          {"dim_supp", optional_int(b.bass.dim_supp)},
          {"profile", to_json(b.profile)}};
}

std::string structure_csv(const std::vector<BlockStructure>& blocks) {
  std::ostringstream os;
  os << "membership,corner,s,v,r,mu0_Y,mu1_Y,mu0_0,mu1_0,injdim,dim_supp\n";
  for (const auto& b : blocks) {
    std::string corner = b.pattern.corner.to_string();
    for (char& c : corner)
      if (c == ',') c = ' ';
    os << b.pattern.membership_string() << ',' << corner << ',' << b.triple.s << ',' << b.triple.v << ',' << b.triple.r
       << ',' << b.bass.mu0_maximal << ',' << b.bass.mu1_maximal << ',' << b.bass.mu0_zero << ',' << b.bass.mu1_zero
       << ',' << optional_text(b.bass.injdim) << ',' << optional_text(b.bass.dim_supp) << '\n';
  }
  return os.str();
}

std::string structure_text(const std::vector<BlockStructure>& blocks) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "membership" << std::setw(16) << "corner" << std::setw(10) << "(s,v,r)"
     << "injdim  dim_supp\n";
  for (const auto& b : blocks)
    os << std::setw(12) << b.pattern.membership_string() << std::setw(16) << b.pattern.corner.to_string()
       << std::setw(10) << b.triple.to_string() << std::setw(8) << optional_text(b.bass.injdim)
       << optional_text(b.bass.dim_supp) << '\n';
  return os.str();
}

}  // namespace gradedlc

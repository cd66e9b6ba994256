#include "mfc/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mfc/errors.hpp"

namespace mfc {
namespace {

using nlohmann::json;

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw InvalidInput("malformed JSON in " + what);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FusionRing ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("N"))
    throw InvalidInput("ring JSON must be an object with an \"N\" tensor");
  const json& jn = j["N"];
  if (!jn.is_array() || jn.empty())
    throw InvalidInput("ring field \"N\" must be a nonempty array");
  const int rank = static_cast<int>(jn.size());
  if (j.contains("rank") &&
      (!j["rank"].is_number_integer() || j["rank"].get<int>() != rank))
    throw InvalidInput("ring field \"rank\" disagrees with the size of \"N\"");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() ||
        static_cast<int>(j["labels"].size()) != rank)
      throw InvalidInput("ring field \"labels\" must list one name per object");
    for (const json& l : j["labels"]) {
      if (!l.is_string())
        throw InvalidInput("ring labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < rank; ++i) labels.push_back("b" + std::to_string(i));
  }

  FusionTensor N(rank, std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0)));
  for (int i = 0; i < rank; ++i) {
    if (!jn[i].is_array() || static_cast<int>(jn[i].size()) != rank)
      throw InvalidInput("ring tensor \"N\" must be rank x rank x rank");
    for (int k = 0; k < rank; ++k) {
      if (!jn[i][k].is_array() || static_cast<int>(jn[i][k].size()) != rank)
        throw InvalidInput("ring tensor \"N\" must be rank x rank x rank");
      for (int m = 0; m < rank; ++m) {
        const json& cell = jn[i][k][m];
        if (!cell.is_number_integer() || cell.get<long long>() < 0)
          throw InvalidInput("fusion multiplicities must be integers >= 0");
        N[i][k][m] = cell.get<int>();
      }
    }
  }
  return make_fusion_ring(std::move(labels), std::move(N));
}

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>(), 1);
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer())
    return Rational(j[0].get<long long>(), j[1].get<long long>());
  throw InvalidInput(what + " must be [numerator, denominator] pairs");
}

}  // namespace

FusionRing ring_from_json_text(const std::string& text) {
  return ring_from_json(parse_text(text, "fusion ring"));
}

FusionRing load_ring(const std::string& path) {
  return ring_from_json_text(read_file(path));
}

ModularData modular_from_json_text(const std::string& text,
                                   const std::string& base_dir) {
  const json j = parse_text(text, "modular data");
  if (!j.is_object() || !j.contains("ring") || !j.contains("d") ||
      !j.contains("h"))
    throw InvalidInput(
        "modular data JSON needs fields \"ring\", \"d\", and \"h\"");

  FusionRing ring;
  if (j["ring"].is_string()) {
    std::filesystem::path p(j["ring"].get<std::string>());
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    ring = load_ring(p.string());
  } else {
    ring = ring_from_json(j["ring"]);
  }

  if (!j["d"].is_array() || static_cast<int>(j["d"].size()) != ring.rank)
    throw InvalidInput("field \"d\" must list one quantum dimension per object");
  std::vector<double> d;
  for (const json& v : j["d"]) {
    if (!v.is_number())
      throw InvalidInput("quantum dimensions must be numbers");
    d.push_back(v.get<double>());
  }

  if (!j["h"].is_array() || static_cast<int>(j["h"].size()) != ring.rank)
    throw InvalidInput("field \"h\" must list one conformal dimension per object");
  std::vector<Rational> h;
  for (const json& v : j["h"])
    h.push_back(rational_from_json(v, "conformal dimensions"));

  int D_sign = +1;
  if (j.contains("D_sign")) {
    if (!j["D_sign"].is_number_integer() ||
        (j["D_sign"].get<int>() != 1 && j["D_sign"].get<int>() != -1))
      throw InvalidInput("field \"D_sign\" must be +1 or -1");
    D_sign = j["D_sign"].get<int>();
  }
  return build_modular(ring, d, h, D_sign);
}

ModularData load_modular(const std::string& path) {
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return modular_from_json_text(read_file(path), dir);
}

std::string ring_to_json(const FusionRing& ring) {
  json j;
  j["rank"] = ring.rank;
  j["labels"] = ring.labels;
  j["N"] = ring.N;
  return j.dump(2) + "\n";
}

std::string modular_to_json(const ModularData& md) {
  json j;
  j["ring"] = json::parse(ring_to_json(md.ring));
  j["d"] = md.d;
  json h = json::array();
  for (const Rational& r : md.h) h.push_back(json::array({r.num(), r.den()}));
  j["h"] = std::move(h);
  j["D_sign"] = md.D_sign;
  return j.dump(2) + "\n";
}

}  // namespace mfc

#include "kal/json_io.hpp"

#include <fstream>

#include <zlib.h>

#include "kal/error.hpp"

namespace kal {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string())
    throw ParseError("expected rational string, got: " + j.dump());
  return Rational::parse(j.get<std::string>());
}

Json to_json(const KnapsackInstance& inst) {
  Json j;
  j["n"] = inst.n();
  Json weights = Json::array();
  for (const auto& w : inst.weights) weights.push_back(to_json(w));
  j["weights"] = std::move(weights);
  j["capacity"] = to_json(inst.capacity);
  return j;
}

KnapsackInstance instance_from_json(const Json& j) {
  KnapsackInstance inst;
  const auto n = j.at("n").get<std::size_t>();
  for (const auto& w : j.at("weights")) inst.weights.push_back(rational_from_json(w));
  if (inst.weights.size() != n)
    throw ParseError("instance: n does not match weights length");
  inst.capacity = rational_from_json(j.at("capacity"));
  return inst;
}

namespace {

Json rows_to_json(const std::vector<LinearRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json jr;
    Json coeffs = Json::array();
    for (const auto& c : r.coeffs) coeffs.push_back(to_json(c));
    jr["coeffs"] = std::move(coeffs);
    jr["rhs"] = to_json(r.rhs);
    out.push_back(std::move(jr));
  }
  return out;
}

std::vector<LinearRow> rows_from_json(const Json& j, std::size_t n_vars) {
  std::vector<LinearRow> rows;
  for (const auto& jr : j) {
    LinearRow r;
    for (const auto& c : jr.at("coeffs")) r.coeffs.push_back(rational_from_json(c));
    if (r.coeffs.size() != n_vars) throw ParseError("system: row arity does not match n");
    r.rhs = rational_from_json(jr.at("rhs"));
    rows.push_back(std::move(r));
  }
  return rows;
}

} // namespace

Json to_json(const LinearSystem& sys) {
  Json j;
  j["n"] = sys.n_vars;
  j["rows"] = rows_to_json(sys.rows);
  return j;
}

LinearSystem linear_system_from_json(const Json& j) {
  LinearSystem sys;
  sys.n_vars = j.at("n").get<std::size_t>();
  sys.rows = rows_from_json(j.at("rows"), sys.n_vars);
  return sys;
}

Json to_json(const DownMonotoneSystem& sys) {
  Json j;
  j["n"] = sys.n_vars;
  j["rows"] = rows_to_json(sys.rows);
  return j;
}

DownMonotoneSystem system_from_json(const Json& j) {
  DownMonotoneSystem sys;
  sys.n_vars = j.at("n").get<std::size_t>();
  sys.rows = rows_from_json(j.at("rows"), sys.n_vars);
  return sys;
}

Json to_json(const SetSystem& sys) {
  Json j;
  j["p"] = sys.p;
  j["d"] = sys.d;
  Json sets = Json::array();
  for (const auto& s : sys.sets) {
    Json elems = Json::array();
    for (auto e : s.elements) elems.push_back(e);
    sets.push_back(std::move(elems));
  }
  j["sets"] = std::move(sets);
  return j;
}

SetSystem set_system_from_json(const Json& j) {
  SetSystem sys;
  sys.p = j.at("p").get<std::uint64_t>();
  sys.d = j.at("d").get<int>();
  for (const auto& js : j.at("sets")) {
    PolySet s;
    for (const auto& e : js) s.elements.push_back(e.get<std::uint64_t>());
    sys.sets.push_back(std::move(s)); // coeffs are not part of the wire format
  }
  return sys;
}

Json to_json(const PairPolicy& policy) {
  Json j;
  if (policy.mode == PairPolicy::Mode::All) {
    j["mode"] = "all";
  } else {
    j["mode"] = "sample";
    j["seed"] = policy.seed;
    j["count"] = policy.count;
  }
  return j;
}

PairPolicy pair_policy_from_json(const Json& j) {
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "all") return PairPolicy::all();
  if (mode == "sample")
    return PairPolicy::sample(j.at("seed").get<std::uint64_t>(),
                              j.at("count").get<std::uint64_t>());
  throw ParseError("unknown pair policy mode: " + mode);
}

std::string read_text_file(const std::string& path) {
  // gzread passes uncompressed data through untouched, so one path covers
  // both plain and .gz files.
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open " + path);
  std::string out;
  char buf[1 << 16];
  int got;
  while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
  const bool bad = got < 0;
  gzclose(f);
  if (bad) throw IoError("read error on " + path);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  if (path.size() > 3 && path.substr(path.size() - 3) == ".gz") {
    gzFile f = gzopen(path.c_str(), "wb");
    if (f == nullptr) throw IoError("cannot open " + path + " for writing");
    std::size_t off = 0;
    while (off < content.size()) {
      const auto chunk = static_cast<unsigned>(std::min<std::size_t>(content.size() - off, 1u << 24));
      if (gzwrite(f, content.data() + off, chunk) != static_cast<int>(chunk)) {
        gzclose(f);
        throw IoError("write error on " + path);
      }
      off += chunk;
    }
    gzclose(f);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw IoError("write error on " + path);
}

Json load_json(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON in " + path);
  return j;
}

void save_json(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

} // namespace kal

#include "sclat/io.hpp"

#include <fstream>
#include <sstream>

namespace sclat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ingestion, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) bad(what + " is out of range");
  return static_cast<int>(v);
}

std::string text(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get<std::string>();
}

void check_format(const Json& j) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find("format");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != format_tag))
    bad("unsupported format " + it->dump() + ", expected \"" + std::string(format_tag) + "\"");
}

std::map<std::string, int> name_map(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  std::map<std::string, int> out;
  for (const auto& [name, v] : j.items()) out[name] = integer(v, std::string(what) + " of " + name);
  return out;
}

mpq_class rational(const Json& j) {
  std::string s;
  if (j.is_number_integer()) s = std::to_string(j.get<long long>());
  else if (j.is_string()) s = j.get<std::string>();
  else bad("coordinates are integers or \"p/q\" strings");
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) bad("bad rational \"" + s + "\"");
  if (s.find('/') != std::string::npos && q.get_den() == 0) bad("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

Json weights_json(const AscBase& base) {
  Json asc = Json::object();
  for (int i = 0; i < base.base().size(); ++i)
    if (base.weight(i) != 0) asc[base.base().poset().name(i)] = base.weight(i);
  return asc;
}

}  // namespace

Json to_json(const PosetPresentation& p) {
  const auto c = p.canonical();
  Json covers = Json::array();
  for (const auto& [lo, hi] : c.covers) covers.push_back({lo, hi});
  return Json{{"elements", c.elements}, {"covers", covers}};
}

PosetPresentation poset_from_json(const Json& j) {
  PosetPresentation p;
  const Json& elems = field(j, "elements");
  if (!elems.is_array()) bad("\"elements\" must be an array");
  for (const auto& e : elems) p.elements.push_back(text(e, "element name"));
  const Json& covers = field(j, "covers");
  if (!covers.is_array()) bad("\"covers\" must be an array");
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2) bad("each cover is a [lower, upper] pair");
    p.covers.emplace_back(text(c[0], "cover end"), text(c[1], "cover end"));
  }
  return p;
}

Json lattice_to_json(const ScaledBase& base) {
  Json labels = Json::object();
  for (int i = 0; i < base.size(); ++i) labels[base.poset().name(i)] = base.label(i);
  return Json{{"format", format_tag}, {"d", base.d()}, {"poset", to_json(base.poset().presentation())}, {"dimlabel", labels}};
}

Json lattice_to_json(const AscBase& base) {
  Json j = lattice_to_json(base.base());
  j["asc"] = weights_json(base);
  return j;
}

LatticeFile lattice_from_json(const Json& j) {
  check_format(j);
  const int d = integer(field(j, "d"), "\"d\"");
  if (d < 0) bad("\"d\" must be non-negative");
  const auto p = poset_from_json(field(j, "poset"));
  LatticeFile out{ScaledBase::from_presentation(p, d, name_map(field(j, "dimlabel"), "dimlabel")), std::nullopt};
  if (j.contains("asc")) {
    const auto weights = name_map(j["asc"], "asc");
    for (const auto& [name, w] : weights)
      if (!out.base.poset().index_of(name)) fail(ErrorKind::ill_formed_input, "unknown identifier '" + name + "'");
    out.asc = AscBase::from_names(out.base, weights);
  }
  return out;
}

Json element_to_json(const ScaledBase& base, PointSet downset) {
  std::vector<std::string> names;
  for_each_point(base.poset().maximal(downset), [&](int i) { names.push_back(base.poset().name(i)); });
  std::sort(names.begin(), names.end());
  return names;
}

PointSet element_from_json(const ScaledBase& base, const Json& j) {
  if (!j.is_array()) bad("an element is an array of point names");
  PointSet s = 0;
  for (const auto& n : j) {
    const auto name = text(n, "point name");
    const auto i = base.poset().index_of(name);
    if (!i) fail(ErrorKind::ill_formed_input, "unknown identifier '" + name + "'");
    s |= point_bit(*i);
  }
  return base.poset().down_closure(s);
}

Json signature_to_json(const ScaledBase& base, const Signature& s) {
  return Json{{"g", base.poset().name(s.g)},
              {"H", Json::array({element_to_json(base, s.h1), element_to_json(base, s.h2)})},
              {"q", s.q}};
}

Signature signature_from_json(const ScaledBase& base, const Json& j) {
  Signature s;
  const auto g = text(field(j, "g"), "\"g\"");
  const auto gi = base.poset().index_of(g);
  if (!gi) fail(ErrorKind::ill_formed_input, "unknown identifier '" + g + "'");
  s.g = *gi;
  const Json& h = field(j, "H");
  if (!h.is_array() || h.size() != 2) bad("\"H\" is a pair of elements");
  s.h1 = element_from_json(base, h[0]);
  s.h2 = element_from_json(base, h[1]);
  s.q = integer(field(j, "q"), "\"q\"");
  return s;
}

Json signature_to_json(const AscBase& base, const AscSignature& s) {
  Json j = signature_to_json(base.base(), s.sc);
  j["K"] = {s.k1, s.k2};
  return j;
}

AscSignature asc_signature_from_json(const AscBase& base, const Json& j) {
  AscSignature s;
  s.sc = signature_from_json(base.base(), j);
  const Json& k = field(j, "K");
  if (!k.is_array() || k.size() != 2) bad("\"K\" is a pair of counts");
  s.k1 = integer(k[0], "k1");
  s.k2 = integer(k[1], "k2");
  return s;
}

Json sls_to_json(const LinearSet& s) {
  Json varieties = Json::array();
  for (const Flat& f : s.flats()) {
    Json axes = Json::array();
    Json point = Json::object();
    for (int j = 0; j < f.ambient(); ++j) {
      if (f.axis[j]) axes.push_back(j + 1);
      else point[std::to_string(j + 1)] = f.point[j].get_str();
    }
    varieties.push_back(Json{{"axes", axes}, {"basepoint", point}});
  }
  return Json{{"format", format_tag}, {"ambient", s.ambient()}, {"varieties", varieties}};
}

LinearSet sls_from_json(const Json& j) {
  check_format(j);
  const int m = integer(field(j, "ambient"), "\"ambient\"");
  if (m < 1 || m > 4096) bad("\"ambient\" must be between 1 and 4096");
  const Json& vs = field(j, "varieties");
  if (!vs.is_array()) bad("\"varieties\" must be an array");
  std::vector<Flat> flats;
  for (const auto& v : vs) {
    std::vector<char> axis(m, 0);
    std::vector<mpq_class> point(m, 0);
    const Json& axes = field(v, "axes");
    if (!axes.is_array()) bad("\"axes\" must be an array");
    for (const auto& a : axes) {
      const int k = integer(a, "axis");
      if (k < 1 || k > m) bad("axis " + std::to_string(k) + " is outside 1.." + std::to_string(m));
      axis[k - 1] = 1;
    }
    const Json& base = field(v, "basepoint");
    if (!base.is_object()) bad("\"basepoint\" must be an object");
    for (const auto& [key, value] : base.items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) k = 0;
      } catch (const std::exception&) {
        k = 0;
      }
      if (k < 1 || k > m) bad("basepoint coordinate \"" + key + "\" is outside 1.." + std::to_string(m));
      if (axis[k - 1]) bad("basepoint fixes coordinate " + key + ", which is a free axis");
      point[k - 1] = rational(value);
    }
    flats.emplace_back(std::move(axis), std::move(point));
  }
  return LinearSet(m, std::move(flats));
}

Json representation_to_json(const ScaledBase& base, const Representation& r) {
  Json images = Json::array();
  const auto elems = base.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    images.push_back(Json{{"element", element_to_json(base, elems[i])}, {"set", sls_to_json(r.element_images[i])}});
  return Json{{"format", format_tag}, {"lattice", lattice_to_json(base)}, {"images", images}};
}

Json representation_to_json(const AscBase& base, const Representation& r) {
  Json j = representation_to_json(base.base(), r);
  j["lattice"]["asc"] = weights_json(base);
  return j;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::argument, "cannot write " + path);
  out << dump(j);
  if (!out) fail(ErrorKind::argument, "write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sclat::io

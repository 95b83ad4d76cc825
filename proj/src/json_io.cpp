#include "brouwerlab/json_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "brouwerlab/error.hpp"
#include "brouwerlab/freedist.hpp"

namespace brouwerlab {

namespace {

constexpr std::string_view kCanned = "canned:";

bool is_canned(const std::string& s) { return s.rfind(kCanned, 0) == 0; }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::BadInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("field '") + key + "': " + e.what());
  }
}

std::size_t parse_param(const std::string& text, const std::string& name) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close != text.size() - 1 || text.substr(0, open) != name)
    throw Error(ErrorKind::UnknownName, "malformed '" + text + "'");
  try {
    return std::stoul(text.substr(open + 1, close - open - 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::UnknownName, "malformed parameter in '" + text + "'");
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed JSON: ") + e.what(),
                {static_cast<std::int64_t>(e.byte)});
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write '" + path + "'");
  out << text;
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["size"] = p.size();
  j["labels"] = p.labels();
  Json pairs = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (i != k && p.leq(i, k)) pairs.push_back({i, k});
  j["leq"] = std::move(pairs);
  return j;
}

Poset poset_from_json(const Json& j) {
  const auto n = field<std::size_t>(j, "size");
  const auto pairs = field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "leq");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::BadInput, "label count differs from size");
  return Poset::validate(Relation::from_pairs(n, pairs), std::move(labels));
}

Json usl_to_json(const UpperSemilattice& u) {
  Json j;
  j["poset"] = poset_to_json(u.poset());
  Json join = Json::array();
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b) join.push_back({a, b, u.join(a, b)});
  j["join"] = std::move(join);
  return j;
}

UpperSemilattice usl_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poset")) throw Error(ErrorKind::BadInput, "missing field 'poset'");
  Poset p = poset_from_json(j.at("poset"));
  if (j.contains("join")) {
    const std::size_t n = p.size();
    std::vector<std::uint8_t> table(n * n, 0);
    std::vector<bool> seen(n * n, false);
    for (const auto& t : field<std::vector<std::array<std::size_t, 3>>>(j, "join")) {
      if (t[0] >= n || t[1] >= n || t[2] >= n) throw Error(ErrorKind::BadInput, "join entry out of range");
      table[t[0] * n + t[1]] = static_cast<std::uint8_t>(t[2]);
      seen[t[0] * n + t[1]] = true;
    }
    for (std::size_t i = 0; i < n * n; ++i)
      if (!seen[i])
        throw Error(ErrorKind::BadInput, "join table misses a pair",
                    {static_cast<std::int64_t>(i / n), static_cast<std::int64_t>(i % n)});
    return UpperSemilattice::with_table(std::move(p), std::move(table));
  }
  if (j.value("derive_join", false)) return compute_join_table(p);
  throw Error(ErrorKind::BadInput, "usl needs 'join' or \"derive_join\": true");
}

Json algebra_to_json(const BrouwerAlgebra& b) {
  const BrouwerAlgebra::Tables t = b.tables();
  Json j;
  j["size"] = t.size;
  j["leq"] = t.leq;
  j["meet"] = t.meet;
  j["join"] = t.join;
  j["arrow"] = t.arrow;
  j["bottom"] = t.bottom;
  j["top"] = t.top;
  j["provenance"] = std::string(to_string(t.provenance));
  j["labels"] = t.labels;
  return j;
}

BrouwerAlgebra algebra_from_json(const Json& j) {
  BrouwerAlgebra::Tables t;
  t.size = field<std::size_t>(j, "size");
  t.leq = field<std::vector<std::uint8_t>>(j, "leq");
  t.meet = field<std::vector<Elem>>(j, "meet");
  t.join = field<std::vector<Elem>>(j, "join");
  t.arrow = field<std::vector<Elem>>(j, "arrow");
  t.bottom = field<Elem>(j, "bottom");
  t.top = field<Elem>(j, "top");
  if (j.contains("provenance")) t.provenance = provenance_from_string(field<std::string>(j, "provenance"));
  if (j.contains("labels")) t.labels = field<std::vector<std::string>>(j, "labels");
  return BrouwerAlgebra::from_tables(t);
}

Mask downset_from_json(const Json& j, const Poset& host) {
  std::vector<std::size_t> members;
  try {
    members = j.is_array() ? j.get<std::vector<std::size_t>>() : field<std::vector<std::size_t>>(j, "members");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("down-set: ") + e.what());
  }
  Mask m = 0;
  for (std::size_t x : members) {
    if (x >= host.size()) throw Error(ErrorKind::BadInput, "down-set member out of range", {static_cast<std::int64_t>(x)});
    m |= bit(x);
  }
  DownSet(host, m);
  return m;
}

Corpus corpus_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::BadInput, "corpus must be a JSON array");
  std::vector<CorpusEntry> entries;
  for (const auto& e : j) {
    const auto name = field<std::string>(e, "name");
    const auto text = field<std::string>(e, "formula");
    const Expect expect = e.contains("expect") ? expect_from_string(field<std::string>(e, "expect")) : Expect::free;
    entries.push_back({name, parse_formula(text), expect});
  }
  return Corpus(std::move(entries));
}

Json corpus_to_json(const Corpus& c) {
  Json j = Json::array();
  for (const auto& e : c.entries())
    j.push_back({{"name", e.name}, {"formula", e.formula.to_string()}, {"expect", std::string(to_string(e.expect))}});
  return j;
}

Poset load_poset(const std::string& source) {
  if (is_canned(source)) return parse_canned_poset(source.substr(kCanned.size()));
  return poset_from_json(load_json_file(source));
}

UpperSemilattice load_usl(const std::string& source) {
  if (!is_canned(source)) return usl_from_json(load_json_file(source));
  const std::string name = source.substr(kCanned.size());
  if (name.rfind("powerset(", 0) == 0) return powerset_usl(parse_param(name, "powerset"));
  if (name.rfind("boolean_reverse(", 0) == 0) return boolean_reverse_usl(parse_param(name, "boolean_reverse"));
  return compute_join_table(parse_canned_poset(name));
}

BrouwerAlgebra load_algebra(const std::string& source, bool allow_large) {
  if (!is_canned(source)) return algebra_from_json(load_json_file(source));
  const std::string name = source.substr(kCanned.size());
  if (name.rfind("up:", 0) == 0) return from_upsets(parse_canned_poset(name.substr(3)));
  if (name.size() >= 2 && name[0] == 'B') {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownName, "malformed algebra name '" + name + "'");
    }
    return medvedev_algebra(n, allow_large).algebra;
  }
  throw Error(ErrorKind::UnknownName, "unknown canned algebra '" + name + "'");
}

Corpus load_corpus(const std::string& path) { return corpus_from_json(load_json_file(path)); }

}  // namespace brouwerlab

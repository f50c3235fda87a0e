#include "mwlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mwlat {

using nlohmann::json;

namespace {

std::vector<Elem> mask_elements(Mask m) {
  std::vector<Elem> out;
  for (Mask rest = m; rest; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

Mask mask_from_json(const json& arr) {
  Mask m = 0;
  for (const auto& v : arr) m |= Mask{1} << v.get<int>();
  return m;
}

Poset parse_poset_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), 1);
  }
  if (!j.is_object() || !j.contains("size"))
    throw ParseError("JSON poset needs a \"size\" field", 1);
  int n = j["size"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers"))
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2)
        throw ParseError("JSON cover entries must be pairs", 1);
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null())
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  try {
    return Poset::from_covers(n, covers, std::move(labels));
  } catch (const Error& e) {
    throw ParseError(e.what(), 1);
  }
}

}  // namespace

Poset parse_poset(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_poset_json(text);

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  bool in_covers = false;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  bool have_labels = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string kw;
      ls >> kw >> n;
      if (kw != "poset" || ls.fail() || n < 0)
        throw ParseError("expected header line `poset <n>`", lineno);
      labels.assign(n, "");
      continue;
    }
    if (!in_covers) {
      std::string tok;
      ls >> tok;
      if (tok == "covers") {
        in_covers = true;
        continue;
      }
      int idx;
      std::string name;
      std::istringstream lls(line);
      lls >> idx >> name;
      if (lls.fail() || name.empty())
        throw ParseError("expected a label line `<index> <name>` or `covers`",
                         lineno);
      if (idx < 0 || idx >= n) throw ParseError("label index out of range", lineno);
      labels[idx] = name;
      have_labels = true;
      continue;
    }
    int a, b;
    ls >> a >> b;
    std::string extra;
    if (ls.fail() || (ls >> extra && !extra.empty()))
      throw ParseError("expected a cover line `<a> <b>`", lineno);
    covers.emplace_back(a, b);
  }
  if (n < 0) throw ParseError("missing `poset <n>` header", lineno ? lineno : 1);
  if (!in_covers) throw ParseError("missing `covers` line", lineno ? lineno : 1);
  if (have_labels)
    for (int i = 0; i < n; ++i)
      if (labels[i].empty()) labels[i] = std::to_string(i);
  try {
    return Poset::from_covers(n, covers,
                              have_labels ? labels : std::vector<std::string>{});
  } catch (const IndexOutOfRange& e) {
    throw ParseError(e.what(), lineno);
  } catch (const CycleDetected& e) {
    throw ParseError(e.what(), lineno);
  }
}

std::string poset_to_text(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << "\n";
  if (!p.labels().empty())
    for (int i = 0; i < p.size(); ++i) out << i << " " << p.labels()[i] << "\n";
  out << "covers\n";
  for (auto [a, b] : p.covers()) out << a << " " << b << "\n";
  return out.str();
}

json poset_to_json(const Poset& p) {
  json j;
  j["size"] = p.size();
  j["covers"] = json::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int i = 0; i < p.size(); ++i) {
    std::string label = p.label(i);
    std::string quoted;
    for (char c : label) {
      if (c == '"' || c == '\\') quoted += '\\';
      quoted += c;
    }
    out << "  n" << i << " [label=\"" << quoted << "\"];\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a64:") + buf;
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  auto key = [](const AnalysisReport& r) {
    return std::tuple(r.input_digest, r.size, r.distributive,
                      r.join_irreducibles, r.birkhoff_covers, r.dd_like,
                      r.dd_subinterval, r.realizable,
                      r.initial_segment_realizable, r.verdict.realizable);
  };
  if (key(a) != key(b)) return false;
  if (a.verdict.completion.has_value() != b.verdict.completion.has_value())
    return false;
  if (a.verdict.completion &&
      !(a.verdict.completion->completion == b.verdict.completion->completion))
    return false;
  if (a.verdict.dd.has_value() != b.verdict.dd.has_value()) return false;
  if (a.verdict.dd) {
    const DDWitness& x = *a.verdict.dd;
    const DDWitness& y = *b.verdict.dd;
    if (!(x.bowtie == y.bowtie) || x.x_set != y.x_set || x.y_set != y.y_set ||
        x.a != y.a || x.b != y.b)
      return false;
  }
  return true;
}

AnalysisReport analyze(const Lattice& l, std::string_view input_bytes) {
  if (!l.distributive())
    throw NotDistributive("realizability analysis needs a distributive lattice");
  AnalysisReport r;
  r.input_digest = digest(input_bytes);
  r.size = l.size();
  r.distributive = l.distributive();
  BirkhoffRep rep = join_irreducibles(l);
  r.join_irreducibles = rep.j_elements;
  r.birkhoff_covers = rep.j_poset.covers();
  r.dd_like = is_dd_like(l);
  r.dd_subinterval = has_dd_like_subinterval(l);
  r.verdict = is_realizable(l);
  r.realizable = r.verdict.realizable;
  r.initial_segment_realizable = is_initial_segment_realizable(l);
  return r;
}

namespace {

json pair_json(const std::pair<Elem, Elem>& p) { return json::array({p.first, p.second}); }

json witness_json(const RealizabilityVerdict& v) {
  json w;
  if (v.realizable) {
    w["type"] = "usl_completion";
    w["completion"] = poset_to_json(v.completion->completion);
  } else {
    const DDWitness& dd = *v.dd;
    w["type"] = "dd_witness";
    w["bowtie"] = {dd.bowtie.x0, dd.bowtie.x1, dd.bowtie.y0, dd.bowtie.y1};
    w["x_set"] = mask_elements(dd.x_set.bits);
    w["y_set"] = mask_elements(dd.y_set.bits);
    w["interval"] = {dd.a, dd.b};
  }
  return w;
}

}  // namespace

json analysis_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = kSchemaAnalyze;
  j["input_digest"] = r.input_digest;
  j["size"] = r.size;
  j["distributive"] = r.distributive;
  j["join_irreducibles"] = r.join_irreducibles;
  j["birkhoff_covers"] = json::array();
  for (const auto& c : r.birkhoff_covers) j["birkhoff_covers"].push_back(pair_json(c));
  j["dd_like"] = r.dd_like;
  j["has_dd_like_subinterval"] =
      r.dd_subinterval ? pair_json(*r.dd_subinterval) : json(nullptr);
  j["realizable"] = r.realizable;
  j["initial_segment_realizable"] = r.initial_segment_realizable;
  j["witness"] = witness_json(r.verdict);
  return j;
}

AnalysisReport analysis_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchemaAnalyze)
    throw ParseError("not an analysis report", 1);
  AnalysisReport r;
  r.input_digest = j.at("input_digest").get<std::string>();
  r.size = j.at("size").get<int>();
  r.distributive = j.at("distributive").get<bool>();
  r.join_irreducibles = j.at("join_irreducibles").get<std::vector<Elem>>();
  for (const auto& c : j.at("birkhoff_covers"))
    r.birkhoff_covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  r.dd_like = j.at("dd_like").get<bool>();
  if (!j.at("has_dd_like_subinterval").is_null())
    r.dd_subinterval = std::make_pair(j["has_dd_like_subinterval"][0].get<int>(),
                                      j["has_dd_like_subinterval"][1].get<int>());
  r.realizable = j.at("realizable").get<bool>();
  r.initial_segment_realizable = j.at("initial_segment_realizable").get<bool>();
  const json& w = j.at("witness");
  r.verdict.realizable = r.realizable;
  if (w.at("type") == "usl_completion") {
    const json& c = w.at("completion");
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : c.at("covers"))
      covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    std::vector<std::string> labels;
    if (c.contains("labels"))
      labels = c["labels"].get<std::vector<std::string>>();
    r.verdict.completion =
        UslCompletion{Poset::from_covers(c.at("size").get<int>(), covers, labels)};
  } else {
    DDWitness dd;
    dd.bowtie = BowtieWitness{w.at("bowtie")[0].get<int>(), w["bowtie"][1].get<int>(),
                              w["bowtie"][2].get<int>(), w["bowtie"][3].get<int>()};
    dd.x_set = DownSet{mask_from_json(w.at("x_set"))};
    dd.y_set = DownSet{mask_from_json(w.at("y_set"))};
    dd.a = w.at("interval")[0].get<int>();
    dd.b = w.at("interval")[1].get<int>();
    r.verdict.dd = dd;
  }
  return r;
}

json lattice_report_json(const Lattice& l) {
  json j;
  j["size"] = l.size();
  j["distributive"] = l.distributive();
  BirkhoffRep rep = join_irreducibles(l);
  j["join_irreducibles"] = rep.j_elements;
  j["birkhoff_poset"] = poset_to_json(rep.j_poset);
  return j;
}

json sweep_report_json(const SweepReport& r) {
  json j;
  j["schema"] = kSchemaSweep;
  j["max_j"] = r.max_j;
  j["per_size"] = json::array();
  for (const auto& s : r.per_size) {
    json e;
    e["size"] = s.size;
    e["posets"] = s.posets;
    e["realizable"] = s.realizable;
    e["non_realizable"] = s.non_realizable;
    j["per_size"].push_back(e);
  }
  j["total_posets"] = r.total_posets();
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    json e;
    e["size"] = v.size;
    e["covers"] = json::array();
    for (const auto& c : v.covers) e["covers"].push_back(pair_json(c));
    e["no_bowtie"] = v.no_bowtie;
    e["no_dd_subinterval"] = v.no_dd_subinterval;
    j["violations"].push_back(e);
  }
  j["violation_count"] = static_cast<int>(r.violations.size());
  return j;
}

json f_iso_report_json(const FIsoReport& r, const Poset& base) {
  json j;
  j["schema"] = kSchemaModel;
  j["mode"] = "verify_f";
  j["poset"] = poset_to_json(base);
  j["with_bottom"] = r.with_bottom;
  j["pass"] = r.pass;
  j["checks"] = {{"injective", r.injective},
                 {"monotone_both_ways", r.monotone_both_ways},
                 {"meets_preserved", r.meets_preserved},
                 {"joins_preserved", r.joins_preserved},
                 {"surjective", r.surjective},
                 {"interval_matches_downset_lattice",
                  r.interval_matches_downset_lattice}};
  j["downset_count"] = r.downset_count;
  j["interval_degree_count"] = r.interval_degree_count;
  if (r.counterexample)
    j["counterexample"] = {mask_elements(r.counterexample->first),
                           mask_elements(r.counterexample->second)};
  else
    j["counterexample"] = nullptr;
  j["degrees"] = json::array();
  for (const auto& e : r.degrees) {
    json d;
    d["name"] = e.name;
    d["downset"] = mask_elements(e.downset);
    d["mass_problem"] = mask_elements(e.mass_problem);
    d["upset"] = mask_elements(e.upset);
    j["degrees"].push_back(d);
  }
  return j;
}

json dyment_report_json(const DymentScanReport& r) {
  json j;
  j["schema"] = kSchemaDyment;
  j["mode"] = "dyment";
  j["max_size"] = r.max_size;
  j["structures"] = r.structures;
  j["pairs"] = r.pairs;
  j["violations"] = r.violations;
  j["phi_principal_ok"] = r.phi_principal_ok;
  return j;
}

}  // namespace mwlat

#include "dessin/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

#include "dessin/error.hpp"
#include "dessin/zorient.hpp"

namespace dessin {

namespace {

using Json = nlohmann::ordered_json;

std::size_t parse_degree(std::string_view value, std::size_t offset) {
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc() || end != value.data() + value.size() || value.empty())
    throw ParseError(offset, "expected a decimal degree after 'n='");
  if (n == 0) throw ParseError(offset, "degree must be positive");
  return n;
}

Permutation parse_cycles_at(std::string_view text, std::size_t degree, std::size_t offset) {
  try {
    return parse_cycles(text, degree);
  } catch (const ParseError& e) {
    throw ParseError(offset + e.position(), e.reason());
  }
}

Dessin parse_text(std::string_view text, std::size_t max_degree) {
  static constexpr std::string_view kKeys[] = {"n=", "sigma0=", "sigma1="};
  std::size_t field = 0;
  std::size_t n = 0;
  std::optional<Permutation> gens[2];
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (field == 3) throw ParseError(line_start, "unexpected content after sigma1");
    const std::string_view key = kKeys[field];
    if (line.substr(0, key.size()) != key)
      throw ParseError(line_start, "expected '" + std::string(key) + "'");
    const std::string_view value = line.substr(key.size());
    const std::size_t value_start = line_start + key.size();
    if (field == 0) {
      n = parse_degree(value, value_start);
      check_guard("dessin degree", n, max_degree);
    } else {
      gens[field - 1] = parse_cycles_at(value, n, value_start);
    }
    ++field;
  }
  if (field < 3) throw ParseError(text.size(), "missing '" + std::string(kKeys[field]) + "' line");
  return Dessin::from_pair(std::move(*gens[0]), std::move(*gens[1]));
}

Dessin parse_json(std::string_view text, std::size_t max_degree) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError(0, "expected a JSON object");
  for (const char* key : {"n", "sigma0", "sigma1"})
    if (!doc.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw ParseError(0, "'n' must be a positive integer");
  const std::size_t n = doc["n"].get<std::size_t>();
  check_guard("dessin degree", n, max_degree);
  auto read = [&](const char* key) {
    const Json& arr = doc[key];
    if (!arr.is_array() || arr.size() != n)
      throw ParseError(0, std::string("'") + key + "' must be an array of " + std::to_string(n) + " images");
    std::vector<std::int64_t> images;
    images.reserve(n);
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw ParseError(0, std::string("'") + key + "' holds a non-integer image");
      images.push_back(v.get<std::int64_t>());
    }
    try {
      return Permutation::from_one_based(images);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      throw ParseError(0, std::string(key) + ": " + e.what());
    }
  };
  return Dessin::from_pair(read("sigma0"), read("sigma1"));
}

std::vector<std::size_t> one_based(const std::vector<Point>& points) {
  std::vector<std::size_t> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = points[i] + 1;
  return out;
}

// "{1..8,10,12}": runs of three or more collapse to a..b.
std::string label_set(const std::vector<std::size_t>& sorted) {
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
    if (i > 0) out += ',';
    if (j >= i + 2) {
      out += std::to_string(sorted[i]) + ".." + std::to_string(sorted[j]);
    } else {
      for (std::size_t k = i; k <= j; ++k) out += (k > i ? "," : "") + std::to_string(sorted[k]);
    }
    i = j + 1;
  }
  return out + "}";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string triple_text(const std::array<bool, 3>& t) {
  return "(" + bool_text(t[0]) + "," + bool_text(t[1]) + "," + bool_text(t[2]) + ")";
}

std::string triple_text(const std::array<BigInt, 3>& t) {
  return "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

std::string passport_text(const AnalysisReport& r) {
  return exponent_notation(r.white) + "; " + exponent_notation(r.black) + "; " + exponent_notation(r.face);
}

BigInt parse_bigint(const Json& v, const char* key) {
  if (!v.is_string()) throw ParseError(0, std::string("'") + key + "' must be a decimal string");
  const std::string s = v.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(0, std::string("'") + key + "' must be a decimal string");
  return BigInt(s);
}

}  // namespace

Dessin parse_dessin(std::string_view text, std::size_t max_degree) {
  if (!text.empty() && text.front() == '{') return parse_json(text, max_degree);
  return parse_text(text, max_degree);
}

std::string format_dessin(const Dessin& d) {
  return "n=" + std::to_string(d.degree()) + "\nsigma0=" + to_cycle_string(d.sigma0()) +
         "\nsigma1=" + to_cycle_string(d.sigma1()) + "\n";
}

std::string format_dessin_json(const Dessin& d) {
  auto images = [](const Permutation& p) {
    std::vector<std::uint64_t> out(p.degree());
    for (Point i = 0; i < p.degree(); ++i) out[i] = p(i) + 1;
    return out;
  };
  Json doc;
  doc["n"] = d.degree();
  doc["sigma0"] = images(d.sigma0());
  doc["sigma1"] = images(d.sigma1());
  return doc.dump() + "\n";
}

std::string exponent_notation(const CycleType& lengths) {
  std::string out;
  for (std::size_t i = 0; i < lengths.size();) {
    std::size_t j = i;
    while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(lengths[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

AnalysisReport analyze(const Dessin& d, const AnalysisOptions& options) {
  AnalysisReport r;
  r.degree = d.degree();
  r.tot_only = options.tot_only;
  const TotResult t = tot(d);
  r.z_triple = t.verdicts;
  r.tot = t.tot;
  if (options.tot_only) return r;

  const Passport p = passport(d);
  r.white = p.white;
  r.black = p.black;
  r.face = p.face;
  r.genus = p.genus;
  r.type_triple = p.type_triple;
  r.uniform = is_uniform(p);
  r.regular = has_transitive_automorphisms(d);
  r.monofacial_edges = one_based(monofacial_edges(d));
  if (const auto report = z_orientable(d); report.witness)
    r.sign_classes = std::array{one_based(report.witness->positive()), one_based(report.witness->negative())};
  if (options.group) {
    const Permutation gens[] = {d.sigma0(), d.sigma1()};
    const GroupHandle m = GroupHandle::build(gens, options.group_options);
    r.group_order = m.order();
    r.group_order_exact = m.exact();
    r.m_squared_class = to_string(m_squared_class(d, options.group_options).quotient_type);
  }
  if (options.aut) r.aut_order = automorphism_order(d, options.max_aut_degree);
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "degree: " << r.degree << "\n";
  if (!r.tot_only) {
    out << "passport: " << passport_text(r) << "\n";
    out << "genus: " << r.genus << "\n";
    out << "type: " << triple_text(r.type_triple) << "\n";
    out << "uniform: " << bool_text(r.uniform) << "\n";
    out << "regular: " << bool_text(r.regular) << "\n";
    out << "monofacial_edges: " << label_set(r.monofacial_edges) << "\n";
  }
  out << "z_triple: " << triple_text(r.z_triple) << "\n";
  out << "tot: " << r.tot << "\n";
  if (!r.tot_only) {
    out << "sign_classes: ";
    if (r.sign_classes)
      out << label_set((*r.sign_classes)[0]) << " / " << label_set((*r.sign_classes)[1]) << "\n";
    else
      out << "none\n";
  }
  if (r.group_order) {
    out << "group_order: " << r.group_order->str();
    if (r.group_order_exact && !*r.group_order_exact) out << " (probabilistic)";
    out << "\n";
  }
  if (r.m_squared_class) out << "m_squared_class: " << *r.m_squared_class << "\n";
  if (r.aut_order) out << "aut_order: " << *r.aut_order << "\n";
  return out.str();
}

std::string to_json(const AnalysisReport& r) {
  Json doc;
  doc["degree"] = r.degree;
  if (!r.tot_only) {
    doc["passport"] = Json{{"white", r.white}, {"black", r.black}, {"face", r.face}};
    doc["genus"] = r.genus;
    doc["type_triple"] = {r.type_triple[0].str(), r.type_triple[1].str(), r.type_triple[2].str()};
    doc["uniform"] = r.uniform;
    doc["regular"] = r.regular;
    doc["monofacial_edges"] = r.monofacial_edges;
  }
  doc["z_triple"] = r.z_triple;
  doc["tot"] = r.tot;
  if (!r.tot_only) {
    if (r.sign_classes)
      doc["sign_classes"] = Json{{"positive", (*r.sign_classes)[0]}, {"negative", (*r.sign_classes)[1]}};
    else
      doc["sign_classes"] = nullptr;
  }
  if (r.group_order) doc["group_order"] = r.group_order->str();
  if (r.group_order_exact) doc["group_order_exact"] = *r.group_order_exact;
  if (r.m_squared_class) doc["m_squared_class"] = *r.m_squared_class;
  if (r.aut_order) doc["aut_order"] = *r.aut_order;
  return doc.dump() + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
  try {
    AnalysisReport r;
    r.degree = doc.at("degree").get<std::size_t>();
    r.tot_only = !doc.contains("passport");
    if (!r.tot_only) {
      r.white = doc.at("passport").at("white").get<CycleType>();
      r.black = doc.at("passport").at("black").get<CycleType>();
      r.face = doc.at("passport").at("face").get<CycleType>();
      r.genus = doc.at("genus").get<std::int64_t>();
      const Json& type = doc.at("type_triple");
      if (!type.is_array() || type.size() != 3) throw ParseError(0, "'type_triple' must have three entries");
      for (std::size_t k = 0; k < 3; ++k) r.type_triple[k] = parse_bigint(type[k], "type_triple");
      r.uniform = doc.at("uniform").get<bool>();
      r.regular = doc.at("regular").get<bool>();
      r.monofacial_edges = doc.at("monofacial_edges").get<std::vector<std::size_t>>();
      const Json& classes = doc.at("sign_classes");
      if (!classes.is_null())
        r.sign_classes = std::array{classes.at("positive").get<std::vector<std::size_t>>(),
                                    classes.at("negative").get<std::vector<std::size_t>>()};
    }
    r.z_triple = doc.at("z_triple").get<std::array<bool, 3>>();
    r.tot = doc.at("tot").get<int>();
    if (doc.contains("group_order")) r.group_order = parse_bigint(doc["group_order"], "group_order");
    if (doc.contains("group_order_exact")) r.group_order_exact = doc["group_order_exact"].get<bool>();
    if (doc.contains("m_squared_class")) r.m_squared_class = doc["m_squared_class"].get<std::string>();
    if (doc.contains("aut_order")) r.aut_order = doc["aut_order"].get<std::size_t>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("bad report: ") + e.what());
  }
}

Comparison compare(const Dessin& a, const Dessin& b, const AnalysisOptions& options) {
  AnalysisOptions opts = options;
  opts.tot_only = false;
  opts.aut = options.group;
  const AnalysisReport ra = analyze(a, opts);
  const AnalysisReport rb = analyze(b, opts);

  Comparison c;
  auto row = [&](const std::string& name, const std::string& left, const std::string& right) {
    c.rows.push_back({name, left, right});
    if (left != right) c.separated_by.push_back(name);
  };
  row("degree", std::to_string(ra.degree), std::to_string(rb.degree));
  row("passport", passport_text(ra), passport_text(rb));
  row("genus", std::to_string(ra.genus), std::to_string(rb.genus));
  row("type", triple_text(ra.type_triple), triple_text(rb.type_triple));
  row("uniform", bool_text(ra.uniform), bool_text(rb.uniform));
  row("regular", bool_text(ra.regular), bool_text(rb.regular));
  row("z-orientability", bool_text(ra.z_triple[0]), bool_text(rb.z_triple[0]));
  row("z-triple", triple_text(ra.z_triple), triple_text(rb.z_triple));
  row("tot", std::to_string(ra.tot), std::to_string(rb.tot));
  if (options.group) {
    row("group order", ra.group_order->str(), rb.group_order->str());
    row("M/M^2 class", *ra.m_squared_class, *rb.m_squared_class);
    row("automorphism order", std::to_string(*ra.aut_order), std::to_string(*rb.aut_order));
  }
  return c;
}

std::string to_text(const Comparison& c) {
  std::ostringstream out;
  for (const auto& r : c.rows)
    out << r.name << ": " << r.left << (r.left == r.right ? " == " : " != ") << r.right << "\n";
  if (c.separated_by.empty()) {
    out << "indistinguishable by implemented invariants\n";
  } else {
    out << "separated by: ";
    for (std::size_t i = 0; i < c.separated_by.size(); ++i) out << (i ? ", " : "") << c.separated_by[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace dessin

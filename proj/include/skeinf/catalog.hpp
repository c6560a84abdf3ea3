#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "skeinf/diagram.hpp"

namespace skeinf {

struct CatalogEntry {
  std::string id;
  int components = 0;
  std::string pd;    // PD text form
  std::string note;  // provenance

  // Parses, validates, and checks the declared component count.
  Diagram diagram() const;
};

// Entries keyed by id, iteration in insertion order.
class Catalog {
 public:
  // Validates the entry; throws on duplicate id, unparseable pd, or a
  // component-count mismatch.
  void add(CatalogEntry e);

  bool has(const std::string& id) const { return index_.count(id) != 0; }
  const CatalogEntry& at(const std::string& id) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<std::string> ids() const;
  size_t size() const { return entries_.size(); }

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, size_t> index_;
};

// The built-in table: unlinks, Hopf links, trefoils, the figure-eight, the
// chain/star pair A and B, and the named three-component links.
const Catalog& bundled();

// Signed crossing count between two components, halved.
int linking_number(const Diagram& d, int comp1, int comp2);

// Reads a catalog from a CSV file (header: id, components, pd, note), a
// JSON file (array of entries or {"entries": [...]}), or a raw list of PD
// expressions one per line (ids generated as pd1, pd2, ...). All row errors
// are collected and thrown together, each prefixed with its line number.
Catalog ingest(const std::string& path);
Catalog ingest_text(const std::string& text);

}  // namespace skeinf

#pragma once

// Frozen reference values the engine is checked against: the table of
// simple colored links (unlinks, Hopf links, trefoils under every
// coloration) and the F values of the named three-component links. All
// values are stored as text and parsed on first use, so they stay
// independent of the evaluator they police.

#include <map>
#include <string>
#include <vector>

#include "skeinf/ratfun.hpp"

namespace skeinf::refvalues {

// "(sum) w^2 / (x^2 t (t-1)^2)" and friends: the reference tables write
// denominators as plain products and use (t-1) as well as (1-t). Accepts
// everything RatFun::parse_text does plus those forms.
RatFun parse_ref(const std::string& s);

struct SimpleRow {
  std::string id;      // row label in the reference table
  std::string link;    // catalog id of the diagram
  std::string colors;  // coloration literal, e.g. "0,0,1"
  RatFun value;
};

// The identifiable rows: unlinks L1-L3/L8/L9/L26, Hopf links L4-L7,
// trefoils L40/L41.
const std::vector<SimpleRow>& simple_rows();
RatFun simple(const std::string& id);

// F with all three components colored differently, keyed by link id.
const std::map<std::string, RatFun>& f3_table();
RatFun f3(const std::string& id);

// The three values over the (2,1) colorations, sorted by serialization.
// Present for the links whose two-color values are tabulated.
const std::map<std::string, std::vector<RatFun>>& f2_table();
const std::vector<RatFun>& f2(const std::string& id);

// The four-component chain/star pair: the two-color values that separate
// them (odd component in the middle of the chain / at the center of the
// star). The other (3,1) values coincide between the pair.
RatFun chain4_mid_single();
RatFun star4_center_single();

}  // namespace skeinf::refvalues

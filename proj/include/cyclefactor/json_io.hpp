#pragma once

#include <json.hpp>

#include "cyclefactor/enumerate.hpp"
#include "cyclefactor/exact_math.hpp"
#include "cyclefactor/search.hpp"
#include "cyclefactor/verify.hpp"

namespace cyclefactor {

using Json = nlohmann::ordered_json;

// Rationals are written as {"...": "p/q", "..._decimal": double}; the string
// is authoritative. Big integers are decimal strings.
void put_rational(Json& obj, const std::string& key, const BigRational& x);

Json expect_json(const DiGraph& g, const FactorStats& stats, bool histogram, bool edge_usage);
Json two_factor_json(const UGraph& g, const FactorStats& stats, bool allow_edge_as_2cycle, bool histogram);
Json certificate_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);
Json search_record_json(const SearchRecord& record);
Json formula_json(const XdClosedForm& form);
Json table1_json(int d, const std::vector<PatternRowStats>& rows);
Json d2_suite_json(const D2SuiteReport& report);
Json xd_cross_json(const XdCrossReport& report);
Json gn_class_json(const GnClassReport& report);
Json regular_max_json(const RegularMaxReport& report);

}  // namespace cyclefactor

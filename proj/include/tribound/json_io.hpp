#pragma once

#include <string>

#include "tribound/extremal.hpp"
#include "tribound/mpts.hpp"
#include "tribound/oracle.hpp"
#include "tribound/types.hpp"

namespace tribound {

// "h3-v1": {"format":"h3-v1","n":N,"triples":[[a,b,c],...]}
std::string to_json(const Hypergraph3& h);
Hypergraph3 hypergraph_from_json(const std::string& text);

// "pts-v1": {"format":"pts-v1","nu":N,"lambda":L,"triples":[...]}
std::string to_json(const TripleSystem& ts);
TripleSystem triple_system_from_json(const std::string& text);

std::string to_json(const Certificate& cert);
std::string to_json(const SearchReport& rep);

// pts-v1 payload plus case_tag, e, g, and the leave edge list
std::string mpts_certificate_json(const MptsResult& res, int s, long long g);

}  // namespace tribound

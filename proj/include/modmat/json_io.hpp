#pragma once

#include <json.hpp>

#include "modmat/chain.hpp"
#include "modmat/cusps.hpp"
#include "modmat/psi.hpp"

namespace modmat {

using Json = nlohmann::ordered_json;

// Exact encodings: rationals as "num" or "num/den" strings, cyclotomic
// elements as arrays of phi(n) rational strings. No floats except in the
// numeric-oracle output, which is tagged approximate.

Json rat_json(const Rat& q);
Json cyclotomic_json(const Cyclotomic& z);

Json config_json(const Configuration<Rat>& c);
Json config_json(const Configuration<Cyclotomic>& c);

Json realization_report_json(const RealizationReport& rep);
Json report_json(const Report& rep);
Json qseries_json(const QSeries& s);
Json matroid_json(const Matroid3& m);
Json chain_window_json(const ChainWindow<Rat>& w);
Json identity_report_json(const IdentityReport& rep);

// Serialize with a trailing newline and stable key order.
std::string dump_json(const Json& j);

// Write atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace modmat

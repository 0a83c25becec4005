#pragma once

#include <string>
#include <string_view>

#include "respeak/stats.hpp"

namespace respeak {

/// Embedded metric/NER tables ("table1", "table2") as CSV, values kept
/// digit-for-digit. Columns: SPKR,BLEU,NIST,TER,METEOR,METEOR-PL,EBLEU,RIBES,NER,RED.
std::string_view fixture_csv(std::string_view name);

DataTable fixture_table(std::string_view name, const std::string& response = "NER");

}  // namespace respeak

#pragma once

#include <string>
#include <vector>

#include "horrocks/candidates.hpp"
#include "horrocks/moduli.hpp"

namespace horrocks {

enum class TableFormat { Table, Csv, Json };

TableFormat parse_format(const std::string& name);

// The four reference tables.  All output is deterministic byte-for-byte.
std::string render_spectra(long c2, TableFormat f);
std::string render_terms(long c2, TableFormat f);
std::string render_candidates(long c2, bool negative, TableFormat f);
std::string render_dimensions(long c2, TableFormat f);

// Separation analysis, plain text only.
std::string render_separation(long c2);

}  // namespace horrocks

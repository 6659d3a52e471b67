#ifndef STENCILKIT_IO_HPP
#define STENCILKIT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "stencilkit/grid.hpp"
#include "stencilkit/linalg.hpp"
#include "stencilkit/stability.hpp"
#include "stencilkit/taylor.hpp"

namespace stencilkit {

// Stencil wire format:
//   {"dim": d, "h_power": s, "entries": [{"offset": [...], "num": n, "den": d}, ...]}
// entries ordered by lexicographic offset; num/den emitted as JSON integers
// when they fit in 64 bits and as decimal strings otherwise.
nlohmann::json stencil_to_json(const Stencil& s);
Stencil stencil_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const TaylorTable& t);  // sorted by |alpha| then lexicographic
nlohmann::json report_to_json(const StencilReport& r);
nlohmann::json stability_to_json(const StabilityReport& r);

std::string format_double(double v);  // shortest round-trip-exact decimal

void write_text_file(const std::string& path, const std::string& content);

void write_matrix_market(const std::string& path, const CsrMatrix& m);

/// CSV with one header line; every numeric cell uses format_double, so equal
/// inputs produce byte-identical files.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_spectrum_csv(const std::string& path, const SpectrumReport& rep);

/// Named stencils accepted anywhere the CLI takes --builtin.
Stencil builtin_stencil(const std::string& name);
std::vector<std::string> builtin_stencil_names();

}  // namespace stencilkit

#endif

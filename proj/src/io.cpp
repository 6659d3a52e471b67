#include "stencilkit/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "stencilkit/generators.hpp"

namespace stencilkit {

namespace {

nlohmann::json bigint_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(Errc::invalid_argument, "expected an integer or decimal string");
}

}  // namespace

nlohmann::json stencil_to_json(const Stencil& s) {
  nlohmann::json j;
  j["dim"] = s.dim();
  j["h_power"] = s.h_power();
  j["entries"] = nlohmann::json::array();
  for (const auto& [off, coeff] : s.entries()) {  // map order = lexicographic offsets
    nlohmann::json e;
    e["offset"] = off;
    e["num"] = bigint_to_json(coeff.num());
    e["den"] = bigint_to_json(coeff.den());
    j["entries"].push_back(std::move(e));
  }
  return j;
}

Stencil stencil_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("h_power") || !j.contains("entries"))
    throw Error(Errc::invalid_argument, "stencil JSON needs dim, h_power and entries");
  std::map<Offset, Rational> entries;
  for (const auto& e : j.at("entries")) {
    Offset off = e.at("offset").get<Offset>();
    entries[std::move(off)] = Rational(bigint_from_json(e.at("num")), bigint_from_json(e.at("den")));
  }
  return Stencil(j.at("dim").get<int>(), j.at("h_power").get<int>(), std::move(entries));
}

nlohmann::json table_to_json(const TaylorTable& t) {
  nlohmann::json j;
  j["dim"] = t.dim;
  j["beta"] = t.beta;
  j["trunc"] = t.trunc;
  j["h_offset"] = t.h_offset;
  std::vector<std::pair<MultiIndex, Rational>> items(t.coeffs.begin(), t.coeffs.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return order_of(a.first) < order_of(b.first);
  });
  j["coeffs"] = nlohmann::json::array();
  for (const auto& [a, c] : items) {
    nlohmann::json e;
    e["alpha"] = a;
    e["num"] = bigint_to_json(c.num());
    e["den"] = bigint_to_json(c.den());
    j["coeffs"].push_back(std::move(e));
  }
  return j;
}

nlohmann::json report_to_json(const StencilReport& r) {
  nlohmann::json j;
  j["derivative"] = r.derivative;
  j["accuracy"] = r.accuracy;
  j["leading_errors"] = nlohmann::json::array();
  for (const auto& [idx, coeff] : r.leading_errors) {
    nlohmann::json e;
    e["derivative"] = idx;
    e["coefficient"] = coeff.str();
    j["leading_errors"].push_back(std::move(e));
  }
  return j;
}

nlohmann::json stability_to_json(const StabilityReport& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["alpha"] = r.alpha;
  j["symbol_min"] = r.symbol_min;
  j["argmin_theta"] = r.argmin_theta;
  j["support"] = {r.support_min, r.support_max};
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  out << content;
}

void write_matrix_market(const std::string& path, const CsrMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows << " " << m.cols << " " << m.nnz() << "\n";
  for (std::int64_t i = 0; i < m.rows; ++i)
    for (std::int64_t k = m.row_ptr[static_cast<size_t>(i)]; k < m.row_ptr[static_cast<size_t>(i) + 1]; ++k)
      out << (i + 1) << " " << (m.col_idx[static_cast<size_t>(k)] + 1) << " "
          << format_double(m.values[static_cast<size_t>(k)]) << "\n";
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
}

void write_spectrum_csv(const std::string& path, const SpectrumReport& rep) {
  std::vector<std::vector<double>> rows;
  rows.reserve(rep.eigenvalues.size());
  for (const auto& ev : rep.eigenvalues) rows.push_back({ev.real(), ev.imag()});
  write_csv(path, {"re", "im"}, rows);
}

Stencil builtin_stencil(const std::string& name) {
  const Stencil d1 = make({.derivative = 1, .accuracy = 2});
  if (name == "d1") return d1;
  if (name == "d2" || name == "compact-heat") return make({.derivative = 2, .accuracy = 2});
  if (name == "wide-heat") return compose(d1, d1);
  if (name == "compact-dxxxx") return make({.derivative = 4, .accuracy = 2});
  if (name == "dxx-dxx") {
    const Stencil d2 = make({.derivative = 2, .accuracy = 2});
    return compose(d2, d2);
  }
  if (name == "dx-dx-dxx") {
    const Stencil d2 = make({.derivative = 2, .accuracy = 2});
    return compose(d1, compose(d1, d2));
  }
  if (name == "laplacian-1d") return laplacian(1, 2);
  if (name == "laplacian-2d") return laplacian(2, 2);
  if (name == "laplacian-3d") return laplacian(3, 2);
  if (name == "bilaplacian-2d") {
    const Stencil lap = laplacian(2, 2);
    return compose(lap, lap);
  }
  if (name == "bilaplacian-3d") {
    const Stencil lap = laplacian(3, 2);
    return compose(lap, lap);
  }
  if (name == "identity-1d") return Stencil::identity(1);
  if (name == "identity-2d") return Stencil::identity(2);
  throw Error(Errc::invalid_argument, "unknown builtin stencil '" + name + "'");
}

std::vector<std::string> builtin_stencil_names() {
  return {"d1",           "d2",           "compact-heat", "wide-heat",    "compact-dxxxx",
          "dxx-dxx",      "dx-dx-dxx",    "laplacian-1d", "laplacian-2d", "laplacian-3d",
          "bilaplacian-2d", "bilaplacian-3d", "identity-1d", "identity-2d"};
}

}  // namespace stencilkit

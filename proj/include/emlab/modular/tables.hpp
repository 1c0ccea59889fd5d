#pragma once

// Error tables along z = x + i x^p for x = 10^-1 .. 10^-5 and p in {1, 2, 1/3}.

#include <ostream>
#include <string>
#include <vector>

#include "emlab/modular/eisenstein.hpp"
#include "emlab/modular/partition_gf.hpp"
#include "emlab/numerics/format.hpp"
#include "emlab/numerics/sector.hpp"

namespace emlab {

struct TableRow {
  int decade = 1;  // x = 10^{-decade}
  mpq_class path_exponent;
  LogReal error;  // |error| in log form
  long precision_bits = 0;
  std::string status;

  [[nodiscard]] std::string x_string() const { return "1e-" + std::to_string(decade); }
  [[nodiscard]] std::string error_string() const { return format_log_sci(error.log, 10); }
};

inline const std::vector<mpq_class>& table_paths() {
  static const std::vector<mpq_class> paths{mpq_class(1), mpq_class(2), mpq_class(1, 3)};
  return paths;
}

/// x + i x^p with x = 10^{-decade}, at the given precision.
inline Complex table_point(int decade, const mpq_class& p, mp::Prec prec) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(decade));
  const Real x(mpq_class(1, den), prec);
  return path_point(PathSpec(p), x).value;
}

inline constexpr long kTable1DefaultBits = 192;

/// One Table 1 entry; refuses to run below the precision the cancellation needs.
inline TableRow table1_row(int decade, const mpq_class& p, const PrecisionContext& ctx) {
  const Complex z = table_point(decade, p, ctx.prec() + 32);
  const long need = partition_error_required_bits(z);
  if (ctx.bits < need)
    fail(ErrorKind::PrecisionRefused,
         "row x=1e-" + std::to_string(decade) + " needs at least " + std::to_string(need) + " bits, got " + std::to_string(ctx.bits));
  TableRow row{decade, p, {}, ctx.bits, "ok"};
  const Real e = partition_main_term_error(z, ctx);
  row.error = e.is_zero() ? LogReal::zero(ctx.prec()) : LogReal{mp::log(e)};
  return row;
}

inline std::vector<TableRow> table1(const PrecisionContext& ctx, int decades = 5) {
  std::vector<TableRow> rows;
  for (int d = 1; d <= decades; ++d)
    for (const auto& p : table_paths()) rows.push_back(table1_row(d, p, ctx));
  return rows;
}

/// One Table 2 entry. Rows whose direct evaluation exceeds the precision ceiling or
/// max_terms carry the modular-oracle value with a status saying so.
inline TableRow table2_row(int decade, const mpq_class& p, const PrecisionContext& ctx, long ceiling = kDefaultPrecisionCeiling) {
  const Complex w = table_point(decade, p, std::max<mp::Prec>(ctx.prec(), 256));
  TableRow row{decade, p, {}, 0, "ok"};
  const long bits = g3_working_bits(w, ctx);
  auto oracle_only = [&](const char* status) {
    PrecisionContext oc = ctx.at_bits(std::max(ctx.bits, 128L));
    row.error = LogReal{g3_oracle(w, oc).log_mag};
    row.precision_bits = oc.bits;
    row.status = status;
    return row;
  };
  if (bits > ceiling) return oracle_only("oracle (precision ceiling)");
  if (g3_terms(w.re, bits, ctx.max_terms) > ctx.max_terms) return oracle_only("oracle (max terms)");
  const Complex wb = table_point(decade, p, bits + 32);
  const G3Error e = g3_error(wb, ctx, ceiling);
  row.error = LogReal{e.direct->log_mag};
  row.precision_bits = e.precision_bits;
  return row;
}

inline std::vector<TableRow> table2(const PrecisionContext& ctx, int decades = 5, long ceiling = kDefaultPrecisionCeiling) {
  std::vector<TableRow> rows;
  for (int d = 1; d <= decades; ++d)
    for (const auto& p : table_paths()) rows.push_back(table2_row(d, p, ctx, ceiling));
  return rows;
}

inline void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "x,path_exponent,error_value,precision_bits,status\n";
  for (const auto& r : rows)
    os << r.x_string() << ',' << r.path_exponent.get_str() << ',' << r.error_string() << ',' << r.precision_bits << ','
       << r.status << '\n';
}

}  // namespace emlab

#pragma once

// Command-line front end. run() is kept in a header so tests can drive it
// with in-memory streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "emlab/emlab.hpp"

namespace emlab::cli {

using nlohmann::ordered_json;

enum class Format { Csv, Json };

inline Format parse_format(const std::string& f) {
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  fail(ErrorKind::Domain, "unknown format '" + f + "' (csv or json)");
}

/// "a+bi", "a-bi", "a", "bi" with decimal parts, e.g. "0.1+0.01i", "1e-3-2e-2i".
inline Complex parse_complex(std::string text, mp::Prec prec) {
  auto bad = [&] { fail(ErrorKind::Domain, "cannot parse complex number '" + text + "'"); };
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) bad();
  if (s.back() != 'i') {
    try {
      return Complex(Real(s, prec));
    } catch (const std::invalid_argument&) {
      bad();
    }
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  try {
    if (split == std::string::npos) {
      std::string im = s;
      if (im.empty() || im == "+") im = "1";
      if (im == "-") im = "-1";
      return {Real(prec), Real(im, prec)};
    }
    std::string re = s.substr(0, split), im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    if (im[0] == '+') im.erase(0, 1);
    return {Real(re, prec), Real(im, prec)};
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Complex(prec);
}

inline mpq_class parse_q(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    fail(ErrorKind::Domain, e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline std::pair<mpq_class, mpq_class> parse_pair(const std::string& s) {
  const auto parts = split_list(s);
  if (parts.size() == 1) return {parse_q(parts[0]), parse_q(parts[0])};
  if (parts.size() != 2) fail(ErrorKind::Domain, "expected two comma-separated values, got '" + s + "'");
  return {parse_q(parts[0]), parse_q(parts[1])};
}

inline std::string dec(const Real& x, int digits = 30) { return x.to_string(digits); }

inline std::string scalar_str(const Scalar& s) { return s.to_string(40); }

inline ordered_json series_json(const ExpansionSeries& s) {
  ordered_json j;
  j["kind"] = to_string(s.kind);
  j["log_over_w_coeff"] = scalar_str(s.log_over_w);
  ordered_json inv = ordered_json::array();
  for (const auto& [k, c] : s.inv) inv.push_back({std::to_string(k), scalar_str(c)});
  j["inv_coeffs"] = inv;
  ordered_json poly = ordered_json::array();
  for (const auto& c : s.poly) poly.push_back(scalar_str(c));
  j["poly_coeffs"] = poly;
  j["order"] = std::to_string(s.order);
  return j;
}

inline ordered_json envelope(const std::string& command, const ordered_json& params, long bits) {
  ordered_json j;
  j["command"] = command;
  j["params"] = params;
  j["precision_bits"] = std::to_string(bits);
  return j;
}

inline PrecisionContext make_ctx(long bits) {
  if (bits < 53) fail(ErrorKind::Domain, "--prec must be at least 53");
  return PrecisionContext::with_bits(bits);
}

inline FunctionModel model_by_name(const std::string& name) {
  if (name == "exp") return models::exp();
  if (name == "exp-over-x") return models::exp_over_x();
  if (name == "eisenstein-kernel") return models::eisenstein_kernel();
  fail(ErrorKind::Domain, "unknown one-variable model '" + name + "' (exp, exp-over-x, eisenstein-kernel)");
}

inline void emit_rows(std::ostream& out, Format fmt, const std::string& command, const ordered_json& params, long bits,
                      const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    }
    return;
  }
  ordered_json j = envelope(command, params, bits);
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
    arr.push_back(o);
  }
  j["rows"] = arr;
  out << j.dump(2) << '\n';
}

inline std::vector<std::string> table_row_strings(const TableRow& r) {
  return {r.x_string(), r.path_exponent.get_str(), r.error_string(), std::to_string(r.precision_bits), r.status};
}

inline const std::vector<std::string>& table_header() {
  static const std::vector<std::string> h{"x", "path_exponent", "error_value", "precision_bits", "status"};
  return h;
}

inline std::vector<mpq_class> selected_paths(const std::string& path) {
  if (path.empty()) return table_paths();
  return {parse_q(path)};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-Maclaurin and Tauberian asymptotics laboratory", "emlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  // table1
  auto* t1 = app.add_subcommand("table1", "|P(e^{-z}) sqrt(2pi/z) e^{-pi^2/(6z)} - 1| along z = x + i x^p");
  int t1_decades = 5;
  std::string t1_path, t1_z;
  t1->add_option("--decades", t1_decades, "rows x = 1e-1 .. 1e-decades")->check(CLI::Range(1, 8));
  t1->add_option("--path", t1_path, "single path exponent, e.g. 1/3");
  t1->add_option("--z", t1_z, "single point a+bi instead of the grid");

  // table2
  auto* t2 = app.add_subcommand("table2", "|g3(e^{-w}) - pi^4/(15w^4) + 1/240| along w = x + i x^p");
  int t2_decades = 5;
  long t2_ceiling = kDefaultPrecisionCeiling;
  std::string t2_path, t2_w;
  t2->add_option("--decades", t2_decades, "rows x = 1e-1 .. 1e-decades")->check(CLI::Range(1, 8));
  t2->add_option("--path", t2_path, "single path exponent, e.g. 2");
  t2->add_option("--ceiling", t2_ceiling, "largest precision attempted for the direct sum")->capture_default_str();
  t2->add_option("--w", t2_w, "single point a+bi: direct value and modular oracle");

  // expand
  auto* ex = app.add_subcommand("expand", "Euler-Maclaurin expansion coefficients");
  std::string ex_kind = "regular", ex_model = "exp", ex_a = "0", ex_c = "1,1";
  unsigned ex_N = 4;
  bool ex_json = false;
  ex->add_option("--kind", ex_kind, "regular, pole, alternating or 2d")->capture_default_str();
  ex->add_option("--model", ex_model, "exp, exp-over-x, eisenstein-kernel or exp2d")->capture_default_str();
  ex->add_option("--a", ex_a, "shift (rational or decimal; 'a1,a2' for 2d)")->capture_default_str();
  ex->add_option("--N", ex_N, "truncation order")->capture_default_str();
  ex->add_option("--c", ex_c, "exp2d decay rates 'c1,c2'")->capture_default_str();
  ex->add_flag("--json", ex_json, "same as --format json");

  // fit-order
  auto* fo = app.add_subcommand("fit-order", "empirical remainder order along a ray");
  std::string fo_kind = "regular", fo_model = "exp", fo_a = "0", fo_c = "1,1";
  unsigned fo_N = 3;
  double fo_angle = 0.0;
  FitConfig fo_cfg;
  fo->add_option("--kind", fo_kind, "regular, pole, alternating or 2d")->capture_default_str();
  fo->add_option("--model", fo_model, "exp, exp-over-x, eisenstein-kernel or exp2d")->capture_default_str();
  fo->add_option("--a", fo_a, "shift")->capture_default_str();
  fo->add_option("--N", fo_N, "truncation order")->capture_default_str();
  fo->add_option("--c", fo_c, "exp2d decay rates 'c1,c2'")->capture_default_str();
  fo->add_option("--angle", fo_angle, "ray angle in radians")->capture_default_str();
  fo->add_option("--kmin", fo_cfg.k_min, "largest |w| is 2^-kmin")->capture_default_str();
  fo->add_option("--kmax", fo_cfg.k_max, "smallest |w| is 2^-kmax")->capture_default_str();
  fo->add_option("--points", fo_cfg.points, "number of sample points (>= 8)")->capture_default_str();

  // ingham
  auto* ig = app.add_subcommand("ingham", "coefficient and partial-sum asymptotics");
  std::string ig_preset, ig_lambda, ig_alpha = "0", ig_beta = "0", ig_gamma, ig_n = "1000";
  bool ig_check = false;
  ig->add_option("--preset", ig_preset, "partition");
  ig->add_option("--lambda", ig_lambda, "lambda >= 0");
  ig->add_option("--alpha", ig_alpha, "log exponent")->capture_default_str();
  ig->add_option("--beta", ig_beta, "power exponent")->capture_default_str();
  ig->add_option("--gamma", ig_gamma, "exponential rate > 0");
  ig->add_option("--n", ig_n, "index (comma-separated list allowed)")->capture_default_str();
  ig->add_flag("--check", ig_check, "compare with exact p(n) (partition preset only)");

  // counterexample
  auto* ce = app.add_subcommand("counterexample", "Avakumovic-Karamata series diagnostics");
  std::string ce_t = "1e-1,1e-2,1e-3", ce_m = "10,100,1000,10000";
  ce->add_option("--t", ce_t, "comma-separated t values")->capture_default_str();
  ce->add_option("--m", ce_m, "comma-separated block indices m")->capture_default_str();

  // partition
  auto* pa = app.add_subcommand("partition", "exact p(n) by the pentagonal recurrence");
  std::string pa_n = "100";
  bool pa_check = false;
  pa->add_option("--n", pa_n, "index (comma-separated list allowed)")->capture_default_str();
  pa->add_flag("--check", pa_check, "Hardy-Ramanujan ratio p(n)/prediction");

  std::vector<std::pair<CLI::App*, long>> subs{{t1, kTable1DefaultBits}, {t2, 256}, {ex, 256}, {fo, 128},
                                               {ig, 256}, {ce, 256}, {pa, 256}};
  std::vector<long> prec_store(subs.size());
  std::vector<std::string> fmt_store(subs.size(), "csv");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    prec_store[i] = subs[i].second;
    subs[i].first->add_option("--prec", prec_store[i], "working precision in bits")->capture_default_str();
    subs[i].first->add_option("--format", fmt_store[i], "csv or json")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 1;
  }

  std::size_t which = 0;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i].first->parsed()) which = i;

  try {
    const Format fmt = (ex->parsed() && ex_json) ? Format::Json : parse_format(fmt_store[which]);
    const PrecisionContext ctx = make_ctx(prec_store[which]);

    if (t1->parsed()) {
      ordered_json params{{"decades", std::to_string(t1_decades)}, {"path", t1_path}, {"z", t1_z}};
      std::vector<std::vector<std::string>> rows;
      if (!t1_z.empty()) {
        const Complex z = parse_complex(t1_z, ctx.prec() + 32);
        const long need = partition_error_required_bits(z);
        if (ctx.bits < need) fail(ErrorKind::PrecisionRefused, "this point needs at least " + std::to_string(need) + " bits");
        rows.push_back({t1_z, format_sci(partition_main_term_error(z, ctx)), std::to_string(ctx.bits)});
        emit_rows(out, fmt, "table1", params, ctx.bits, {"z", "error_value", "precision_bits"}, rows);
        return 0;
      }
      for (int d = 1; d <= t1_decades; ++d)
        for (const auto& p : selected_paths(t1_path)) rows.push_back(table_row_strings(table1_row(d, p, ctx)));
      emit_rows(out, fmt, "table1", params, ctx.bits, table_header(), rows);
      return 0;
    }

    if (t2->parsed()) {
      ordered_json params{{"decades", std::to_string(t2_decades)}, {"path", t2_path}, {"ceiling", std::to_string(t2_ceiling)},
                          {"w", t2_w}};
      std::vector<std::vector<std::string>> rows;
      if (!t2_w.empty()) {
        const Complex w0 = parse_complex(t2_w, ctx.prec() + 32);
        const long bits = g3_working_bits(w0, ctx);
        const Complex w = parse_complex(t2_w, bits + 32);
        const G3Error e = g3_error(w, ctx, t2_ceiling);
        rows.push_back({t2_w, format_log_sci(e.direct->log_mag), format_log_sci(e.oracle.log_mag),
                        dec(Real(e.direct->arg, 64), 15), dec(Real(e.oracle.arg, 64), 15), std::to_string(e.precision_bits)});
        emit_rows(out, fmt, "table2", params, e.precision_bits,
                  {"w", "direct_abs", "oracle_abs", "direct_arg", "oracle_arg", "precision_bits"}, rows);
        return 0;
      }
      for (int d = 1; d <= t2_decades; ++d)
        for (const auto& p : selected_paths(t2_path)) rows.push_back(table_row_strings(table2_row(d, p, ctx, t2_ceiling)));
      emit_rows(out, fmt, "table2", params, ctx.bits, table_header(), rows);
      return 0;
    }

    if (ex->parsed() || fo->parsed()) {
      const bool fit = fo->parsed();
      const std::string& kind = fit ? fo_kind : ex_kind;
      const std::string& model = fit ? fo_model : ex_model;
      const std::string& a_str = fit ? fo_a : ex_a;
      const std::string& c_str = fit ? fo_c : ex_c;
      const unsigned N = fit ? fo_N : ex_N;
      ordered_json params{{"kind", kind}, {"model", model}, {"a", a_str}, {"N", std::to_string(N)}};
      ExpansionSeries series;
      FunctionModel f1;
      FunctionModel2D f2;
      std::pair<mpq_class, mpq_class> a2;
      mpq_class a1;
      if (kind == "2d") {
        if (model != "exp2d") fail(ErrorKind::Domain, "the 2d kind needs --model exp2d");
        const auto c = parse_pair(c_str);
        params["c"] = c_str;
        f2 = models::exp2d(c.first, c.second);
        a2 = parse_pair(a_str);
        series = expand_2d(f2, a2, N);
      } else {
        if (model == "exp2d") fail(ErrorKind::Domain, "exp2d needs --kind 2d");
        f1 = model_by_name(model);
        a1 = parse_q(a_str);
        if (kind == "regular") {
          series = expand_regular(f1, a1, N);
        } else if (kind == "pole") {
          series = expand_pole(f1, a1, N, ctx);
        } else if (kind == "alternating") {
          series = expand_alternating(f1, a1, N);
        } else {
          fail(ErrorKind::Domain, "unknown kind '" + kind + "' (regular, pole, alternating, 2d)");
        }
      }
      if (!fit) {
        if (fmt == Format::Json) {
          ordered_json j = envelope("expand", params, ctx.bits);
          j["series"] = series_json(series);
          out << j.dump(2) << '\n';
        } else {
          out << "term,power,coeff\n";
          if (!series.log_over_w.is_zero()) out << "log(1/w)/w,-1," << scalar_str(series.log_over_w) << '\n';
          for (auto it = series.inv.rbegin(); it != series.inv.rend(); ++it)
            out << "w^-" << it->first << ",-" << it->first << ',' << scalar_str(it->second) << '\n';
          for (std::size_t n = 0; n < series.poly.size(); ++n)
            out << "w^" << n << ',' << n << ',' << scalar_str(series.poly[n]) << '\n';
        }
        return 0;
      }
      params["angle"] = std::to_string(fo_angle);
      const FitResult r = kind == "2d" ? fit_remainder_order_2d(series, f2, a2, fo_angle, ctx, fo_cfg)
                                       : fit_remainder_order(series, f1, a1, fo_angle, ctx, fo_cfg);
      std::vector<std::vector<std::string>> rows;
      char buf[64];
      for (const auto& s : r.samples) {
        std::snprintf(buf, sizeof buf, "%.6f", s.log_abs_w / std::log(2.0));
        std::string lw = buf;
        std::snprintf(buf, sizeof buf, "%.6f", s.log_delta / std::log(2.0));
        rows.push_back({lw, buf, s.used ? "used" : "below noise floor"});
      }
      std::snprintf(buf, sizeof buf, "%.6f", r.slope);
      if (fmt == Format::Csv) {
        out << "slope," << buf << '\n';
        emit_rows(out, fmt, "fit-order", params, ctx.bits, {"log2_abs_w", "log2_delta", "status"}, rows);
      } else {
        ordered_json j = envelope("fit-order", params, ctx.bits);
        j["slope"] = std::string(buf);
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) arr.push_back({{"log2_abs_w", row[0]}, {"log2_delta", row[1]}, {"status", row[2]}});
        j["rows"] = arr;
        out << j.dump(2) << '\n';
      }
      return 0;
    }

    if (ig->parsed()) {
      const mp::Prec p = ctx.prec();
      InghamParams ip;
      ordered_json params;
      if (ig_preset == "partition") {
        ip = InghamParams::partition(p);
        params["preset"] = "partition";
      } else if (!ig_preset.empty()) {
        fail(ErrorKind::Domain, "unknown preset '" + ig_preset + "'");
      } else {
        if (ig_lambda.empty() || ig_gamma.empty()) fail(ErrorKind::Domain, "give --preset partition or --lambda and --gamma");
        ip = {Real(parse_q(ig_lambda), p), Real(parse_q(ig_alpha), p), Real(parse_q(ig_beta), p), Real(parse_q(ig_gamma), p)};
        params = {{"lambda", ig_lambda}, {"alpha", ig_alpha}, {"beta", ig_beta}, {"gamma", ig_gamma}};
      }
      if (ig_check && ig_preset != "partition") fail(ErrorKind::Domain, "--check needs --preset partition");
      params["n"] = ig_n;
      std::vector<mpz_class> ns;
      for (const auto& s : split_list(ig_n)) {
        const mpq_class q = parse_q(s);
        if (q.get_den() != 1 || q < 2) fail(ErrorKind::Domain, "--n must be integers >= 2");
        ns.push_back(q.get_num());
      }
      std::vector<std::string> header{"n", "coefficient_prediction", "partial_sum_prediction"};
      if (ig_check) header.insert(header.end(), {"exact_p_n", "ratio", "exact_partial_sum", "partial_sum_ratio"});
      std::vector<std::vector<std::string>> rows;
      SequenceTable table;
      if (ig_check) {
        mpz_class mx = 0;
        for (const auto& n : ns) mx = std::max(mx, n);
        if (mx > 1000000) fail(ErrorKind::Domain, "--check supports n <= 1000000");
        table = partition_numbers(mx.get_ui());
      }
      for (const auto& n : ns) {
        const Real nr(n, p);
        const LogReal c = ingham_coefficient_asymptotic(ip, nr);
        const LogReal s = ingham_partial_sum_asymptotic(ip, nr);
        std::vector<std::string> row{n.get_str(), format_log_sci(c.log, 20), format_log_sci(s.log, 20)};
        if (ig_check) {
          const mpz_class& exact = table[n.get_ui()];
          mpz_class partial = 0;
          for (unsigned long k = 0; k <= n.get_ui(); ++k) partial += table[k];
          row.push_back(exact.get_str());
          row.push_back(dec(mp::exp(mp::log(Real(exact, p)) - c.log), 20));
          row.push_back(partial.get_str());
          row.push_back(dec(mp::exp(mp::log(Real(partial, p)) - s.log), 20));
        }
        rows.push_back(std::move(row));
      }
      emit_rows(out, fmt, "ingham", params, ctx.bits, header, rows);
      return 0;
    }

    if (ce->parsed()) {
      ordered_json params{{"t", ce_t}, {"m", ce_m}};
      std::vector<std::vector<std::string>> rows;
      for (const auto& s : split_list(ce_t)) {
        const Real t(parse_q(s), ctx.prec());
        if (!(t.sign() > 0)) fail(ErrorKind::Domain, "t must be positive");
        rows.push_back({"normalized_F", s, dec(ak_normalized_series(t, ctx), 20)});
        rows.push_back({"lemma_ratio", s, format_sci(ak_gsum_ratio(t, ctx), 10)});
      }
      for (const auto& s : split_list(ce_m)) {
        const mpq_class q = parse_q(s);
        if (q.get_den() != 1 || q < 1) fail(ErrorKind::Domain, "--m must be positive integers");
        const mpz_class m = q.get_num();
        const AkExtremes e = ak_normalized_extremes(m, ctx.prec());
        rows.push_back({"u_m", s, dec(e.u(), 20)});
        rows.push_back({"l_m", s, dec(e.l(), 20)});
        rows.push_back({"A_over_B_at_cube", s, format_log_sci(ak_log_ratio_to_B(m * m * m, ctx.prec()), 10)});
        rows.push_back({"A_over_B_before_cube", s,
                        format_log_sci(ak_log_ratio_to_B((m + 1) * (m + 1) * (m + 1) - 1, ctx.prec()), 10)});
      }
      emit_rows(out, fmt, "counterexample", params, ctx.bits, {"quantity", "parameter", "value"}, rows);
      return 0;
    }

    if (pa->parsed()) {
      ordered_json params{{"n", pa_n}};
      std::vector<unsigned long> ns;
      for (const auto& s : split_list(pa_n)) {
        const mpq_class q = parse_q(s);
        if (q.get_den() != 1 || q < 0 || q > 1000000) fail(ErrorKind::Domain, "--n must be integers in [0, 1000000]");
        ns.push_back(q.get_num().get_ui());
      }
      unsigned long mx = 0;
      for (auto n : ns) mx = std::max(mx, n);
      const SequenceTable table = partition_numbers(mx);
      const InghamParams ip = InghamParams::partition(ctx.prec());
      std::vector<std::string> header{"n", "p_n"};
      if (pa_check) header.push_back("p_n_over_hardy_ramanujan");
      std::vector<std::vector<std::string>> rows;
      for (auto n : ns) {
        std::vector<std::string> row{std::to_string(n), table[n].get_str()};
        if (pa_check) {
          if (n < 2) {
            row.push_back("");
          } else {
            const LogReal c = ingham_coefficient_asymptotic(ip, Real(n, ctx.prec()));
            row.push_back(dec(mp::exp(mp::log(Real(table[n], ctx.prec())) - c.log), 20));
          }
        }
        rows.push_back(std::move(row));
      }
      emit_rows(out, fmt, "partition", params, ctx.bits, header, rows);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_resource() ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"emlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace emlab::cli

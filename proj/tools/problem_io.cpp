#include "problem_io.hpp"

#include <cmath>
#include <fstream>

namespace dispsolve::cli {

namespace {

enum class Kind { vector, matrix, scalar };

struct Field {
  const char* name;
  Kind kind;
  bool required;
};

const std::map<std::string, std::vector<Field>>& schemas() {
  static const std::map<std::string, std::vector<Field>> s = {
      {"cauchy_like",
       {{"t", Kind::vector, true},
        {"s", Kind::vector, true},
        {"G", Kind::matrix, true},
        {"H", Kind::matrix, true}}},
      {"toeplitz", {{"col", Kind::vector, true}, {"row", Kind::vector, true}}},
      {"toeplitz_like",
       {{"G", Kind::matrix, true},
        {"H", Kind::matrix, true},
        {"xi", Kind::scalar, false},
        {"eta", Kind::scalar, false}}},
      {"toeplitz_hankel", {{"t", Kind::vector, true}, {"h", Kind::vector, true}}},
      {"toeplitz_hankel_like",
       {{"G", Kind::matrix, true}, {"H", Kind::matrix, true}}},
      {"vandermonde", {{"w", Kind::vector, true}}},
      {"vandermonde_like",
       {{"w", Kind::vector, true},
        {"phi", Kind::scalar, true},
        {"G", Kind::matrix, true},
        {"H", Kind::matrix, true}}},
  };
  return s;
}

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError(field + ": " + what);
}

dsv_complex parse_entry(const json& v, const std::string& field) {
  double re = 0, im = 0;
  if (v.is_number()) {
    re = v.get<double>();
  } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    re = v[0].get<double>();
    im = v[1].get<double>();
  } else {
    bad(field, "expected a number or an [re, im] pair");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) bad(field, "non-finite value");
  return {re, im};
}

Block parse_vector(const json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array of [re, im] pairs");
  Block b(std::ptrdiff_t(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    b.data[i] = parse_entry(v[i], field + "[" + std::to_string(i) + "]");
  return b;
}

Block parse_matrix(const json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array of rows");
  const std::ptrdiff_t rows = std::ptrdiff_t(v.size());
  std::ptrdiff_t cols = -1;
  Block b;
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const json& row = v[std::size_t(i)];
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) bad(rf, "expected a row array");
    if (cols < 0) {
      cols = std::ptrdiff_t(row.size());
      b = Block(rows, cols);
    } else if (std::ptrdiff_t(row.size()) != cols) {
      bad(rf, "row has " + std::to_string(row.size()) + " entries, expected " +
                  std::to_string(cols));
    }
    for (std::ptrdiff_t j = 0; j < cols; ++j)
      b(i, j) = parse_entry(row[std::size_t(j)], rf + "[" + std::to_string(j) + "]");
  }
  if (rows == 0) b = Block(0, 0);
  return b;
}

json entry_json(dsv_complex z) { return json::array({z.re, z.im}); }

json vector_json(const Block& b) {
  json a = json::array();
  for (const auto& z : b.data) a.push_back(entry_json(z));
  return a;
}

json matrix_json(const Block& b) {
  json a = json::array();
  for (std::ptrdiff_t i = 0; i < b.rows; ++i) {
    json row = json::array();
    for (std::ptrdiff_t j = 0; j < b.cols; ++j) row.push_back(entry_json(b(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

void require_rows(const Block& b, std::ptrdiff_t n, const std::string& field,
                  const std::string& what) {
  if (b.rows != n)
    bad(field, "has " + std::to_string(b.rows) + " entries, expected " +
                   std::to_string(n) + " (" + what + ")");
}

void require_generators(const Problem& p, std::ptrdiff_t n) {
  const Block& g = p.arrays.at("G");
  const Block& h = p.arrays.at("H");
  require_rows(g, n, "payload.G", "one row per matrix row");
  require_rows(h, n, "payload.H", "one row per matrix column");
  if (h.cols != g.cols)
    bad("payload.H", "has " + std::to_string(h.cols) +
                         " columns, expected " + std::to_string(g.cols) +
                         " (the column count of payload.G)");
  if (g.cols < 1) bad("payload.G", "needs at least one column");
}

void check_shapes(const Problem& p) {
  const std::string& tag = p.structure;
  const std::ptrdiff_t n = p.size();
  if (tag == "cauchy_like") {
    require_rows(p.arrays.at("s"), n, "payload.s", "the length of payload.t");
    require_generators(p, n);
  } else if (tag == "toeplitz") {
    require_rows(p.arrays.at("row"), n, "payload.row", "the length of payload.col");
    if (n > 0) {
      const dsv_complex a = p.arrays.at("col").data[0], b = p.arrays.at("row").data[0];
      if (a.re != b.re || a.im != b.im) bad("payload.row", "row[0] must equal col[0]");
    }
  } else if (tag == "toeplitz_hankel") {
    const std::ptrdiff_t len = p.arrays.at("t").rows;
    if (len % 2 == 0) bad("payload.t", "length must be 2n - 1");
    require_rows(p.arrays.at("h"), len, "payload.h", "the length of payload.t");
  } else if (tag == "toeplitz_like" || tag == "toeplitz_hankel_like") {
    require_generators(p, n);
  } else if (tag == "vandermonde_like") {
    require_generators(p, n);
  }
  require_rows(p.rhs, n, "rhs", "the matrix size");
  if (p.rhs.cols < 1) bad("rhs", "needs at least one column");
}

template <class T>
T get_number(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) bad(key, "expected an integer");
  } else {
    if (!v.is_number()) bad(key, "expected a number");
  }
  return v.get<T>();
}

}  // namespace

std::ptrdiff_t Problem::size() const {
  if (structure == "cauchy_like") return arrays.at("t").rows;
  if (structure == "toeplitz") return arrays.at("col").rows;
  if (structure == "toeplitz_hankel") return (arrays.at("t").rows + 1) / 2;
  if (structure == "vandermonde" || structure == "vandermonde_like")
    return arrays.at("w").rows;
  return arrays.at("G").rows;
}

dsv_options Problem::options() const {
  dsv_options o;
  dsv_options_init(&o);
  o.piv = piv;
  o.gu_period = gu_period;
  o.collapse_tol = collapse_tol;
  return o;
}

const std::vector<std::string>& structure_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& [k, v] : schemas()) t.push_back(k);
    return t;
  }();
  return tags;
}

Problem parse_problem(const json& j) {
  if (!j.is_object()) throw InputError("problem file: expected a JSON object");
  if (!j.contains("version")) bad("version", "missing (required)");
  if (get_number<int>(j, "version", 0) != kFormatVersion)
    bad("version", "unsupported format version (expected " +
                       std::to_string(kFormatVersion) + ")");
  if (!j.contains("structure") || !j.at("structure").is_string())
    bad("structure", "missing or not a string");

  Problem p;
  p.structure = j.at("structure").get<std::string>();
  const auto it = schemas().find(p.structure);
  if (it == schemas().end()) bad("structure", "unknown tag '" + p.structure + "'");

  if (!j.contains("payload") || !j.at("payload").is_object())
    bad("payload", "missing or not an object");
  const json& payload = j.at("payload");
  for (const auto& [key, value] : payload.items()) {
    bool known = false;
    for (const Field& f : it->second) known = known || key == f.name;
    if (!known) bad("payload." + key, "unknown field for structure " + p.structure);
  }
  for (const Field& f : it->second) {
    const std::string name = std::string("payload.") + f.name;
    if (!payload.contains(f.name)) {
      if (f.required) bad(name, "missing (required)");
      continue;
    }
    const json& v = payload.at(f.name);
    switch (f.kind) {
      case Kind::vector:
        p.arrays[f.name] = parse_vector(v, name);
        break;
      case Kind::matrix:
        p.arrays[f.name] = parse_matrix(v, name);
        break;
      case Kind::scalar:
        p.scalars[f.name] = parse_entry(v, name);
        break;
    }
  }

  if (!j.contains("rhs")) bad("rhs", "missing (required)");
  p.rhs = parse_matrix(j.at("rhs"), "rhs");
  if (!j.contains("piv")) bad("piv", "missing (required)");
  p.piv = get_number<int>(j, "piv", DSV_PIV_PARTIAL);
  if (p.piv < 0 || p.piv > 5) bad("piv", "expected an integer in 0..5");
  p.gu_period = get_number<int>(j, "gu_period", 10);
  if (p.gu_period < 1) bad("gu_period", "must be >= 1");
  p.collapse_tol = get_number<double>(j, "collapse_tol", 0.0);
  if (!(p.collapse_tol >= 0) || !std::isfinite(p.collapse_tol))
    bad("collapse_tol", "must be finite and >= 0");
  if (j.contains("phi")) p.phi = parse_entry(j.at("phi"), "phi");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad("seed", "expected a nonnegative integer");
    p.seed = j.at("seed").get<std::uint64_t>();
  }
  check_shapes(p);
  return p;
}

Problem read_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  return parse_problem(j);
}

json problem_to_json(const Problem& p) {
  json j;
  j["version"] = kFormatVersion;
  j["structure"] = p.structure;
  json payload = json::object();
  for (const Field& f : schemas().at(p.structure)) {
    switch (f.kind) {
      case Kind::vector:
        payload[f.name] = vector_json(p.arrays.at(f.name));
        break;
      case Kind::matrix:
        payload[f.name] = matrix_json(p.arrays.at(f.name));
        break;
      case Kind::scalar:
        if (auto s = p.scalars.find(f.name); s != p.scalars.end())
          payload[f.name] = entry_json(s->second);
        break;
    }
  }
  j["payload"] = std::move(payload);
  j["rhs"] = matrix_json(p.rhs);
  j["piv"] = p.piv;
  j["gu_period"] = p.gu_period;
  j["collapse_tol"] = p.collapse_tol;
  if (p.phi) j["phi"] = entry_json(*p.phi);
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

dsv_status solve_problem(const Problem& p, dsv_report** out) {
  const dsv_options opts = p.options();
  const std::ptrdiff_t n = p.size();
  const std::ptrdiff_t d = p.rhs.cols;
  const dsv_complex* b = p.rhs.data.data();
  auto arr = [&](const char* k) { return p.arrays.at(k).data.data(); };
  auto scalar = [&](const char* k, dsv_complex fallback) {
    const auto s = p.scalars.find(k);
    return s == p.scalars.end() ? fallback : s->second;
  };
  const std::string& tag = p.structure;
  if (tag == "cauchy_like") {
    dsv_cauchy* c = nullptr;
    const dsv_status st = dsv_cauchy_create(n, n, p.arrays.at("G").cols, arr("t"),
                                            arr("s"), arr("G"), arr("H"), &c);
    if (st != DSV_OK) return st;
    const dsv_status r = dsv_solve_cauchy_like(c, d, b, &opts, out);
    dsv_cauchy_destroy(c);
    return r;
  }
  if (tag == "toeplitz")
    return dsv_solve_toeplitz(n, arr("col"), arr("row"), d, b, &opts, out);
  if (tag == "toeplitz_like")
    return dsv_solve_toeplitz_like(n, p.arrays.at("G").cols, arr("G"), arr("H"),
                                   scalar("xi", {1, 0}), scalar("eta", {-1, 0}), d, b,
                                   &opts, out);
  if (tag == "toeplitz_hankel")
    return dsv_solve_toeplitz_hankel(n, arr("t"), arr("h"), d, b, &opts, out);
  if (tag == "toeplitz_hankel_like")
    return dsv_solve_toeplitz_hankel_like(n, p.arrays.at("G").cols, arr("G"), arr("H"), d,
                                          b, &opts, out);
  if (tag == "vandermonde")
    return dsv_solve_vandermonde(n, arr("w"), p.phi ? &*p.phi : nullptr, d, b, &opts, out);
  return dsv_solve_vandermonde_like(n, p.arrays.at("G").cols, arr("w"),
                                    scalar("phi", {1, 0}), arr("G"), arr("H"), d, b,
                                    &opts, out);
}

json result_to_json(const Problem& p, const dsv_report* rep, double seconds) {
  const std::ptrdiff_t n = dsv_report_rows(rep), d = dsv_report_cols(rep);
  Block x(n, d);
  dsv_report_solution(rep, x.data.data());
  std::vector<std::ptrdiff_t> rp(static_cast<std::size_t>(n)), cp(rp.size());
  dsv_report_row_perm(rep, rp.data());
  dsv_report_col_perm(rep, cp.data());
  json j;
  j["version"] = kFormatVersion;
  j["library_version"] = dsv_version();
  j["structure"] = p.structure;
  j["solution"] = matrix_json(x);
  j["rcond_u"] = dsv_report_rcond(rep);
  j["ill_conditioned"] = dsv_report_ill_conditioned(rep) != 0;
  j["row_perm"] = rp;
  j["col_perm"] = cp;
  dsv_complex phi;
  if (dsv_report_phi(rep, &phi)) j["phi"] = entry_json(phi);
  j["wall_time_seconds"] = seconds;
  return j;
}

instances::cplx to_std(dsv_complex z) { return {z.re, z.im}; }

Block to_block(const instances::Dense& d) {
  Block b(d.rows, d.cols);
  for (std::size_t k = 0; k < d.data.size(); ++k)
    b.data[k] = {d.data[k].real(), d.data[k].imag()};
  return b;
}

Block to_block(const std::vector<instances::cplx>& v) {
  Block b(std::ptrdiff_t(v.size()), 1);
  for (std::size_t k = 0; k < v.size(); ++k) b.data[k] = {v[k].real(), v[k].imag()};
  return b;
}

Problem generate(const std::string& structure, std::ptrdiff_t n, std::ptrdiff_t r,
                 std::ptrdiff_t d, std::uint64_t seed) {
  namespace inst = instances;
  if (schemas().find(structure) == schemas().end())
    throw InputError("structure: unknown tag '" + structure + "'");
  if (n < 1) throw InputError("n: must be >= 1");
  if (r < 1) throw InputError("r: must be >= 1");
  if (d < 1) throw InputError("d: must be >= 1");
  inst::SplitMix64 rng(seed);
  Problem p;
  p.structure = structure;
  p.seed = seed;
  if (structure == "cauchy_like") {
    const auto c = inst::random_cauchy(rng, n, r);
    p.arrays["t"] = to_block(c.t);
    p.arrays["s"] = to_block(c.s);
    p.arrays["G"] = to_block(c.g);
    p.arrays["H"] = to_block(c.h);
  } else if (structure == "toeplitz") {
    const auto t = inst::random_toeplitz(rng, n, true);
    p.arrays["col"] = to_block(t.col);
    p.arrays["row"] = to_block(t.row);
  } else if (structure == "toeplitz_like") {
    p.arrays["G"] = to_block(inst::random_block(rng, n, r, true));
    p.arrays["H"] = to_block(inst::random_block(rng, n, r, true));
    p.scalars["xi"] = {1, 0};
    p.scalars["eta"] = {-1, 0};
  } else if (structure == "toeplitz_hankel") {
    if (n < 2) throw InputError("n: toeplitz_hankel needs n >= 2");
    const auto k = inst::random_toeplitz_hankel(rng, n, true);
    p.arrays["t"] = to_block(k.t);
    p.arrays["h"] = to_block(k.h);
  } else if (structure == "toeplitz_hankel_like") {
    if (n < 2) throw InputError("n: toeplitz_hankel_like needs n >= 2");
    p.arrays["G"] = to_block(inst::random_block(rng, n, r, true));
    p.arrays["H"] = to_block(inst::random_block(rng, n, r, true));
  } else if (structure == "vandermonde") {
    p.arrays["w"] = to_block(inst::unit_circle_nodes(rng, n));
  } else {
    // Jittered nodes have |arg w^n| <= pi / 2, away from conj(-1).
    p.arrays["w"] = to_block(inst::unit_circle_nodes(rng, n));
    p.scalars["phi"] = {-1, 0};
    p.arrays["G"] = to_block(inst::random_block(rng, n, r, true));
    p.arrays["H"] = to_block(inst::random_block(rng, n, r, true));
  }
  p.rhs = to_block(inst::random_block(rng, n, d, true));
  return p;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

int exit_status(dsv_status s) {
  switch (s) {
    case DSV_OK:
      return 0;
    case DSV_INVALID_ARGUMENT:
      return 2;
    default:
      return 1;
  }
}

}  // namespace dispsolve::cli

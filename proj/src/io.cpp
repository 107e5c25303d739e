#include "xhc/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace xhc {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& need(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string need_string(const ordered_json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_string()) throw ParseError(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long need_int(const ordered_json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("key \"") + key + "\" must be an integer");
  return v.get<long>();
}

Scalar parse_coeff(const ordered_json& v, Field f) {
  try {
    if (v.is_number_integer()) return Scalar(v.get<long>(), f);
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
  } catch (const ParseError&) {
    throw;
  }
  throw ParseError("coefficient must be an integer or a rational string, got " + v.dump());
}

int basis_index(const GradedBasis& basis, const std::string& name) {
  auto idx = basis.find(name);
  if (!idx) throw ParseError("unknown basis element \"" + name + "\"");
  return *idx;
}

SparseVec parse_result(const ordered_json& arr, const DGAlgebra& a) {
  if (!arr.is_array()) throw ParseError("\"result\" must be an array");
  SparseVec out;
  for (const auto& term : arr) {
    int i = basis_index(a.basis, need_string(term, "basis"));
    vec_add(out, i, parse_coeff(need(term, "coeff"), a.field));
  }
  return out;
}

ordered_json result_to_json(const SparseVec& v, const GradedBasis& basis) {
  ordered_json arr = ordered_json::array();
  for (const auto& [i, c] : v) {
    arr.push_back({{"basis", basis.name(i)}, {"coeff", c.str()}});
  }
  return arr;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

DGAlgebra parse_algebra(const std::string& text) {
  ordered_json j = parse_json(text);
  DGAlgebra a;

  const ordered_json& jf = need(j, "field");
  std::string kind = need_string(jf, "kind");
  if (kind == "rational") {
    a.field = Field::rational();
  } else if (kind == "prime") {
    long p = need_int(jf, "p");
    if (p < 2 || !is_prime(static_cast<unsigned long>(p)))
      throw ParseError("field characteristic must be prime, got " + std::to_string(p));
    a.field = Field::prime(static_cast<unsigned long>(p));
  } else {
    throw ParseError("field kind must be \"rational\" or \"prime\"");
  }

  const ordered_json& jb = need(j, "basis");
  if (!jb.is_array() || jb.empty()) throw ParseError("\"basis\" must be a non-empty array");
  for (const auto& el : jb) {
    BasisElement be;
    be.name = need_string(el, "name");
    be.degree = static_cast<int>(need_int(el, "degree"));
    if (a.basis.find(be.name)) throw ParseError("duplicate basis name \"" + be.name + "\"");
    a.basis.elements.push_back(be);
  }
  a.basis.unit_index = basis_index(a.basis, need_string(j, "unit"));

  int dim = a.dim();
  // Unit laws are filled in; every other omitted product is zero.
  a.mu.assign(static_cast<size_t>(dim), std::vector<SparseVec>(static_cast<size_t>(dim)));
  for (int i = 0; i < dim; ++i) {
    a.mu[static_cast<size_t>(a.unit())][static_cast<size_t>(i)] = {{i, Scalar(1, a.field)}};
    a.mu[static_cast<size_t>(i)][static_cast<size_t>(a.unit())] = {{i, Scalar(1, a.field)}};
  }
  a.diff.assign(static_cast<size_t>(dim), {});

  if (j.contains("products")) {
    const ordered_json& jp = j["products"];
    if (!jp.is_array()) throw ParseError("\"products\" must be an array");
    std::vector<std::vector<bool>> seen(static_cast<size_t>(dim),
                                        std::vector<bool>(static_cast<size_t>(dim), false));
    for (const auto& row : jp) {
      int l = basis_index(a.basis, need_string(row, "left"));
      int r = basis_index(a.basis, need_string(row, "right"));
      if (seen[static_cast<size_t>(l)][static_cast<size_t>(r)])
        throw ParseError("duplicate product row for (" + a.basis.name(l) + ", " +
                         a.basis.name(r) + ")");
      seen[static_cast<size_t>(l)][static_cast<size_t>(r)] = true;
      a.mu[static_cast<size_t>(l)][static_cast<size_t>(r)] = parse_result(need(row, "result"), a);
    }
  }
  if (j.contains("differential")) {
    const ordered_json& jd = j["differential"];
    if (!jd.is_array()) throw ParseError("\"differential\" must be an array");
    std::vector<bool> seen(static_cast<size_t>(dim), false);
    for (const auto& row : jd) {
      int i = basis_index(a.basis, need_string(row, "on"));
      if (seen[static_cast<size_t>(i)])
        throw ParseError("duplicate differential row for " + a.basis.name(i));
      seen[static_cast<size_t>(i)] = true;
      a.diff[static_cast<size_t>(i)] = parse_result(need(row, "result"), a);
    }
  }
  check_structure(a);
  return a;
}

std::string algebra_to_json(const DGAlgebra& a) {
  ordered_json j;
  if (a.field.kind == Field::Kind::Rational) {
    j["field"] = {{"kind", "rational"}};
  } else {
    j["field"] = {{"kind", "prime"}, {"p", a.field.p}};
  }
  j["basis"] = ordered_json::array();
  for (int i = 0; i < a.dim(); ++i)
    j["basis"].push_back({{"name", a.basis.name(i)}, {"degree", a.degree(i)}});
  j["unit"] = a.basis.name(a.unit());
  j["products"] = ordered_json::array();
  for (int l = 0; l < a.dim(); ++l) {
    for (int r = 0; r < a.dim(); ++r) {
      if (l == a.unit() || r == a.unit()) continue;  // unit laws are implicit
      const SparseVec& v = a.mul_basis(l, r);
      if (v.empty()) continue;
      j["products"].push_back({{"left", a.basis.name(l)},
                               {"right", a.basis.name(r)},
                               {"result", result_to_json(v, a.basis)}});
    }
  }
  j["differential"] = ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    if (a.diff[static_cast<size_t>(i)].empty()) continue;
    j["differential"].push_back(
        {{"on", a.basis.name(i)}, {"result", result_to_json(a.diff[static_cast<size_t>(i)], a.basis)}});
  }
  return dump(j);
}

GroupAction parse_group(const std::string& text, const DGAlgebra& a) {
  ordered_json j = parse_json(text);
  GroupAction act;
  FiniteGroup& grp = act.group;

  const ordered_json& je = need(j, "elements");
  if (!je.is_array() || je.empty()) throw ParseError("\"elements\" must be a non-empty array");
  for (const auto& el : je) {
    if (!el.is_string()) throw ParseError("group element names must be strings");
    if (grp.find(el.get<std::string>()))
      throw ParseError("duplicate group element \"" + el.get<std::string>() + "\"");
    grp.elements.push_back(el.get<std::string>());
  }
  int order = grp.order();

  auto elem_index = [&](const std::string& name) {
    auto idx = grp.find(name);
    if (!idx) throw ParseError("unknown group element \"" + name + "\"");
    return *idx;
  };

  const ordered_json& jt = need(j, "table");
  if (!jt.is_array() || static_cast<int>(jt.size()) != order)
    throw ParseError("\"table\" must be a " + std::to_string(order) + "-row array");
  for (const auto& row : jt) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw ParseError("every table row must have " + std::to_string(order) + " entries");
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError("table entries must be element names");
      r.push_back(elem_index(cell.get<std::string>()));
    }
    grp.table.push_back(std::move(r));
  }
  grp.identity = elem_index(need_string(j, "identity"));

  int dim = a.dim();
  act.rho.assign(static_cast<size_t>(order), SparseMatrix::identity(dim, a.field));
  if (j.contains("action")) {
    const ordered_json& ja = j["action"];
    if (!ja.is_object()) throw ParseError("\"action\" must be an object");
    for (const auto& [name, rows] : ja.items()) {
      int h = elem_index(name);
      if (!rows.is_array()) throw ParseError("action of \"" + name + "\" must be an array");
      SparseMatrix m = SparseMatrix::identity(dim, a.field);
      std::vector<bool> seen(static_cast<size_t>(dim), false);
      for (const auto& row : rows) {
        int i = basis_index(a.basis, need_string(row, "on"));
        if (seen[static_cast<size_t>(i)])
          throw ParseError("duplicate action row for " + a.basis.name(i));
        seen[static_cast<size_t>(i)] = true;
        m.set_col(i, parse_result(need(row, "result"), a));
      }
      act.rho[static_cast<size_t>(h)] = std::move(m);
    }
  }
  return act;
}

std::string group_to_json(const GroupAction& act, const DGAlgebra& a) {
  ordered_json j;
  const FiniteGroup& grp = act.group;
  j["elements"] = grp.elements;
  j["table"] = ordered_json::array();
  for (int h = 0; h < grp.order(); ++h) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < grp.order(); ++k)
      row.push_back(grp.elements[static_cast<size_t>(grp.mul(h, k))]);
    j["table"].push_back(std::move(row));
  }
  j["identity"] = grp.elements[static_cast<size_t>(grp.identity)];
  ordered_json ja = ordered_json::object();
  SparseMatrix id = SparseMatrix::identity(a.dim(), a.field);
  for (int h = 0; h < grp.order(); ++h) {
    const SparseMatrix& m = act.matrix(h);
    if (m == id) continue;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < a.dim(); ++i) {
      SparseVec ei{{i, Scalar(1, a.field)}};
      if (m.col(i) == ei) continue;
      rows.push_back({{"on", a.basis.name(i)}, {"result", result_to_json(m.col(i), a.basis)}});
    }
    ja[grp.elements[static_cast<size_t>(h)]] = std::move(rows);
  }
  j["action"] = std::move(ja);
  return dump(j);
}

Cochain parse_cochain(const std::string& text, const DGAlgebra& a) {
  ordered_json j = parse_json(text);
  long arity = need_int(j, "arity");
  long map_degree = need_int(j, "map_degree");
  if (arity < 0) throw ParseError("\"arity\" must be non-negative");
  Cochain d = zero_cochain(a, static_cast<int>(arity), static_cast<int>(map_degree));
  const ordered_json& jv = need(j, "values");
  if (!jv.is_array()) throw ParseError("\"values\" must be an array");
  for (const auto& row : jv) {
    const ordered_json& ja = need(row, "args");
    if (!ja.is_array() || static_cast<long>(ja.size()) != arity)
      throw ParseError("\"args\" must list exactly " + std::to_string(arity) + " names");
    std::vector<int> args;
    for (const auto& name : ja) {
      if (!name.is_string()) throw ParseError("argument names must be strings");
      int i = basis_index(a.basis, name.get<std::string>());
      if (i == a.unit())
        throw ParseError("argument names must be non-unit basis elements, got \"" +
                         name.get<std::string>() + "\"");
      args.push_back(i);
    }
    d.set(args, parse_result(need(row, "result"), a));
  }
  return d;
}

std::string cochain_to_json(const Cochain& d) {
  const DGAlgebra& a = *d.algebra;
  ordered_json j;
  j["arity"] = d.arity;
  j["map_degree"] = d.map_degree;
  j["values"] = ordered_json::array();
  long total = static_cast<long>(d.values.size());
  for (long flat = 0; flat < total; ++flat) {
    const SparseVec& v = d.values[static_cast<size_t>(flat)];
    if (v.empty()) continue;
    std::vector<int> args(static_cast<size_t>(d.arity));
    long rest = flat;
    for (int s = d.arity - 1; s >= 0; --s) {
      args[static_cast<size_t>(s)] = static_cast<int>(rest % a.dim());
      rest /= a.dim();
    }
    ordered_json names = ordered_json::array();
    for (int i : args) names.push_back(a.basis.name(i));
    j["values"].push_back({{"args", std::move(names)}, {"result", result_to_json(v, a.basis)}});
  }
  return dump(j);
}

std::string homology_table_to_json(const HomologyTable& t) {
  ordered_json j;
  j["sector"] = t.sector;
  j["coefficients"] = t.coefficients;
  j["u_window"] = {t.u_lo, t.u_hi};
  j["n_max"] = t.n_max;
  if (t.valid_hi < t.valid_lo) {
    j["valid_degrees"] = ordered_json::array();
  } else {
    j["valid_degrees"] = {t.valid_lo, t.valid_hi};
  }
  j["approximation"] = t.approximate ? "u-window approximation" : "exact in window";
  j["dims"] = ordered_json::array();
  for (const auto& [q, dim] : t.dims) j["dims"].push_back({{"degree", q}, {"dim", dim}});
  j["convention_hash"] = t.convention_hash;
  j["degree_note"] =
      "degrees are suspended total degrees; for a trivially graded algebra the "
      "degree equals the classical chain length n";
  return dump(j);
}

std::string identity_reports_to_json(const std::vector<IdentityReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["identity"] = r.identity;
    j["sector"] = r.sector;
    j["n"] = r.n;
    j["arena"] = r.arena;
    j["pass"] = r.pass;
    j["plain_commutator_holds"] = r.plain_holds;
    if (!r.pass) {
      j["witness_tuple"] = r.witness_tuple;
      ordered_json lhs = ordered_json::array(), rhs = ordered_json::array();
      for (const auto& [i, c] : r.lhs_col) lhs.push_back({{"row", i}, {"coeff", c.str()}});
      for (const auto& [i, c] : r.rhs_col) rhs.push_back({{"row", i}, {"coeff", c.str()}});
      j["lhs_column"] = std::move(lhs);
      j["rhs_column"] = std::move(rhs);
    }
    arr.push_back(std::move(j));
  }
  return dump(arr);
}

std::string certificate_to_json(const SignCertificate& cert) {
  ordered_json j;
  j["resolved"] = cert.resolved.str();
  j["hash"] = cert.resolved.hash();
  j["n_max"] = cert.n_max;
  j["checks"] = cert.checks;
  j["candidates"] = cert.outcomes.size();
  j["outcomes"] = ordered_json::array();
  for (const auto& o : cert.outcomes) {
    ordered_json row;
    row["convention"] = o.convention.str();
    row["survived"] = o.survived;
    if (!o.survived) {
      row["failed_check"] = o.failed_check;
      row["probe"] = o.probe;
      row["sector"] = o.sector;
      row["n"] = o.n;
      row["witness_column"] = o.witness_column;
    }
    j["outcomes"].push_back(std::move(row));
  }
  return dump(j);
}

std::string decomposition_to_json(const DecompositionReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  if (rep.valid_hi < rep.valid_lo) {
    j["valid_degrees"] = ordered_json::array();
  } else {
    j["valid_degrees"] = {rep.valid_lo, rep.valid_hi};
  }
  j["comparison"] = ordered_json::array();
  for (const auto& [q, lr] : rep.compared) {
    j["comparison"].push_back(
        {{"degree", q}, {"crossed_product", lr.first}, {"sector_sum", lr.second}});
  }
  ordered_json lhs = nlohmann::ordered_json::parse(homology_table_to_json(rep.lhs));
  j["lhs"] = std::move(lhs);
  j["rhs"] = ordered_json::array();
  for (const auto& t : rep.rhs)
    j["rhs"].push_back(nlohmann::ordered_json::parse(homology_table_to_json(t)));
  return dump(j);
}

std::string violations_to_json(const std::vector<Violation>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& viol : v) {
    arr.push_back({{"axiom", viol.axiom}, {"witness", viol.witness}, {"detail", viol.detail}});
  }
  return dump(arr);
}

}  // namespace xhc

// flatloc command line: catalog, classify and the computational back ends.
//
// Exit codes: 0 success, 2 input error, 3 not representable, 4 inconclusive.

#include "flatloc/abgroup.hpp"
#include "flatloc/catalog.hpp"
#include "flatloc/elliptic.hpp"
#include "flatloc/lcohom.hpp"
#include "flatloc/quadorder.hpp"
#include "flatloc/report.hpp"
#include "flatloc/spectool.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace flatloc;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNotRepresentable = 3;
constexpr int kExitInconclusive = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

bool inconclusive(const Verdict& v) {
  const auto* w = std::get_if<NoWitness>(&v.witness());
  return w && w->reason_code == "box-exhausted";
}

int run_catalog_list(const std::string& filter, const std::string& format) {
  const auto entries = catalog_list(filter);
  if (parse_format(format) == Format::Json) {
    json out = json::array();
    for (const auto& e : entries) {
      out.push_back({{"id", e.id},
                     {"description", e.description},
                     {"construction", e.construction},
                     {"notes", e.notes},
                     {"representable", e.representable}});
    }
    print_json({{"schema", kSchemaVersion}, {"entries", out}});
    return 0;
  }
  for (const auto& e : entries) {
    std::cout << e.id << "\t" << e.description << (e.representable ? "" : "  [not representable]")
              << "\n";
  }
  return 0;
}

int run_catalog_examples(const std::string& format) {
  const auto requests = catalog_examples();
  const auto verdicts = classify_batch(requests);
  const Format f = parse_format(format);
  if (f == Format::Json) {
    json out = json::array();
    for (const auto& v : verdicts) out.push_back(verdict_to_json(v));
    print_json({{"schema", kSchemaVersion}, {"verdicts", out}});
    return 0;
  }
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << verdict_to_text(verdicts[i]);
  }
  return 0;
}

int run_classify(const std::string& ring, const std::string& prime, const std::string& fp,
                 const std::string& format) {
  const Format f = parse_format(format);
  const Verdict v = classify(ring, prime, fp);
  std::cout << report(v, f);
  return inconclusive(v) ? kExitInconclusive : 0;
}

int run_classgroup(const std::string& disc_text) {
  const BigInt disc = parse_integer(disc_text);
  const QuadOrder order = QuadOrder::from_discriminant(disc);
  const auto forms = reduced_ideals(order);
  json reduced = json::array();
  for (const auto& f : forms) {
    reduced.push_back("(" + f.a().get_str() + ", " + f.b().get_str() + ", " + f.c().get_str() + ")");
  }
  json out{{"discriminant", disc.get_str()},
           {"order", order.name()},
           {"class_number", class_number(order).get_str()},
           {"reduced_forms", reduced}};
  constexpr std::size_t kStructureBound = 30;
  if (forms.size() <= kStructureBound) {
    // Cayley-table presentation: e_i + e_j - e_k for f_i f_j ~ f_k, and e_unit = 0.
    const auto h = static_cast<Eigen::Index>(forms.size());
    IntMatrix rel = IntMatrix::Zero(h * h + 1, h);
    auto index_of = [&](const QuadIdeal& q) {
      for (Eigen::Index k = 0; k < h; ++k) {
        if (forms[static_cast<std::size_t>(k)] == q) return k;
      }
      throw std::logic_error("reduced form missing from the list");
    };
    const Eigen::Index unit = index_of(reduce(QuadIdeal::unit(order)));
    for (Eigen::Index i = 0; i < h; ++i) {
      for (Eigen::Index j = 0; j < h; ++j) {
        const Eigen::Index k = index_of(reduce(
            ideal_mul(forms[static_cast<std::size_t>(i)], forms[static_cast<std::size_t>(j)])));
        rel(i * h + j, i) += 1;
        rel(i * h + j, j) += 1;
        rel(i * h + j, k) -= 1;
      }
    }
    rel(h * h, unit) = 1;
    out["structure"] = cokernel_structure(rel).to_string();
  } else {
    out["structure"] = nullptr;
    out["note"] = "structure omitted above " + std::to_string(kStructureBound) + " classes";
  }
  print_json(out);
  return 0;
}

int run_ell_torsion(const std::string& curve, const std::string& point) {
  const auto parts = split_list(curve);
  if (parts.size() != 2) throw InputError("--curve must be a,b");
  const WeierstrassCurve e(parse_rational(parts[0]), parse_rational(parts[1]));
  const ECPoint p = parse_point(point);
  if (!e.contains(p)) throw InputError("point " + p.label() + " is not on " + e.to_string());
  const TorsionResult t = torsion_order(e, p);
  json pj = p.is_infinity() ? json("O")
                            : json{{"x", rational_to_string(p.x())}, {"y", rational_to_string(p.y())}};
  json out{{"curve", e.to_string()},
           {"discriminant", rational_to_string(e.discriminant())},
           {"point", pj},
           {"reason", t.reason},
           {"class_image", cl_class(e, p).to_string()}};
  switch (t.kind) {
    case TorsionResult::Kind::Finite:
      out["torsion"] = t.order;
      break;
    case TorsionResult::Kind::NonTorsion:
      out["torsion"] = "infinite";
      out["citation"] = t.citation;
      break;
    case TorsionResult::Kind::Unknown:
      out["torsion"] = "unknown";
      break;
  }
  print_json(out);
  return t.kind == TorsionResult::Kind::Unknown ? kExitInconclusive : 0;
}

int run_cech(const std::string& vars, const std::string& rels, const std::string& ideal_text,
             std::size_t i, int box) {
  const MonomialAlgebra algebra = MonomialAlgebra::parse(vars, rels);
  const VariableIdeal ideal = VariableIdeal::from_names(algebra, split_list(ideal_text));
  const NonvanishingResult r = certify_nonvanishing(algebra, ideal, i, box);
  json dims = json::object();
  if (!r.vanishes) {
    for (const auto& a : box_degrees(algebra.size(), box)) {
      const std::size_t d = cech_dim(algebra, ideal, i, a);
      if (d > 0) dims[multidegree_to_string(a)] = d;
    }
  }
  json out{{"algebra", algebra.to_string()},
           {"ideal", ideal.to_string(algebra)},
           {"i", i},
           {"box", box},
           {"dim_by_degree", dims},
           {"witness", r.witness ? json(*r.witness) : json(nullptr)},
           {"vanishes", r.vanishes},
           {"note", r.note}};
  print_json(out);
  return (r.witness || r.vanishes) ? 0 : kExitInconclusive;
}

int run_snf(const std::string& path) {
  const IntMatrix m = parse_int_matrix(read_file(path));
  const auto snf = smith_normal_form(m);
  json out{{"D", matrix_json(snf.diagonal)},
           {"U", matrix_json(snf.left)},
           {"W", matrix_json(snf.right)},
           {"rank", snf.rank()},
           {"cokernel", cokernel_structure(m).to_string()}};
  print_json(out);
  return 0;
}

int run_spec_enumerate(const std::string& path, bool list, std::size_t bound) {
  const SpecPoset p = SpecPoset::parse(read_file(path));
  const auto result = enumerate_closed(p, list, bound);
  json heights = json::object();
  for (const auto& n : p.nodes()) heights[n] = p.height(n);
  json out{{"nodes", p.size()}, {"heights", heights}, {"count", result.count}};
  if (list) {
    json sets = json::array();
    for (const auto& s : result.sets) sets.push_back(std::vector<std::string>(s.begin(), s.end()));
    out["closed_sets"] = sets;
  }
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatloc: flat epimorphisms, universal and classical localisations"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "Built-in rings");
  catalog->require_subcommand(1);
  std::string filter;
  std::string catalog_format = "text";
  auto* cat_list = catalog->add_subcommand("list", "List catalog entries");
  cat_list->add_option("--filter", filter, "Substring of id or description");
  cat_list->add_option("--format", catalog_format, "json|text");
  auto* cat_run = catalog->add_subcommand("run", "Classify the showcase primes of every entry");
  cat_run->add_option("--format", catalog_format, "json|text");

  std::string ring, prime, fp, format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Classify the localisation at V(p)");
  classify_cmd->add_option("--ring", ring, "Catalog id or ring spec")->required();
  classify_cmd->add_option("--prime", prime, "Prime spec");
  classify_cmd->add_option("--fp", fp, "Segre: bihomogeneous equation in S0,S1,T0,T1");
  classify_cmd->add_option("--format", format, "json|text");

  std::string disc;
  auto* classgroup = app.add_subcommand("classgroup", "Class group of an imaginary quadratic order");
  classgroup->add_option("--disc", disc, "Negative fundamental discriminant")->required();

  std::string curve, point;
  auto* ell = app.add_subcommand("ell", "Elliptic curve tools");
  ell->require_subcommand(1);
  auto* torsion = ell->add_subcommand("torsion", "Torsion order of a rational point");
  torsion->add_option("--curve", curve, "a,b for y^2 = x^3 + ax + b")->required();
  torsion->add_option("--point", point, "x,y or O")->required();

  std::string vars, rels, ideal;
  std::size_t degree = 2;
  int box = 3;
  auto* cech = app.add_subcommand("cech", "Multigraded Cech local cohomology");
  cech->add_option("--vars", vars, "Variables, e.g. X,Y,U")->required();
  cech->add_option("--rel", rels, "Squarefree monomial relations, e.g. XU");
  cech->add_option("--ideal", ideal, "Variable generators, e.g. X,Y")->required();
  cech->add_option("--i", degree, "Cohomological degree");
  cech->add_option("--box", box, "Search bound on |a_j|");

  std::string matrix_path;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", matrix_path, "File: 'rows cols' then entries")->required();

  std::string poset_path;
  bool list_sets = false;
  std::size_t bound = kDefaultEnumerationBound;
  auto* spec = app.add_subcommand("spec", "Finite Spec posets");
  spec->require_subcommand(1);
  auto* enumerate = spec->add_subcommand("enumerate", "Count specialisation closed subsets");
  enumerate->add_option("--poset", poset_path, "File of 'child < parent' lines")->required();
  enumerate->add_flag("--list", list_sets, "Also list the sets");
  enumerate->add_option("--bound", bound, "Refuse posets larger than this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*cat_list) return run_catalog_list(filter, catalog_format);
    if (*cat_run) return run_catalog_examples(catalog_format);
    if (*classify_cmd) return run_classify(ring, prime, fp, format);
    if (*classgroup) return run_classgroup(disc);
    if (*torsion) return run_ell_torsion(curve, point);
    if (*cech) return run_cech(vars, rels, ideal, degree, box);
    if (*snf) return run_snf(matrix_path);
    if (*enumerate) return run_spec_enumerate(poset_path, list_sets, bound);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotRepresentable& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return kExitNotRepresentable;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

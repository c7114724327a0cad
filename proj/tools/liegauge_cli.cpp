// liegauge command-line front end.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liegauge/expr_io.hpp"
#include "liegauge/gaugegen.hpp"
#include "liegauge/normalform.hpp"
#include "liegauge/sl3case.hpp"

using namespace liegauge;
using nlohmann::json;

namespace {

struct Common {
  std::string family = "A";
  int rank = 2;
  std::string word = "longest";
  std::string format = "text";
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RootSystem roots_of(const Common& c) {
  if (c.rank < 1) throw UsageError("rank must be positive");
  try {
    return build_root_system(parse_family(c.family), c.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

WeylElement weyl_of(const RootSystem& rs, const std::string& word) {
  if (word == "longest") return longest_element(rs);
  std::vector<int> w;
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      w.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad word entry '" + tok + "'");
    }
  }
  try {
    return weyl_from_word(rs, w);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

QMatrix read_matrix(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<Rational> vals;
  std::string tok;
  while (in >> tok) vals.push_back(parse_rational(tok));
  if (vals.size() != n * n) throw UsageError("expected " + std::to_string(n * n) + " entries in " + path);
  QMatrix m(n, n);
  for (std::size_t k = 0; k < vals.size(); ++k) m(k / n, k % n) = vals[k];
  return m;
}

std::vector<std::string> texts(const std::vector<DiffPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_text(p));
  return out;
}

// text output of a document: flat key: value lines
void print_text(std::ostream& os, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(os, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else if (j.is_array()) {
    os << prefix << ":";
    for (const auto& v : j) os << "\n  " << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Common& c, const json& doc) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw UsageError("cannot write " + c.out);
    os = &file;
  }
  if (c.format == "structured")
    *os << doc.dump(2) << "\n";
  else
    print_text(*os, doc);
}

int cmd_roots(const Common& c) {
  const auto rs = roots_of(c);
  json doc{{"command", "roots"}, {"type", rs.name()}, {"rank", rs.rank()}, {"cartan", rs.cartan()},
           {"exponents", rs.exponents()}};
  json roots = json::array();
  for (int i = 0; i < rs.size(); ++i)
    roots.push_back({{"index", i}, {"coords", rs.root(i)}, {"height", rs.height(i)}});
  doc["roots"] = roots;
  emit(c, doc);
  return 0;
}

int cmd_sw(const Common& c, const std::string& matrix) {
  const auto rs = roots_of(c);
  const LieRepresentation rep(rs);
  WeylElement w;
  if (!matrix.empty()) {
    try {
      w = weyl_action_from_matrix(rep, read_matrix(matrix, rep.n()));
    } catch (const RootSystemError& e) {
      throw UsageError(std::string("matrix does not induce a Weyl action: ") + e.what());
    }
  } else {
    w = weyl_of(rs, c.word);
  }
  const auto res = is_resolving(rs, w);
  json doc{{"command", "sw"}, {"type", rs.name()}, {"word", w.word}, {"resolving", res.resolving}};
  if (!res.resolving) {
    doc["notice"] = "not resolving";
    if (!matrix.empty()) {
      emit(c, doc);
      return 0;
    }
  }
  const auto sw = build_sw(rep, w);
  doc["b_roots"] = sw.b_roots;
  doc["equations"] = texts(sw.equations);
  std::vector<std::string> leaders, initials;
  for (const auto& e : sw.equations) {
    if (e.is_constant()) {
      leaders.push_back("-");
      initials.push_back("-");
      continue;
    }
    leaders.push_back(to_text(leader(e, sw.ranking)));
    initials.push_back(to_text(initial(e, sw.ranking)));
  }
  doc["leaders"] = leaders;
  doc["initials"] = initials;
  bool ok = true;
  if (res.resolving) {
    const auto rpt = verify_sw_theorem(rep, sw);
    json st = json::array();
    for (const auto& s : rpt.statements) st.push_back({{"id", s.id}, {"passed", s.passed}, {"detail", s.detail}});
    doc["theorem"] = {{"applicable", rpt.applicable}, {"all_passed", rpt.all_passed()}, {"statements", st}};
    ok = rpt.all_passed();
  }
  emit(c, doc);
  return ok ? 0 : 1;
}

int cmd_normal_form(const Common& c, bool direct) {
  const auto rs = roots_of(c);
  const LieRepresentation rep(rs);
  PipelineOptions opt;
  opt.direct_in_k = direct;
  try {
    auto res = normal_form_pipeline(rep, opt);
    json doc = to_json(rep, res);
    doc["command"] = "normal-form";
    emit(c, doc);
    const bool ok = res.regauge_verified && res.t_nonzero && res.regauge_in_k.value_or(true);
    if (!ok) std::cerr << "verification failed\n";
    return ok ? 0 : 1;
  } catch (const NormalFormError& e) {
    std::cerr << "failed at " << e.step() << ": " << e.what() << "\n";
    return 1;
  }
}

std::array<DiffPoly, 4> parse_cs(const std::string& list) {
  std::array<DiffPoly, 4> c;
  std::stringstream ss(list);
  std::string tok;
  std::size_t k = 0;
  while (std::getline(ss, tok, ',')) {
    if (k == 4) throw UsageError("--c takes four entries c0,c1,c2,c3");
    c[k++] = parse_poly(tok);
  }
  if (k != 4) throw UsageError("--c takes four entries c0,c1,c2,c3");
  return c;
}

std::string read_line(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::string line;
  std::getline(in, line);
  return line;
}

int cmd_sl3(const Common& c, const std::string& check, int sigma_m, const std::string& cs, const std::string& reduce,
            const std::string& golden_dir) {
  json doc{{"command", "sl3"}};
  bool ok = true;
  if (check.empty() && sigma_m == 0 && reduce.empty()) throw UsageError("nothing to do; use --check, --sigma-m or --reduce");
  if (!check.empty()) {
    if (check != "sigma") throw UsageError("unknown check '" + check + "'");
    const DiffPoly f = specialized_f3();
    const auto unit = global_unit(f, printed_f3());
    json s{{"f3", to_text(f)}, {"direct_matches", f == specialized_f3_direct()}};
    s["unit"] = unit ? unit->get_str() : "none";
    ok = unit.has_value() && f == specialized_f3_direct();
    if (!golden_dir.empty()) {
      const bool gf = read_line(golden_dir + "/sl3_f3.txt") == to_text(f);
      const bool gu = unit && read_line(golden_dir + "/sl3_unit.txt") == unit->get_str();
      s["golden"] = gf && gu;
      ok = ok && gf && gu;
    }
    s["result"] = ok ? "PASS" : "FAIL";
    doc["sigma"] = s;
  }
  if (sigma_m != 0) {
    if (cs.empty()) throw UsageError("--sigma-m needs --c");
    SigmaMSystem sys;
    try {
      sys = sigma_m_system(parse_cs(cs), sigma_m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    doc["sigma_m"] = {{"m", sigma_m}, {"note", "y_{k+1} stands for y_k"}, {"equations", texts(sys.equations())}};
  }
  if (!reduce.empty()) {
    if (reduce.rfind("m=", 0) != 0) throw UsageError("--reduce expects m=N");
    int m = 0;
    try {
      m = std::stoi(reduce.substr(2));
    } catch (const std::exception&) {
      throw UsageError("--reduce expects m=N");
    }
    if (m < 1) throw UsageError("m must be positive");
    const Riccati f{bv(1), {parse_poly("t_1"), parse_poly("t_2"), parse_poly("t_3"), parse_poly("t_4")}};
    std::vector<DiffPoly> a;
    for (int k = 0; k < m; ++k) a.push_back(DiffPoly(xv(static_cast<std::uint32_t>(k + 1))));
    const auto ch = reduce_mod_f_g(f, a);
    const bool chain_ok = check_chain(f, ch);
    ok = ok && chain_ok;
    json r{{"m", m},
           {"f", to_text(riccati_poly(f))},
           {"g", to_text(ch.g)},
           {"g4", to_text(ch.g4)},
           {"witness", {{"p_f", to_text(ch.p_f)}, {"q_g", to_text(ch.q_g)}, {"verified", chain_ok}}}};
    if (m == 1) r["g0"] = to_text(g0_formula(f, a[0]));
    doc["reduce"] = r;
  }
  emit(c, doc);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge normal forms for classical Lie algebras"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", c.out, "write the document to a file");

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "A, B, C or D");
    sub->add_option("--rank", c.rank, "rank");
    sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", c.out, "write the document to a file");
  };

  auto* roots = app.add_subcommand("roots", "roots, heights and Cartan matrix");
  add_type(roots);

  std::string matrix;
  auto* sw = app.add_subcommand("sw", "the S_w system and its checks");
  add_type(sw);
  sw->add_option("--word", c.word, "comma-separated simple reflections or 'longest'");
  sw->add_option("--matrix", matrix, "file with a torus-normalizing matrix (whitespace-separated rationals)");

  bool direct = false;
  auto* nf = app.add_subcommand("normal-form", "run the normal form pipeline for the longest element");
  add_type(nf);
  nf->add_flag("--direct", direct, "also re-gauge directly in K (small ranks)");

  std::string check, cs, reduce, golden_dir;
  int sigma_m = 0;
  auto* sl3 = app.add_subcommand("sl3", "the SL3 specialization");
  sl3->add_option("--check", check, "sigma");
  sl3->add_option("--sigma-m", sigma_m, "print the system for this m");
  sl3->add_option("--c", cs, "c0,c1,c2,c3");
  sl3->add_option("--reduce", reduce, "m=N");
  sl3->add_option("--golden", golden_dir, "directory with sl3_f3.txt and sl3_unit.txt");
  sl3->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  sl3->add_option("--out", c.out, "write the document to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(c);
    if (*sw) return cmd_sw(c, matrix);
    if (*nf) return cmd_normal_form(c, direct);
    if (*sl3) return cmd_sl3(c, check, sigma_m, cs, reduce, golden_dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

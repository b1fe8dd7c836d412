#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "s2sym/s2sym.hpp"

namespace s2sym::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Malformed command-line input (exit 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Valid input whose mathematical answer is negative where the command
/// demands a positive one (exit 3).
struct DomainRejection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string command;
  std::string theta = "0,1,-1,0";
  std::optional<std::int64_t> branch;
  std::string g1, g2, g3;
  int zeta = 1;
  std::string chi = "1,0,0,1";
  std::int64_t beta1 = 0, gamma1 = 0;
  std::string beta1_range = "0:0", gamma1_range = "0:0";
  std::int64_t box = 3;
  bool apply = false;
  std::string format = "json";
};

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const std::string& what,
                                     char sep = ',') {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      throw InputError(what + ": '" + text + "' is not a list of integers");
    }
    if (used != tok.size()) throw InputError(what + ": '" + text + "' is not a list of integers");
  }
  if (out.size() != count)
    throw InputError(what + ": expected " + std::to_string(count) + " integers, got '" + text + "'");
  return out;
}

Mat2Z parse_mat(const std::string& text, const std::string& what) {
  const auto v = parse_ints(text, 4, what);
  return mat2z(v[0], v[1], v[2], v[3]);
}

DElement parse_word(const std::string& text, const std::string& what) {
  const auto v = parse_ints(text, 3, what);
  return {v[0], v[1], v[2]};
}

IntRange parse_range(const std::string& text, const std::string& what) {
  const auto v = parse_ints(text, 2, what, ':');
  if (v[0] > v[1]) throw InputError(what + ": empty range '" + text + "'");
  return {v[0], v[1]};
}

Theta parse_theta(const std::string& text) {
  const Mat2Z m = parse_mat(text, "--theta");
  if (auto diag = theta_diagnostic(m); !diag.empty()) throw InputError(diag);
  return Theta(m);
}

/// Doubles are emitted at 12 significant digits (%.12g) so output is stable.
Json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json to_json(const Mat2Z& m) { return Json::array({{m(0, 0).value(), m(0, 1).value()}, {m(1, 0).value(), m(1, 1).value()}}); }

template <typename Derived>
Json real_matrix(const Eigen::MatrixBase<Derived>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(real(static_cast<double>(m(i, j))));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const DElement& d) { return Json::array({d.q.value(), d.m.value(), d.n.value()}); }

Json to_json(const DAutomorphism& a) {
  return Json{{"zeta", a.zeta}, {"chi", to_json(a.chi)}, {"beta1", a.beta1.value()}, {"gamma1", a.gamma1.value()}};
}

Json to_json(const GroupAutoParams<double>& p) {
  return Json{{"epsilon", p.epsilon}, {"alpha", real(p.alpha)}, {"beta", real(p.beta)},
              {"gamma", real(p.gamma)}, {"delta", real(p.delta)}};
}

Json to_json(const SymmetryGroup& s) {
  Json arr = Json::array();
  for (const auto& m : s.elements) arr.push_back(to_json(m));
  return arr;
}

std::string violation_code(GenerationViolation v) {
  switch (v) {
    case GenerationViolation::None: return "none";
    case GenerationViolation::AlphaHcf: return "hcf(alpha)";
    case GenerationViolation::ComponentHcf: return "5.11";
    case GenerationViolation::WedgeHcf: return "5.12";
  }
  return "unknown";
}

void emit(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "text") {
    for (const auto& [key, value] : doc.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  } else {
    out << doc.dump() << "\n";
  }
}

std::int64_t branch_of(const Job& job, const Theta& theta) {
  if (!job.branch) return positive_branches(theta.trace(), 1).front();
  if (!admissible_branch(theta.trace(), *job.branch))
    throw InputError("branch n=" + std::to_string(*job.branch) + " not admissible for trace " +
                     std::to_string(theta.trace()));
  return *job.branch;
}

DAutomorphism automorphism_of(const Job& job, const Theta& theta) {
  const Mat2Z chi = parse_mat(job.chi, "--chi");
  if (auto why = d_automorphism_violation(theta, job.zeta, chi); !why.empty()) throw DomainRejection(why);
  return {job.zeta, chi, job.beta1, job.gamma1};
}

int cmd_classify_theta(const Job& job, std::ostream& out) {
  const Theta theta = parse_theta(job.theta);
  const auto n = branch_of(job, theta);
  const auto g = make_group<double>(theta, n);
  const auto s = centralizer(theta);
  const auto r = reversing_group(theta);
  const bool all = s.kind == SymmetryGroup::Kind::AllGL2Z;

  Json branches = Json::array();
  for (auto b : positive_branches(theta.trace(), 2)) branches.push_back(Json{{"n", b}, {"k", real(branch_k(theta.trace(), b))}});

  Json doc;
  doc["command"] = "classify-theta";
  doc["theta"] = to_json(theta.matrix());
  doc["trace"] = theta.trace();
  doc["p"] = theta.order();
  doc["branch"] = n;
  doc["k"] = real(g.k());
  doc["k_branches"] = branches;
  doc["S_label"] = s.label;
  doc["S_order"] = all ? Json(nullptr) : Json(s.order());
  doc[all ? "S_sample" : "S"] = to_json(s);
  doc["R_label"] = r.label;
  doc["R_order"] = all ? Json(nullptr) : Json(r.order());
  doc[all ? "R_sample" : "R"] = to_json(r);
  doc["reversing_symmetry"] = to_json(reversing_symmetry(theta));
  doc["A"] = real_matrix(g.a_matrix());
  doc["M"] = real_matrix(g.m_matrix());
  doc["dislocation_density"] = real_matrix(g.dislocation_density());
  emit(doc, job.format, out);
  return kOk;
}

int cmd_check_generators(const Job& job, std::ostream& out) {
  const Theta theta = parse_theta(job.theta);
  if (job.g1.empty() || job.g2.empty() || job.g3.empty())
    throw InputError("check-generators needs --g1, --g2 and --g3");
  const GeneratorTriple t{{parse_word(job.g1, "--g1"), parse_word(job.g2, "--g2"), parse_word(job.g3, "--g3")}};
  const auto cls = classify_symmetry(theta, t);
  const auto& gen = cls.generation;

  Json doc;
  doc["command"] = "check-generators";
  doc["theta"] = to_json(theta.matrix());
  doc["triple"] = Json::array({to_json(t.g[0]), to_json(t.g[1]), to_json(t.g[2])});
  doc["generates"] = gen.generates;
  doc["violated"] = violation_code(gen.violated);
  const auto al = t.alphas();
  doc["alpha_hcf"] = hcf_all({al[0], al[1], al[2]}).value();
  if (gen.reduced) {
    doc["reduced"] = Json{{"beta1", gen.reduced->beta1.value()},
                          {"gamma1", gen.reduced->gamma1.value()},
                          {"exponents", to_json(gen.reduced->exponents)}};
    Json taus = Json::array();
    for (const auto& v : *gen.tau) taus.push_back(Json::array({v(0).value(), v(1).value()}));
    doc["tau"] = taus;
    doc["component_hcf"] = Json::array({gen.component_hcf_first.value(), gen.component_hcf_second.value()});
    doc["wedge_hcf"] = gen.wedge_hcf.value();
  }
  doc["class"] = to_string(cls.cls);
  doc["reason"] = cls.reason;
  if (cls.automorphism) doc["automorphism"] = to_json(*cls.automorphism);
  emit(doc, job.format, out);
  return kOk;
}

int cmd_extend(const Job& job, std::ostream& out) {
  const Theta theta = parse_theta(job.theta);
  const auto n = branch_of(job, theta);
  if (job.box < 0) throw InputError("--box must be >= 0");
  const auto g = make_group<double>(theta, n);
  const DAutomorphism phi = automorphism_of(job, theta);

  GroupAutoParams<double> ext;
  try {
    ext = extend(g, phi);
  } catch (const NoExtensionError& e) {
    throw DomainRejection(e.what());
  }
  const auto rep = verify_extension(g, phi, ext, job.box);
  const auto uniq = uniqueness_probe(g, phi);

  double spread = 0;
  const int p = theta.order();
  const Mat2<double> ref = r_eps(g, ext.epsilon, 1);
  for (std::int64_t q = 2; q <= 2 * p; ++q)
    if (q % p != 0) spread = std::max(spread, (r_eps(g, ext.epsilon, q) - ref).cwiseAbs().maxCoeff());
  const double closed = (r_eps_closed_form(g, ext.epsilon) - ref).cwiseAbs().maxCoeff();

  Json doc;
  doc["command"] = "extend";
  doc["theta"] = to_json(theta.matrix());
  doc["branch"] = n;
  doc["k"] = real(g.k());
  doc["automorphism"] = to_json(phi);
  doc["extension"] = to_json(ext);
  doc["box"] = job.box;
  doc["max_discrepancy"] = real(rep.max_discrepancy);
  doc["tolerance"] = real(rep.tolerance);
  doc["status"] = rep.passed ? "PASS" : "FAIL";
  doc["uniqueness_max_deviation"] = real(uniq.max_deviation);
  doc["r_eps_q_spread"] = real(spread);
  doc["r_eps_closed_form_deviation"] = real(closed);
  emit(doc, job.format, out);
  return rep.passed ? kOk : kDomainRejection;
}

int cmd_lattice_points(const Job& job, std::ostream& out) {
  const Theta theta = parse_theta(job.theta);
  if (job.box < 0) throw InputError("--box must be >= 0");
  std::optional<DAutomorphism> phi;
  if (job.apply) phi = automorphism_of(job, theta);
  const Integer box = job.box;
  for (Integer q = -box; q <= box; q += 1)
    for (Integer m = -box; m <= box; m += 1)
      for (Integer n = -box; n <= box; n += 1) {
        const DElement d{q, m, n};
        const auto x = embed_exact(theta, d);
        Json rec;
        rec["Q"] = q.value();
        rec["M"] = m.value();
        rec["N"] = n.value();
        rec["x1"] = x[0].value();
        rec["x2"] = x[1].value();
        rec["x3"] = x[2].value();
        if (phi) {
          const DElement img = apply_d_automorphism(theta, *phi, d);
          const auto y = embed_exact(theta, img);
          rec["image"] = to_json(img);
          rec["y1"] = y[0].value();
          rec["y2"] = y[1].value();
          rec["y3"] = y[2].value();
        }
        if (job.format == "text") {
          for (const auto& [key, value] : rec.items()) out << (key == "Q" ? "" : " ") << value.dump();
          out << "\n";
        } else {
          out << rec.dump() << "\n";
        }
      }
  return kOk;
}

int cmd_enumerate_elastic(const Job& job, std::ostream& out) {
  const Theta theta = parse_theta(job.theta);
  const auto list = enumerate_elastic(theta, parse_range(job.beta1_range, "--beta1-range"),
                                      parse_range(job.gamma1_range, "--gamma1-range"));
  Json arr = Json::array();
  for (const auto& a : list) arr.push_back(to_json(a));
  Json doc;
  doc["command"] = "enumerate-elastic";
  doc["theta"] = to_json(theta.matrix());
  doc["count"] = list.size();
  doc["automorphisms"] = arr;
  emit(doc, job.format, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetries of uniform discrete subgroups of the solvable Lie group S2"};
  app.require_subcommand(1);
  Job job;

  const auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--theta", job.theta, "theta as a,b,c,d (row-major)")->required();
    sub->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_branch = [&](CLI::App* sub) {
    sub->add_option("--branch", job.branch, "branch n of k (default: smallest positive admissible)");
  };
  const auto add_auto = [&](CLI::App* sub) {
    sub->add_option("--zeta", job.zeta, "A-exponent of phi(A), +1 or -1");
    sub->add_option("--chi", job.chi, "exponent matrix chi as a,b,c,d");
    sub->add_option("--beta1", job.beta1, "B-exponent of phi(A)");
    sub->add_option("--gamma1", job.gamma1, "C-exponent of phi(A)");
  };

  auto* classify = app.add_subcommand("classify-theta", "trace class, p, k branches, S(theta), R(theta)");
  add_theta(classify);
  add_branch(classify);

  auto* check = app.add_subcommand("check-generators", "decide whether a triple generates D and classify it");
  add_theta(check);
  check->add_option("--g1", job.g1, "first word as Q,M,N");
  check->add_option("--g2", job.g2, "second word as Q,M,N");
  check->add_option("--g3", job.g3, "third word as Q,M,N");

  auto* ext = app.add_subcommand("extend", "lift an automorphism of D to S2 and verify it on the lattice");
  add_theta(ext);
  add_branch(ext);
  add_auto(ext);
  ext->add_option("--box", job.box, "verification box radius");

  auto* lattice = app.add_subcommand("lattice-points", "emit embedded lattice points as JSON lines");
  add_theta(lattice);
  add_auto(lattice);
  lattice->add_option("--box", job.box, "word box radius");
  lattice->add_flag("--apply", job.apply, "also emit images under the automorphism");

  auto* enumerate = app.add_subcommand("enumerate-elastic", "list elastic automorphisms over a beta1/gamma1 box");
  add_theta(enumerate);
  enumerate->add_option("--beta1-range", job.beta1_range, "lo:hi");
  enumerate->add_option("--gamma1-range", job.gamma1_range, "lo:hi");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify_theta(job, out);
    if (check->parsed()) return cmd_check_generators(job, out);
    if (ext->parsed()) return cmd_extend(job, out);
    if (lattice->parsed()) return cmd_lattice_points(job, out);
    if (enumerate->parsed()) return cmd_enumerate_elastic(job, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainRejection& e) {
    err << "rejected: " << e.what() << "\n";
    return kDomainRejection;
  } catch (const InvalidParametersError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace s2sym::cli

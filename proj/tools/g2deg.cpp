// SPDX-License-Identifier: Apache-2.0
// Command-line front end. stdout carries JSON only; diagnostics go to stderr.
// Exit codes: 0 success, 1 a check failed, 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "g2deg/basis.hpp"
#include "g2deg/classes.hpp"
#include "g2deg/errors.hpp"
#include "g2deg/json_io.hpp"
#include "g2deg/multidegree.hpp"
#include "g2deg/rings.hpp"
#include "g2deg/verify.hpp"
#include "g2deg/weyl.hpp"

namespace {

using namespace g2deg;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

bool g_compact = false;

void emit(const Json& j) { std::cout << (g_compact ? j.dump() : j.dump(2)) << '\n'; }

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string word_label(const WeylElement& w) { return w.word().empty() ? "id" : w.word(); }

// ---- verify

struct VerifyArgs {
  std::string scope = "all";
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string fault = "none";
};

int cmd_verify(const VerifyArgs& args) {
  VerifyOptions opt;
  opt.scope = parse_scope(args.scope);
  opt.samples = args.samples;
  opt.seed = args.seed;
  opt.fault = parse_fault(args.fault);
  const auto report = run_verification(opt);
  emit(to_json(report));
  for (const auto& c : report.checks)
    if (!c.passed) std::cerr << "FAILED: " << c.name << ": " << c.detail << '\n';
  return report.ok() ? kOk : kFailed;
}

// ---- classify

int cmd_classify(const std::string& input) {
  const Json j = parse_json(read_input(input));
  const TangentVector<Rational> v = tangent_from_json(j);
  const auto m = is_triality_symmetric(v);
  if (!m) throw DomainError("input is not triality-symmetric (need b1 = a2, a1 = -d1, d2 = -a2, c2 = d1)");
  const BinaryCubic f = BinaryCubic::from_map(*m);
  const OrbitLabel orbit = classify(*m);
  emit({{"orbit", to_string(orbit)},
        {"codimension", codimension(orbit)},
        {"morphism_rank", morphism_rank(v)},
        {"discriminant", to_string(discriminant(f))},
        {"minor_rank", matrix_rank(minor_matrix(f))},
        {"root_profile", to_string(classify_by_multiplicity(f))},
        {"class_alpha", orbit_class(orbit, WeightBasis::alpha).to_string()},
        {"class_t", orbit_class(orbit, WeightBasis::t).to_string()}});
  return kOk;
}

// ---- classes

/// Orbit class in the requested format; "chern" pulls back along t_i -> -x_i.
MultiPoly in_format(const MultiPoly& alpha, const std::string& format) {
  if (format == "alpha") return alpha;
  const MultiPoly t = change_basis(alpha, BasisDirection::alpha_to_t);
  if (format == "t") return t;
  const MultiPoly x1 = MultiPoly::variable(root_ring(), "x1");
  const MultiPoly x2 = MultiPoly::variable(root_ring(), "x2");
  return to_chern(substitute(t, {{"t1", -x1}, {"t2", -x2}}, root_ring()));
}

int cmd_classes(const std::string& format) {
  Json orbits = Json::object();
  Json oracle = Json::object();
  bool all_match = true;
  for (OrbitLabel l : kAllOrbits) {
    const MultiPoly closed = orbit_class(l, WeightBasis::alpha);
    const MultiPoly derived = orbit_class_oracle(l).alpha;
    const bool match = closed == derived;
    all_match = all_match && match;
    orbits[to_string(l)] = in_format(closed, format).to_string();
    oracle[to_string(l)] = {{"value", in_format(derived, format).to_string()}, {"match", match}};
  }
  Json loci = Json::object();
  for (int r : {2, 1, 0}) {
    const LocusClass lc = locus_class(r);
    const MultiPoly& p = format == "chern" ? lc.chern_form : lc.root_form;
    loci["P" + std::to_string(r)] = p.to_string();
  }
  const char* variables = format == "alpha" ? "a1, a2 = simple roots; loci in Chern roots x1, x2 of E*"
                          : format == "t"   ? "t1, t2 = torus characters; loci in Chern roots x1, x2 of E*"
                                            : "c1, c2 = Chern classes of E*; orbit classes pulled back by t_i -> -x_i";
  emit({{"format", format}, {"variables", variables}, {"orbits", orbits}, {"loci", loci}, {"oracle", oracle}});
  if (!all_match) std::cerr << "closed-form orbit classes disagree with the multidegree oracle\n";
  return all_match ? kOk : kFailed;
}

// ---- octonion

struct OctonionArgs {
  std::string input;
  std::string u;
  std::string v;
};

Octonion<Rational> octonion_from_list(const std::string& text, const char* field) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 8) throw ParseError(std::string("--") + field + " needs 8 comma-separated rationals");
  Octonion<Rational> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = parse_rational(parts[i]);
  return out;
}

std::pair<Octonion<Rational>, std::optional<Octonion<Rational>>> octonion_operands(const OctonionArgs& args,
                                                                                  bool need_v) {
  std::optional<Octonion<Rational>> u;
  std::optional<Octonion<Rational>> v;
  if (!args.u.empty()) u = octonion_from_list(args.u, "u");
  if (!args.v.empty()) v = octonion_from_list(args.v, "v");
  if (!u) {
    const Json j = parse_json(read_input(args.input));
    if (!j.is_object() || !j.contains("u")) throw ParseError("input must be an object with field 'u'");
    u = octonion_from_json(j.at("u"), "u");
    if (need_v) {
      if (!j.contains("v")) throw ParseError("missing field 'v'");
      v = octonion_from_json(j.at("v"), "v");
    }
  }
  if (need_v && !v) throw ParseError("second operand v is required");
  return {*u, v};
}

int cmd_octonion(const std::string& op, const OctonionArgs& args) {
  if (op == "norm") {
    const auto [u, v] = octonion_operands(args, false);
    emit({{"u", to_json(u)}, {"norm", to_string(norm(u))}});
  } else {
    const auto [u, v] = octonion_operands(args, true);
    if (op == "mul")
      emit({{"u", to_json(u)}, {"v", to_json(*v)}, {"product", to_json(multiply(u, *v))}});
    else
      emit({{"u", to_json(u)}, {"v", to_json(*v)}, {"bilinear", to_string(bilinear(u, *v))}});
  }
  return kOk;
}

// ---- weyl

Json element_json(const WeylElement& w) {
  Json inversions = Json::array();
  for (const auto& r : w.inversions()) inversions.push_back(r.to_string());
  return {{"word", word_label(w)}, {"permutation", to_string(w.perm())}, {"length", w.length()}, {"inversions", inversions}};
}

LocalizationPinning pinning() {
  return pin_localization({{"tst", orbit_class(OrbitLabel::O3, WeightBasis::t)},
                           {"tstst", orbit_class(OrbitLabel::O5, WeightBasis::t)}});
}

int cmd_weyl_info() {
  const auto& group = WeylGroup::instance();
  Json elements = Json::array();
  for (const auto& w : group.elements()) elements.push_back(element_json(w));
  Json roots = Json::array();
  for (const auto& r : roots::positive())
    roots.push_back({{"alpha", r.to_string()}, {"t", r.in_basis(WeightBasis::t).to_string()}, {"long", roots::is_long(r)}});
  emit({{"order", group.elements().size()},
        {"generators", {{"s", to_string(kPermS)}, {"t", to_string(kPermT)}}},
        {"longest", element_json(group.longest())},
        {"elements", elements},
        {"positive_roots", roots},
        {"loci", {{"P2", word_label(locus_element(2))}, {"P1", word_label(locus_element(1))}, {"P0", word_label(locus_element(0))}}}});
  return kOk;
}

int cmd_weyl_rank_table(const std::string& word) {
  const auto& w = element_from_word(word);
  Json rows = Json::array();
  for (const auto& row : rank_table(w)) rows.push_back(row);
  emit({{"element", element_json(w)}, {"rank_table", rows}, {"indexing", "rank_table[q-1][p-1] = #{i <= q : w(8-i) <= p}"}});
  return kOk;
}

int cmd_weyl_billey(const std::string& w_word, const std::string& v_word, const std::string& sign_text) {
  const auto& w = element_from_word(w_word);
  const auto& v = element_from_word(v_word);
  const auto pin = pinning();
  Json convention = {{"unique", pin.pinned_index >= 0}};
  std::optional<RootSign> pinned_sign;
  if (pin.pinned_index >= 0) {
    const auto& c = pin.candidates[static_cast<std::size_t>(pin.pinned_index)];
    convention["point"] = to_string(c.point);
    convention["sign"] = to_string(c.sign);
    pinned_sign = c.sign;
  }
  RootSign sign;
  if (sign_text == "roots") {
    sign = RootSign::positive;
  } else if (sign_text == "negative_roots") {
    sign = RootSign::negative;
  } else {
    if (!pinned_sign) {
      std::cerr << "no unique localization convention to pin\n";
      return kFailed;
    }
    sign = *pinned_sign;
  }
  emit({{"w", element_json(w)},
        {"v", element_json(v)},
        {"sign", to_string(sign)},
        {"restriction", billey_restriction(w, v, sign).to_string()},
        {"pinned_convention", convention}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant classes of G2 degeneracy loci: verification and formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_compact, "Compact single-line JSON output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--scope", verify_args.scope, "all|octonion|triality|orbits|classes|weyl")
      ->check(CLI::IsMember({"all", "octonion", "triality", "orbits", "classes", "weyl"}));
  verify->add_option("--samples", verify_args.samples, "Samples for randomized suites")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "Seed for randomized suites");
  verify->add_option("--inject-fault", verify_args.fault, "Corrupt a stored formula (testing the failure path)")
      ->check(CLI::IsMember({"none", "orbit-class", "chern-form", "gram-table"}))
      ->group("");

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a triality-symmetric map given as JSON");
  classify_cmd->add_option("--input", classify_input, "JSON file (default: stdin)");

  std::string format = "alpha";
  auto* classes = app.add_subcommand("classes", "Emit orbit classes and degeneracy-locus polynomials");
  classes->add_option("--format", format, "alpha|t|chern")->check(CLI::IsMember({"alpha", "t", "chern"}));

  OctonionArgs oct_args;
  auto* octonion = app.add_subcommand("octonion", "Octonion arithmetic on rational coordinates");
  octonion->require_subcommand(1);
  std::string oct_op;
  for (const char* name : {"mul", "norm", "bilinear"}) {
    auto* sub = octonion->add_subcommand(name);
    sub->fallthrough();
    sub->callback([&oct_op, name] { oct_op = name; });
  }
  octonion->add_option("--input", oct_args.input, "JSON {\"u\": [...8], \"v\": [...8]} (default: stdin)");
  octonion->add_option("--u", oct_args.u, "Comma-separated coordinates of u");
  octonion->add_option("--v", oct_args.v, "Comma-separated coordinates of v");
  octonion->fallthrough();

  auto* weyl = app.add_subcommand("weyl", "Weyl group of G2");
  weyl->require_subcommand(1);
  auto* weyl_info = weyl->add_subcommand("info", "Elements, roots and locus indexing");
  std::string rank_word = "tst";
  auto* weyl_rank = weyl->add_subcommand("rank-table", "Rank function table of an element");
  weyl_rank->add_option("--word", rank_word, "Word in s, t (id, w0 allowed)");
  std::string billey_w = "tst";
  std::string billey_v = "w0";
  std::string billey_sign = "pinned";
  auto* weyl_billey = weyl->add_subcommand("billey", "Localization of a Schubert class at a fixed point");
  weyl_billey->add_option("--w", billey_w, "Element whose class is restricted");
  weyl_billey->add_option("--v", billey_v, "Fixed point");
  weyl_billey->add_option("--sign", billey_sign, "roots|negative_roots|pinned")
      ->check(CLI::IsMember({"roots", "negative_roots", "pinned"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return cmd_verify(verify_args);
    if (*classify_cmd) return cmd_classify(classify_input);
    if (*classes) return cmd_classes(format);
    if (*octonion) return cmd_octonion(oct_op, oct_args);
    if (*weyl_info) return cmd_weyl_info();
    if (*weyl_rank) return cmd_weyl_rank_table(rank_word);
    if (*weyl_billey) return cmd_weyl_billey(billey_w, billey_v, billey_sign);
  } catch (const g2deg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadInput;
}

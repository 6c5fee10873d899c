#include "capelli/cli_app.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capelli/combinatorics.hpp"
#include "capelli/error.hpp"
#include "capelli/gmatrix_io.hpp"
#include "capelli/identities.hpp"

namespace capelli {

namespace {

constexpr std::size_t kResidualHead = 20;

IdentityKind parse_identity(const std::string& tok) {
  if (tok == "cap") return IdentityKind::Capelli;
  if (tok == "tur") return IdentityKind::Turnbull;
  if (tok == "tur-anti") return IdentityKind::TurnbullAntisymmetric;
  if (tok == "hu-ks") return IdentityKind::HoweUmedaKostantSahi;
  throw std::domain_error("unknown identity " + tok);
}

ObjectFamily parse_family(const std::string& tok) {
  if (tok == "capelli") return ObjectFamily::Capelli;
  if (tok == "turnbull") return ObjectFamily::Turnbull;
  throw std::domain_error("unknown family " + tok);
}

std::string links_text(const std::vector<Link>& links) {
  std::string out = "[";
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(links[i].source) + "," +
           std::to_string(links[i].end) + ")";
  }
  return out + "]";
}

nlohmann::json links_json(const std::vector<Link>& links) {
  nlohmann::json out = nlohmann::json::array();
  for (const Link& l : links)
    out.push_back(nlohmann::json::array({l.source, l.end}));
  return out;
}

nlohmann::json gmatrix_json(const GMatrix& g) {
  return nlohmann::json{{"n", g.n}, {"a", g.a}, {"b", g.b}, {"d", g.d}};
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

struct Request {
  std::string identity;
  std::string family;
  std::string mode = "algebraic";
  std::string side;
  std::string filter = "all";
  std::string input;
  int n = 1;
  int max_n = 0;  // 0 = use the command's default cap
  int threads = 1;
  bool json = false;
};

int cmd_verify(const Request& req, std::ostream& out) {
  const IdentityKind kind = parse_identity(req.identity);
  const auto start = std::chrono::steady_clock::now();

  NormalPolynomial lhs, rhs;
  std::string extra;  // mode-specific text lines, already newline-terminated
  bool properties_ok = true;
  if (req.mode == "algebraic") {
    VerifyOptions options;
    options.max_n = req.max_n > 0 ? req.max_n : kDefaultMaxVerifyN;
    options.threads = req.threads;
    if (req.n > options.max_n)
      throw ResourceError("dimension " + std::to_string(req.n) +
                          " exceeds the configured maximum " +
                          std::to_string(options.max_n));
    lhs = lhs_polynomial(kind, req.n, options.threads,
                         std::max(options.max_n, kDefaultMaxDeterminantN));
    rhs = rhs_polynomial(kind, req.n);
  } else {
    if (kind != IdentityKind::Capelli && kind != IdentityKind::Turnbull)
      throw std::domain_error(
          req.mode + " mode is only defined for cap and tur (no combinatorial "
                     "expansion exists for " +
          req.identity + ")");
    const ObjectFamily family = kind == IdentityKind::Capelli
                                    ? ObjectFamily::Capelli
                                    : ObjectFamily::Turnbull;
    const int cap = req.max_n > 0 ? req.max_n : kDefaultMaxEnumerationN;
    if (req.mode == "combinatorial") {
      lhs = good_guy_sum(family, req.n, cap);
      rhs = rhs_polynomial(kind, req.n);
      const InvolutionReport inv =
          check_involution_properties(family, req.n, cap);
      properties_ok = inv.all_ok();
      extra += "objects=" + std::to_string(inv.object_count) +
               " pairs=" + std::to_string(inv.pair_count) +
               " good=" + std::to_string(inv.good_count) +
               " bad=" + std::to_string(inv.bad_count) + "\n";
      extra += std::string("involution: involutive=") +
               pass_fail(inv.involutive) +
               " weight_negated=" + pass_fail(inv.weight_negated) +
               " pivot_preserved=" + pass_fail(inv.pivot_preserved) +
               " case_exchanged=" + pass_fail(inv.case_exchanged) +
               " fixed_point_free=" + pass_fail(inv.fixed_point_free) +
               " bad_sum_zero=" + pass_fail(inv.bad_sum_zero) + "\n";
      for (const std::string& v : inv.violation_samples)
        extra += "violation: " + v + "\n";
    } else {  // cross
      lhs = combinatorial_lhs(family, req.n, cap);
      const int det_cap = req.max_n > 0 ? req.max_n : kDefaultMaxDeterminantN;
      rhs = normal_ordered_column_determinant(build_A(kind, req.n),
                                              CommutationSetting::Quantum,
                                              req.threads, det_cap);
    }
  }

  const NormalPolynomial residual = lhs - rhs;
  const bool equal = residual.is_zero() && properties_ok;
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  if (req.json) {
    nlohmann::json j{{"identity", req.identity},
                     {"n", req.n},
                     {"mode", req.mode},
                     {"equal", equal},
                     {"lhs_terms", lhs.size()},
                     {"rhs_terms", rhs.size()},
                     {"residual_head", head_terms(residual, kResidualHead)},
                     {"elapsed_ms", elapsed.count()}};
    out << j.dump() << "\n";
  } else {
    out << "identity=" << req.identity << " n=" << req.n
        << " mode=" << req.mode << "\n"
        << extra << "lhs_terms=" << lhs.size() << " rhs_terms=" << rhs.size()
        << "\n"
        << "equal=" << true_false(equal) << "\n";
    if (!residual.is_zero()) {
      out << "residual_head:\n";
      for (const std::string& term : head_terms(residual, kResidualHead))
        out << "  " << term << "\n";
    }
    out << "elapsed_ms=" << elapsed.count() << "\n";
  }
  return equal ? 0 : 1;
}

int cmd_expand(const Request& req, std::ostream& out) {
  const IdentityKind kind = parse_identity(req.identity);
  const int det_cap = req.max_n > 0 ? req.max_n : kDefaultMaxDeterminantN;
  const NormalPolynomial poly =
      req.side == "lhs" ? lhs_polynomial(kind, req.n, req.threads, det_cap)
                        : rhs_polynomial(kind, req.n);
  if (req.json) {
    nlohmann::json j{{"identity", req.identity},
                     {"n", req.n},
                     {"side", req.side},
                     {"terms", poly.size()},
                     {"canonical", format_canonical(poly)}};
    out << j.dump() << "\n";
  } else {
    out << format_canonical(poly) << "\n";
  }
  return 0;
}

int cmd_objects(const Request& req, std::ostream& out) {
  const ObjectFamily family = parse_family(req.family);
  const int cap = req.max_n > 0 ? req.max_n : kDefaultMaxEnumerationN;
  long long count = 0;
  nlohmann::json entries = nlohmann::json::array();

  for_each_object(
      family, req.n,
      [&](const GMatrix& g) {
        if (req.filter == "bad") {
          for (const ContractionSet& k : contraction_sets(g, family)) {
            if (is_good(PairGK{g, k})) continue;
            ++count;
            if (req.json) {
              nlohmann::json e = gmatrix_json(g);
              e["k"] = links_json(k);
              entries.push_back(std::move(e));
            } else {
              out << describe(g) << " K=" << describe(k) << "\n";
            }
          }
          return;
        }
        if (req.filter == "good" && !is_good(PairGK{g, {}})) return;
        ++count;
        if (req.json)
          entries.push_back(gmatrix_json(g));
        else
          out << describe(g) << "\n";
      },
      cap);

  if (req.json) {
    nlohmann::json j{{"family", req.family},
                     {"n", req.n},
                     {"filter", req.filter},
                     {"count", count},
                     {"objects", std::move(entries)}};
    out << j.dump() << "\n";
  } else {
    out << "count=" << count << "\n";
  }
  return 0;
}

int cmd_involution(const Request& req, std::ostream& out) {
  const ObjectFamily family = parse_family(req.family);
  const int cap = req.max_n > 0 ? req.max_n : kDefaultMaxEnumerationN;

  // First pass: print each 2-orbit once, keyed by its smaller member.
  nlohmann::json orbits = nlohmann::json::array();
  for_each_object(
      family, req.n,
      [&](const GMatrix& g) {
        for (const ContractionSet& k : contraction_sets(g, family)) {
          const PairGK p{g, k};
          if (is_good(p)) continue;
          const auto [q, tag] = involution(p, family);
          if (q < p) continue;
          const std::string wp =
              [&] {
                const NormalMonomial m = weight_of_pair(g, k, family);
                return format_monomial(m.key, m.coeff);
              }();
          const std::string wq =
              [&] {
                const NormalMonomial m = weight_of_pair(q.g, q.k, family);
                return format_monomial(m.key, m.coeff);
              }();
          if (req.json) {
            orbits.push_back(nlohmann::json{
                {"case", to_string(tag)},
                {"partner_case", to_string(partner_case(tag))},
                {"g", gmatrix_json(p.g)},
                {"k", links_json(p.k)},
                {"weight", wp},
                {"image_g", gmatrix_json(q.g)},
                {"image_k", links_json(q.k)},
                {"image_weight", wq}});
          } else {
            out << "orbit [" << to_string(tag) << "<->"
                << to_string(partner_case(tag)) << "] " << describe(p.g)
                << " K=" << describe(p.k) << " w=" << wp << "  <->  "
                << describe(q.g) << " K=" << describe(q.k) << " w=" << wq
                << "\n";
          }
        }
      },
      cap);

  const InvolutionReport inv = check_involution_properties(family, req.n, cap);
  if (req.json) {
    nlohmann::json j{{"family", req.family},
                     {"n", req.n},
                     {"object_count", inv.object_count},
                     {"pair_count", inv.pair_count},
                     {"good_count", inv.good_count},
                     {"bad_count", inv.bad_count},
                     {"involutive", inv.involutive},
                     {"weight_negated", inv.weight_negated},
                     {"pivot_preserved", inv.pivot_preserved},
                     {"case_exchanged", inv.case_exchanged},
                     {"fixed_point_free", inv.fixed_point_free},
                     {"bad_sum_zero", inv.bad_sum_zero},
                     {"ok", inv.all_ok()},
                     {"violations", inv.violation_samples},
                     {"orbits", std::move(orbits)}};
    out << j.dump() << "\n";
  } else {
    out << "objects=" << inv.object_count << " pairs=" << inv.pair_count
        << " good=" << inv.good_count << " bad=" << inv.bad_count
        << " orbits=" << inv.bad_count / 2 << "\n"
        << "involutive=" << pass_fail(inv.involutive)
        << " weight_negated=" << pass_fail(inv.weight_negated)
        << " pivot_preserved=" << pass_fail(inv.pivot_preserved)
        << " case_exchanged=" << pass_fail(inv.case_exchanged)
        << " fixed_point_free=" << pass_fail(inv.fixed_point_free)
        << " bad_sum_zero=" << pass_fail(inv.bad_sum_zero) << "\n";
    for (const std::string& v : inv.violation_samples)
      out << "violation: " << v << "\n";
    out << "result=" << pass_fail(inv.all_ok()) << "\n";
  }
  return inv.all_ok() ? 0 : 1;
}

int cmd_weight(const Request& req, std::ostream& out, std::ostream& err) {
  const ObjectFamily family = parse_family(req.family);
  const GMatrix g = gmatrix_from_file(req.input);
  const std::vector<std::string> bad = violations(g, family);
  if (!bad.empty()) {
    for (const std::string& v : bad) err << "invalid object: " << v << "\n";
    return 2;
  }

  const std::vector<Link> links = links_of(g, family);
  const Polynomial w = weight_of(g, family);
  const std::vector<ContractionSet> sets = contraction_sets(g, family);

  if (req.json) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const ContractionSet& k : sets) {
      const NormalMonomial m = weight_of_pair(g, k, family);
      pairs.push_back(nlohmann::json{
          {"k", links_json(k)}, {"weight", format_monomial(m.key, m.coeff)}});
    }
    nlohmann::json j{{"family", req.family},
                     {"n", g.n},
                     {"object", gmatrix_json(g)},
                     {"links", links_json(links)},
                     {"weight", format_word(w.terms().front())},
                     {"pairs", std::move(pairs)}};
    out << j.dump() << "\n";
  } else {
    out << "family=" << req.family << " n=" << g.n << "\n"
        << "links=" << links_text(links) << "\n"
        << "w(G)=" << format_word(w.terms().front()) << "\n";
    for (const ContractionSet& k : sets) {
      const NormalMonomial m = weight_of_pair(g, k, family);
      out << "w(G," << describe(k) << ")=" << format_monomial(m.key, m.coeff)
          << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact symbolic verifier for Capelli-type determinant "
               "identities in the Weyl algebra"};
  app.name("capelli");
  app.require_subcommand(1);

  Request req;
  const std::vector<std::string> identities{"cap", "tur", "tur-anti", "hu-ks"};
  const std::vector<std::string> families{"capelli", "turnbull"};

  CLI::App* verify =
      app.add_subcommand("verify", "Check an identity and report the residual");
  verify->add_option("--identity", req.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember(identities));
  verify->add_option("--n", req.n, "Matrix dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  verify
      ->add_option("--mode", req.mode,
                   "algebraic, combinatorial (good guys + involution), or "
                   "cross (full weight sum vs determinant)")
      ->check(CLI::IsMember({"algebraic", "combinatorial", "cross"}));
  verify->add_option("--max-n", req.max_n, "Override the resource cap")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", req.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", req.json, "Machine-readable report");

  CLI::App* expand = app.add_subcommand(
      "expand", "Print one side of an identity in canonical normal form");
  expand->add_option("--identity", req.identity, "Identity to expand")
      ->required()
      ->check(CLI::IsMember(identities));
  expand->add_option("--n", req.n, "Matrix dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  expand->add_option("--side", req.side, "lhs or rhs")
      ->required()
      ->check(CLI::IsMember({"lhs", "rhs"}));
  expand->add_option("--max-n", req.max_n, "Override the resource cap")
      ->check(CLI::PositiveNumber);
  expand->add_option("--threads", req.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  expand->add_flag("--json", req.json, "Machine-readable report");

  CLI::App* objects = app.add_subcommand(
      "objects", "Enumerate a combinatorial family in canonical order");
  objects->add_option("--family", req.family, "capelli or turnbull")
      ->required()
      ->check(CLI::IsMember(families));
  objects->add_option("--n", req.n, "Matrix dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  objects
      ->add_option("--filter", req.filter,
                   "all objects, good objects, or bad (G,K) pairs")
      ->check(CLI::IsMember({"all", "good", "bad"}));
  objects->add_option("--max-n", req.max_n, "Override the resource cap")
      ->check(CLI::PositiveNumber);
  objects->add_flag("--json", req.json, "Machine-readable report");

  CLI::App* involution = app.add_subcommand(
      "involution", "List the 2-orbits of the sign-reversing involution and "
                    "check its defining properties");
  involution->add_option("--family", req.family, "capelli or turnbull")
      ->required()
      ->check(CLI::IsMember(families));
  involution->add_option("--n", req.n, "Matrix dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  involution->add_option("--max-n", req.max_n, "Override the resource cap")
      ->check(CLI::PositiveNumber);
  involution->add_flag("--json", req.json, "Machine-readable report");

  CLI::App* weight = app.add_subcommand(
      "weight", "Weights and contraction sets of one object read from JSON");
  weight->add_option("--family", req.family, "capelli or turnbull")
      ->required()
      ->check(CLI::IsMember(families));
  weight->add_option("--input", req.input, "Path to a GMatrix JSON file")
      ->required();
  weight->add_flag("--json", req.json, "Machine-readable report");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("capelli");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(req, out);
    if (expand->parsed()) return cmd_expand(req, out);
    if (objects->parsed()) return cmd_objects(req, out);
    if (involution->parsed()) return cmd_involution(req, out);
    if (weight->parsed()) return cmd_weight(req, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace capelli

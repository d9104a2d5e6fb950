#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qweyl/bquot.hpp"
#include "qweyl/deriv.hpp"
#include "qweyl/exprio.hpp"
#include "qweyl/gwa.hpp"
#include "qweyl/so5.hpp"
#include "qweyl/verify.hpp"

namespace qweyl::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::string alpha;
  std::string beta;
};

RatQ param_value(const std::string& text, const char* name, const std::string& fallback = "") {
  const std::string& src = text.empty() ? fallback : text;
  if (src.empty()) throw UsageError(std::string("--") + name + " is required");
  return exprio::parse_ratq(src);
}

// Owns whatever algebra an expression is evaluated in.
struct Host {
  std::string name;
  std::optional<Algebra> algebra;
  std::optional<bquot::QuotientAlgebra> quotient;
  std::optional<gwa::GwaAlgebra> gwa;
  std::map<std::string, RatQ> scalars;

  exprio::Context context() const {
    if (quotient) return exprio::context_for(quotient->alg);
    if (algebra) return exprio::context_for(*algebra);
    return exprio::context_for(*gwa, scalars);
  }
  Alphabet alphabet() const { return context().alphabet; }
  Elem commutator(const Elem& a, const Elem& b) const {
    if (quotient) return quotient->commutator(a, b);
    if (algebra) return algebra->commutator(a, b);
    return gwa::gwa_commutator(*gwa, a, b);
  }
  std::vector<Elem> generators() const {
    std::vector<Elem> out;
    if (gwa && !algebra && !quotient) return {gwa::h_pow(1), gwa::x_pow(1), gwa::y_pow(1)};
    const Presentation& p = quotient ? quotient->pres() : *algebra->pres;
    for (int g = 0; g < static_cast<int>(p.size()); ++g) out.push_back(p.gen(g));
    return out;
  }
};

Host make_host(const std::string& name, const ParamFlags& flags) {
  Host h;
  h.name = name;
  if (name == "so5") {
    h.algebra = so5::algebra_u();
  } else if (name == "so5-l4") {
    h.algebra = so5::algebra_u4();
  } else if (name == "so5-l43") {
    h.algebra = so5::algebra_u43();
  } else if (name == "b" || name == "r") {
    const bquot::Params p{param_value(flags.alpha, "alpha"), param_value(flags.beta, "beta")};
    h.quotient = name == "b" ? bquot::make_b(p) : bquot::make_r(p);
  } else if (name == "gwa") {
    const RatQ alpha = param_value(flags.alpha, "alpha");
    h.gwa = gwa::GwaAlgebra::localized_quotient(alpha);
    h.scalars = {{"alpha", alpha}};
  } else {
    throw UsageError("unknown algebra " + name);
  }
  return h;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Elem spec_entry(const json& spec, const std::string& key, const exprio::Context& ctx, std::size_t ngens) {
  if (!spec.is_object() || !spec.contains(key)) throw exprio::SchemaError("spec is missing \"" + key + "\"");
  const json& v = spec[key];
  if (v.is_string()) return exprio::parse_elem(v.get<std::string>(), ctx);
  return exprio::from_json(v, ngens);
}

void print_checks(std::ostream& out, const std::vector<Check>& checks, bool as_json) {
  if (as_json) {
    out << exprio::report_json(checks).dump(2) << "\n";
    return;
  }
  for (const auto& c : checks) {
    out << (c.pass ? "pass  " : "FAIL  ") << c.identity << "  " << c.statement;
    if (!c.pass) out << "  residual: " << exprio::print_canonical(c.residual, c.alphabet);
    out << "\n";
  }
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void print_elem(std::ostream& out, const Elem& e, const Alphabet& abc, bool as_json) {
  if (as_json) {
    json j = exprio::to_json(e);
    j["text"] = exprio::print_canonical(e, abc);
    out << j.dump() << "\n";
  } else {
    out << exprio::print_canonical(e, abc) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in U_q+(so5), its simple quotients, their localization and the quantum GWA"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  ParamFlags flags;
  auto add_params = [&flags](CLI::App* sub) {
    sub->add_option("--alpha", flags.alpha, "alpha as an expression in q, e.g. q^2 or 1/(q-1)");
    sub->add_option("--beta", flags.beta, "beta as an expression in q");
  };

  std::string algebra = "so5";
  std::vector<std::string> exprs;
  auto add_algebra = [&algebra](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "so5 | so5-l4 | so5-l43 | b | r | gwa")
        ->check(CLI::IsMember({"so5", "so5-l4", "so5-l43", "b", "r", "gwa"}));
  };

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  add_algebra(nf);
  add_params(nf);
  nf->add_option("expr", exprs, "Expression")->required()->expected(1);

  auto* commute = app.add_subcommand("commute", "Commutator a*b - b*a");
  add_algebra(commute);
  add_params(commute);
  commute->add_option("exprs", exprs, "Two expressions")->required()->expected(2);

  auto* central = app.add_subcommand("central", "Whether an element commutes with every generator");
  add_algebra(central);
  add_params(central);
  central->add_option("expr", exprs, "Expression")->required()->expected(1);

  auto* dda = app.add_subcommand("dda", "Deleting-derivation elements, T-commutation scalars and checks");

  auto* gwa_cmd = app.add_subcommand("gwa", "Quantum generalized Weyl algebra tools");
  gwa_cmd->require_subcommand(1);
  auto* gwa_nf = gwa_cmd->add_subcommand("nf", "Normal form in the GWA with a = alpha + q/(q^2+1)^2 h^2");
  add_params(gwa_nf);
  gwa_nf->add_option("expr", exprs, "Expression in h, x, y")->required()->expected(1);
  std::string spec_path;
  auto* gwa_dec = gwa_cmd->add_subcommand("decompose", "Write a derivation as ad_w + delta_lambda");
  add_params(gwa_dec);
  gwa_dec->add_option("--spec", spec_path, "JSON file {\"Dh\": ..., \"Dx\": ..., \"Dy\": ...}")->required();

  auto* der = app.add_subcommand("derivation", "Derivations of B_{alpha,beta}");
  der->require_subcommand(1);
  auto* der_check = der->add_subcommand("check", "Leibniz check on the defining relations");
  add_params(der_check);
  der_check->add_option("--spec", spec_path, "JSON file {\"De1\": ..., \"De2\": ..., \"De4\": ...}")->required();
  auto* der_inner = der->add_subcommand("innerize", "Find x with D = ad_x (alpha*beta != 0)");
  add_params(der_inner);
  der_inner->add_option("--spec", spec_path, "JSON file {\"De1\": ..., \"De2\": ..., \"De4\": ...}")->required();

  int degree = 3;
  auto* hh1 = app.add_subcommand("hh1", "Truncated estimate of dim HH^1(B_{alpha,beta})");
  add_params(hh1);
  hh1->add_option("--degree", degree, "Degree bound N >= 2")->check(CLI::Range(2, 8));

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
  add_params(verify_cmd);
  verify_cmd->add_option("--degree", degree, "Degree bound for the truncated checks")->check(CLI::Range(2, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (nf->parsed() || commute->parsed() || central->parsed()) {
      const Host host = make_host(algebra, flags);
      const exprio::Context ctx = host.context();
      const Elem a = exprio::parse_elem(exprs.at(0), ctx);
      if (nf->parsed()) {
        print_elem(out, a, host.alphabet(), as_json);
      } else if (commute->parsed()) {
        const Elem b = exprio::parse_elem(exprs.at(1), ctx);
        print_elem(out, host.commutator(a, b), host.alphabet(), as_json);
      } else {
        bool is_central = true;
        for (const Elem& g : host.generators()) is_central = is_central && host.commutator(a, g).is_zero();
        if (as_json) {
          out << json{{"central", is_central}}.dump() << "\n";
        } else {
          out << (is_central ? "true" : "false") << "\n";
        }
      }
      return kExitOk;
    }

    if (dda->parsed()) {
      const so5::DdaElements d = so5::dda_elements();
      const Alphabet abc4 = Alphabet::of(*d.host4);
      const Alphabet abc43 = Alphabet::of(*d.host43);
      const auto lambda = so5::t_commutation();
      std::vector<Check> checks = so5::dda_checks();
      for (auto& c : so5::t_commutation_checks()) checks.push_back(std::move(c));
      if (as_json) {
        json j;
        j["E14"] = exprio::print_canonical(d.e14, abc4);
        j["E24"] = exprio::print_canonical(d.e24, abc4);
        j["E13"] = exprio::print_canonical(d.e13, abc43);
        for (std::size_t i = 0; i < 4; ++i)
          j["T" + std::to_string(i + 1)] = exprio::print_canonical(d.t[i], abc43);
        json rows = json::array();
        for (const auto& row : lambda) {
          json r = json::array();
          for (const auto& v : row) r.push_back(v.to_string());
          rows.push_back(r);
        }
        j["lambda"] = rows;
        j["checks"] = exprio::report_json(checks);
        out << j.dump(2) << "\n";
      } else {
        out << "E14 = " << exprio::print_canonical(d.e14, abc4) << "\n";
        out << "E24 = " << exprio::print_canonical(d.e24, abc4) << "\n";
        out << "E13 = " << exprio::print_canonical(d.e13, abc43) << "\n";
        for (std::size_t i = 0; i < 4; ++i)
          out << "T" << i + 1 << " = " << exprio::print_canonical(d.t[i], abc43) << "\n";
        out << "lambda[i][j] with T_j*T_i = lambda[i][j]*T_i*T_j:\n";
        for (const auto& row : lambda) {
          for (std::size_t j = 0; j < 4; ++j) out << (j ? "  " : "  ") << row[j].to_string();
          out << "\n";
        }
        print_checks(out, checks, false);
      }
      return all_pass(checks) ? kExitOk : kExitFailedChecks;
    }

    if (gwa_nf->parsed() || gwa_dec->parsed()) {
      const Host host = make_host("gwa", flags);
      const exprio::Context ctx = host.context();
      const Alphabet abc = Alphabet::gwa_alphabet();
      if (gwa_nf->parsed()) {
        print_elem(out, exprio::parse_elem(exprs.at(0), ctx), abc, as_json);
        return kExitOk;
      }
      const json spec = read_json_file(spec_path);
      const gwa::GwaDerivation d{spec_entry(spec, "Dh", ctx, 2), spec_entry(spec, "Dx", ctx, 2),
                                 spec_entry(spec, "Dy", ctx, 2)};
      const gwa::GwaDecomp dec = gwa::gwa_decompose(*host.gwa, d);
      if (as_json) {
        out << json{{"w", exprio::to_json(dec.w)},
                    {"w_text", exprio::print_canonical(dec.w, abc)},
                    {"lambda", exprio::to_json(dec.lambda)}}
                   .dump()
            << "\n";
      } else {
        out << "w = " << exprio::print_canonical(dec.w, abc) << "\n";
        out << "lambda = " << dec.lambda.to_string() << "\n";
      }
      return kExitOk;
    }

    if (der_check->parsed() || der_inner->parsed()) {
      const bquot::Params p{param_value(flags.alpha, "alpha"), param_value(flags.beta, "beta")};
      const bquot::QuotientAlgebra b = bquot::make_b(p);
      const exprio::Context ctx = exprio::context_for(b.alg);
      const json spec = read_json_file(spec_path);
      const deriv::DerivSpec d{spec_entry(spec, "De1", ctx, 3), spec_entry(spec, "De2", ctx, 3),
                               spec_entry(spec, "De4", ctx, 3)};
      for (const Elem* e : {&d.de1, &d.de2, &d.de4})
        if (!bquot::in_basis(*e, false)) throw UsageError("spec images must lie in B");
      if (der_check->parsed()) {
        const std::vector<Check> checks = deriv::derivation_residuals(b, d);
        print_checks(out, checks, as_json);
        return all_pass(checks) ? kExitOk : kExitInconsistentSpec;
      }
      const bquot::QuotientAlgebra r = bquot::make_r(p);
      const deriv::Innerization inn = deriv::innerize_detailed(b, r, d);
      const Alphabet abc = Alphabet::of(b.pres());
      if (as_json) {
        out << json{{"x", exprio::to_json(inn.x)},
                    {"x_text", exprio::print_canonical(inn.x, abc)},
                    {"lambda", exprio::to_json(inn.lambda)}}
                   .dump()
            << "\n";
      } else {
        out << "x = " << exprio::print_canonical(inn.x, abc) << "\n";
      }
      return kExitOk;
    }

    if (hh1->parsed()) {
      const bquot::Params p{param_value(flags.alpha, "alpha"), param_value(flags.beta, "beta")};
      const bquot::QuotientAlgebra b = bquot::make_b(p);
      const deriv::Hh1Estimate e = deriv::hh1_estimate(b, degree);
      const std::string note =
          "truncated estimate: derivations with images of degree <= N modulo ad_b, deg b <= N+2";
      if (as_json) {
        out << json{{"degree", degree},
                    {"derivations", e.derivations},
                    {"inner", e.inner},
                    {"hh1", e.value},
                    {"note", note}}
                   .dump()
            << "\n";
      } else {
        out << e.value << "\n";
        out << "(" << note << "; dim derivations = " << e.derivations << ", inner = " << e.inner << ")\n";
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      verify::Options opts;
      opts.degree = degree;
      if (!flags.alpha.empty() || !flags.beta.empty())
        opts.params.push_back({param_value(flags.alpha, "alpha", "1"), param_value(flags.beta, "beta", "1")});
      const std::vector<Check> checks = verify::run(opts);
      print_checks(out, checks, as_json);
      if (!as_json) {
        const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
        out << passed << "/" << checks.size() << " identities pass\n";
      }
      return all_pass(checks) ? kExitOk : kExitFailedChecks;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotInner& e) {
    err << "not inner: " << e.what() << "\n";
    return kExitNotInner;
  } catch (const NotADerivation& e) {
    err << "inconsistent spec: " << e.what() << "\n";
    return kExitInconsistentSpec;
  } catch (const ObstructedShape& e) {
    err << "inconsistent spec: " << e.what() << "\n";
    return kExitInconsistentSpec;
  } catch (const exprio::SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const exprio::UnknownGenerator& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const exprio::SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonInvertibleNegativePower& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BothParamsZero& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BetaZero& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace qweyl::cli

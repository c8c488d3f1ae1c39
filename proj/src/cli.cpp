#include "fermat/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "fermat/belyi_stack.hpp"
#include "fermat/error.hpp"
#include "fermat/gfe.hpp"
#include "fermat/group_structure.hpp"
#include "fermat/json_io.hpp"
#include "fermat/quartic442.hpp"
#include "fermat/s_arith.hpp"
#include "fermat/smith.hpp"

namespace fermat::cli {

namespace {

using fermat::json::Json;

std::vector<Integer> parse_integer_list(const std::string& text, std::size_t expected,
                                        const char* what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_integer(part));
  if (out.size() != expected)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " needs " +
                                             std::to_string(expected) + " comma-separated integers");
  return out;
}

// "s/t", "s:t", "s" (t = 1) or "inf".
ProjPointQ parse_point(const std::string& text) {
  if (text == "inf" || text == "oo") return ProjPointQ::infinity();
  const auto sep = text.find_first_of("/:");
  if (sep == std::string::npos) return ProjPointQ(parse_integer(text), 1);
  return ProjPointQ(parse_integer(text.substr(0, sep)), parse_integer(text.substr(sep + 1)));
}

GFE make_gfe(const std::string& signature, const std::string& coeffs) {
  auto c = parse_integer_list(coeffs, 3, "--coeffs");
  return GFE(Signature::parse(signature), c[0], c[1], c[2]);
}

Integer positive(const std::string& text, const char* what) {
  Integer v = parse_integer(text);
  if (v < 1) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be >= 1");
  return v;
}

bool is_scalar_row(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string inline_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
  return out + "]";
}

bool is_inline(const Json& j) {
  if (is_scalar_row(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!is_scalar_row(e)) return false;
  return true;
}

// Plain-text rendering of the same document the JSON format prints.
void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_inline(value)) {
        out << pad << key << ": " << inline_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (j.is_array() && !is_inline(j)) {
    for (const auto& e : j) {
      if (is_inline(e)) {
        out << pad << "- " << inline_text(e) << '\n';
      } else {
        out << pad << "-\n";
        render_text(e, out, indent + 2);
      }
    }
  } else {
    out << pad << inline_text(j) << '\n';
  }
}

Json snf_json(const SNFResult& r) {
  Json out;
  out["U"] = json::matrix(r.U);
  out["D"] = json::matrix(r.D);
  out["V"] = json::matrix(r.V);
  out["diagonal"] = json::integers(r.diagonal());
  out["rank"] = std::to_string(r.rank());
  return out;
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::WorkLimitExceeded: return kWorkLimitExceeded;
    case ErrorCode::PipelineMismatch: return kPipelineMismatch;
    default: return kInvalidInput;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for generalized Fermat equations and their Belyi stacks",
               "fermat-descent"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // Raw option text; validation happens in the handler so that all input
  // errors share exit code 1.
  std::string matrix, signature = "2,3,7", coeffs = "1,1,1", primes, q, bound = "10",
                      solution, d = "1", height, n = "2";
  bool search_units = false, no_presieve = false, all_twists = false;
  std::string twist_height = "12";
  unsigned threads = 0;
  std::function<Json()> action;

  const FactorConfig factor = FactorConfig::from_environment();
  EnumerationOptions enum_opts;
  enum_opts.factor = factor;

  auto* snf = app.add_subcommand("snf", "Smith normal form U*A*V = D");
  snf->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
  snf->callback([&] {
    action = [&] { return snf_json(smith_normal_form(IntMatrix::parse(matrix))); };
  });

  auto* gs = app.add_subcommand("group-structure", "Torus rank and torsion of H");
  gs->add_option("--signature", signature, "a,b,c")->required();
  gs->callback([&] {
    action = [&] {
      Signature sig = Signature::parse(signature);
      HStructure h = h_structure(sig);
      Json j;
      j["signature"] = json::integers({sig.a(), sig.b(), sig.c()});
      j["torus_rank"] = std::to_string(h.torus_rank);
      j["torsion"] = json::integers(h.torsion);
      j["triangle_abelianization"] = json::integers(triangle_abelianization(sig));
      return j;
    };
  });

  auto* weights = app.add_subcommand("weights", "Weight vector, d and m of a signature");
  weights->add_option("--signature", signature, "a,b,c")->required();
  weights->callback([&] {
    action = [&] {
      WeightData w = weight_vector(Signature::parse(signature));
      Json j;
      j["w"] = json::integers({w.w[0], w.w[1], w.w[2]});
      j["d"] = json::integer(w.d);
      j["m"] = json::integer(w.m);
      return j;
    };
  });

  auto* h1 = app.add_subcommand("h1", "Unit classes R^x/(R^x)^n");
  h1->add_option("--primes", primes, "Comma-separated primes; empty for Z")->required();
  h1->add_option("--n", n, "Exponent n >= 2")->capture_default_str();
  h1->callback([&] {
    action = [&] {
      Integer nn = parse_integer(n);
      if (nn < 2) throw Error(ErrorCode::InvalidInput, "--n must be >= 2");
      UnitClassGroup g = s_unit_reps(SRing::parse(primes), to_ulong(nn));
      Json j;
      j["n"] = std::to_string(g.n);
      j["count"] = std::to_string(g.representatives.size());
      j["representatives"] = json::integers(g.representatives);
      return j;
    };
  });

  auto* sp = app.add_subcommand("stack-point", "Belyi stack point test");
  sp->add_option("--q", q, "Point s/t, s:t or inf")->required();
  sp->add_option("--signature", signature, "a,b,c")->required();
  sp->add_option("--primes", primes, "Comma-separated primes; empty for Z")->required();
  sp->callback([&] {
    action = [&] {
      const Signature sig = Signature::parse(signature);
      const SRing ring = SRing::parse(primes);
      const ProjPointQ point = parse_point(q);
      auto cert = is_stack_point(point, sig, ring);
      Json j = json::certificate(cert);
      j["accepted"] = cert.accepted();
      if (cert.accepted())
        j["automorphism_order"] =
            std::to_string(stack_point_automorphism_order(point, sig, ring));
      return j;
    };
  });

  auto* chi = app.add_subcommand("chi", "Euler characteristic 1/a + 1/b + 1/c - 1");
  chi->add_option("--signature", signature, "a,b,c")->required();
  chi->callback([&] {
    action = [&] {
      Json j;
      j["chi"] = json::rational(euler_characteristic(Signature::parse(signature)));
      return j;
    };
  });

  auto* classify = app.add_subcommand("classify", "Spherical / euclidean / hyperbolic");
  classify->add_option("--signature", signature, "a,b,c")->required();
  classify->callback([&] {
    action = [&] { return json::signature_class(classify_signature(Signature::parse(signature))); };
  });

  auto add_gfe_options = [&](CLI::App* sub) {
    sub->add_option("--signature", signature, "a,b,c")->required();
    sub->add_option("--coeffs", coeffs, "A,B,C")->capture_default_str();
  };

  auto* en = app.add_subcommand("enumerate", "Primitive solutions with max(|x|,|y|,|z|) <= bound");
  add_gfe_options(en);
  en->add_option("--bound", bound, "Search bound")->capture_default_str();
  en->add_flag("--no-presieve", no_presieve, "Disable the modular pre-sieve");
  en->add_option("--threads", threads, "Worker threads (0: all cores)");
  en->callback([&] {
    action = [&] {
      GFE f = make_gfe(signature, coeffs);
      enum_opts.presieve = !no_presieve;
      enum_opts.threads = threads;
      auto sols = enumerate_primitive_solutions(f, positive(bound, "--bound"), enum_opts);
      Json j;
      j["equation"] = f.to_string();
      j["bound"] = bound;
      j["count"] = std::to_string(sols.size());
      j["solutions"] = json::solutions(sols);
      return j;
    };
  });

  auto* jm = app.add_subcommand("jmap", "Image (-A x^a : C z^c) of a primitive solution");
  add_gfe_options(jm);
  jm->add_option("--solution", solution, "x,y,z")->required();
  jm->callback([&] {
    action = [&] {
      GFE f = make_gfe(signature, coeffs);
      auto v = parse_integer_list(solution, 3, "--solution");
      PrimitiveSolution sol{v[0], v[1], v[2]};
      if (f.evaluate(sol.x, sol.y, sol.z) != 0 || gcd(gcd(sol.x, sol.y), sol.z) != 1)
        throw Error(ErrorCode::InvalidInput, "not a primitive solution of " + f.to_string());
      Json j;
      j["image"] = json::point(j_map(f, sol));
      return j;
    };
  });

  auto* rec = app.add_subcommand("recover", "Primitive solutions lying over a stack point");
  rec->add_option("--q", q, "Point s/t, s:t or inf")->required();
  add_gfe_options(rec);
  rec->add_option("--primes", primes, "Comma-separated primes; empty for Z")->required();
  rec->add_flag("--search-units", search_units, "Also scan unit-adjusted coefficients");
  rec->callback([&] {
    action = [&] {
      GFE f = make_gfe(signature, coeffs);
      auto found = recover_solutions(parse_point(q), f, SRing::parse(primes), search_units, factor);
      Json list = Json::array();
      for (const auto& r : found) {
        Json e;
        e["solution"] = json::solution(r.solution);
        e["coefficients"] = json::integers({r.A, r.B, r.C});
        e["classical"] = r.classical;
        list.push_back(std::move(e));
      }
      Json j;
      j["recovered"] = std::move(list);
      return j;
    };
  });

  auto* vi = app.add_subcommand("verify-inclusion",
                                "Check every solution maps to a stack point over the bad-prime ring");
  add_gfe_options(vi);
  vi->add_option("--bound", bound, "Search bound")->capture_default_str();
  vi->callback([&] {
    action = [&] {
      GFE f = make_gfe(signature, coeffs);
      auto report = verify_descent_inclusion(f, positive(bound, "--bound"), enum_opts);
      return json::inclusion_report(report);
    };
  });

  auto* tw = app.add_subcommand("twist", "Quartic twist E_d: v^2 w = u^3 - d u w^2");
  tw->add_option("--d", d, "Twist parameter d != 0")->required();
  tw->callback([&] {
    action = [&] {
      TwistedCurve e = twist_curve(parse_integer(d));
      Integer minus_d = -e.d;
      Json j;
      j["d"] = json::integer(e.d);
      j["equation"] = "v^2 w = u^3 " + std::string(minus_d < 0 ? "- " : "+ ") +
                      abs(minus_d).get_str() + " u w^2";
      return j;
    };
  });

  auto* tor = app.add_subcommand("torsion", "Rational torsion of E_d and its phi_d images");
  tor->add_option("--d", d, "Twist parameter d != 0")->required();
  tor->add_option("--height", height, "Also list points with u of height <= this");
  tor->callback([&] {
    action = [&] {
      TwistedCurve e = twist_curve(parse_integer(d));
      auto points = torsion_points(e, factor);
      Json pts = Json::array(), imgs = Json::array();
      for (const auto& p : points) {
        pts.push_back(json::curve_point(p));
        imgs.push_back(json::point(belyi_eval(e, p)));
      }
      Json j;
      j["d"] = json::integer(e.d);
      j["order"] = std::to_string(points.size());
      j["torsion"] = std::move(pts);
      j["images"] = std::move(imgs);
      if (!height.empty()) {
        Json bounded = Json::array();
        for (const auto& p : rational_points_bounded(e, positive(height, "--height")))
          bounded.push_back(json::curve_point(p));
        j["bounded_points"] = std::move(bounded);
      }
      return j;
    };
  });

  auto* sv = app.add_subcommand("sieve442", "Covering, twisting and sieving for x^4 + y^4 = z^2");
  sv->add_option("--bound", bound, "Cross-check bound for direct enumeration")->capture_default_str();
  sv->add_flag("--all-twists", all_twists, "Also feed non-admissible twists");
  sv->add_option("--twist-height", twist_height, "Height for non-admissible twist points")
      ->capture_default_str();
  sv->callback([&] {
    action = [&] {
      SieveOptions opts;
      opts.include_all_twists = all_twists;
      opts.twist_height = positive(twist_height, "--twist-height");
      opts.enumeration = enum_opts;
      return json::sieve_report(sieve_442(positive(bound, "--bound"), opts));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::ostringstream discard;
    app.exit(e, discard, err);
    return kInvalidInput;
  }

  try {
    const Json result = action();
    if (format == "json") {
      out << result.dump(2) << '\n';
    } else {
      render_text(result, out, 0);
    }
    return kOk;
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error[InvalidInput]: " << e.what() << '\n';
    return kInvalidInput;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fermat-descent"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fermat::cli

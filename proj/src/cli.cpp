#include "codeal/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "codeal/bases.hpp"
#include "codeal/io.hpp"
#include "codeal/render.hpp"

namespace codeal {

namespace {

struct Options {
  std::string verb;
  std::string input;
  std::string order = "lex";
  bool json = false;
  bool aliases = false;
  bool check = false;
  std::uint64_t cap = kDefaultCap;
  bool cap_given = false;
};

std::uint64_t resolve_cap(const Options& o) {
  if (o.cap_given) return o.cap;
  if (const char* env = std::getenv("CODEAL_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw Error("CODEAL_CAP must be a positive integer");
  }
  return kDefaultCap;
}

std::string render_row(const MatrixFp& m, std::size_t r) {
  std::string s;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) s += " ";
    s += std::to_string(m.at(r, c));
  }
  return s;
}

// Order spec: "lex" (first information set), "lex:i1,i2,..." (1-based,
// distinct; the first k listed indices must form an information set),
// "grlex", "grevlex".
struct OrderSpec {
  enum class Route { closed_lex, engine } route;
  std::vector<std::size_t> info_set;           // closed_lex
  std::vector<std::size_t> priority;           // full variable priority
  MonomialOrder::Kind engine_kind = MonomialOrder::Kind::grlex;
};

OrderSpec parse_order_spec(const std::string& spec, const LinearCode& code) {
  const std::size_t n = code.length(), k = code.dimension();
  if (spec == "grlex" || spec == "grevlex") {
    OrderSpec o;
    o.route = OrderSpec::Route::engine;
    o.engine_kind = spec == "grlex" ? MonomialOrder::Kind::grlex
                                    : MonomialOrder::Kind::grevlex;
    o.priority = MonomialOrder::identity_priority(n);
    return o;
  }
  if (spec != "lex" && spec.rfind("lex:", 0) != 0) {
    throw Error("order must be lex[:i1,i2,...], grlex or grevlex");
  }

  std::vector<std::size_t> listed;
  if (spec == "lex") {
    listed = code.first_information_set();
  } else {
    std::stringstream ss(spec.substr(4));
    std::string tok;
    std::vector<char> seen(n, 0);
    while (std::getline(ss, tok, ',')) {
      std::size_t idx = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw Error("bad index '" + tok + "' in order");
        idx = idx * 10 + static_cast<std::size_t>(c - '0');
      }
      if (idx < 1 || idx > n) throw Error("order index out of range: " + tok);
      if (seen[idx - 1]) throw Error("duplicate order index: " + tok);
      seen[idx - 1] = 1;
      listed.push_back(idx - 1);
    }
    if (listed.size() < k)
      throw Error("order must list at least k = " + std::to_string(k) +
                  " indices");
  }

  OrderSpec o;
  o.route = OrderSpec::Route::closed_lex;
  o.info_set.assign(listed.begin(), listed.begin() + static_cast<std::ptrdiff_t>(k));
  o.priority = listed;
  std::vector<char> in_listed(n, 0);
  for (std::size_t v : listed) in_listed[v] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_listed[v]) o.priority.push_back(v);
  }
  return o;
}

int do_info(const LinearCode& code, const Options& o, std::uint64_t cap,
            std::ostream& out) {
  (void)o;
  out << "p: " << code.p() << "\n";
  out << "n: " << code.length() << "\n";
  out << "k: " << code.dimension() << "\n";
  std::string info;
  for (std::size_t i : code.first_information_set()) {
    if (!info.empty()) info += " ";
    info += std::to_string(i + 1);
  }
  out << "information set: " << info << "\n";
  try {
    out << "minimum distance: " << minimum_distance(code, cap) << "\n";
  } catch (const TooLarge&) {
    out << "minimum distance: unknown (enumeration exceeds cap)\n";
  }
  out << "generator:\n";
  for (std::size_t r = 0; r < code.dimension(); ++r)
    out << "  " << render_row(code.generator(), r) << "\n";
  out << "parity check:\n";
  for (std::size_t r = 0; r < code.parity_check().rows(); ++r)
    out << "  " << render_row(code.parity_check(), r) << "\n";
  return 0;
}

int do_gb(const LinearCode& code, const Options& o, std::ostream& out,
          std::ostream& err) {
  OrderSpec spec = parse_order_spec(o.order, code);
  GroebnerBasis gb = [&] {
    if (spec.route == OrderSpec::Route::closed_lex) {
      return closed_form_gb(code, spec.info_set);
    }
    MonomialOrder order = spec.engine_kind == MonomialOrder::Kind::grlex
                              ? MonomialOrder::grlex(spec.priority)
                              : MonomialOrder::grevlex(spec.priority);
    return buchberger(code_ideal_presentation(code), order);
  }();

  if (o.check && spec.route == OrderSpec::Route::closed_lex) {
    GroebnerBasis engine = buchberger(code_ideal_presentation(code),
                                      MonomialOrder::lex(spec.priority));
    if (engine.elements != gb.elements) {
      err << "check failed: engine basis differs from the closed form\n";
      return 3;
    }
  }

  BasisSet s = basis_set_from_gb(code, gb);
  out << (o.json ? basis_json(s) : basis_text(s, o.aliases));
  return 0;
}

int do_basis(const LinearCode& code, const Options& o, std::uint64_t cap,
             std::ostream& out) {
  BasisSet s = o.verb == "circuits"  ? circuits(code, cap)
               : o.verb == "graver"  ? graver(code, cap)
                                     : universal_gb_binary(code, cap);
  out << (o.json ? basis_json(s) : basis_text(s, o.aliases));
  return 0;
}

int do_weights(const LinearCode& code, const Options& o, std::uint64_t cap,
               std::ostream& out) {
  WeightDistribution d = weight_distribution(code, cap);
  if (o.json) {
    std::string s = "{\"A\":[";
    for (std::size_t i = 0; i < d.counts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(d.counts[i]);
    }
    out << s << "]}\n";
  } else {
    out << "A:";
    for (std::uint64_t a : d.counts) out << " " << a;
    out << "\n";
  }
  return 0;
}

int do_singleton(const LinearCode& code, const Options& o, std::uint64_t cap,
                 std::ostream& out) {
  SingletonResult r = is_singleton_code(code, cap);
  if (o.json) {
    std::string s = std::string("{\"singleton\":") +
                    (r.is_singleton ? "true" : "false") + ",\"witness\":";
    if (r.witness) {
      s += "[";
      for (std::size_t i = 0; i < r.witness->length(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.witness->at(i));
      }
      s += "]";
    } else {
      s += "null";
    }
    out << s << "}\n";
  } else {
    out << "singleton: " << (r.is_singleton ? "true" : "false") << "\n";
    if (r.witness) {
      out << "witness:";
      for (std::size_t i = 0; i < r.witness->length(); ++i)
        out << " " << r.witness->at(i);
      out << "\n";
    }
  }
  return 0;
}

int do_verify(const LinearCode& code, const Options& o, std::uint64_t cap,
              std::ostream& out) {
  (void)o;
  ChainReport rep = verify_chain(code, cap);
  out << "circuits: unordered " << rep.circuits_unordered << " oriented "
      << rep.circuits_oriented << "\n";
  out << "graver: unordered " << rep.graver_unordered << " oriented "
      << rep.graver_oriented << "\n";
  if (rep.binary) {
    out << "universal: unordered " << rep.universal_unordered << " oriented "
        << rep.universal_oriented << "\n";
  }
  for (const std::string& v : rep.violations) out << "violation: " << v << "\n";

  bool weight_rank_ok = true;
  if (rep.binary) {
    // Primitive two-sided binomials are exactly the splits of codewords of
    // weight <= n-k+1 that satisfy the rank condition.
    const std::size_t bound = code.length() - code.dimension() + 1;
    BasisSet gr = graver(code, cap);
    BasisSet uni = universal_gb_binary(code, cap);
    std::set<Binomial> two_sided_prim, qualified;
    for (const Binomial& b : gr.elements)
      if (b.two_sided()) two_sided_prim.insert(b);
    for (const Binomial& b : uni.elements)
      if (b.two_sided()) qualified.insert(b);
    if (two_sided_prim != qualified) weight_rank_ok = false;
    for (const Binomial& b : two_sided_prim) {
      Codeword w = code.codeword(word_of_binomial(b, code.modulus()));
      if (w.weight() > bound || !rank_condition(code, w)) weight_rank_ok = false;
    }
    out << "primitive weight/rank characterization: "
        << (weight_rank_ok ? "ok" : "violated") << "\n";
  }

  const bool ok = rep.ok && weight_rank_ok;
  out << (ok ? "verify: ok" : "verify: FAILED") << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"code ideals of linear codes: Groebner bases, circuits, "
               "Graver bases, Singleton codes"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool with_order) {
    sub->add_option("input", o.input, "code file (p k n header + k rows)")
        ->required();
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_flag("--aliases", o.aliases, "use a..z variable names (n <= 26)");
    sub->add_option("--cap", o.cap, "enumeration cap on p^k")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { o.cap_given = true; });
    if (with_order) {
      sub->add_option("--order", o.order,
                      "monomial order: lex[:i1,i2,...] | grlex | grevlex");
      sub->add_flag("--check", o.check,
                    "cross-check the closed form against the engine");
    }
  };

  for (const char* verb :
       {"info", "gb", "circuits", "graver", "ugb", "singleton", "weights",
        "verify"}) {
    add_common(app.add_subcommand(verb), std::string(verb) == "gb");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
  o.verb = app.get_subcommands().front()->get_name();

  try {
    const std::uint64_t cap = resolve_cap(o);
    LinearCode code = read_code_file(o.input);
    if (o.verb == "info") return do_info(code, o, cap, out);
    if (o.verb == "gb") return do_gb(code, o, out, err);
    if (o.verb == "circuits" || o.verb == "graver" || o.verb == "ugb")
      return do_basis(code, o, cap, out);
    if (o.verb == "weights") return do_weights(code, o, cap, out);
    if (o.verb == "singleton") return do_singleton(code, o, cap, out);
    if (o.verb == "verify") return do_verify(code, o, cap, out);
    err << "error: unknown verb\n";
    return 1;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace codeal

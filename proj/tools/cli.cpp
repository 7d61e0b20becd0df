#include "cli.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tropical/canonical.hpp"
#include "tropical/envelope.hpp"
#include "tropical/error.hpp"
#include "tropical/factorization.hpp"
#include "tropical/json.hpp"
#include "tropical/text.hpp"

namespace tropical::cli {
namespace {

using nlohmann::json;

struct VerbInfo {
  Verb verb;
  std::string_view name;
  std::size_t arity;
  std::string_view usage;
};

constexpr std::array<VerbInfo, 9> kVerbs{{
    {Verb::kCanon, "canon", 1, "Least-coefficient form of <poly>"},
    {Verb::kFactor, "factor", 1, "Factor <poly> into linear factors"},
    {Verb::kExpand, "expand", 1, "Expand a factored-form JSON object"},
    {Verb::kRoots, "roots", 1, "Tropical roots of <poly> with multiplicities"},
    {Verb::kEval, "eval", 2, "Evaluate <poly> at <scalar>"},
    {Verb::kEquiv, "equiv", 2, "Whether two polynomials agree as functions"},
    {Verb::kMul, "mul", 2, "Tropical product of two polynomials"},
    {Verb::kAdd, "add", 2, "Tropical sum of two polynomials"},
    {Verb::kPlot, "plot", 1, "Envelope breakpoints of <poly> as TSV"},
}};

const VerbInfo& info(Verb verb) {
  for (const VerbInfo& v : kVerbs) {
    if (v.verb == verb) return v;
  }
  return kVerbs.front();
}

// Parse failures inside an argument, tagged with which argument failed.
struct ArgumentError {
  std::size_t index;
  ParseError error;
};

TropPoly poly_arg(const Command& cmd, std::size_t index) {
  try {
    return parse_poly(cmd.inputs.at(index));
  } catch (const ParseError& e) {
    throw ArgumentError{index, e};
  }
}

ExtendedRational scalar_arg(const Command& cmd, std::size_t index) {
  try {
    return parse_scalar(cmd.inputs.at(index));
  } catch (const ParseError& e) {
    throw ArgumentError{index, e};
  }
}

Factorization factored_arg(const Command& cmd, std::size_t index) {
  json j;
  try {
    j = json::parse(cmd.inputs.at(index));
  } catch (const json::parse_error& e) {
    throw ArgumentError{index, ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0)};
  }
  try {
    return factorization_from_json(j);
  } catch (const ParseError& e) {
    throw ArgumentError{index, e};
  }
}

void emit_poly(const TropPoly& f, const Command& cmd, std::ostream& out) {
  if (cmd.format == OutputFormat::kJson) {
    out << to_json(f).dump() << '\n';
  } else {
    out << format(f) << '\n';
  }
}

std::string join_degrees(const std::vector<std::size_t>& degrees) {
  std::string s;
  for (std::size_t d : degrees) {
    if (!s.empty()) s += ',';
    s += std::to_string(d);
  }
  return s;
}

void dispatch(const Command& cmd, std::ostream& out) {
  const bool as_json = cmd.format == OutputFormat::kJson;
  switch (cmd.verb) {
    case Verb::kCanon:
      emit_poly(canonicalize(poly_arg(cmd, 0)), cmd, out);
      return;
    case Verb::kFactor: {
      const Factorization fac = factor(poly_arg(cmd, 0));
      if (as_json) {
        out << to_json(fac).dump() << '\n';
      } else {
        out << format_factored(fac) << '\n';
      }
      return;
    }
    case Verb::kExpand:
      emit_poly(expand(factored_arg(cmd, 0)), cmd, out);
      return;
    case Verb::kRoots: {
      const std::vector<ExtendedRational> roots = factor(poly_arg(cmd, 0)).roots();
      json locus = json::array();
      json counts = json::array();
      for (auto it = roots.begin(); it != roots.end();) {
        const auto next = std::upper_bound(it, roots.end(), *it);
        if (as_json) {
          locus.push_back(it->to_string());
          counts.push_back(next - it);
        } else {
          out << *it << '\t' << (next - it) << '\n';
        }
        it = next;
      }
      if (as_json) {
        out << json{{"zero_locus", locus}, {"multiplicities", counts}}.dump()
            << '\n';
      }
      return;
    }
    case Verb::kEval: {
      const TropPoly f = poly_arg(cmd, 0);
      const ExtendedRational value = eval(f, scalar_arg(cmd, 1));
      if (as_json) {
        out << json{{"value", value.to_string()}}.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return;
    }
    case Verb::kEquiv: {
      const bool same = equivalent(poly_arg(cmd, 0), poly_arg(cmd, 1));
      if (as_json) {
        out << json{{"equivalent", same}}.dump() << '\n';
      } else {
        out << (same ? "true" : "false") << '\n';
      }
      return;
    }
    case Verb::kMul:
      emit_poly(poly_mul(poly_arg(cmd, 0), poly_arg(cmd, 1)), cmd, out);
      return;
    case Verb::kAdd:
      emit_poly(poly_add(poly_arg(cmd, 0), poly_arg(cmd, 1)), cmd, out);
      return;
    case Verb::kPlot: {
      const TropPoly f = poly_arg(cmd, 0);
      const Envelope env = lower_envelope(f);
      json rows = json::array();
      if (!as_json) out << "x\tf(x)\tactive_degrees\n";
      for (const ExtendedRational& x : env.breakpoints) {
        const ExtendedRational y = eval(f, x);
        const std::vector<std::size_t> active = argmin_monomials(f, x);
        if (as_json) {
          rows.push_back({{"x", x.to_string()},
                          {"value", y.to_string()},
                          {"active_degrees", active}});
        } else {
          out << x << '\t' << y << '\t' << join_degrees(active) << '\n';
        }
      }
      if (as_json) out << rows.dump() << '\n';
      return;
    }
  }
}

}  // namespace

std::string_view verb_name(Verb verb) { return info(verb).name; }

std::optional<Verb> verb_from_name(std::string_view name) {
  for (const VerbInfo& v : kVerbs) {
    if (v.name == name) return v.verb;
  }
  return std::nullopt;
}

std::size_t arity(Verb verb) { return info(verb).arity; }

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const std::string_view name = verb_name(cmd.verb);
  if (cmd.inputs.size() != arity(cmd.verb)) {
    err << name << ": expected " << arity(cmd.verb) << " argument(s), got "
        << cmd.inputs.size() << '\n';
    return kExitParseError;
  }
  try {
    dispatch(cmd, out);
    return kExitOk;
  } catch (const ArgumentError& e) {
    err << name << ": argument " << e.index + 1 << ": " << e.error.what()
        << '\n';
    return kExitParseError;
  } catch (const ParseError& e) {
    err << name << ": " << e.what() << '\n';
    return kExitParseError;
  } catch (const DomainError& e) {
    err << name << ": domain error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Exact min-plus polynomial toolkit", "tropical"};
  app.fallthrough();
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  std::vector<std::string> inputs;
  for (const VerbInfo& v : kVerbs) {
    CLI::App* sub = app.add_subcommand(std::string(v.name), std::string(v.usage));
    sub->add_option("inputs", inputs, "Polynomial, scalar or JSON inputs")
        ->required()
        ->expected(static_cast<int>(v.arity));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  Command cmd;
  cmd.verb = *verb_from_name(app.get_subcommands().front()->get_name());
  cmd.inputs = std::move(inputs);
  cmd.format = as_json ? OutputFormat::kJson : OutputFormat::kText;
  return run(cmd, out, err);
}

}  // namespace tropical::cli

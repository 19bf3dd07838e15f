// Batch command-line front end. Every subcommand prints one JSON document.
// Exit codes: 0 success, 1 oracle disagreement, 2 invalid input or usage,
// 3 domain error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "heisfock/cherednik.hpp"
#include "heisfock/errors.hpp"
#include "heisfock/fock.hpp"
#include "heisfock/json_io.hpp"
#include "heisfock/lr.hpp"
#include "heisfock/oracle/oracle.hpp"
#include "heisfock/schar.hpp"
#include "heisfock/symfunc.hpp"

using namespace heisfock;
namespace hj = heisfock::json;
using Json = nlohmann::json;

namespace {

struct RunConfig {
  unsigned jobs = 1;
  bool oracle = false;
  bool pretty = false;
  std::string output;
};

Partition parse_partition(const std::string& text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not a partition: '" + text + "'");
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidInput, "not a partition: '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

Json read_json_arg(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + text.substr(1));
    body.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(body);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// A symmetric function given as a JSON document (or @file) or as a partition
// naming a single Schur function.
SymFunc parse_symfunc(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '@')) return hj::decode_symfunc(read_json_arg(text));
  return SymFunc::schur(parse_partition(text));
}

FockVector parse_fock(const std::string& text, bool vacuum) {
  if (vacuum) return FockVector::vacuum();
  if (!text.empty() && (text.front() == '{' || text.front() == '@')) return hj::decode_fock(read_json_arg(text));
  return FockVector::basis(parse_partition(text));
}

long long require_prime(long long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not a prime");
  return p;
}

// Optional persistence of character tables: one JSON file per n.
const CharacterTable& cached_table(int n) {
  const char* dir = std::getenv("FOCK_HEIS_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return character_table(n);
  const std::filesystem::path path = std::filesystem::path(dir) / ("char_table_" + std::to_string(n) + ".json");
  if (std::ifstream in(path); in) {
    try {
      seed_character_table(hj::decode_character_table(Json::parse(in)));
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring unreadable cache file " << path << ": " << e.what() << "\n";
    }
    return character_table(n);
  }
  const CharacterTable& table = character_table(n);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path tmp = path.string() + ".tmp";
  if (std::ofstream out(tmp); out) {
    out << hj::encode(table).dump() << "\n";
    out.close();
    std::filesystem::rename(tmp, path, ec);
  }
  if (ec) std::cerr << "warning: could not write cache file " << path << "\n";
  return table;
}

void warn_denominators(const FockVector& x, int b) {
  if (!exponents_divisible_by(x, 2L * b)) {
    std::cerr << "warning: some v-exponents fall outside (1/" << 2 * b << ")Z\n";
  }
}

Json with_oracle(const RunConfig& cfg, Json result, const std::function<bool()>& agrees, int& status) {
  if (!cfg.oracle) return result;
  const bool ok = agrees();
  if (!ok) status = 1;
  return {{"result", std::move(result)}, {"oracle", {{"agrees", ok}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact K0 computations for Heisenberg actions on Cherednik category O"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--jobs", cfg.jobs, "Worker threads for operator application")->check(CLI::PositiveNumber);
  app.add_flag("--oracle", cfg.oracle, "Also run the brute-force path and report agreement");
  app.add_flag("--pretty", cfg.pretty, "Indent the JSON output");
  app.add_option("--output", cfg.output, "Write JSON here instead of standard output");

  std::string eta, tau, mu, nu, lambda_s, sigma, f_s, g_s, x_s, m_s, rep_s, table_s;
  int b = 1, n = 0, i = 1, max_deg = 6;
  long a = 1;
  long long p = 0, z = 0;
  bool vacuum = false, conjectural = false;

  auto* partition = app.add_subcommand("partition", "Partition statistics and coprime decomposition");
  partition->require_subcommand(1);
  auto* stats = partition->add_subcommand("stats", "Size, length, content, d and transpose");
  stats->add_option("--eta", eta)->required();
  auto* decompose = partition->add_subcommand("decompose", "eta = mu + b tau with mu coprime to b");
  decompose->add_option("--eta", eta)->required();
  decompose->add_option("--b", b)->required();

  auto* char_table = app.add_subcommand("char-table", "Character table of S_n");
  char_table->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--mu", mu)->required();
  lr->add_option("--nu", nu)->required();
  lr->add_option("--lambda", lambda_s, "Single coefficient; omit for the full product");

  auto* kron = app.add_subcommand("kronecker", "Kronecker product sigma (x) U");
  kron->add_option("--sigma", sigma)->required();
  kron->add_option("--rep", rep_s, "Virtual representation as JSON, or a partition")->required();

  auto* symfunc = app.add_subcommand("symfunc", "Symmetric function operations");
  symfunc->require_subcommand(1);
  auto* multiply = symfunc->add_subcommand("multiply", "Product in the Schur basis");
  multiply->add_option("--f", f_s)->required();
  multiply->add_option("--g", g_s)->required();
  auto* plethysm = symfunc->add_subcommand("plethysm", "f[p_b]");
  plethysm->add_option("--f", f_s)->required();
  plethysm->add_option("--b", b)->required();

  auto* heis = app.add_subcommand("heis", "Apply Heisenberg operators");
  heis->require_subcommand(1);
  auto* bop = heis->add_subcommand("b_op", "Multiplication by p_{ib}");
  bop->add_option("--i", i)->required()->check(CLI::PositiveNumber);
  bop->add_option("--b", b)->required();
  bop->add_option("--x", x_s, "Fock vector as JSON, or a partition");
  bop->add_flag("--vacuum", vacuum);
  auto* btau = heis->add_subcommand("b_tau", "Multiplication by s_tau[p_b]");
  btau->add_option("--tau", tau)->required();
  btau->add_option("--b", b)->required();
  btau->add_option("--x", x_s, "Fock vector as JSON, or a partition");
  btau->add_flag("--vacuum", vacuum);

  auto* modp = app.add_subcommand("heis-modp", "Graded mod-p Heisenberg operator");
  modp->add_option("--tau", tau)->required();
  modp->add_option("--b", b)->required();
  modp->add_option("--p", p)->required();
  modp->add_option("--x", x_s, "Fock vector as JSON, or a partition");
  modp->add_flag("--vacuum", vacuum);
  modp->add_flag("--negative", conjectural, "Negative-parameter analog (conjectural)");

  auto* label = app.add_subcommand("label-image", "Images of graded simple labels");
  label->require_subcommand(1);
  std::vector<CLI::App*> label_subs{label->add_subcommand("pos", "Positive parameter"),
                                    label->add_subcommand("neg", "Negative parameter")};
  for (auto* sub : label_subs) {
    sub->add_option("--eta", eta)->required();
    sub->add_option("--tau", tau)->required();
    sub->add_option("--a", a)->required();
    sub->add_option("--b", b)->required();
    sub->add_option("--m", m_s, "Lowest degree; defaults to the preferred lift");
  }

  auto* supports = app.add_subcommand("supports", "Possible supports k + b l = n");
  supports->add_option("--n", n)->required();
  supports->add_option("--b", b)->required();

  auto* stability = app.add_subcommand("stability-interval", "p-stability interval around z");
  stability->add_option("--z", z)->required();
  stability->add_option("--p", p)->required();
  stability->add_option("--n", n)->required();

  auto* verma = app.add_subcommand("verma-hilbert", "Graded multiplicities of a Verma module");
  verma->add_option("--eta", eta)->required();
  verma->add_option("--m", m_s);
  verma->add_option("--max-deg", max_deg)->required()->check(CLI::NonNegativeNumber);

  auto* pipeline = app.add_subcommand("pipeline", "Class of L^gr(eta) from the coprime table");
  pipeline->add_option("--eta", eta)->required();
  pipeline->add_option("--a", a)->required();
  pipeline->add_option("--b", b)->required();
  pipeline->add_option("--p", p)->required();
  pipeline->add_option("--table", table_s, "JSON (or @file): {\"entries\":[{\"mu\":[..],\"class\":{..}}]}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int status = 0;
  Json result;
  try {
    if (stats->parsed()) {
      const Partition e = parse_partition(eta);
      result = {{"eta", hj::encode(e)},
                {"size", e.size()},
                {"length", e.length()},
                {"content", std::to_string(content_sum(e))},
                {"d", std::to_string(d_stat(e))},
                {"transpose", hj::encode(transpose(e))}};
    } else if (decompose->parsed()) {
      const Partition e = parse_partition(eta);
      if (b < 1) throw Error(ErrorKind::InvalidInput, "b must be positive");
      const auto [m1, t1] = coprime_decompose(e, b);
      result = with_oracle(cfg, {{"mu", hj::encode(m1)}, {"tau", hj::encode(t1)}}, [&] {
        const auto found = oracle::exhaustive_coprime_decompositions(e, b);
        return found.size() == 1 && found.front() == std::pair{m1, t1};
      }, status);
    } else if (char_table->parsed()) {
      const CharacterTable& t = cached_table(n);
      result = with_oracle(cfg, hj::encode(t), [&] {
        const CharacterTable o = oracle::young_gram_schmidt_table(n);
        return o.values == t.values && o.irreps == t.irreps;
      }, status);
    } else if (lr->parsed()) {
      const Partition pm = parse_partition(mu);
      const Partition pn = parse_partition(nu);
      if (!lambda_s.empty()) {
        const Partition pl = parse_partition(lambda_s);
        const long long c = lr_coefficient(pl, pm, pn);
        result = with_oracle(cfg, {{"lambda", hj::encode(pl)}, {"c", std::to_string(c)}},
                             [&] { return oracle::lr_tableaux_count(pl, pm, pn) == c; }, status);
      } else {
        const auto& prod = schur_product(pm, pn);
        Json terms = Json::array();
        for (const auto& [l, c] : prod) terms.push_back({{"lambda", hj::encode(l)}, {"c", std::to_string(c)}});
        result = with_oracle(cfg, {{"terms", terms}}, [&] {
          for (const Partition& l : partitions_of(pm.size() + pn.size())) {
            const auto it = prod.find(l);
            if (oracle::lr_tableaux_count(l, pm, pn) != (it == prod.end() ? 0 : it->second)) return false;
          }
          return true;
        }, status);
      }
    } else if (kron->parsed()) {
      const Partition s = parse_partition(sigma);
      const VirtualRep u = (!rep_s.empty() && (rep_s.front() == '{' || rep_s.front() == '@'))
                               ? hj::decode_virtual_rep(read_json_arg(rep_s))
                               : VirtualRep::irreducible(parse_partition(rep_s));
      result = hj::encode(kronecker_product(s, u));
    } else if (multiply->parsed()) {
      const SymFunc f = parse_symfunc(f_s);
      const SymFunc g = parse_symfunc(g_s);
      const SymFunc h = schur_multiply(f, g);
      result = with_oracle(cfg, hj::encode(h), [&] {
        int deg = 0;
        for (const auto& [l, c] : h.terms()) deg = std::max(deg, l.size());
        return oracle::schur_decompose(oracle::multiply(oracle::expand(f, deg), oracle::expand(g, deg)), deg) == h;
      }, status);
    } else if (plethysm->parsed()) {
      const SymFunc f = parse_symfunc(f_s);
      const SymFunc h = plethysm_pb(f, b);
      result = with_oracle(cfg, hj::encode(h), [&] {
        int deg = 0;
        for (const auto& [l, c] : h.terms()) deg = std::max(deg, l.size());
        return oracle::schur_decompose(oracle::substitute_powers(oracle::expand(f, deg), b), deg) == h;
      }, status);
    } else if (bop->parsed() || btau->parsed()) {
      if (b < 1) throw Error(ErrorKind::InvalidInput, "b must be positive");
      const FockVector x = parse_fock(x_s, vacuum);
      const HeisenbergOperator op = bop->parsed() ? b_op_operator(i, b) : b_tau_operator(parse_partition(tau), b);
      const FockVector y = op.apply(x, cfg.jobs);
      result = with_oracle(cfg, hj::encode(y), [&] {
        // Brute force: expand every term as a polynomial in enough variables.
        const SymFunc mult = op.as_symfunc();
        FockVector expected;
        for (const auto& [l, c] : x.terms()) {
          const int deg = l.size() + (bop->parsed() ? i * b : b * parse_partition(tau).size());
          const auto poly = oracle::multiply(oracle::schur_polynomial(l, deg), oracle::expand(mult, deg));
          const SymFunc decomposed = oracle::schur_decompose(poly, deg);
          for (const auto& [k, d] : decomposed.terms()) expected.add_term(k, c * LaurentScalar(d));
        }
        return expected == y;
      }, status);
    } else if (modp->parsed()) {
      const Partition t = parse_partition(tau);
      const FockVector x = parse_fock(x_s, vacuum);
      require_prime(p);
      const FockVector y = conjectural ? heis_neg(t, b, p, x, true, cfg.jobs) : heis_modp(t, b, p, x, cfg.jobs);
      warn_denominators(y, b);
      result = with_oracle(cfg, hj::encode(y), [&] {
        return reduce_exponents(y, Rational(static_cast<long>(b) * static_cast<long>(p))).is_zero();
      }, status);
    } else if (label_subs[0]->parsed() || label_subs[1]->parsed()) {
      const ParamLambda lambda(a, b);
      const Partition e = parse_partition(eta);
      const Partition t = parse_partition(tau);
      const SimpleLabel in = m_s.empty() ? preferred_lift(e, lambda) : SimpleLabel{e, parse_rational(m_s)};
      const bool pos = label_subs[0]->parsed();
      const LabelMultiset out = pos ? simple_image_pos(in, t, lambda) : simple_image_neg(in, t, lambda);
      result = {{"input", hj::encode(in)}, {"images", hj::encode(out)}};
    } else if (supports->parsed()) {
      result = hj::encode(possible_supports(n, b));
    } else if (stability->parsed()) {
      result = hj::encode(p_stability_interval(z, p, n));
    } else if (verma->parsed()) {
      const Partition e = parse_partition(eta);
      const HilbertSeries h = verma_hilbert(e, m_s.empty() ? Rational(0) : parse_rational(m_s), max_deg);
      result = with_oracle(cfg, hj::encode(h), [&] {
        for (int d = 0; d <= max_deg; ++d) {
          if (oracle::polynomial_ring_multiplicity(e, d) != h.coeffs[static_cast<std::size_t>(d)]) return false;
        }
        return true;
      }, status);
    } else if (pipeline->parsed()) {
      const ParamLambda lambda(a, b);
      require_prime(p);
      const Json doc = read_json_arg(table_s);
      std::map<Partition, FockVector> table;
      if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw Error(ErrorKind::InvalidInput, "table needs an \"entries\" array");
      }
      for (const auto& entry : doc["entries"]) {
        if (!entry.contains("mu") || !entry.contains("class")) throw Error(ErrorKind::InvalidInput, "table entry needs mu and class");
        table[hj::decode_partition(entry["mu"])] = hj::decode_fock(entry["class"]);
      }
      const FockVector y = character_pipeline(parse_partition(eta), lambda, p, table, cfg.jobs);
      warn_denominators(y, b);
      result = hj::encode(y);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_validation() ? 2 : 3;
  }

  const std::string text = cfg.pretty ? result.dump(2) : result.dump();
  if (cfg.output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    out << text << "\n";
  }
  return status;
}

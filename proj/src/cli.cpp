#include "tits/cli.hpp"

#include "tits/errors.hpp"
#include "tits/json_io.hpp"
#include "tits/numeric.hpp"
#include "tits/rational_backend.hpp"
#include "tits/sigma.hpp"
#include "tits/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace tits::cli {
namespace {

// Inline JSON when the argument opens an object or array, otherwise a file path.
Json load_json(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw ArgumentError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw ArgumentError("cannot open input file '" + arg + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ArgumentError("malformed JSON in '" + arg + "': " + e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigRational q = parse_rational(item);
    if (denominator(q) != 1 || abs(q) > BigRational(INT64_MAX)) {
      throw ArgumentError("expected an integer list, got '" + text + "'");
    }
    out.push_back(static_cast<std::int64_t>(numerator(q)));
  }
  return out;
}

// Flattens nested JSON into "path  value" rows.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

Json sigma_check(std::int64_t m, std::int64_t n) {
  if (m < 2) throw DomainError("sigma-check needs m >= 2");
  Json rec = Json::array();
  bool all = true;
  for (std::int64_t l = 0; l <= m - 1; ++l) {
    RecurrenceReport r = lemma_recurrences(m, n, l);
    Json rel = Json::object();
    for (const auto& x : r.relations) rel[x.name] = x.holds;
    rec.push_back({{"l", l}, {"relations", rel}, {"literal_sigma12_even", r.literal_holds},
                   {"transfer", r.transfer_holds}, {"holds", r.holds()}});
    all = all && r.holds();
  }
  Json out{{"m", m}, {"n", n}, {"recurrences_hold", all}, {"recurrences", rec}};
  if (m >= 6) {
    ExtraConditionReport e = extra_condition(m, n);
    Json rows = Json::array();
    for (const auto& row : e.rows) {
      rows.push_back({{"l", row.l}, {"sigma1", rational_to_json(row.first)},
                      {"sigma2", rational_to_json(row.second)}, {"holds", row.holds}});
    }
    out["extra_condition"] = {{"variant", e.even ? "even" : "odd"}, {"holds", e.holds}, {"rows", rows}};
  } else {
    out["extra_condition"] = nullptr;
  }
  return out;
}

Json conic_family(const std::vector<std::int64_t>& primes) {
  auto classes = distinct_conic_family(primes);
  Json items = Json::array();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Json places = Json::array();
    for (const Place& p : classes[i].ramified_places()) places.push_back(p.to_string());
    Json cls = class_to_json(BrauerClass(BrauerGroupModel::rational(), classes[i]));
    items.push_back({{"p", primes[i]},
                     {"quaternion", {"-1", std::to_string(primes[i])}},
                     {"class", cls},
                     {"ramified", places}});
  }
  bool distinct = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) distinct = distinct && !(classes[i] == classes[j]);
  }
  return Json{{"conics", items}, {"pairwise_distinct", distinct}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tits motivic measures and brute-force verification suites", "tits"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string config_arg;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--config", config_arg, "Verifier configuration (inline JSON or file)");

  std::string left, right;
  auto* measure = app.add_subcommand("measure", "Evaluate the Tits and rank measures of a descriptor");
  measure->add_option("descriptor", left, "Descriptor JSON or file")->required();

  auto* comparison = app.add_subcommand("compare", "Compare the measures of two descriptors");
  comparison->add_option("left", left)->required();
  comparison->add_option("right", right)->required();

  bool assume_equal = false;
  auto* deduction = app.add_subcommand("deduce", "Derive consequences of equal classes");
  deduction->add_option("left", left)->required();
  deduction->add_option("right", right)->required();
  deduction->add_flag("--assume-equal", assume_equal, "Take equality of the classes as the premise");

  std::string kind;
  std::int64_t m = -1, n = -1, l = -1;
  std::vector<std::string> sigma_positional;
  auto* sigma_cmd = app.add_subcommand("sigma", "Evaluate one power sum");
  sigma_cmd->add_option("--kind", kind);
  sigma_cmd->add_option("--m", m);
  sigma_cmd->add_option("--n", n);
  sigma_cmd->add_option("--l", l);
  sigma_cmd->add_option("values", sigma_positional, "KIND M N L")->expected(0, 4);

  auto* sigma_check_cmd = app.add_subcommand("sigma-check", "Recurrences and extra condition for (m, n)");
  sigma_check_cmd->add_option("--m", m)->required();
  sigma_check_cmd->add_option("--n", n)->required();

  std::string suite, group = "2,2", seed_arg;
  std::int64_t card = 3, trials = 1000, d = 2;
  bool reduced = false, probe = false;
  std::int64_t vm = 3, vn = 6;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"relation-equivalence", "sum-cancellation", "tensor-cancellation",
                             "quadric-product-matching", "normal-form-confluence"}));
  verify->add_option("--group", group, "Cyclic orders, comma separated");
  verify->add_option("--n", vn, "Form dimension");
  verify->add_option("--m", vm, "Cardinality bound or number of quadrics");
  verify->add_option("--card", card, "Cardinality bound");
  verify->add_option("--d", d, "Rank of the 2-torsion group");
  verify->add_option("--trials", trials);
  verify->add_flag("--reduced", reduced, "Enumerate families up to automorphisms");
  verify->add_flag("--probe", probe, "Report instead of asserting");
  verify->add_option("--seed", seed_arg);

  std::string primes_arg;
  auto* conics = app.add_subcommand("conic-family", "Classes of the conics (-1, p)");
  conics->add_option("--primes", primes_arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    VerifierConfig config;
    if (!config_arg.empty()) config = VerifierConfig::from_json(load_json(config_arg));
    Json result;
    int code = kExitOk;
    if (*measure) {
      result = to_json(tits_measure(descriptor_from_json(load_json(left))));
    } else if (*comparison) {
      VarietyDescriptor x = descriptor_from_json(load_json(left));
      VarietyDescriptor y = descriptor_from_json(load_json(right));
      result = to_json(compare(x, y));
      result["left"] = to_json(tits_measure(x));
      result["right"] = to_json(tits_measure(y));
    } else if (*deduction) {
      result = to_json(deduce(descriptor_from_json(load_json(left)), descriptor_from_json(load_json(right)),
                              assume_equal));
    } else if (*sigma_cmd) {
      if (!sigma_positional.empty()) {
        if (sigma_positional.size() != 4 || !kind.empty() || m >= 0 || n >= 0 || l >= 0) {
          throw ArgumentError("sigma takes either KIND M N L or --kind/--m/--n/--l");
        }
        kind = sigma_positional[0];
        auto nums = parse_int_list(sigma_positional[1] + "," + sigma_positional[2] + "," + sigma_positional[3]);
        m = nums[0];
        n = nums[1];
        l = nums[2];
      }
      if (kind.empty()) throw ArgumentError("sigma needs a kind");
      SigmaKind k = parse_sigma_kind(kind);
      result = Json{{"kind", to_string(k)}, {"m", m}, {"n", n}, {"l", l}, {"value", rational_to_json(sigma(k, m, n, l))}};
    } else if (*sigma_check_cmd) {
      result = sigma_check(m, n);
    } else if (*verify) {
      if (!seed_arg.empty()) {
        auto s = parse_int_list(seed_arg);
        if (s.size() != 1 || s[0] < 0) throw ArgumentError("seed must be a non-negative integer");
        config.seed = static_cast<std::uint64_t>(s[0]);
      }
      bool card_given = verify->count("--card") > 0;
      bool m_given = verify->count("--m") > 0;
      std::int64_t bound = card_given ? card : (m_given ? vm : 3);
      ModelPtr model = suite == "quadric-product-matching" ? nullptr : BrauerGroupModel::abstract(parse_int_list(group));
      VerificationRun run_result;
      if (suite == "relation-equivalence") {
        run_result = verify_relation_equivalence(model, bound, config);
      } else if (suite == "sum-cancellation") {
        run_result = verify_sum_cancellation(model, bound, config);
      } else if (suite == "tensor-cancellation") {
        run_result = verify_tensor_cancellation(model, vn, bound, probe, config);
      } else if (suite == "quadric-product-matching") {
        run_result = verify_quadric_product_matching(d, vm, vn, reduced, config);
      } else {
        run_result = verify_normal_form_confluence(model, trials, config);
      }
      result = run_result.certificate();
      if (run_result.outcome == VerificationRun::Outcome::Counterexample) code = kExitCounterexample;
    } else if (*conics) {
      result = conic_family(parse_int_list(primes_arg));
    }
    emit(out, result, format);
    return code;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "out of domain: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace tits::cli

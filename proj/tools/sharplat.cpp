// Batch front-end: validate lattice files, emit reports, run censuses and
// exemplar self-tests, and print the fixture gallery.
//
// Exit codes: 0 success, 1 a property or identity was falsified, 2 invalid
// input, 3 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sharplat/audit.hpp"
#include "sharplat/enumeration.hpp"
#include "sharplat/exemplars.hpp"
#include "sharplat/gallery.hpp"
#include "sharplat/json_io.hpp"
#include "sharplat/reports.hpp"

namespace fs = std::filesystem;
using namespace sharplat;

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kInvalidInput = 2;
constexpr int kInternal = 3;

bool g_pretty = false;

void emit(const Json& doc) { std::cout << dump(doc, g_pretty); }

void write_file(const fs::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(doc, true);
}

int cmd_validate(const std::string& path) {
  const auto L = parse_lattice(read_json_file(path));
  Json doc;
  doc["valid"] = true;
  doc["elements"] = L.poset().names();
  emit(doc);
  return kOk;
}

int cmd_report(const std::string& path, bool profile, bool sharp, bool audit) {
  const auto L = parse_lattice(read_json_file(path));
  if (!profile && !sharp && !audit) profile = sharp = audit = true;
  Json doc;
  if (profile) {
    doc["lattice_profile"] = to_json(L, lattice_profile(L));
    Json elems = Json::array();
    for (auto x : L.elements()) elems.push_back(to_json(L, element_profile(L, x)));
    doc["element_profiles"] = std::move(elems);
  }
  if (sharp) doc["sharpness"] = to_json(L, sharpness_report(L));
  if (audit) doc["audit"] = to_json(theorem_audit(L));
  emit(doc);
  return kOk;
}

int cmd_enumerate(std::optional<std::size_t> chain, const std::string& poset_path, bool want_census, bool audit_each,
                  const std::string& emit_dir, unsigned threads) {
  if (chain.has_value() == !poset_path.empty()) {
    throw Error(ErrorKind::BadSchema, "give exactly one of --chain or --poset");
  }
  const FinitePoset poset = chain ? chain_poset(*chain) : parse_poset(read_json_file(poset_path));
  CensusOptions options;
  options.audit_each = audit_each;
  options.threads = threads;
  options.keep_representatives = !emit_dir.empty() || !want_census;
  const auto result = census(poset, options);

  if (!emit_dir.empty()) {
    fs::create_directories(emit_dir);
    for (std::size_t i = 0; i < result.representatives.size(); ++i) {
      char name[48];
      std::snprintf(name, sizeof name, "structure_%03zu.json", i);
      write_file(fs::path(emit_dir) / name, to_json(result.representatives[i].lattice));
    }
  }
  Json doc = to_json(result);
  if (want_census) doc.erase("representatives");
  emit(doc);
  return kOk;
}

int cmd_exemplars(const std::string& model, std::size_t trials, std::uint64_t seed, std::uint64_t max_exponent) {
  Json doc = Json::array();
  std::size_t unexpected = 0;
  auto run = [&](const ExemplarReport& r) {
    unexpected += r.failures;
    doc.push_back(to_json(r));
  };
  if (model == "zminus" || model == "all") run(zminus_self_test(max_exponent));
  if (model == "r1" || model == "all") run(r1_self_test(trials, seed));
  if (model == "nideal" || model == "all") run(nideal_self_test());
  emit(doc.size() == 1 ? doc[0] : doc);
  return unexpected == 0 ? kOk : kFalsified;
}

int cmd_gallery(const std::string& out_dir) {
  const auto entries = gallery::all();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& [name, L] : entries) write_file(fs::path(out_dir) / (name + ".json"), to_json(L));
  }
  Json doc;
  for (const auto& [name, L] : entries) doc[name] = to_json(L);
  emit(doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharplat: finite multiplicative lattices, residuation and sharpness"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Indented JSON output");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Validate a lattice file");
  validate->add_option("path", path, "Lattice JSON file")->required();

  bool profile = false, sharp = false, audit = false;
  auto* report = app.add_subcommand("report", "Profile, sharpness and theorem-audit report");
  report->add_option("path", path, "Lattice JSON file")->required();
  report->add_flag("--profile", profile, "Lattice and element profiles");
  report->add_flag("--sharp", sharp, "Four-way sharpness report");
  report->add_flag("--audit", audit, "Theorem audit");

  std::optional<std::size_t> chain;
  std::string poset_path, emit_dir;
  bool want_census = false, audit_each = false;
  unsigned threads = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate multiplications on a poset");
  auto* chain_opt = enumerate->add_option("--chain", chain, "Use the n-element chain");
  enumerate->add_option("--poset", poset_path, "Poset JSON file (elements, leq)")->excludes(chain_opt);
  enumerate->add_flag("--census", want_census, "Print counts only");
  enumerate->add_flag("--audit-each", audit_each, "Audit every structure; abort on a falsified claim");
  enumerate->add_option("--emit-representatives", emit_dir, "Write every structure into this directory");
  enumerate->add_option("--threads", threads, "Worker threads (0 = default)");

  std::string model = "all";
  std::size_t trials = 1000;
  std::uint64_t seed = 42, max_exponent = 100;
  auto* exemplars = app.add_subcommand("exemplars", "Self-tests of the infinite exemplar models");
  exemplars->add_option("--model", model, "zminus | r1 | nideal | all")
      ->check(CLI::IsMember({"zminus", "r1", "nideal", "all"}));
  exemplars->add_option("--trials", trials, "Random pairs for r1");
  exemplars->add_option("--seed", seed, "Seed for r1");
  exemplars->add_option("--max-exponent", max_exponent, "Exponent range for zminus");

  std::string out_dir;
  auto* gallery_cmd = app.add_subcommand("gallery", "Print the built-in fixture lattices");
  gallery_cmd->add_option("--out", out_dir, "Also write one file per lattice into this directory");

  for (auto* sub : {validate, report, enumerate, exemplars, gallery_cmd}) {
    sub->add_flag("--pretty", g_pretty, "Indented JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*report) return cmd_report(path, profile, sharp, audit);
    if (*enumerate) return cmd_enumerate(chain, poset_path, want_census, audit_each, emit_dir, threads);
    if (*exemplars) return cmd_exemplars(model, trials, seed, max_exponent);
    if (*gallery_cmd) return cmd_gallery(out_dir);
  } catch (const Error& e) {
    Json diag;
    diag["error"] = std::string(to_string(e.kind()));
    diag["message"] = e.what();
    diag["witness"] = e.witness();
    std::cerr << dump(diag, g_pretty);
    if (e.kind() == ErrorKind::ClaimFalsified) return kFalsified;
    return is_input_error(e.kind()) ? kInvalidInput : kInternal;
  } catch (const std::exception& e) {
    Json diag;
    diag["error"] = "IoError";
    diag["message"] = e.what();
    std::cerr << dump(diag, g_pretty);
    return kInvalidInput;
  }
  return kOk;
}

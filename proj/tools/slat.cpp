// Command-line front end: analyze, complete, classify, verify, random, export.
//
// Exit codes: 0 success / verification passed, 1 verification failures,
// 2 usage or parse errors, 3 IO errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slat/classify.hpp"
#include "slat/downsets.hpp"
#include "slat/envelope.hpp"
#include "slat/errors.hpp"
#include "slat/frame.hpp"
#include "slat/generate.hpp"
#include "slat/sweep.hpp"

namespace {

using namespace slat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Err::io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) raise(Err::io, "cannot write '" + out_path + "'");
  out << content;
  if (!out) raise(Err::io, "write failed for '" + out_path + "'");
}

std::string instance_label(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

nlohmann::ordered_json poset_json(const Poset& p) {
  return nlohmann::ordered_json::parse(p.to_json());
}

nlohmann::ordered_json label_sets(const Poset& base, const std::vector<Mask>& members) {
  auto arr = nlohmann::ordered_json::array();
  for (Mask m : members) {
    auto labels = nlohmann::ordered_json::array();
    for (int i : bits(m)) labels.push_back(base.name(i));
    arr.push_back(labels);
  }
  return arr;
}

nlohmann::ordered_json family_covers(const std::vector<Mask>& members) {
  auto arr = nlohmann::ordered_json::array();
  const int m = static_cast<int>(members.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !subset(members[i], members[j])) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && subset(members[i], members[k]) && subset(members[k], members[j]))
          cover = false;
      if (cover) arr.push_back({i, j});
    }
  return arr;
}

int cmd_analyze(const std::string& input, const std::string& format) {
  Poset p = Poset::parse(read_file(input));
  bool meet_closed = true;
  std::string meet_witness;
  for (int a = 0; a < p.size() && meet_closed; ++a)
    for (int b = a; b < p.size(); ++b)
      if (!p.bound(bit(a) | bit(b), Dir::meet)) {
        meet_closed = false;
        meet_witness = "{" + p.name(a) + "," + p.name(b) + "}";
        break;
      }
  bool has_bottom = p.bottom().has_value(), has_top = p.top().has_value();

  bool lattice = meet_closed;
  std::string distributive = "n/a", weakly = "n/a";
  if (meet_closed) {
    auto ms = MeetSemilattice::from_poset(p);
    for (int a = 0; a < p.size() && lattice; ++a)
      for (int b = a; b < p.size(); ++b)
        if (!ms.join(a, b)) {
          lattice = false;
          break;
        }
    auto d = is_distributive_semilattice(ms);
    auto w = is_weakly_distributive(ms);
    distributive = d.ok ? "yes" : "no (witness " + d.detail + ")";
    weakly = w.ok ? "yes" : "no (witness " + w.detail + ")";
  }

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["poset"] = "valid";
    doc["meet-semilattice"] = meet_closed;
    if (!meet_closed) doc["meet-witness"] = meet_witness;
    doc["lattice"] = lattice;
    doc["bottom"] = has_bottom;
    doc["top"] = has_top;
    doc["distributive"] = distributive;
    doc["weakly-distributive"] = weakly;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "poset: valid\n";
    std::cout << "meet-semilattice: " << (meet_closed ? "yes" : "no (witness " + meet_witness + ")")
              << "\n";
    std::cout << "lattice: " << (lattice ? "yes" : "no") << "\n";
    std::cout << "bottom: " << (has_bottom ? "yes" : "no") << "\n";
    std::cout << "top: " << (has_top ? "yes" : "no") << "\n";
    std::cout << "distributive: " << distributive << "\n";
    std::cout << "weakly-distributive: " << weakly << "\n";
  }
  return 0;
}

int cmd_complete(const std::string& input, const std::string& kind, const std::string& format,
                 const std::string& out) {
  auto ms = MeetSemilattice::from_poset(Poset::parse(read_file(input)));
  const Poset& base = ms.poset();

  std::vector<Mask> members;
  std::vector<int> embedding;
  nlohmann::ordered_json extra;
  if (kind == "downsets") {
    members = downsets(ms).members;
    for (int c = 0; c < ms.size(); ++c)
      embedding.push_back(static_cast<int>(
          std::find(members.begin(), members.end(), base.down(c)) - members.begin()));
  } else if (kind == "dideal") {
    auto completion = dideal_completion(ms);
    members = completion.family.members;
    embedding = completion.embedding;
  } else if (kind == "macneille") {
    auto completion = macneille_completion(ms);
    members = completion.family.members;
    embedding = completion.embedding;
  } else if (kind == "frink") {
    auto frink = frink_ideals(ms);
    members = frink.ideals;
    for (int c = 0; c < ms.size(); ++c)
      embedding.push_back(static_cast<int>(
          std::find(members.begin(), members.end(), base.down(c)) - members.begin()));
  } else if (kind == "envelope") {
    auto env = distributive_envelope(ms);
    nlohmann::ordered_json doc;
    doc["kind"] = "envelope";
    doc["base"] = poset_json(base);
    doc["points"] = label_sets(base, env.stone.space.points);
    doc["elements"] = env.element_names;
    doc["covers"] = family_covers(env.elements);
    doc["embedding"] = env.embedding;
    doc["base-distributive"] = env.base_distributive;
    doc["embedding-injective"] = env.embedding_injective;
    if (format == "dot") {
      std::string dot = "digraph envelope {\n  rankdir=BT;\n";
      for (const auto& n : env.element_names) dot += "  \"" + n + "\" [label=\"" + n + "\"];\n";
      for (const auto& pr : family_covers(env.elements))
        dot += "  \"" + env.element_names[pr[0]] + "\" -> \"" + env.element_names[pr[1]] +
               "\";\n";
      dot += "}\n";
      write_output(out, dot);
    } else {
      write_output(out, doc.dump() + "\n");
    }
    return 0;
  } else {
    raise(Err::parse, "unknown completion kind '" + kind + "'");
  }

  if (format == "dot") {
    write_output(out, family_to_dot(base, members));
  } else {
    nlohmann::ordered_json doc;
    doc["kind"] = kind;
    doc["base"] = poset_json(base);
    doc["elements"] = label_sets(base, members);
    doc["covers"] = family_covers(members);
    doc["embedding"] = embedding;
    write_output(out, doc.dump() + "\n");
  }
  return 0;
}

int cmd_classify(const std::string& input, const std::string& format, const std::string& out) {
  auto ms = MeetSemilattice::from_poset(Poset::parse(read_file(input)));
  auto report = classification_report(ms, instance_label(input));
  write_output(out, format == "json" ? report.to_json() + "\n" : report.to_text());
  return 0;
}

int cmd_verify(const std::string& input, const std::string& theorem, int exhaustive,
               bool random, int size, std::uint64_t seed, int count, const std::string& out) {
  if (!is_registered_theorem(theorem))
    raise(Err::unknown_theorem, "unknown theorem '" + theorem + "'");
  if ((!input.empty()) + (exhaustive > 0) + random > 1)
    raise(Err::parse, "pick one of: input file, --exhaustive, --random");
  Family family;
  if (!input.empty()) {
    family.emplace_back(instance_label(input),
                        MeetSemilattice::from_poset(Poset::parse(read_file(input))));
  } else if (exhaustive > 0) {
    family = exhaustive_family(exhaustive);
  } else if (random) {
    for (int i = 0; i < count; ++i) {
      InstanceSpec spec{InstanceKind::semilattice, size, seed + static_cast<std::uint64_t>(i),
                        GenMethod::closure_system};
      family.emplace_back(spec.id(), random_instance(spec));
    }
  } else {
    raise(Err::parse, "verify needs an input file, --exhaustive, or --random");
  }
  auto result = sweep(theorem, family);
  write_output(out, result.json_lines());
  std::cerr << "theorem " << result.theorem << ": " << result.instances << " instances, "
            << result.failures << " failures (" << result.wall_ms << " ms)\n";
  return result.ok() ? 0 : 1;
}

int cmd_random(int size, std::uint64_t seed, const std::string& kind,
               const std::string& format, const std::string& out) {
  InstanceSpec spec{kind_from_name(kind), size, seed, GenMethod::closure_system};
  auto ms = random_instance(spec);
  write_output(out, format == "json" ? ms.poset().to_json() + "\n" : ms.poset().to_text());
  return 0;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out) {
  Poset p = Poset::parse(read_file(input));
  write_output(out, format == "dot" ? p.to_dot() : p.to_json() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite meet-semilattice completions, frames, and theorem sweeps"};
  app.require_subcommand(1);

  std::string input, out, kind, format, theorem;
  int exhaustive = 0, size = 0, count = 0;
  std::uint64_t seed = 0;
  bool random = false;

  auto* analyze = app.add_subcommand("analyze", "structural facts about a poset file");
  analyze->add_option("input", input)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* complete = app.add_subcommand("complete", "compute a completion of the input");
  complete->add_option("input", input)->required();
  complete->add_option("--kind", kind)
      ->check(CLI::IsMember({"downsets", "dideal", "macneille", "envelope", "frink"}))
      ->required();
  complete->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))
      ->default_val("json");
  complete->add_option("--out", out);

  auto* classify = app.add_subcommand("classify", "full classification report");
  classify->add_option("input", input)->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  classify->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "run a theorem over an instance family");
  verify->add_option("input", input);
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--exhaustive", exhaustive);
  verify->add_flag("--random", random);
  verify->add_option("--size", size);
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_option("--out", out);

  auto* rnd = app.add_subcommand("random", "emit a reproducible random instance");
  rnd->add_option("--size", size)->required();
  rnd->add_option("--seed", seed)->required();
  rnd->add_option("--kind", kind)->default_val("semilattice");
  rnd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  rnd->add_option("--out", out);

  auto* exp = app.add_subcommand("export", "serialize the input poset");
  exp->add_option("input", input)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->required();
  exp->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(input, format);
    if (app.got_subcommand(complete)) return cmd_complete(input, kind, format, out);
    if (app.got_subcommand(classify)) return cmd_classify(input, format, out);
    if (app.got_subcommand(verify)) {
      if (random && verify->count("--seed") == 0)
        raise(Err::parse, "--random requires --seed");
      if (random && verify->count("--count") == 0)
        raise(Err::parse, "--random requires --count");
      return cmd_verify(input, theorem, exhaustive, random, size, seed, count, out);
    }
    if (app.got_subcommand(rnd)) return cmd_random(size, seed, kind, format, out);
    if (app.got_subcommand(exp)) return cmd_export(input, format, out);
  } catch (const slat::Error& e) {
    std::cerr << slat::err_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == slat::Err::io ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

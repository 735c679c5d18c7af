#pragma once

// Command-line driver. Exit codes: 0 success or positive verdict, 1 negative
// verdict (structure absent, certificate invalid, condition fails, failures
// found), 2 usage error or unreadable input, 3 search/enumeration cap exceeded.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpramsey/mpramsey.hpp"

namespace mpramsey {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitCap = 3 };

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

inline std::string host_label(const MultipartiteHost& host) {
  return "K_{" + join_parts(host.part_sizes()) + "}";
}

inline std::string sequence(const std::vector<Vertex>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

inline std::string witness_text(const StructureWitness& w) {
  if (w.kind == WitnessKind::path) return sequence(w.vertices, "-");
  if (w.kind == WitnessKind::cycle) return sequence(w.vertices, "-") + "-" + std::to_string(w.vertices.front());
  std::string out;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(w.edges[i].u) + "-" + std::to_string(w.edges[i].v);
  }
  return out;
}

inline std::string absence_text(const Absence& a) {
  return std::string("no ") + color_name(a.color) + " " + structure_label(a.kind, a.size);
}

inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidArgument("range must look like A..B");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const auto lo = std::stoull(a, &used);
    if (used != a.size()) throw InvalidArgument("bad range start");
    const auto hi = std::stoull(b, &used);
    if (used != b.size()) throw InvalidArgument("bad range end");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidArgument("range must look like A..B with nonnegative integers");
  }
}

inline StructureKind kind_option(const std::string& name) {
  auto kind = parse_kind(name);
  if (!kind) throw InvalidArgument("unknown target '" + name + "'");
  return *kind;
}

}  // namespace cli_detail

/// Runs the CLI with the given arguments, writing reports to `out` and
/// diagnostics to `err`. Never calls exit().
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Monochromatic structures in 2-edge-colored complete multipartite graphs", "mpramsey"};
  app.require_subcommand(1);
  const std::vector<std::string> kinds{"path", "cycle", "cycle-min", "cmatching"};

  // generate
  auto* gen = app.add_subcommand("generate", "Write an extremal example coloring to an instance file");
  int gen_example = 0, gen_n = 0, gen_n1 = 0;
  std::vector<int> gen_parts;
  std::string gen_out, gen_encoding = "bitstring";
  gen->add_option("--example", gen_example, "Example number 1..7")->required();
  gen->add_option("--n", gen_n, "Size parameter n")->required();
  gen->add_option("--parts", gen_parts, "Part sizes (example 1: required; example 2: first entry is n1)")
      ->delimiter(',');
  gen->add_option("--n1", gen_n1, "Example 2: size of the distinguished part");
  gen->add_option("-o,--output", gen_out, "Output file")->required();
  gen->add_option("--encoding", gen_encoding, "bitstring or edges")
      ->check(CLI::IsMember({"bitstring", "edges"}));

  // check
  auto* check = app.add_subcommand("check", "Exact search for a monochromatic structure");
  std::string check_file, check_target;
  int check_size = 0;
  SearchOptions check_search;
  check->add_option("file", check_file)->required();
  check->add_option("--target", check_target)->required()->check(CLI::IsMember(kinds));
  check->add_option("--size", check_size)->required();
  check->add_option("--cap", check_search.cap, "Largest vertex count for exact search");

  // certify
  auto* certify = app.add_subcommand("certify", "Validate embedded certificates and list implied absences");
  std::string certify_file;
  certify->add_option("file", certify_file)->required();

  // ham
  auto* ham = app.add_subcommand("ham", "Bipartite degree certifiers on a color class of K_{m,m}");
  std::string ham_file, ham_theorem, ham_color = "both";
  int ham_q = 0;
  ham->add_option("file", ham_file)->required();
  ham->add_option("--theorem", ham_theorem)->required()->check(CLI::IsMember({"chvatal", "berge", "lasvergnas"}));
  ham->add_option("--q", ham_q, "Path system size for lasvergnas");
  ham->add_option("--color", ham_color)->check(CLI::IsMember({"red", "blue", "both"}));

  // conditions
  auto* cond = app.add_subcommand("conditions", "Evaluate host conditions c1-c7 and which targets they cover");
  int cond_n = 0;
  std::vector<int> cond_parts;
  std::string cond_target;
  cond->add_option("--n", cond_n)->required();
  cond->add_option("--parts", cond_parts)->required()->delimiter(',');
  cond->add_option("--target", cond_target, "Exit 1 unless this target is applicable")
      ->check(CLI::IsMember({"C_2n", "C_{>=2n}", "P_2n", "P_{2n+1}"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification over all colorings of a host");
  std::vector<int> verify_parts;
  std::string verify_target, verify_range, verify_csv, verify_witness;
  int verify_size = 0;
  bool verify_swap = false, verify_perms = false;
  EnumerationOptions verify_opts;
  verify->add_option("--parts", verify_parts)->required()->delimiter(',');
  verify->add_option("--target", verify_target)->required()->check(CLI::IsMember(kinds));
  verify->add_option("--size", verify_size)->required();
  verify->add_option("--range", verify_range, "Bitmask index range A..B (half-open)");
  verify->add_option("--threads", verify_opts.threads)->check(CLI::PositiveNumber);
  verify->add_flag("--color-swap", verify_swap, "Reduce modulo the global color swap");
  verify->add_flag("--part-perms", verify_perms, "Reduce modulo within-part vertex permutations");
  verify->add_option("--csv", verify_csv, "Write a frontier CSV row to this file");
  verify->add_option("--witness", verify_witness, "Write the stored counterexample to this instance file");
  verify->add_option("--cap", verify_opts.search.cap, "Largest vertex count for exact search");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of an instance");
  std::string dot_file, dot_out;
  dot->add_option("file", dot_file)->required();
  dot->add_option("-o,--output", dot_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      std::optional<std::vector<int>> parts;
      if (!gen_parts.empty()) parts = gen_parts;
      ExtremalInstance inst = [&] {
        if (gen_example == 2 && !parts && gen->count("--n1")) return gen_example2(gen_n, gen_n1);
        return generate_example(gen_example, gen_n, parts);
      }();
      const auto encoding = gen_encoding == "edges" ? ColoringEncoding::edges : ColoringEncoding::bitstring;
      write_file(gen_out, serialize_instance(to_instance(inst), encoding));
      out << "example " << inst.example << ", n=" << inst.n << ": " << host_label(inst.host()) << ", "
          << inst.host().edge_count() << " edges -> " << gen_out << "\n";
      return kExitOk;
    }

    if (*check) {
      const Instance inst = parse_instance(read_file(check_file));
      const StructureQuery q{kind_option(check_target), check_size};
      const auto hit = mono_search(inst.coloring, q, check_search);
      const auto label = host_label(inst.coloring.host());
      if (!hit) {
        out << label << ": no monochromatic " << q.label() << "\n";
        return kExitNegative;
      }
      out << label << ": " << color_name(hit->color) << " " << q.label() << ": "
          << witness_text(hit->witness) << "\n";
      return kExitOk;
    }

    if (*certify) {
      const Instance inst = parse_instance(read_file(certify_file));
      out << host_label(inst.coloring.host()) << ": " << inst.certificates.size() << " certificate(s)\n";
      bool all_valid = true;
      std::vector<Absence> implied;
      for (const auto& cert : inst.certificates) {
        const bool ok = validate(inst.coloring, cert);
        all_valid = all_valid && ok;
        out << "  [" << (ok ? "valid" : "INVALID") << "] " << describe(cert);
        if (ok) {
          const auto abs = implied_absences(cert);
          out << " =>";
          for (std::size_t i = 0; i < abs.size(); ++i) {
            out << (i ? "," : "") << " " << absence_text(abs[i]);
          }
          implied.insert(implied.end(), abs.begin(), abs.end());
        }
        out << "\n";
      }
      for (const auto& claim : inst.claims) {
        const bool covered = std::any_of(implied.begin(), implied.end(), [&](const Absence& a) {
          return rules_out(a, claim.color, claim.kind, claim.size);
        });
        out << "  claim " << absence_text(claim) << ": "
            << (covered ? "implied by certificates" : "needs exact search") << "\n";
      }
      return all_valid ? kExitOk : kExitNegative;
    }

    if (*ham) {
      const Instance inst = parse_instance(read_file(ham_file));
      const auto& host = inst.coloring.host();
      if (host.part_count() != 2 || host.part_size(0) != host.part_size(1)) {
        err << "ham needs a balanced bipartite host K_{m,m}\n";
        return kExitUsage;
      }
      const auto left = detail::range(host.part_begin(0), host.part_end(0));
      const auto right = detail::range(host.part_begin(1), host.part_end(1));
      bool any = false;
      for (Color c : kColors) {
        if (ham_color != "both" && ham_color != color_name(c)) continue;
        const auto h = BalancedBipartite::from_graph(color_subgraph(inst.coloring, c), left, right);
        Certification verdict;
        if (ham_theorem == "chvatal") {
          verdict = chvatal_certifier(h);
        } else if (ham_theorem == "berge") {
          verdict = berge_certifier(h);
        } else {
          verdict = las_vergnas_certifier(h, ham_q);
        }
        any = any || verdict == Certification::guaranteed;
        out << color_name(c) << ": " << ham_theorem;
        if (ham_theorem == "lasvergnas") out << " q=" << ham_q;
        out << " " << certification_name(verdict) << "\n";
      }
      return any ? kExitOk : kExitNegative;
    }

    if (*cond) {
      const auto r = conditions_report(cond_n, cond_parts);
      out << "n=" << r.n << " parts=" << join_parts(r.part_sizes) << " N=" << r.total << "\n";
      for (int k = 1; k <= 7; ++k) {
        out << "  c" << k << " " << condition_text(k) << ": " << (r.condition(k) ? "holds" : "fails") << "\n";
      }
      int code = kExitOk;
      for (Target t : kTargets) {
        const bool ok = r.applicable(t);
        out << "  " << target_name(t) << ": " << (ok ? "applicable" : "not applicable") << "\n";
        if (!cond_target.empty() && cond_target == target_name(t) && !ok) code = kExitNegative;
      }
      return code;
    }

    if (*verify) {
      auto host = build_host(verify_parts);
      const StructureQuery q{kind_option(verify_target), verify_size};
      if (!verify_range.empty()) {
        const auto [lo, hi] = parse_range(verify_range);
        verify_opts.begin = lo;
        verify_opts.end = hi;
      }
      verify_opts.color_swap = verify_swap;
      verify_opts.part_permutations = verify_perms;
      const auto summary = enumerate_verify(host, q, verify_opts);
      out << host_label(*host) << " target " << q.label() << " range [" << summary.range_begin << ", "
          << summary.range_end << ")\n";
      out << "  " << summary.containing() << "/" << summary.colorings
          << " colorings contain a monochromatic " << q.label() << "\n";
      out << "  searched: " << summary.searched << "\n";
      out << "  failures: " << summary.failures << "\n";
      if (summary.counterexample) {
        out << "  counterexample: index " << *summary.counterexample_index << " bits "
            << coloring_bits(*summary.counterexample) << "\n";
        if (!verify_witness.empty()) {
          Instance w{*summary.counterexample, {}, {}, {}, std::nullopt, std::nullopt};
          write_file(verify_witness, serialize_instance(w));
        }
      }
      if (!verify_csv.empty()) {
        const std::string witness = summary.counterexample ? verify_witness : std::string{};
        write_file(verify_csv,
                   std::string(kFrontierCsvHeader) + "\n" + frontier_csv_row(summary, witness) + "\n");
      }
      // The only nondeterministic line.
      out << "  wall-time: " << std::fixed << std::setprecision(3) << summary.wall_seconds << " s\n";
      return summary.failures == 0 ? kExitOk : kExitNegative;
    }

    if (*dot) {
      const Instance inst = parse_instance(read_file(dot_file));
      const auto text = export_dot(inst.coloring, inst.named_sets);
      if (dot_out.empty()) {
        out << text;
      } else {
        write_file(dot_out, text);
      }
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mpramsey

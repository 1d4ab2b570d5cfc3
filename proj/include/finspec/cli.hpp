#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finspec/duality.hpp"
#include "finspec/io.hpp"
#include "finspec/sweep.hpp"
#include "finspec/theorems.hpp"

namespace finspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAssertionFailure = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

inline const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {"pc-space",    "stone",        "qccl-stone",  "heyting",
                                                 "root-forest", "collapse-min", "collapse-max"};
  return names;
}

namespace detail {

/// Reports are about a spectral space; a distributive lattice stands for its
/// spectrum.
inline Poset as_space(const io::Structure& s) {
  if (const auto* p = std::get_if<Poset>(&s)) return *p;
  const Lattice& l = std::get<Lattice>(s);
  if (!is_distributive(l)) throw MalformedInput("this command needs a poset or a distributive lattice");
  return spec_poset(l);
}

inline ConditionReport run_report(const std::string& theorem, const Poset& p) {
  if (theorem == "pc-space") return pc_space_report(p);
  if (theorem == "stone") return stone_report(p);
  if (theorem == "qccl-stone") return qccl_stone_report(p);
  if (theorem == "heyting") return heyting_report(p);
  if (theorem == "root-forest") return root_forest_report(p);
  if (theorem == "collapse-min") return collapse_report(p, CollapseSide::min_side);
  return collapse_report(p, CollapseSide::max_side);
}

inline std::string element_label(const SetLattice& l, Element e) { return to_string(l.members[e]); }

inline std::string set_lattice_text(const SetLattice& l) {
  std::string out = io::to_text(l.lattice);
  for (Element e = 0; e < l.members.size(); ++e) {
    out += "# element " + std::to_string(e) + " = " + to_string(l.members[e]) + "\n";
  }
  return out;
}

inline io::json set_lattice_json(const SetLattice& l) {
  io::json j = io::to_json(l.lattice);
  io::json members = io::json::array();
  for (PointSet s : l.members) {
    io::json pts = io::json::array();
    for (Point x : s) pts.push_back(x);
    members.push_back(pts);
  }
  j["members"] = members;
  return j;
}

inline std::string opt_label(const std::optional<Element>& e, const std::vector<std::string>& labels) {
  return e ? labels[*e] : std::string("-");
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite spectral spaces, their lattices of compact opens and the equivalences between them"};
  app.require_subcommand(1);

  std::string input;
  std::string theorem;
  bool as_json = false;
  bool as_dot = false;
  std::size_t sweep_n = 0;
  std::size_t jobs = 1;
  std::size_t max_size = EnumerationOptions{}.max_size;
  std::string mode = "unlabeled";

  auto* check = app.add_subcommand("check", "Classify a poset's down-set lattice, or a lattice");
  check->add_option("input", input, "File or built-in fixture (v3 l3 c2 a2 d4 m3 n5 chain<k> bool<k>)")->required();
  check->add_flag("--json", as_json, "Emit JSON");

  auto* report = app.add_subcommand("report", "Evaluate every condition of one equivalence theorem");
  report->add_option("theorem", theorem, "Theorem")->required()->check(CLI::IsMember(theorem_names()));
  report->add_option("input", input, "File or built-in fixture")->required();
  report->add_flag("--json", as_json, "Emit JSON");

  auto* pc_table = app.add_subcommand("pc-table", "Pseudocomplement and implication tables");
  pc_table->add_option("input", input, "File or built-in fixture")->required();
  pc_table->add_flag("--json", as_json, "Emit JSON");

  auto* spec = app.add_subcommand("spec", "Prime spectrum of a lattice (of the down-set lattice for a poset)");
  spec->add_option("input", input, "File or built-in fixture")->required();
  auto* spec_json = spec->add_flag("--json", as_json, "Emit JSON");
  spec->add_flag("--dot", as_dot, "Emit a DOT Hasse diagram")->excludes(spec_json);

  auto* downs = app.add_subcommand("downsets", "Lattice of down-sets of a poset");
  downs->add_option("input", input, "File or built-in fixture")->required();
  auto* downs_json = downs->add_flag("--json", as_json, "Emit JSON");
  downs->add_flag("--dot", as_dot, "Emit a DOT Hasse diagram")->excludes(downs_json);

  auto* envelope = app.add_subcommand("envelope", "Boolean envelope of a poset's down-set lattice");
  envelope->add_option("input", input, "File or built-in fixture")->required();
  envelope->add_flag("--json", as_json, "Emit JSON");

  auto* sweep_cmd = app.add_subcommand("sweep", "Check every theorem on every poset up to n points");
  sweep_cmd->add_option("n", sweep_n, "Largest poset size")->required();
  sweep_cmd->add_option("--mode", mode, "labeled or unlabeled")->check(CLI::IsMember({"labeled", "unlabeled"}));
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->add_option("--max", max_size, "Enumeration cap");
  sweep_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("input", input, "File or built-in fixture")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (check->parsed()) {
      const io::Structure s = io::load(input);
      if (const auto* p = std::get_if<Poset>(&s)) {
        const PosetProfile profile = classify(*p);
        out << (as_json ? io::profile_to_json(profile, input).dump(2) + "\n" : io::profile_to_text(profile, input));
      } else {
        const LatticeProfile profile = classify(std::get<Lattice>(s));
        out << (as_json ? io::profile_to_json(profile, input).dump(2) + "\n" : io::profile_to_text(profile, input));
      }
      return kSuccess;
    }

    if (report->parsed()) {
      const ConditionReport r = detail::run_report(theorem, detail::as_space(io::load(input)));
      out << (as_json ? io::to_json(r).dump(2) + "\n" : io::to_text(r));
      return r.agreement() ? kSuccess : kAssertionFailure;
    }

    if (pc_table->parsed()) {
      const io::Structure s = io::load(input);
      std::vector<std::string> labels;
      std::optional<Lattice> owned;
      if (const auto* p = std::get_if<Poset>(&s)) {
        SetLattice sl = downset_lattice(*p);
        for (Element e = 0; e < sl.members.size(); ++e) labels.push_back(detail::element_label(sl, e));
        owned.emplace(std::move(sl.lattice));
      } else {
        owned.emplace(std::get<Lattice>(s));
        for (Element e = 0; e < owned->size(); ++e) labels.push_back(std::to_string(e));
      }
      const Lattice& l = *owned;
      if (as_json) {
        io::json pc = io::json::array();
        io::json imp = io::json::array();
        for (Element a = 0; a < l.size(); ++a) {
          const auto star = pseudocomplement(l, a);
          pc.push_back(star ? io::json(*star) : io::json(nullptr));
          io::json row = io::json::array();
          for (Element b = 0; b < l.size(); ++b) {
            const auto r = rel_pseudocomplement(l, a, b);
            row.push_back(r ? io::json(*r) : io::json(nullptr));
          }
          imp.push_back(row);
        }
        out << io::json{{"schema", io::kSchemaVersion}, {"kind", "pc-table"}, {"labels", labels},
                        {"pseudocomplement", pc}, {"implication", imp}}
                   .dump(2)
            << "\n";
        return kSuccess;
      }
      std::size_t w = 1;
      for (const auto& s : labels) w = std::max(w, s.size());
      auto pad = [&](const std::string& s) { return s + std::string(w - s.size() + 2, ' '); };
      out << "pseudocomplement\n";
      for (Element a = 0; a < l.size(); ++a) {
        out << "  " << pad(labels[a]) << "* = " << detail::opt_label(pseudocomplement(l, a), labels) << "\n";
      }
      out << "implication (row -> column)\n  " << pad("");
      for (Element b = 0; b < l.size(); ++b) out << pad(labels[b]);
      out << "\n";
      for (Element a = 0; a < l.size(); ++a) {
        out << "  " << pad(labels[a]);
        for (Element b = 0; b < l.size(); ++b) out << pad(detail::opt_label(rel_pseudocomplement(l, a, b), labels));
        out << "\n";
      }
      return kSuccess;
    }

    if (spec->parsed()) {
      const io::Structure s = io::load(input);
      std::optional<Lattice> lattice;
      if (const auto* p = std::get_if<Poset>(&s)) {
        lattice.emplace(downset_lattice(*p).lattice);
      } else {
        lattice.emplace(std::get<Lattice>(s));
      }
      const Spectrum sp = spectrum(*lattice);
      if (as_dot) {
        out << io::to_dot(sp.poset);
      } else if (as_json) {
        io::json j = io::to_json(sp.poset);
        io::json primes = io::json::array();
        for (const auto& prime : sp.primes) primes.push_back(prime.members().members());
        j["primes"] = primes;
        j["schema"] = io::kSchemaVersion;
        out << j.dump(2) << "\n";
      } else {
        out << io::to_text(sp.poset);
        for (Point i = 0; i < sp.primes.size(); ++i) {
          out << "# point " << i << " = prime ideal " << to_string(sp.primes[i]) << "\n";
        }
      }
      return kSuccess;
    }

    if (downs->parsed()) {
      const SetLattice l = downset_lattice(detail::as_space(io::load(input)));
      if (as_dot) {
        out << io::to_dot(l);
      } else if (as_json) {
        io::json j = detail::set_lattice_json(l);
        j["schema"] = io::kSchemaVersion;
        out << j.dump(2) << "\n";
      } else {
        out << detail::set_lattice_text(l);
      }
      return kSuccess;
    }

    if (envelope->parsed()) {
      const BooleanEnvelope env = boolean_envelope(detail::as_space(io::load(input)));
      if (as_json) {
        io::json j = detail::set_lattice_json(env.envelope);
        j["embedding"] = env.embedding;
        j["schema"] = io::kSchemaVersion;
        out << j.dump(2) << "\n";
      } else {
        out << detail::set_lattice_text(env.envelope);
        for (Element i = 0; i < env.embedding.size(); ++i) {
          out << "# down-set " << to_string(env.downsets.members[i]) << " -> element " << env.embedding[i] << "\n";
        }
      }
      return kSuccess;
    }

    if (sweep_cmd->parsed()) {
      SweepOptions options;
      options.jobs = jobs;
      options.enumeration.max_size = max_size;
      const SweepSummary summary =
          sweep(sweep_n, mode == "labeled" ? EnumerationMode::labeled : EnumerationMode::unlabeled, options);
      out << (as_json ? io::to_json(summary).dump(2) + "\n" : io::to_text(summary));
      return summary.total_disagreements() == 0 ? kSuccess : kAssertionFailure;
    }

    if (dot->parsed()) {
      const io::Structure s = io::load(input);
      if (const auto* p = std::get_if<Poset>(&s)) {
        out << io::to_dot(*p);
      } else {
        out << io::to_dot(std::get<Lattice>(s));
      }
      return kSuccess;
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvariantViolation& e) {
    err << "assertion failed: " << e.what() << "\n";
    return kAssertionFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace finspec::cli

#pragma once

// Command-line front end. run() is kept separate from main() so the tests
// can drive it with captured streams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "sepcong/enumerate.hpp"
#include "sepcong/report.hpp"
#include "sepcong/sepcong.hpp"

namespace sepcong::cli {

  inline constexpr int kExitOk      = 0;
  inline constexpr int kExitFailure = 1;
  inline constexpr int kExitUsage   = 2;

  /// Caps, overridable through SEPCONG_CONGRUENCE_CAP, SEPCONG_SUBSET_CAP,
  /// SEPCONG_COMMUTATIVE_CAP and SEPCONG_GENERAL_CAP.
  struct Caps {
    std::size_t congruence  = kDefaultCongruenceCap;
    std::size_t subset      = kDefaultSubsetCap;
    std::size_t commutative = kDefaultCommutativeCap;
    std::size_t general     = kDefaultGeneralCap;

    static Caps from_environment() {
      Caps c;
      auto read = [](char const* name, std::size_t& slot) {
        if (char const* v = std::getenv(name)) {
          try {
            slot = std::stoul(v);
          } catch (std::exception const&) {
            throw InvalidArgument(std::string("bad value for ") + name + ": '" + v + "'");
          }
        }
      };
      read("SEPCONG_CONGRUENCE_CAP", c.congruence);
      read("SEPCONG_SUBSET_CAP", c.subset);
      read("SEPCONG_COMMUTATIVE_CAP", c.commutative);
      read("SEPCONG_GENERAL_CAP", c.general);
      return c;
    }
  };

  struct Input {
    std::string path;
    std::string table;  // inline, rows separated by '|'

    Semigroup load() const {
      if (!table.empty()) {
        std::string text = table;
        std::replace(text.begin(), text.end(), '|', '\n');
        return parse_table(text);
      }
      if (path.empty()) {
        throw InvalidArgument("no input: give a table file or --table");
      }
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot open '" + path + "'");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return parse_table(buf.str());
    }
  };

  inline void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("file", in.path, "Cayley table file");
    cmd->add_option("--table", in.table, "inline table, rows separated by '|', e.g. \"2|0 0|0 1\"");
  }

  inline std::array<bool, kNumTheorems> parse_theorem_list(std::string const& text) {
    std::array<bool, kNumTheorems> on{};
    for (auto tok : detail::split(text, ',')) {
      if (tok == "1") {
        on[static_cast<std::size_t>(TheoremId::ClassUnionSeparator)] = true;
      } else if (tok == "2") {
        on[static_cast<std::size_t>(TheoremId::FamilyCongruence)] = true;
      } else if (tok == "3") {
        on[static_cast<std::size_t>(TheoremId::ConstructionForward)]  = true;
        on[static_cast<std::size_t>(TheoremId::ConstructionConverse)] = true;
      } else if (tok == "4") {
        on[static_cast<std::size_t>(TheoremId::Sandwich)] = true;
      } else if (tok == "5") {
        on[static_cast<std::size_t>(TheoremId::NonUniversalExistence)] = true;
      } else if (auto id = parse_theorem_id(tok)) {
        on[static_cast<std::size_t>(*id)] = true;
      } else {
        throw InvalidArgument("unknown theorem '" + std::string(tok) + "'");
      }
    }
    return on;
  }

  inline std::string subset_list(std::span<SubsetMask const> xs) {
    std::string out;
    for (auto x : xs) {
      out += (out.empty() ? "" : " ") + to_string(x);
    }
    return out;
  }

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separators, monoid congruences and exhaustive checks on finite semigroups",
                 "sepcong"};
    app.require_subcommand(1);
    // -h is left free so that pfam and maxfam can take --h H.
    app.set_help_flag("--help", "print this help message and exit");
    app.set_version_flag("--version", "sepcong 1.0.0");

    Caps caps;
    try {
      caps = Caps::from_environment();
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }

    Input       input;
    bool        json = false;
    std::string subset_arg, partition_arg, h_arg;
    std::vector<std::string> member_args;
    bool        monoid_only = false;

    auto* validate = app.add_subcommand("validate", "check a table and print its basic properties");
    add_input(validate, input);
    validate->add_flag("--json", json);

    auto* sep = app.add_subcommand("sep", "idealizers and separator of a subset");
    add_input(sep, input);
    sep->add_option("--subset", subset_arg, "subset such as 1,2 or -")->required();
    sep->add_flag("--json", json);

    auto* congruences = app.add_subcommand("congruences", "list all congruences");
    add_input(congruences, input);
    congruences->add_flag("--monoid-only", monoid_only, "only monoid congruences");
    congruences->add_option("--max-order", caps.congruence, "order cap for enumeration");
    congruences->add_flag("--json", json);

    auto* quot = app.add_subcommand("quotient", "quotient by a congruence");
    add_input(quot, input);
    quot->add_option("--partition", partition_arg, "partition such as 0;1,2")->required();
    quot->add_flag("--json", json);

    auto* ph = app.add_subcommand("ph", "the congruence P_H of a subset H");
    add_input(ph, input);
    ph->add_option("--subset", subset_arg, "subset H")->required();
    ph->add_flag("--json", json);

    auto* pfam = app.add_subcommand("pfam", "the congruence P(H;H_i,I) of a family");
    add_input(pfam, input);
    pfam->add_option("--h", h_arg, "subset H")->required();
    pfam->add_option("--members", member_args, "member subsets H_i")->required()->expected(1, -1);
    pfam->add_flag("--json", json);

    auto* maxfam = app.add_subcommand("maxfam", "all subsets A with H contained in Sep(A)");
    add_input(maxfam, input);
    maxfam->add_option("--h", h_arg, "subset H")->required();
    maxfam->add_flag("--json", json);

    std::size_t   order = 0;
    bool          commutative = false, up_to_iso = false, force = false;
    std::string   theorem_arg;
    VerifyOptions vopt;
    vopt.jobs = std::max(1U, std::thread::hardware_concurrency());
    std::size_t sample = 0;

    auto* verify = app.add_subcommand("verify", "check the theorems over a table or a generated corpus");
    verify->add_option("file", input.path, "corpus file (one or more tables)");
    verify->add_option("--table", input.table, "inline table, rows separated by '|'");
    verify->add_option("--order", order, "generate all semigroups of this order");
    verify->add_flag("--commutative", commutative, "generate commutative semigroups only");
    verify->add_flag("--up-to-iso", up_to_iso, "one table per relabeling class");
    verify->add_option("--theorems", theorem_arg, "subset of 1,2,3,4,5 (5 = corollary)");
    verify->add_flag("--exhaustive-selections", vopt.exhaustive_selections,
                     "all class selections and all validating subfamilies");
    verify->add_option("--random-selections", vopt.random_selections, "seeded class selections per congruence");
    verify->add_flag("--hunt", vopt.hunt, "run commutative-only checks on every semigroup");
    verify->add_option("--seed", vopt.seed, "random seed");
    verify->add_option("--jobs", vopt.jobs, "worker threads");
    verify->add_flag("--force", force, "lift the exhaustive order caps");
    verify->add_flag("--json", json);

    auto* enumerate = app.add_subcommand("enumerate", "print every semigroup of an order");
    enumerate->add_option("--order", order, "order")->required();
    enumerate->add_flag("--commutative", commutative);
    enumerate->add_flag("--up-to-iso", up_to_iso);
    enumerate->add_flag("--force", force, "lift the exhaustive order caps");
    enumerate->add_option("--sample", sample, "random associative tables instead of all");
    enumerate->add_option("--seed", vopt.seed, "random seed for --sample");
    enumerate->add_option("--jobs", vopt.jobs, "worker threads");
    enumerate->add_flag("--json", json);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
      app.parse(std::move(argv_rev));
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return kExitOk;
    } catch (CLI::CallForVersion const& e) {
      app.exit(e, out, err);
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kExitUsage;
    }

    try {
      if (validate->parsed()) {
        Semigroup s  = input.load();
        auto      id = identity_element(s);
        if (json) {
          ordered_json j;
          j["order"]       = s.order();
          j["commutative"] = s.is_commutative();
          j["identity"]    = id ? ordered_json(*id) : ordered_json(nullptr);
          j["table"]       = table_json(s);
          out << j.dump(2) << '\n';
        } else {
          out << "ok order=" << s.order() << " commutative=" << (s.is_commutative() ? "yes" : "no")
              << " identity=" << (id ? std::to_string(*id) : "none") << '\n';
        }
        return kExitOk;
      }

      if (sep->parsed()) {
        Semigroup s = input.load();
        auto      r = separator_report(s, parse_subset(subset_arg, s.order()));
        if (json) {
          ordered_json j;
          j["subset"]                  = to_string(r.subset);
          j["idealizer"]               = to_string(r.idealizer_of_subset);
          j["idealizer_of_complement"] = to_string(r.idealizer_of_complement);
          j["separator"]               = to_string(r.separator);
          j["side"]                    = to_string(r.side);
          out << j.dump(2) << '\n';
        } else {
          out << "Id(A)=" << to_string(r.idealizer_of_subset)
              << "  Id(S\\A)=" << to_string(r.idealizer_of_complement)
              << "  Sep(A)=" << to_string(r.separator) << "  side=" << to_string(r.side) << '\n';
        }
        return kExitOk;
      }

      if (congruences->parsed()) {
        Semigroup    s   = input.load();
        ordered_json arr = ordered_json::array();
        for (auto const& p : enumerate_congruences(s, caps.congruence)) {
          auto m = classify_monoid_congruence(s, p);
          if (monoid_only && !m) {
            continue;
          }
          if (json) {
            arr.push_back({{"partition", to_string(p.partition())},
                           {"monoid", m.has_value()},
                           {"identity_class", m ? ordered_json(to_string(m->identity_class))
                                                : ordered_json(nullptr)}});
          } else {
            out << to_string(p.partition());
            if (m) {
              out << "  identity=" << to_string(m->identity_class);
            }
            out << '\n';
          }
        }
        if (json) {
          out << arr.dump(2) << '\n';
        }
        return kExitOk;
      }

      if (quot->parsed()) {
        Semigroup  s = input.load();
        Congruence p(s, parse_partition(partition_arg, s.order()));
        auto       q = quotient(s, p);
        if (json) {
          ordered_json j;
          j["table"]     = table_json(q.semigroup);
          j["class_map"] = q.class_map;
          ordered_json cls = ordered_json::array();
          for (auto c : p.classes()) {
            cls.push_back(to_string(c));
          }
          j["classes"] = std::move(cls);
          out << j.dump(2) << '\n';
        } else {
          auto cls = p.classes();
          for (std::size_t k = 0; k < cls.size(); ++k) {
            out << "# class " << k << " = " << to_string(cls[k]) << '\n';
          }
          out << format_table(q.semigroup);
        }
        return kExitOk;
      }

      if (ph->parsed()) {
        Semigroup s = input.load();
        auto      p = p_h(s, parse_subset(subset_arg, s.order()));
        if (json) {
          out << ordered_json{{"partition", to_string(p.partition())}}.dump(2) << '\n';
        } else {
          out << to_string(p.partition()) << '\n';
        }
        return kExitOk;
      }

      if (pfam->parsed()) {
        Semigroup               s = input.load();
        std::vector<SubsetMask> members;
        for (auto const& m : member_args) {
          members.push_back(parse_subset(m, s.order()));
        }
        auto fam = validate_family(s, parse_subset(h_arg, s.order()), members);
        auto p   = p_family(s, fam);
        if (json) {
          out << ordered_json{{"family", format_family(fam)}, {"partition", to_string(p.partition())}}
                     .dump(2)
              << '\n';
        } else {
          out << to_string(p.partition()) << '\n';
        }
        return kExitOk;
      }

      if (maxfam->parsed()) {
        Semigroup s   = input.load();
        auto      fam = maximal_family(s, parse_subset(h_arg, s.order()), caps.subset);
        if (json) {
          ordered_json m = ordered_json::array();
          for (auto x : fam.members()) {
            m.push_back(to_string(x));
          }
          out << ordered_json{{"h", to_string(fam.h())}, {"members", m}}.dump(2) << '\n';
        } else {
          out << format_family(fam) << '\n';
        }
        return kExitOk;
      }

      if (enumerate->parsed()) {
        std::vector<Semigroup> tables;
        if (sample > 0) {
          tables = sample_semigroups(order, sample, commutative, vopt.seed);
        } else if (commutative) {
          tables = enumerate_commutative(order, up_to_iso, force ? order : caps.commutative, vopt.jobs);
        } else {
          tables = enumerate_all(order, up_to_iso, force ? order : caps.general, vopt.jobs);
        }
        if (json) {
          ordered_json arr = ordered_json::array();
          for (auto const& t : tables) {
            arr.push_back(table_json(t));
          }
          out << ordered_json{{"count", tables.size()}, {"tables", arr}}.dump(2) << '\n';
        } else {
          out << "# " << tables.size() << " semigroups\n" << format_corpus(tables);
        }
        return kExitOk;
      }

      if (verify->parsed()) {
        std::vector<Semigroup> corpus;
        if (order > 0) {
          if (!input.path.empty() || !input.table.empty()) {
            throw InvalidArgument("give either a file, --table or --order, not several");
          }
          corpus = commutative
                       ? enumerate_commutative(order, up_to_iso, force ? order : caps.commutative, vopt.jobs)
                       : enumerate_all(order, up_to_iso, force ? order : caps.general, vopt.jobs);
        } else if (!input.table.empty()) {
          corpus.push_back(input.load());
        } else if (!input.path.empty()) {
          for (auto& e : load_corpus(input.path)) {
            corpus.push_back(std::move(e.semigroup));
          }
        } else {
          throw InvalidArgument("verify needs a file, --table or --order");
        }
        if (!theorem_arg.empty()) {
          vopt.enabled = parse_theorem_list(theorem_arg);
        }
        vopt.congruence_cap = force ? kMaxOrder : caps.congruence;
        vopt.subset_cap     = force ? std::min<std::size_t>(kMaxOrder - 1, 30) : caps.subset;
        auto report         = sweep_corpus(corpus, vopt);
        if (json) {
          out << report_json(report).dump(2) << '\n';
        } else {
          out << report_text(report);
          err << "elapsed " << report.elapsed_seconds << " s\n";
        }
        return report.failures() == 0 ? kExitOk : kExitFailure;
      }
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << " (raise it with --force or the SEPCONG_*_CAP variables)\n";
      return kExitUsage;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitUsage;
  }

  inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
  }

}  // namespace sepcong::cli

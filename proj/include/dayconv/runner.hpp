#pragma once

// Command execution over parsed documents. Every command produces a Report:
// the command echo, one pass/fail/skip entry per check with witnesses and
// result tables, and per-check timing. The machine form is a key-value tree
// that parses back to the same report and is byte deterministic for a fixed
// input; timing appears only in the human form.

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dayconv/certify.hpp"
#include "dayconv/cocomplete.hpp"
#include "dayconv/day.hpp"
#include "dayconv/grothendieck.hpp"
#include "dayconv/spec_format.hpp"
#include "dayconv/yoneda.hpp"

namespace dayconv::cli {

using cocomplete::FinSetTarget;
using cocomplete::TFunctor;

enum class CheckStatus { pass, fail, skip };

inline const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skip";
  }
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // why it failed or was skipped, empty on pass
  std::vector<std::pair<std::string, std::string>> data;
  double seconds = 0.0;

  friend bool operator==(const CheckItem& a, const CheckItem& b) {
    return a.name == b.name && a.status == b.status && a.witness == b.witness && a.data == b.data;
  }
};

struct Report {
  std::string command;
  std::vector<std::string> arguments;
  std::vector<CheckItem> checks;
  double seconds = 0.0;

  int count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
      if (c.status == s) ++n;
    return n;
  }
  // a skipped check documents inapplicability; only failures sink the run
  bool passed() const { return count(CheckStatus::fail) == 0; }

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.arguments == b.arguments && a.checks == b.checks;
  }
};

// ---------------------------------------------------------------------------
// Report <-> tree

inline TreeNode report_to_tree(const Report& r) {
  TreeNode root{"report", {}, {}, true};
  root.leaf("command", {r.command});
  if (!r.arguments.empty()) root.leaf("arguments", r.arguments);
  TreeNode& checks = root.child("checks");
  for (const auto& c : r.checks) {
    TreeNode& n = checks.child("check");
    n.leaf("name", {c.name});
    n.leaf("status", {status_label(c.status)});
    if (!c.witness.empty()) n.leaf("witness", {c.witness});
    if (!c.data.empty()) {
      TreeNode& d = n.child("data");
      for (const auto& [k, v] : c.data) d.leaf(k, {v});
    }
  }
  TreeNode& s = root.child("summary");
  s.leaf("passed", {std::to_string(r.count(CheckStatus::pass))});
  s.leaf("failed", {std::to_string(r.count(CheckStatus::fail))});
  s.leaf("skipped", {std::to_string(r.count(CheckStatus::skip))});
  return root;
}

struct ReportParseResult {
  std::optional<Report> report;
  std::optional<Diagnostic> error;
  bool ok() const { return report.has_value(); }
};

namespace detail_report {

inline Diagnostic shape_error(std::string msg) {
  return Diagnostic{DiagCode::validation_failure, 1, 1, std::move(msg)};
}

inline bool single_arg(const TreeNode& n, std::string& out) {
  if (n.is_block || n.args.size() != 1) return false;
  out = n.args[0];
  return true;
}

}  // namespace detail_report

inline ReportParseResult report_from_tree(const TreeNode& root) {
  using detail_report::shape_error;
  if (root.key != "report") return {std::nullopt, shape_error("top-level block must be report")};
  Report r;
  bool have_command = false, have_checks = false, have_summary = false;
  for (const auto& n : root.children) {
    if (n.key == "command") {
      if (!detail_report::single_arg(n, r.command))
        return {std::nullopt, shape_error("command needs exactly one value")};
      have_command = true;
    } else if (n.key == "arguments") {
      r.arguments = n.args;
    } else if (n.key == "checks" && n.is_block) {
      have_checks = true;
      for (const auto& cn : n.children) {
        if (cn.key != "check" || !cn.is_block)
          return {std::nullopt, shape_error("checks may contain only check blocks")};
        CheckItem c;
        bool have_name = false, have_status = false;
        for (const auto& f : cn.children) {
          std::string v;
          if (f.key == "name") {
            if (!detail_report::single_arg(f, c.name))
              return {std::nullopt, shape_error("check name needs exactly one value")};
            have_name = true;
          } else if (f.key == "status") {
            if (!detail_report::single_arg(f, v))
              return {std::nullopt, shape_error("check status needs exactly one value")};
            if (v == "pass")
              c.status = CheckStatus::pass;
            else if (v == "fail")
              c.status = CheckStatus::fail;
            else if (v == "skip")
              c.status = CheckStatus::skip;
            else
              return {std::nullopt, shape_error("unknown check status '" + v + "'")};
            have_status = true;
          } else if (f.key == "witness") {
            if (!detail_report::single_arg(f, c.witness))
              return {std::nullopt, shape_error("witness needs exactly one value")};
          } else if (f.key == "data" && f.is_block) {
            for (const auto& dn : f.children) {
              std::string dv;
              if (!detail_report::single_arg(dn, dv))
                return {std::nullopt, shape_error("data entries need exactly one value")};
              c.data.emplace_back(dn.key, dv);
            }
          } else {
            return {std::nullopt, shape_error("unexpected key '" + f.key + "' in a check")};
          }
        }
        if (!have_name || !have_status)
          return {std::nullopt, shape_error("a check needs a name and a status")};
        r.checks.push_back(std::move(c));
      }
    } else if (n.key == "summary" && n.is_block) {
      have_summary = true;
      for (const auto& f : n.children) {
        std::string v;
        if (!detail_report::single_arg(f, v))
          return {std::nullopt, shape_error("summary entries need exactly one value")};
        int expect;
        if (f.key == "passed")
          expect = r.count(CheckStatus::pass);
        else if (f.key == "failed")
          expect = r.count(CheckStatus::fail);
        else if (f.key == "skipped")
          expect = r.count(CheckStatus::skip);
        else
          return {std::nullopt, shape_error("unexpected key '" + f.key + "' in the summary")};
        if (v != std::to_string(expect))
          return {std::nullopt,
                  shape_error("summary says " + v + " " + f.key + ", checks say " +
                              std::to_string(expect))};
      }
    } else {
      return {std::nullopt, shape_error("unexpected key '" + n.key + "' in the report")};
    }
  }
  if (!have_command || !have_checks || !have_summary)
    return {std::nullopt, shape_error("a report needs command, checks, and summary")};
  return {std::move(r), std::nullopt};
}

enum class ReportFormat { human, machine };

namespace detail_report {

inline std::string round3(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s;
  return out.str();
}

}  // namespace detail_report

inline std::string print_report(const Report& r, ReportFormat fmt) {
  if (fmt == ReportFormat::machine) return print_tree(report_to_tree(r));
  std::string out = "command: " + r.command;
  for (const auto& a : r.arguments) out += " " + a;
  out += "\n";
  for (const auto& c : r.checks) {
    out += "  [" + std::string(status_label(c.status)) + "] " + c.name;
    if (!c.witness.empty()) out += ": " + c.witness;
    out += " (" + detail_report::round3(c.seconds) + "s)\n";
    for (const auto& [k, v] : c.data) out += "      " + k + ": " + v + "\n";
  }
  out += "summary: " + std::to_string(r.count(CheckStatus::pass)) + " passed, " +
         std::to_string(r.count(CheckStatus::fail)) + " failed, " +
         std::to_string(r.count(CheckStatus::skip)) + " skipped (" +
         detail_report::round3(r.seconds) + "s)\n";
  return out;
}

inline ReportParseResult parse_report(const std::string& text) {
  auto tree = parse_tree(text);
  if (!tree.ok()) return {std::nullopt, tree.error};
  return report_from_tree(*tree.root);
}

// ---------------------------------------------------------------------------
// Commands

struct RunOptions {
  int max_n = 2;
  int carrier_bound = 2;
  long long ceiling = 10000;  // finite-set target element ceiling
  std::string golden_dir = certify::CertifyOptions{}.golden_dir;
  std::string report_path = "dayconv-last.report";
};

namespace detail_run {

// one check, timed; the body fills witness/data and returns the status
template <typename Fn>
inline void checked(Report& r, std::string name, Fn&& body) {
  CheckItem c;
  c.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  c.status = body(c);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.seconds += c.seconds;
  r.checks.push_back(std::move(c));
}

inline TFunctor graded_of(const FunctorDecl& fd, const SymMonoidalStructure& M,
                          cocomplete::CocompleteTarget& T) {
  TFunctor F{M.cat, &T, {}, {}};
  for (int v : fd.values) F.ob.push_back(v);
  F.mo.resize(M.cat->morphism_count());
  for (ObjId a = 0; a < M.cat->object_count(); ++a)
    F.mo[M.cat->identity(a)] = T.t_identity(F.ob[a]);
  return F;
}

inline SymMonoidalStructure monoidal_of(const SpecDocument& doc, const std::string& name) {
  const MonoidalDecl* md = doc.monoidal(name);
  if (!md) throw DomainError("no monoidal structure named '" + name + "'");
  return build_monoidal(*md, build_category(*doc.category(md->category)));
}

inline CheckStatus fibration_check(const SymMonoidalStructure& M, int level, CheckItem& c) {
  auto tf = grothendieck::build_tensor_fibration(M, monoidal::build_F_skeleton(level));
  auto rep = grothendieck::validate_cocartesian_fibration(tf.fib, &tf.skeleton);
  c.data.emplace_back("level", std::to_string(level));
  c.data.emplace_back("total-objects", std::to_string(tf.fib.total->object_count()));
  if (rep.ok()) return CheckStatus::pass;
  c.witness = rep.to_string();
  return CheckStatus::fail;
}

inline void run_validate(const SpecDocument& doc, const RunOptions& opt, Report& r) {
  if (doc.empty()) {
    for (const auto& e : corpus::bundled_corpus()) {
      checked(r, "base " + e.name, [&](CheckItem& c) {
        auto rc = fincat::validate_category(*e.m.cat);
        auto rm = monoidal::validate_monoidal(e.m);
        if (rc.ok() && rm.ok()) return CheckStatus::pass;
        c.witness = !rc.ok() ? "category axioms fail" : "monoidal coherence fails";
        return CheckStatus::fail;
      });
      checked(r, "fibration " + e.name,
              [&](CheckItem& c) { return fibration_check(e.m, opt.max_n, c); });
    }
    return;
  }
  for (const auto& d : doc.categories)
    checked(r, "category " + d.name, [&](CheckItem& c) {
      auto rep = fincat::validate_category(*build_category(d));
      if (rep.ok()) return CheckStatus::pass;
      c.witness = rep.to_string();
      return CheckStatus::fail;
    });
  for (const auto& d : doc.monoidals) {
    checked(r, "monoidal " + d.name, [&](CheckItem& c) {
      auto rep = monoidal::validate_monoidal(
          build_monoidal(d, build_category(*doc.category(d.category))));
      if (rep.ok()) return CheckStatus::pass;
      c.witness = rep.to_string();
      return CheckStatus::fail;
    });
    checked(r, "fibration " + d.name, [&](CheckItem& c) {
      auto M = build_monoidal(d, build_category(*doc.category(d.category)));
      return fibration_check(M, opt.max_n, c);
    });
  }
  for (const auto& d : doc.functors)
    checked(r, "functor " + d.name, [&](CheckItem& c) {
      FinSetTarget T(opt.ceiling);
      auto M = monoidal_of(doc, d.monoidal);
      auto rep = cocomplete::validate_tfunctor(graded_of(d, M, T));
      if (rep.ok()) return CheckStatus::pass;
      c.witness = rep.to_string();
      return CheckStatus::fail;
    });
  for (const auto& d : doc.presheaves)
    checked(r, "presheaf " + d.name, [&](CheckItem& c) {
      FinSetTarget T(opt.ceiling);
      auto op = yoneda::op_structure(monoidal_of(doc, d.monoidal));
      auto rep = cocomplete::validate_tfunctor(yoneda::representable(op.cat, T, d.at));
      if (rep.ok()) return CheckStatus::pass;
      c.witness = rep.to_string();
      return CheckStatus::fail;
    });
  for (const auto& d : doc.diagrams)
    checked(r, "diagram " + d.name, [&](CheckItem& c) {
      for (const auto& f : d.functors)
        if (doc.functor(f)->monoidal != d.monoidal) {
          c.witness = "functor " + f + " lives over a different base";
          return CheckStatus::fail;
        }
      c.data.emplace_back("functors", std::to_string(d.functors.size()));
      return CheckStatus::pass;
    });
}

inline void run_day_tensor(const SpecDocument& doc, const std::vector<std::string>& args,
                           const RunOptions& opt, Report& r) {
  if (args.size() != 2)
    throw DomainError("day-tensor expects two functor or presheaf names, got " +
                      std::to_string(args.size()));
  const FunctorDecl* f0 = doc.functor(args[0]);
  const FunctorDecl* f1 = doc.functor(args[1]);
  const PresheafDecl* p0 = doc.presheaf(args[0]);
  const PresheafDecl* p1 = doc.presheaf(args[1]);
  if ((!f0 && !p0) || (!f1 && !p1))
    throw DomainError("no functor or presheaf named '" + (!f0 && !p0 ? args[0] : args[1]) +
                      "' in the loaded document");
  if ((f0 != nullptr) != (f1 != nullptr))
    throw DomainError("day-tensor needs two functors or two presheaves, not a mix");

  checked(r, "convolution " + args[0] + " " + args[1], [&](CheckItem& c) {
    FinSetTarget T(opt.ceiling);
    TFunctor conv;
    if (f0) {
      if (f0->monoidal != f1->monoidal) {
        c.witness = "the two functors live over different bases";
        return CheckStatus::fail;
      }
      auto M = monoidal_of(doc, f0->monoidal);
      conv = day::day_tensor(M, T, graded_of(*f0, M, T), graded_of(*f1, M, T)).conv;
    } else {
      if (p0->monoidal != p1->monoidal) {
        c.witness = "the two presheaves live over different bases";
        return CheckStatus::fail;
      }
      auto op = yoneda::op_structure(monoidal_of(doc, p0->monoidal));
      conv = day::day_tensor(op, T, yoneda::representable(op.cat, T, p0->at),
                             yoneda::representable(op.cat, T, p1->at))
                 .conv;
    }
    auto rep = cocomplete::validate_tfunctor(conv);
    if (!rep.ok()) {
      c.witness = rep.to_string();
      return CheckStatus::fail;
    }
    for (std::size_t i = 0; i < conv.ob.size(); ++i)
      c.data.emplace_back("at-" + std::to_string(i), std::to_string(T.t_card(conv.ob[i])));
    return CheckStatus::pass;
  });
}

inline void run_enumerate(const SpecDocument& doc, const RunOptions& opt, Report& r) {
  std::vector<std::pair<std::string, SymMonoidalStructure>> bases;
  if (doc.empty()) {
    bases.emplace_back("z2", corpus::z2());
    bases.emplace_back("z3", corpus::z3());
  } else {
    for (const auto& d : doc.monoidals)
      bases.emplace_back(d.name, monoidal_of(doc, d.name));
  }
  for (const auto& [name, M] : bases) {
    const SymMonoidalStructure& base = M;
    if (base.cat->morphism_count() != base.cat->object_count()) {
      checked(r, "census " + name, [&](CheckItem& c) {
        c.witness = "enumeration needs a discrete base";
        return CheckStatus::skip;
      });
      continue;
    }
    FinSetTarget T(opt.ceiling);
    auto census = laxmon::enumerate_structures(base, T, opt.carrier_bound);
    checked(r, "monoid-census " + name, [&](CheckItem& c) {
      for (std::size_t s = 0; s < census.profiles.size(); ++s) {
        if (census.monoids[s].empty()) continue;
        std::string key = "profile";
        for (int v : census.profiles[s]) key += "-" + std::to_string(v);
        c.data.emplace_back(key, std::to_string(census.monoids[s].size()));
      }
      c.data.emplace_back("total", std::to_string(census.monoid_total()));
      return CheckStatus::pass;
    });
    checked(r, "lax-census " + name, [&](CheckItem& c) {
      for (std::size_t s = 0; s < census.profiles.size(); ++s) {
        if (census.laxes[s].empty()) continue;
        std::string key = "profile";
        for (int v : census.profiles[s]) key += "-" + std::to_string(v);
        c.data.emplace_back(key, std::to_string(census.laxes[s].size()));
      }
      c.data.emplace_back("total", std::to_string(census.lax_total()));
      return CheckStatus::pass;
    });
    checked(r, "correspondence " + name, [&](CheckItem& c) {
      if (census.monoid_total() != census.lax_total()) {
        c.witness = "the two sides have different counts";
        return CheckStatus::fail;
      }
      auto rep = laxmon::check_correspondence(base, census);
      if (!rep.ok()) {
        c.witness = rep.to_string();
        return CheckStatus::fail;
      }
      c.data.emplace_back("pairs", std::to_string(census.monoid_total()));
      return CheckStatus::pass;
    });
  }
}

inline void run_verify_theorems(const RunOptions& opt, Report& r) {
  certify::CertifyOptions copt;
  copt.golden_dir = opt.golden_dir;
  for (auto& cr : certify::run_certifications(copt)) {
    CheckItem c;
    c.name = cr.name;
    c.seconds = cr.seconds;
    r.seconds += cr.seconds;
    if (cr.passed()) {
      c.status = CheckStatus::pass;
    } else {
      c.status = CheckStatus::fail;
      c.witness = cr.ok ? "exceeded the " + detail_report::round3(cr.budget_seconds) +
                              "s budget at " + detail_report::round3(cr.seconds) + "s"
                        : cr.detail;
    }
    c.data = std::move(cr.data);
    c.data.emplace_back("budget-seconds", std::to_string(static_cast<int>(cr.budget_seconds)));
    r.checks.push_back(std::move(c));
  }
}

inline Report run_report(const RunOptions& opt) {
  std::ifstream in(opt.report_path);
  if (!in)
    throw DomainError("no stored report at " + opt.report_path + "; run a command first");
  std::stringstream buf;
  buf << in.rdbuf();
  auto parsed = parse_report(buf.str());
  if (!parsed.ok())
    throw DomainError("stored report is unreadable: " + parsed.error->to_string());
  return std::move(*parsed.report);
}

}  // namespace detail_run

// Execute a command against a document (possibly empty, which selects the
// bundled structures where that makes sense). Unknown commands and malformed
// requests throw DomainError; resource ceilings propagate.
inline Report run_command(const SpecDocument& doc, const std::string& command,
                          const std::vector<std::string>& args, const RunOptions& opt = {}) {
  Report r;
  r.command = command;
  r.arguments = args;
  if (command == "validate") {
    detail_run::run_validate(doc, opt, r);
  } else if (command == "day-tensor") {
    detail_run::run_day_tensor(doc, args, opt, r);
  } else if (command == "enumerate") {
    detail_run::run_enumerate(doc, opt, r);
  } else if (command == "verify-theorems") {
    detail_run::run_verify_theorems(opt, r);
  } else if (command == "report") {
    return detail_run::run_report(opt);
  } else {
    throw DomainError("unknown command '" + command + "'");
  }
  return r;
}

}  // namespace dayconv::cli

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dayconv/runner.hpp"
#include "dayconv/spec_format.hpp"

using namespace dayconv;
using cli::CheckStatus;
using cli::DiagCode;
using cli::Report;
using cli::SpecDocument;
using cli::TreeNode;

namespace {

const char* kZ2Doc = R"(
category Z2 { objects: 2; discrete }
monoidal Z2 { tensor: addition-mod 2; unit: 0 }
functor F { monoidal: Z2; values: 2 3 }
functor G { monoidal: Z2; values: 1 4 }
)";

SpecDocument parse_ok(const std::string& text) {
  auto res = cli::parse_spec(text);
  INFO((res.error ? res.error->to_string() : ""));
  REQUIRE(res.ok());
  return std::move(*res.doc);
}

cli::Diagnostic parse_err(const std::string& text) {
  auto res = cli::parse_spec(text);
  REQUIRE_FALSE(res.ok());
  return *res.error;
}

const cli::CheckItem& check_named(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  INFO("no check named " << name);
  REQUIRE(false);
  return r.checks.front();
}

std::string data_value(const cli::CheckItem& c, const std::string& key) {
  for (const auto& [k, v] : c.data)
    if (k == key) return v;
  return "";
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

TEST_CASE("declaration syntax parses as documented") {
  auto doc = parse_ok("category Z2 { objects: 2; discrete }\n"
                      "monoidal Z2 { tensor: addition-mod 2; unit: 0 }");
  REQUIRE(doc.categories.size() == 1);
  CHECK(doc.categories[0].name == "Z2");
  CHECK(doc.categories[0].objects == 2);
  CHECK(doc.categories[0].form == cli::CategoryDecl::Form::discrete);
  REQUIRE(doc.monoidals.size() == 1);
  CHECK(doc.monoidals[0].category == "Z2");  // defaults to its own name
  CHECK(doc.monoidals[0].unit == 0);
  CHECK(doc.monoidals[0].modulus == 2);
}

TEST_CASE("an empty file is an empty document") {
  auto doc = parse_ok("");
  CHECK(doc.empty());
  CHECK(parse_ok("# only a comment\n").empty());
}

TEST_CASE("every declaration kind survives a print/parse round trip") {
  auto doc = parse_ok(R"(
category Walk {
  objects: 2;
  arrow step: 0 -> 1
}
category Pair { objects: 2; discrete }
category Chain { objects: 3; chain }
category Div { objects: 4; divides: 1 2 3 6 }
monoidal Max { category: Chain; unit: 0; tensor: join }
monoidal Pair { unit: 0; tensor: table 0 1 1 0 }
functor F { monoidal: Pair; values: 2 3 }
presheaf Y { monoidal: Max; at: 1 }
diagram D { monoidal: Pair; functors: F F }
)");
  CHECK(doc.categories.size() == 4);
  CHECK(doc.monoidals.size() == 2);
  auto printed = cli::print_spec(doc);
  auto again = parse_ok(printed);
  CHECK(again == doc);
  CHECK(cli::print_spec(again) == printed);
}

TEST_CASE("composition tables round trip through names") {
  auto doc = parse_ok(R"(
category Idem {
  objects: 1;
  arrow e: 0 -> 0;
  compose e e = e
}
)");
  REQUIRE(doc.categories[0].composites.size() == 1);
  auto cat = cli::build_category(doc.categories[0]);
  CHECK(fincat::validate_category(*cat).ok());
  CHECK(parse_ok(cli::print_spec(doc)) == doc);
}

// ---------------------------------------------------------------------------
// Diagnostics

TEST_CASE("syntax errors carry position and code") {
  auto d = parse_err("category Z2 {\n  objects 2\n}");
  CHECK(d.code == DiagCode::syntax);
  CHECK(d.line == 2);
  CHECK(d.column == 11);
  CHECK(d.to_string().find("syntax error") != std::string::npos);

  CHECK(parse_err("category - {}").code == DiagCode::syntax);
  CHECK(parse_err("widget W { }").message == "unknown declaration kind 'widget'");
  auto big = parse_err("category C { objects: 1234567890; discrete }");
  CHECK(big.message == "integer literal too large");
}

TEST_CASE("unresolved references name the missing thing") {
  auto d = parse_err("functor F { monoidal: Nope; values: 1 }");
  CHECK(d.code == DiagCode::unresolved_reference);
  CHECK(d.message == "no monoidal structure named 'Nope'");
  CHECK(d.line == 1);
  CHECK(d.column == 23);

  auto m = parse_err("monoidal M { category: Gone; unit: 0; tensor: join }");
  CHECK(m.code == DiagCode::unresolved_reference);
  CHECK(m.message == "no category named 'Gone'");

  auto a = parse_err("category C {\n"
                     "  objects: 1;\n"
                     "  arrow e: 0 -> 0;\n"
                     "  compose e f = e\n"
                     "}");
  CHECK(a.code == DiagCode::unresolved_reference);
  CHECK(a.message == "no arrow named 'f' in category 'C'");
  CHECK(a.line == 4);
}

TEST_CASE("validation failures are a distinct code") {
  auto dup = parse_err("category C { objects: 1; discrete }\n"
                       "category C { objects: 2; discrete }");
  CHECK(dup.code == DiagCode::validation_failure);
  CHECK(dup.line == 2);

  auto mod = parse_err("category C { objects: 3; discrete }\n"
                       "monoidal C { tensor: addition-mod 2; unit: 0 }");
  CHECK(mod.code == DiagCode::validation_failure);
  CHECK(mod.message.find("addition-mod 2") != std::string::npos);

  auto tab = parse_err("category C { objects: 2; discrete }\n"
                       "monoidal C { tensor: table 0 1 1; unit: 0 }");
  CHECK(tab.code == DiagCode::validation_failure);

  auto unit = parse_err("category C { objects: 2; discrete }\n"
                        "monoidal C { tensor: addition-mod 2; unit: 5 }");
  CHECK(unit.code == DiagCode::validation_failure);

  auto base = parse_err("category C { objects: 2; chain }\n"
                        "monoidal C { unit: 0; tensor: join }\n"
                        "functor F { monoidal: C; values: 1 1 }");
  CHECK(base.code == DiagCode::validation_failure);
  CHECK(base.message.find("discrete base") != std::string::npos);

  auto at = parse_err("category C { objects: 2; discrete }\n"
                      "monoidal C { tensor: addition-mod 2; unit: 0 }\n"
                      "presheaf Y { monoidal: C; at: 7 }");
  CHECK(at.code == DiagCode::validation_failure);
}

TEST_CASE("an unclosed composition table is rejected") {
  // step then step has no composite to land on
  auto d = parse_err(R"(
category Loop {
  objects: 1;
  arrow e: 0 -> 0
}
)");
  CHECK(d.code == DiagCode::validation_failure);
  CHECK(d.message.find("compose-missing") != std::string::npos);
}

TEST_CASE("a non-associative table fails monoidal validation") {
  // subtraction mod 3 is not associative
  auto d = parse_err("category C { objects: 3; discrete }\n"
                     "monoidal C { unit: 0; tensor: table 0 2 1 1 0 2 2 1 0 }");
  CHECK(d.code == DiagCode::validation_failure);
  CHECK(d.message.find("coherence") != std::string::npos);
}

// ---------------------------------------------------------------------------
// Report trees

TEST_CASE("trees round trip through their printed form") {
  TreeNode root{"report", {}, {}, true};
  root.leaf("command", {"validate"});
  auto& block = root.child("checks");
  block.leaf("name", {"has spaces and \"quotes\""});
  block.leaf("count", {"42"});
  root.leaf("empty", {});
  auto text = cli::print_tree(root);
  auto parsed = cli::parse_tree(text);
  REQUIRE(parsed.ok());
  CHECK(*parsed.root == root);
  CHECK(cli::print_tree(*parsed.root) == text);
}

TEST_CASE("tree arguments quote newlines and backslashes") {
  TreeNode root{"r", {}, {}, true};
  root.leaf("w", {"line\nbreak", "back\\slash", "plain-word"});
  auto parsed = cli::parse_tree(cli::print_tree(root));
  REQUIRE(parsed.ok());
  CHECK(*parsed.root == root);
}

TEST_CASE("malformed trees are rejected with positions") {
  CHECK_FALSE(cli::parse_tree("report { unclosed;").ok());
  CHECK_FALSE(cli::parse_tree("just-a-leaf;").ok());
  CHECK_FALSE(cli::parse_tree("a { } trailing { }").ok());
  auto r = cli::parse_tree("report {\n  bad leaf\n}");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->line == 2);
}

// ---------------------------------------------------------------------------
// Reports

TEST_CASE("reports round trip and stay byte identical") {
  Report r;
  r.command = "day-tensor";
  r.arguments = {"F", "G"};
  cli::CheckItem c;
  c.name = "convolution F G";
  c.status = CheckStatus::pass;
  c.data = {{"at-0", "14"}, {"at-1", "11"}};
  c.seconds = 0.25;
  r.checks.push_back(c);
  cli::CheckItem f;
  f.name = "something else";
  f.status = CheckStatus::fail;
  f.witness = "a witness with spaces";
  r.checks.push_back(f);

  auto machine = cli::print_report(r, cli::ReportFormat::machine);
  CHECK(machine == cli::print_report(r, cli::ReportFormat::machine));
  CHECK(machine.find("0.25") == std::string::npos);  // timing is human-only

  auto parsed = cli::parse_report(machine);
  REQUIRE(parsed.ok());
  CHECK(*parsed.report == r);
  CHECK(cli::print_report(*parsed.report, cli::ReportFormat::machine) == machine);

  auto human = cli::print_report(r, cli::ReportFormat::human);
  CHECK(human.find("0.250s") != std::string::npos);
  CHECK(human.find("1 failed") != std::string::npos);
  CHECK_FALSE(r.passed());
}

TEST_CASE("tampered summaries do not parse") {
  Report r;
  r.command = "validate";
  cli::CheckItem c;
  c.name = "base z2";
  r.checks.push_back(c);
  auto machine = cli::print_report(r, cli::ReportFormat::machine);
  auto pos = machine.find("passed: 1");
  REQUIRE(pos != std::string::npos);
  machine.replace(pos, 9, "passed: 9");
  auto parsed = cli::parse_report(machine);
  REQUIRE_FALSE(parsed.ok());
  CHECK(parsed.error->message.find("summary says 9 passed") != std::string::npos);
}

// ---------------------------------------------------------------------------
// Commands

TEST_CASE("validate certifies the bundled corpus when no document is given") {
  cli::RunOptions opt;
  opt.max_n = 1;
  auto r = cli::run_command({}, "validate", {}, opt);
  CHECK(r.command == "validate");
  CHECK(r.checks.size() == 12);  // base + fibration for each of the six
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::pass) == 12);
  check_named(r, "base div12");
  check_named(r, "fibration arrow-max");
}

TEST_CASE("validate re-checks every declared structure") {
  cli::RunOptions opt;
  opt.max_n = 1;
  auto doc = parse_ok(kZ2Doc);
  auto r = cli::run_command(doc, "validate", {}, opt);
  CHECK(r.passed());
  check_named(r, "category Z2");
  check_named(r, "monoidal Z2");
  check_named(r, "functor F");
  check_named(r, "functor G");
  CHECK(data_value(check_named(r, "fibration Z2"), "level") == "1");
}

TEST_CASE("day-tensor computes the convolution table") {
  auto doc = parse_ok(kZ2Doc);
  auto r = cli::run_command(doc, "day-tensor", {"F", "G"});
  REQUIRE(r.passed());
  const auto& c = check_named(r, "convolution F G");
  CHECK(data_value(c, "at-0") == "14");
  CHECK(data_value(c, "at-1") == "11");
}

TEST_CASE("day-tensor convolves representable presheaves") {
  auto doc = parse_ok("category Z3 { objects: 3; discrete }\n"
                      "monoidal Z3 { tensor: addition-mod 3; unit: 0 }\n"
                      "presheaf Y1 { monoidal: Z3; at: 1 }");
  auto r = cli::run_command(doc, "day-tensor", {"Y1", "Y1"});
  REQUIRE(r.passed());
  const auto& c = check_named(r, "convolution Y1 Y1");
  // y1 * y1 is the representable at 1 + 1
  CHECK(data_value(c, "at-0") == "0");
  CHECK(data_value(c, "at-1") == "0");
  CHECK(data_value(c, "at-2") == "1");
}

TEST_CASE("day-tensor rejects malformed requests") {
  auto doc = parse_ok(kZ2Doc);
  CHECK_THROWS_AS(cli::run_command(doc, "day-tensor", {"F"}), DomainError);
  CHECK_THROWS_AS(cli::run_command(doc, "day-tensor", {"F", "Nope"}), DomainError);
  CHECK_THROWS_AS(cli::run_command(doc, "nonsense", {}), DomainError);
}

TEST_CASE("enumerate reports the census and its correspondence certificate") {
  auto doc = parse_ok("category Z2 { objects: 2; discrete }\n"
                      "monoidal Z2 { tensor: addition-mod 2; unit: 0 }");

  cli::RunOptions opt;
  opt.carrier_bound = 1;
  auto r = cli::run_command(doc, "enumerate", {}, opt);
  REQUIRE(r.passed());
  const auto& m = check_named(r, "monoid-census Z2");
  CHECK(data_value(m, "profile-1-0") == "1");
  CHECK(data_value(m, "profile-1-1") == "1");
  CHECK(data_value(m, "total") == "2");
  CHECK(data_value(check_named(r, "lax-census Z2"), "total") == "2");
  CHECK(data_value(check_named(r, "correspondence Z2"), "pairs") == "2");

  opt.carrier_bound = 2;
  auto r2 = cli::run_command(doc, "enumerate", {}, opt);
  REQUIRE(r2.passed());
  CHECK(data_value(check_named(r2, "monoid-census Z2"), "total") == "9");
  CHECK(data_value(check_named(r2, "monoid-census Z2"), "profile-2-2") == "4");
  CHECK(data_value(check_named(r2, "lax-census Z2"), "total") == "9");
}

TEST_CASE("enumerate skips bases it cannot enumerate") {
  auto doc = parse_ok("category C2 { objects: 2; chain }\n"
                      "monoidal Max { category: C2; unit: 0; tensor: join }");
  auto r = cli::run_command(doc, "enumerate", {});
  CHECK(r.passed());  // a skip is not a failure
  CHECK(check_named(r, "census Max").status == CheckStatus::skip);
  CHECK(r.count(CheckStatus::skip) == 1);
}

TEST_CASE("report re-emits the stored machine report") {
  cli::RunOptions opt;
  opt.report_path = "test_cli_report.tmp";
  std::remove(opt.report_path.c_str());
  CHECK_THROWS_AS(cli::run_command({}, "report", {}, opt), DomainError);

  auto doc = parse_ok(kZ2Doc);
  auto first = cli::run_command(doc, "day-tensor", {"F", "G"}, opt);
  {
    std::ofstream out(opt.report_path);
    out << cli::print_report(first, cli::ReportFormat::machine);
  }
  auto again = cli::run_command({}, "report", {}, opt);
  CHECK(again == first);
  CHECK(again.command == "day-tensor");
  std::remove(opt.report_path.c_str());
}

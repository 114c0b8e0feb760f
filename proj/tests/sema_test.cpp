// Copyright 2026 The eropc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "erop/sema.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "erop/parser.hpp"
#include "support/test_util.hpp"

namespace erop {
namespace {

using testing::sample;
using testing::slurp;
using testing::summarize;
using testing::where;

constexpr const char* kCaseDecls =
    "roleplayer buyer, seller;\n"
    "businessoperation BuyRequest, Payment, BuyConfirm, BuyReject, Cancellation;\n"
    "compoblig ReactToBuyRequest(BuyConfirm, BuyReject)\n";

// Declarations shared by the rule-level tests; every name gets used by kUseAll.
constexpr const char* kDecls =
    "roleplayer buyer, seller;\n"
    "businessoperation BuyRequest, Payment;\n"
    "compoblig React(Payment)\n";

constexpr const char* kUseAll =
    "rule \"UseAll\"\n"
    "  when e matches (botype == X, originator == buyer, responder == seller, "
    "outcome == success)\n"
    "    BuyRequest in buyer.rights\n"
    "  then\n"
    "    seller.obligs += React(buyer)\n"
    "    buyer.rights -= Payment(seller)\n"
    "end\n";

std::vector<Diagnostic> run(const std::string& src) {
  SymbolTable table;
  return analyze(parse_source(src), table);
}

std::vector<std::string> codes_of(const std::string& src) {
  return summarize(run(src));
}

// A rule over kDecls with the given constraint and action lines.
std::string with_rule(const std::string& constraints,
                      const std::string& actions) {
  return std::string(kDecls) + kUseAll +
         "rule \"Probe\"\n"
         "  when e matches (botype == X, originator == buyer, responder == "
         "seller, outcome == success)\n" +
         constraints + "  then\n" + actions + "end\n";
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(SymbolTableTest, CaseStudyDeclarations) {
  SymbolTableResult r = build_symbol_table(parse_source(kCaseDecls));
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.table.role_players(), (std::vector<std::string>{"buyer", "seller"}));
  EXPECT_EQ(r.table.business_ops(),
            (std::vector<std::string>{"BuyRequest", "Payment", "BuyConfirm",
                                      "BuyReject", "Cancellation"}));
  ASSERT_EQ(r.table.comp_obligs().size(), 1u);
  EXPECT_EQ(r.table.comp_obligs()[0].name, "ReactToBuyRequest");
  EXPECT_EQ(r.table.comp_obligs()[0].members,
            (std::vector<std::string>{"BuyConfirm", "BuyReject"}));
  EXPECT_TRUE(r.table.is_role_player("buyer"));
  EXPECT_TRUE(r.table.is_business_op("Payment"));
  EXPECT_TRUE(r.table.is_comp_oblig("ReactToBuyRequest"));
  EXPECT_TRUE(r.table.is_operation("ReactToBuyRequest"));
  EXPECT_FALSE(r.table.is_operation("buyer"));
  EXPECT_EQ(r.table.kind_of("nobody"), SymbolKind::kNone);
}

TEST(SymbolTableTest, DuplicateKeepsFirstDeclaration) {
  const std::string src = "roleplayer buyer;\nroleplayer buyer;\n";
  SymbolTableResult r = build_symbol_table(parse_source(src));
  EXPECT_EQ(summarize(r.diagnostics),
            (std::vector<std::string>{"E001@" + where(src, "buyer", 2)}));
  EXPECT_EQ(r.table.role_players(), (std::vector<std::string>{"buyer"}));
}

TEST(SymbolTableTest, DuplicateAcrossNameSpaces) {
  const std::string src =
      "businessoperation Pay;\ncompoblig Pay(Pay)\n";
  SymbolTableResult r = build_symbol_table(parse_source(src));
  EXPECT_EQ(summarize(r.diagnostics),
            (std::vector<std::string>{"E001@" + where(src, "Pay(")}));
  EXPECT_TRUE(r.table.comp_obligs().empty());
  EXPECT_EQ(r.table.kind_of("Pay"), SymbolKind::kBusinessOp);
}

TEST(SymbolTableTest, UnknownCompObligMemberIsDropped) {
  const std::string src =
      "roleplayer a;\nbusinessoperation Confirm;\ncompoblig React(Confirm, Ship)\n";
  SymbolTableResult r = build_symbol_table(parse_source(src));
  EXPECT_EQ(summarize(r.diagnostics),
            (std::vector<std::string>{"E002@" + where(src, "Ship")}));
  ASSERT_EQ(r.table.comp_obligs().size(), 1u);
  EXPECT_EQ(r.table.comp_obligs()[0].members,
            (std::vector<std::string>{"Confirm"}));
}

TEST(SymbolTableTest, RoleplayerIsNotACompObligMember) {
  const std::string src = "roleplayer a;\ncompoblig React(a)\n";
  SymbolTableResult r = build_symbol_table(parse_source(src));
  EXPECT_TRUE(has(summarize(r.diagnostics), "E002@" + where(src, "a)")));
}

TEST(SymbolTableTest, RepeatedMemberIsDuplicate) {
  const std::string src =
      "businessoperation A;\ncompoblig R(A, A)\n";
  SymbolTableResult r = build_symbol_table(parse_source(src));
  EXPECT_EQ(summarize(r.diagnostics),
            (std::vector<std::string>{"E001@" + where(src, "A)")}));
}

TEST(SemaTest, LowercaseOperationExample) {
  const std::string src = "roleplayer buyer;\nbusinessoperation payment;\n";
  auto ds = run(src);
  auto it = std::find_if(ds.begin(), ds.end(),
                         [](const Diagnostic& d) { return d.is_error(); });
  ASSERT_NE(it, ds.end());
  EXPECT_EQ(where(src, "payment"), "2:19");
  EXPECT_EQ(summarize({*it})[0], "E003@2:19");
  EXPECT_EQ(it->message,
            "business operation 'payment' must begin with an upper-case letter");
}

TEST(SemaTest, UppercaseRolePlayerAndCompOblig) {
  const std::string src =
      "roleplayer Buyer;\nbusinessoperation Pay;\ncompoblig react(Pay)\n";
  auto cs = codes_of(src);
  EXPECT_TRUE(has(cs, "E003@" + where(src, "Buyer")));
  EXPECT_TRUE(has(cs, "E003@" + where(src, "react")));
}

TEST(SemaTest, BuyerSellerCorpusIsClean) {
  auto ds = run(slurp(sample("buyer_seller.erop")));
  EXPECT_TRUE(ds.empty()) << testing::summarize(ds).front();
}

TEST(SemaTest, SharedFixtureIsClean) {
  EXPECT_TRUE(run(std::string(kDecls) + kUseAll).empty());
}

TEST(SemaTest, MissingResponderReportedAtEventVariable) {
  const std::string src = slurp(sample("bad/e006_missing_responder.erop"));
  auto ds = run(src);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(summarize(ds)[0], "E006@5:8");
  EXPECT_EQ(ds[0].message,
            "event match must specify botype, originator, responder and "
            "outcome exactly once");
}

TEST(SemaTest, RepeatedOrUnknownEventField) {
  std::string src = std::string(kDecls) + kUseAll +
                    "rule \"R\" when ev matches (botype == X, originator == "
                    "buyer, originator == buyer, outcome == success)\n"
                    "then reset buyer end\n";
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E006@" + where(src, "ev ")}));
  src = std::string(kDecls) + kUseAll +
        "rule \"R\" when ev matches (botype == X, originator == buyer, "
        "responder == seller, colour == red)\n"
        "then reset buyer end\n";
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E006@" + where(src, "ev ")}));
}

TEST(SemaTest, UndeclaredAndMiskindedParties) {
  std::string src = std::string(kDecls) + kUseAll +
                    "rule \"R\" when e matches (botype == X, originator == "
                    "buyer, responder == store, outcome == success)\n"
                    "then reset buyer end\n";
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E004@" + where(src, "store")}));
  src = std::string(kDecls) + kUseAll +
        "rule \"R\" when e matches (botype == X, originator == "
        "Payment, responder == seller, outcome == success)\n"
        "then reset buyer end\n";
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E005@" + where(src, "Payment,")}));
}

TEST(SemaTest, NonPlayerSlots) {
  std::string src = with_rule("", "    reset BuyRequest\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E005@" + where(src, "BuyRequest\nend")}));
  src = with_rule("    Payment in Payment.rights\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E005@" + where(src, "Payment.rights")}));
  src = with_rule("", "    seller.rights += Payment(BuyRequest)\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E005@" + where(src, "BuyRequest)")}));
}

TEST(SemaTest, UndeclaredOperation) {
  std::string src = with_rule("    Refund in buyer.rights\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E004@" + where(src, "Refund")}));
  src = with_rule("", "    buyer.rights += seller(buyer)\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E004@" + where(src, "seller(buyer)")}));
}

TEST(SemaTest, DuplicateRuleName) {
  const std::string src = std::string(kDecls) + kUseAll + kUseAll;
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E007@" + where(src, "\"UseAll\"", 2)}));
}

TEST(SemaTest, OutcomeMustBeBooleanOnABusinessOperation) {
  std::string src = with_rule("    Payment.BizFail == maybe\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E008@" + where(src, "maybe")}));
  src = with_rule("", "    buyer.BizFail == true\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E008@" + where(src, "buyer.BizFail")}));
  src = with_rule("", "    Unknown.BizFail == true\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E008@" + where(src, "Unknown")}));
}

TEST(SemaTest, ArgumentShapes) {
  std::string src = with_rule("", "    buyer.rights += Payment(seller, \"d\", \"x\")\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E009@" + where(src, "\"x\"")}));
  src = with_rule("", "    buyer.rights += Payment(\"seller\")\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E009@" + where(src, "\"seller\"")}));
  src = with_rule("", "    buyer.rights += Payment(seller, buyer)\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E009@" + where(src, "buyer)\nend")}));
  src = with_rule("", "    buyer.rights -= Payment(seller, \"01-01-2016 12:00:00\")\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E009@" + where(src, "\"01-01")}));
}

TEST(SemaTest, IfMustBeTheOnlyAction) {
  const std::string src = with_rule(
      "", "    reset buyer\n    if (Payment.BizFail == false) then reset seller endif\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E010@" + where(src, "if (")}));
}

TEST(SemaTest, IfBranchesAreChecked) {
  const std::string src = with_rule(
      "", "    if (Nope.BizFail == false) then reset seller else reset Payment endif\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E008@" + where(src, "Nope"),
                                      "E005@" + where(src, "Payment endif")}));
}

TEST(SemaTest, CompObligOnlyInObligations) {
  std::string src = with_rule("    React in buyer.rights\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E012@" + where(src, "React in")}));
  src = with_rule("", "    buyer.prohibs += React(seller)\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E012@" + where(src, "React(seller)")}));
}

TEST(SemaTest, TimeConstraints) {
  std::string src = with_rule("    x.timestamp < \"01-01-2016 12:00:00\"\n",
                              "    reset buyer\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E013@" + where(src, "x.timestamp")}));
  src = with_rule("    e.hour in [9, 24]\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E013@" + where(src, "[9")}));
  src = with_rule("    e.minute in [30, 10]\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E013@" + where(src, "[30")}));
  src = with_rule("    e.day in [0, 5]\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E013@" + where(src, "[0")}));
  src = with_rule("    e.month in [1, 13]\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E013@" + where(src, "[1,")}));
  src = with_rule(
      "    e.hour in [0, 23]\n    e.minute in [0, 59]\n    e.day in [1, 31]\n"
      "    e.month in [1, 12]\n    e.year in [2016, 2016]\n",
      "    reset buyer\n");
  EXPECT_TRUE(codes_of(src).empty());
}

TEST(SemaTest, HistoricalFields) {
  std::string src = with_rule("    happened (botype == PAY, colour == red)\n",
                              "    reset buyer\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E014@" + where(src, "colour")}));
  src = with_rule("    not happened (botype == PAY, botype == CANC)\n",
                  "    reset buyer\n");
  EXPECT_EQ(codes_of(src),
            (std::vector<std::string>{"E014@" + where(src, "botype == CANC")}));
  src = with_rule("    happened (originator == ghost)\n", "    reset buyer\n");
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"E004@" + where(src, "ghost")}));
}

TEST(SemaTest, UnusedDeclarationWarns) {
  const std::string src = "roleplayer a, idle;\nbusinessoperation B;\n"
                          "rule \"r\" when e matches (botype == X, originator == a, "
                          "responder == a, outcome == success)\n"
                          "  B in a.rights then reset a end\n";
  auto ds = run(src);
  ASSERT_EQ(summarize(ds), (std::vector<std::string>{"W001@" + where(src, "idle")}));
  EXPECT_EQ(ds[0].severity, Severity::kWarning);
  EXPECT_EQ(ds[0].message, "role player 'idle' declared but never used");
}

TEST(SemaTest, CompObligMembersCountAsUsed) {
  const std::string src = "roleplayer a;\nbusinessoperation B, C;\ncompoblig R(B, C)\n"
                          "rule \"r\" when e matches (botype == X, originator == a, "
                          "responder == a, outcome == success)\n"
                          "  R in a.obligs then reset a end\n";
  EXPECT_TRUE(run(src).empty());
}

TEST(SemaTest, UnrecognisedOutcomeValueWarns) {
  const std::string src = "roleplayer a;\n"
                          "rule \"r\" when e matches (botype == X, originator == a, "
                          "responder == a, outcome == partial)\n"
                          "then reset a end\n"
                          "rule \"s\" when e matches (botype == X, originator == a, "
                          "responder == a, outcome == TECFAIL)\n"
                          "then reset a end\n";
  EXPECT_EQ(codes_of(src), (std::vector<std::string>{"W002@" + where(src, "partial")}));
}

TEST(SemaTest, NoRulesWarns) {
  const auto ds = run(kCaseDecls);
  ASSERT_FALSE(ds.empty());
  EXPECT_FALSE(has_errors(ds));
  auto cs = summarize(ds);
  EXPECT_TRUE(has(cs, "W003@1:1"));
}

TEST(SemaTest, DiagnosticsAreSortedByPosition) {
  const std::string src =
      "roleplayer Buyer, seller;\nbusinessoperation pay, Pay;\n"
      "rule \"r\" when e matches (botype == X, originator == ghost, "
      "responder == seller)\n"
      "then reset Pay end\n";
  auto ds = run(src);
  ASSERT_GE(ds.size(), 4u);
  for (std::size_t i = 1; i < ds.size(); ++i) {
    EXPECT_TRUE(ds[i - 1].pos.line < ds[i].pos.line ||
                (ds[i - 1].pos.line == ds[i].pos.line &&
                 ds[i - 1].pos.col <= ds[i].pos.col));
  }
  EXPECT_EQ(run(src), ds);
}

// Deleting a declaration nobody uses never introduces an error: the unused
// names are only ever warned about.
TEST(SemaProperty, RemovingUnusedDeclarationIntroducesNoError) {
  const std::string corpus = slurp(sample("buyer_seller.erop"));
  const std::vector<std::string> extras = {"auditor", "courier", "bank"};
  const std::vector<std::string> extra_ops = {"Refund", "Audit"};
  for (std::size_t mask = 0; mask < (1u << (extras.size() + extra_ops.size()));
       ++mask) {
    std::string players, ops;
    for (std::size_t i = 0; i < extras.size(); ++i) {
      if (mask & (1u << i)) players += ", " + extras[i];
    }
    for (std::size_t i = 0; i < extra_ops.size(); ++i) {
      if (mask & (1u << (extras.size() + i))) ops += ", " + extra_ops[i];
    }
    std::string src = corpus;
    std::size_t rp = src.find("roleplayer buyer, seller, store");
    ASSERT_NE(rp, std::string::npos);
    src.insert(rp + std::string("roleplayer buyer, seller, store").size(), players);
    std::size_t bo = src.find("Cancellation;");
    src.insert(bo + std::string("Cancellation").size(), ops);
    auto ds = run(src);
    EXPECT_FALSE(has_errors(ds));
    std::size_t warnings = 0;
    for (const auto& d : ds) warnings += d.code == "W001";
    EXPECT_EQ(warnings, static_cast<std::size_t>(__builtin_popcountl(mask)));
  }
}

}  // namespace
}  // namespace erop

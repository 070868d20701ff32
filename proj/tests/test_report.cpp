#include <doctest.h>

#include "ivq/constructions.hpp"
#include "ivq/report.hpp"
#include "support/generators.hpp"

using namespace ivq;

namespace {

ReportDocument doc_for(const Quandle& q, std::string subject, std::size_t limit = kDefaultElementLimit) {
  ReportDocument d;
  d.subject = std::move(subject);
  d.report = analyze(q, limit);
  d.input_digest = input_digest(format_table(q.table()));
  return d;
}

}  // namespace

TEST_CASE("digest") {
  // FNV-1a 64 of the empty string is the offset basis
  CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(input_digest("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("structured report content") {
  auto text = emit_report(doc_for(abelian_core({5}), "core:Z5"), ReportFormat::structured);
  CHECK(text.find("\"latin\": true") != std::string::npos);
  CHECK(text.find("\"dis_order\": 5") != std::string::npos);
  auto capped = emit_report(doc_for(core_of_group(alternating_group(5)), "A5", 50), ReportFormat::structured);
  CHECK(capped.find("\"dis_order\": null") != std::string::npos);
}

TEST_CASE("reports round-trip in both formats") {
  gen::Rng rng(12);
  for (int i = 0; i < 15; ++i) {
    auto d = doc_for(gen::random_kei(rng), "sample " + std::to_string(i), i % 3 ? kDefaultElementLimit : 4);
    for (auto f : {ReportFormat::human, ReportFormat::structured}) {
      auto text = emit_report(d, f);
      CHECK(parse_report(text) == d);
      CHECK(emit_report(parse_report(text), f) == text);
    }
  }
  CHECK_THROWS_AS(parse_report("{ not json"), SyntaxError);
  CHECK_THROWS_AS(parse_report("order five"), SyntaxError);
}

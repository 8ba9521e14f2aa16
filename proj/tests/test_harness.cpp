#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cyclemonoid/enumerate.hpp"
#include "cyclemonoid/graph6.hpp"
#include "cyclemonoid/isomorphism.hpp"
#include "fixtures.hpp"

using namespace cyclemonoid;

TEST_CASE("unlabelled graph generation matches the known totals") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    CHECK(generate_all_graphs(n).size() == all[n - 1]);
    CHECK(generate_connected_graphs(n).size() == connected[n - 1]);
  }
}

TEST_CASE("graph6 round-trips across the whole connected corpus up to n = 7") {
  for (int n = 1; n <= 7; ++n)
    for (const SimpleGraph& h : generate_connected_graphs(n))
      CHECK(parse_graph6(to_graph6(h)) == h);
}

TEST_CASE("tree generation matches the known totals") {
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) CHECK(generate_trees(n).size() == trees[n - 1]);
}

TEST_CASE("verdict records carry valid checksums") {
  RealizabilityVerdict v = realize(complete_graph(3));
  Json rec = verdict_to_json("Bw", canonical_form(complete_graph(3)), v);
  rec["checksum"] = record_checksum(rec);
  CHECK(record_checksum(rec) == rec["checksum"]);
  Json tampered = rec;
  tampered["verdict"] = "unrealizable";
  CHECK(record_checksum(tampered) != rec["checksum"]);
}

TEST_CASE("verdict cache round trip and corruption detection") {
  std::string path = "test_cache.jsonl";
  std::remove(path.c_str());
  {
    VerdictCache cache(path);
    RealizabilityVerdict v = realize(complete_graph(3));
    cache.insert("key1", verdict_to_json("Bw", "key1", v));
    cache.insert("key1", verdict_to_json("Bw", "key1", v));  // idempotent
    CHECK(cache.size() == 1);
  }
  {
    VerdictCache cache(path);
    CHECK(cache.size() == 1);
    CHECK(cache.contains("key1"));
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"canonical\":\"key2\",\"verdict\":\"realizable\",\"checksum\":\"badbadbad\"}\n";
  }
  CHECK_THROWS(VerdictCache(path));
  std::remove(path.c_str());
}

TEST_CASE("corpus enumeration for small n") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::string> lines;
    for (const SimpleGraph& h : generate_connected_graphs(n)) lines.push_back(to_graph6(h));
    EnumerateOptions opts;
    EnumerationReport report = enumerate_corpus(lines, n, opts);
    CHECK(report.graphs_seen == static_cast<std::int64_t>(lines.size()));
    CHECK(report.realizable + report.unrealizable + report.undecided == report.graphs_seen);
    CHECK(report.undecided == 0);
    const std::vector<std::int64_t> expected{1, 1, 2, 5, 15};
    CHECK(report.realizable == expected[n - 1]);
  }
}

TEST_CASE("enumeration totals are thread-count independent and cache-consistent") {
  std::vector<std::string> lines;
  for (const SimpleGraph& h : generate_connected_graphs(5)) lines.push_back(to_graph6(h));

  EnumerateOptions serial;
  serial.threads = 1;
  EnumerationReport a = enumerate_corpus(lines, 5, serial);

  EnumerateOptions parallel;
  parallel.threads = 4;
  EnumerationReport b = enumerate_corpus(lines, 5, parallel);
  CHECK(a.realizable == b.realizable);
  CHECK(a.unrealizable == b.unrealizable);
  CHECK(a.by_reason == b.by_reason);

  // cached rerun gives identical totals
  std::string path = "test_cache_enum.jsonl";
  std::remove(path.c_str());
  EnumerateOptions cached;
  cached.cache_path = path;
  EnumerationReport first = enumerate_corpus(lines, 5, cached);
  EnumerationReport second = enumerate_corpus(lines, 5, cached);
  CHECK(second.cache_hits == second.graphs_seen);
  CHECK(first.realizable == second.realizable);
  CHECK(first.unrealizable == second.unrealizable);
  std::remove(path.c_str());
}

TEST_CASE("report json shape") {
  EnumerationReport r;
  r.n = 4;
  r.graphs_seen = 6;
  r.realizable = 5;
  r.unrealizable = 1;
  r.by_reason["InducedCycleFilter"] = 1;
  Json j = report_json(r);
  CHECK(j["n"] == 4);
  CHECK(j["realizable"] == 5);
  CHECK(j["by_reason"]["InducedCycleFilter"] == 1);
  CHECK(report_table({r}).find("4") != std::string::npos);
}

#include <gtest/gtest.h>

#include <sstream>

#include "frob/bench.hpp"
#include "frob/verify.hpp"

using frob::Instance;
namespace verify = frob::verify;
namespace bench = frob::bench;

TEST(Verify, SmallRunPasses) {
  verify::Options opt;
  opt.instances = 40;
  opt.a_max = 90;
  opt.sequences = 60;
  opt.structure = true;
  const auto rep = verify::run(opt);
  EXPECT_TRUE(rep.ok()) << verify::format_report(rep);
  EXPECT_FALSE(rep.counterexample);
}

TEST(Verify, InjectedFaultIsCaughtAndMinimized) {
  verify::Options opt;
  opt.instances = 30;
  opt.max_n = 5;
  opt.a_max = 60;
  opt.reductions = false;
  opt.sumset_table_override = [](const Instance& inst) {
    auto t = frob::sumset::alltargets_sumset(inst);
    if (t.modulus > 2) t.entries[1] += t.modulus;
    return t;
  };
  const auto rep = verify::run(opt);
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.counterexample);
  const auto small = frob::parse_instance(*rep.counterexample);
  // the minimized instance still reproduces the fault
  EXPECT_GT(small.smallest(), 2);
  EXPECT_NE(opt.sumset_table_override(small), frob::oracle::oracle_residue_table(small));
  EXPECT_NE(verify::format_report(rep).find("FAIL"), std::string::npos);
}

TEST(Verify, NonGatingRowsDoNotFail) {
  verify::Report rep;
  rep.row("observed", false).record(false, [] { return std::string("x"); });
  EXPECT_TRUE(rep.ok());
  rep.row("gated").record(false, [] { return std::string("y"); });
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.row("gated").first_failure, "y");
}

TEST(Verify, MinimizeKeepsFailure) {
  const Instance big({6, 9, 20, 31, 44});
  const auto small = verify::minimize(big, [](const Instance& i) { return i.smallest() == 6; });
  EXPECT_EQ(small.smallest(), 6);
  EXPECT_EQ(small.size(), 2u);
}

TEST(Bench, CsvIsDeterministicWithoutTiming) {
  bench::Options opt;
  opt.sizes = {300, 700};
  opt.per_size = 2;
  opt.n = 4;
  opt.reps = 1;
  opt.omit_timing = true;
  std::ostringstream a, b;
  bench::write_csv(a, bench::run(opt));
  bench::write_csv(b, bench::run(opt));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), bench::kCsvHeader);
}

TEST(Bench, RowsAgreeAcrossEngines) {
  bench::Options opt;
  opt.sizes = {500};
  opt.per_size = 3;
  opt.n = 3;
  opt.reps = 1;
  const auto rows = bench::run(opt);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& r : rows) EXPECT_EQ(r.frobenius, rows[r.instance_id * 3].frobenius);
}

TEST(Bench, SkipsOversizedQuadraticCells) {
  bench::Options opt;
  opt.sizes = {20000};
  opt.per_size = 1;
  opt.n = 2;
  opt.reps = 1;
  opt.max_quadratic_a0 = 10;
  opt.engines = {frob::Engine::minconv, frob::Engine::roundrobin};
  std::size_t skipped = 0;
  const auto rows = bench::run(opt, [&](std::size_t, frob::Engine) { ++skipped; });
  EXPECT_EQ(skipped, 1u);
  EXPECT_EQ(rows.size(), 1u);
}

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "support.hpp"

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome sh(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(WSG_BIN) + " " + args + " 2>/dev/null";
  if (!input.empty()) {
    std::string path = ::testing::TempDir() + "wsg_cli_input.wsg";
    std::ofstream(path) << input;
    cmd += " < " + path;
  }
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string three_cut_text() { return wsg::emit_wsg(wsg::testing::three_cut_dipole()); }

}  // namespace

TEST(Cli, GenerateThenStats) {
  Outcome d = sh("generate dipole --rank 4");
  ASSERT_EQ(d.status, 0);
  Outcome s = sh("stats", d.out);
  EXPECT_EQ(s.status, 0);
  EXPECT_EQ(s.out, "V=2 E=5 F_int=10 B3=10 B4=5\n");
}

TEST(Cli, PolySymbolic) {
  Outcome r = sh("poly --alpha symbolic", three_cut_text());
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "(y-1) z^(28+7a3+5a4) s w^11 q^12 t^6 + 2 z^(31+10a3+6a4) s w^14 q^16 t^8 + "
            "(x-1) z^(46+10a3+10a4) s^2 w^20 q^20 t^10\n");
}

TEST(Cli, Verify) {
  Outcome r = sh("verify --ranks 3,4 --seeds 0..99 --jobs 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("claims pass\n"), std::string::npos);
  EXPECT_EQ(r.out.rfind("all ", std::string::npos), r.out.rfind('\n', r.out.size() - 2) + 1);
}

TEST(Cli, VerifyCorruptedFails) {
  Outcome r = sh("verify --ranks 3 --seeds 0..3 --no-fixtures --no-oracles --corrupt recurrence");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("claims fail"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(sh("").status, 2);
  EXPECT_EQ(sh("frobnicate").status, 2);
  EXPECT_EQ(sh("poly --alpha 1/2", three_cut_text()).status, 2);
  EXPECT_EQ(sh("poly --alpha 1/x,2", three_cut_text()).status, 2);
  EXPECT_EQ(sh("verify --seeds a..b").status, 2);
  EXPECT_EQ(sh("surgery cut", three_cut_text()).status, 2);
}

TEST(Cli, ModuleErrorsExitOne) {
  EXPECT_EQ(sh("stats", "rank 3\nbogus\n").status, 1);
  EXPECT_EQ(sh("surgery cut --edge 42", three_cut_text()).status, 1);
  Outcome v = sh("validate", "rank 2\nvertex 0\n  pre 0 color 0 half 0\nhalf 0 color 0 0:0\n");
  EXPECT_EQ(v.status, 1);
  EXPECT_EQ(v.out.rfind("invalid:", 0), 0u);
}

TEST(Cli, EveryCommandRuns) {
  const std::string g = three_cut_text();
  for (const char* args :
       {"validate", "stats --format json", "faces", "faces --format json", "bubbles", "bubbles --colors 0,1,2",
        "bubbles --colors 0,1,2 --extract 0", "boundary", "boundary --format json", "gamma --consecutive --alternating",
        "gamma --alpha 1/2,3/2", "poly multivariate", "poly extended", "poly --format json",
        "poly --alpha 1/2,3/2 --at x=2,y=3,z=2,s=1,w=1,q=1,t=1", "reduce t1", "reduce t2", "reduce t3",
        "surgery cut --edge 2", "surgery contract --edge 2", "surgery classify --edge 1", "surgery full",
        "surgery full --order 2,1", "surgery states", "verify --single", "--help"}) {
    Outcome r = sh(args, g);
    EXPECT_EQ(r.status, 0) << args;
    EXPECT_FALSE(r.out.empty()) << args;
  }
  EXPECT_EQ(sh("poly multivariate --layout rank3", wsg::emit_wsg(wsg::gen_dipole(3))).status, 0);
  const std::string r1 = wsg::emit_wsg(wsg::gen_dipole(1));
  EXPECT_EQ(sh("reduce tutte", r1).out, sh("reduce tutte --oracle", r1).out);
  const std::string r2 = wsg::emit_wsg(wsg::gen_dipole(2));
  EXPECT_EQ(sh("reduce br", r2).out, sh("reduce br --oracle", r2).out);
  EXPECT_EQ(sh("generate chain --rank 3 --pairs 3").status, 0);
  EXPECT_EQ(sh("generate random --rank 4 --cuts 2 --contractions 2 --seed 5 --max-edges 10 --format json").status, 0);
}

TEST(Cli, OutputIsStable) {
  const std::string g = three_cut_text();
  EXPECT_EQ(sh("surgery states --format json", g).out, sh("surgery states --format json", g).out);
  EXPECT_EQ(sh("generate random --rank 3 --seed 9").out, sh("generate random --rank 3 --seed 9").out);
}

// Runs the inka binary end to end.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "inka/io.h"

namespace {

namespace fs = std::filesystem;

const std::string kBin = INKA_CLI;
const fs::path kData = INKA_TEST_DATA_DIR;

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  Invocation r;
  const std::string cmd = kBin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("inka_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  std::string fig2(const char* layout) const {
    return "--graph " + (kData / "fig2.edges").string() + " --layout " + (kData / layout).string();
  }
  fs::path dir_;
};

TEST_F(Cli, AnalyzeFigureTwo) {
  const Invocation r = run("analyze " + fig2("fig2a_layout.csv") + " --radius 1 --width 0.1 --area 100");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("fig2,fig2a_layout,4,2,1,0.10000000000000001,1,20,0,100,14.16637"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("clarity_nodes"), std::string::npos);
}

TEST_F(Cli, VertexOnlyInk) {
  const Invocation r = run("analyze " + fig2("fig2b_layout.csv") + " --radius 1 --width 0 --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"ink\": 12.566370614359172"), std::string::npos) << r.out;
}

TEST_F(Cli, MissingLayoutLeavesNoOutput) {
  const std::string out = tmp("report.csv");
  const Invocation r = run("analyze --graph " + (kData / "fig2.edges").string() + " --layout " + tmp("nope.csv") +
                    " --out " + out);
  EXPECT_NE(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(fs::exists(out));
}

TEST_F(Cli, MalformedGraphIsAnError) {
  const Invocation r = run("analyze --graph " + (kData / "malformed" / "mtx_bad_field.mtx").string() +
                    " --algorithm random");
  EXPECT_NE(r.status, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, LayoutIsDeterministic) {
  const std::string a = tmp("a.csv"), b = tmp("b.csv");
  ASSERT_EQ(run("layout --graph grid:12x12 --algorithm multilevel --seed 4 --out " + a).status, 0);
  ASSERT_EQ(run("layout --graph grid:12x12 --algorithm multilevel --seed 4 --out " + b).status, 0);
  EXPECT_EQ(inka::read_text_file(a), inka::read_text_file(b));
  EXPECT_EQ(inka::read_layout(a, 144).size(), 144u);
}

TEST_F(Cli, UnknownAlgorithmIsUsageError) {
  const Invocation r = run("layout --graph grid:3x3 --algorithm fm3");
  EXPECT_NE(r.status, 0);
  const std::string cmd = kBin + " layout --graph grid:3x3 --algorithm fm3 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string err;
  char buf[1024];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, got);
  pclose(pipe);
  EXPECT_NE(err.find("random, circular, force-directed, multilevel"), std::string::npos) << err;
}

TEST_F(Cli, TransformNeedsExactlyOneFlag) {
  EXPECT_NE(run("transform " + fig2("fig2b_layout.csv") + " --scale 2 --zoom 2 --out " + tmp("t.csv")).status, 0);
  EXPECT_NE(run("transform " + fig2("fig2b_layout.csv") + " --out " + tmp("t.csv")).status, 0);
  EXPECT_FALSE(fs::exists(tmp("t.csv")));
}

TEST_F(Cli, ScaleOneIsIdentity) {
  const Invocation r = run("transform " + fig2("fig2b_layout.csv") + " --radius 1 --width 0.1 --scale 1 --out " + tmp("s.csv"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("measured_delta,0\n"), std::string::npos) << r.out;
  EXPECT_EQ(inka::write_layout_csv(inka::read_layout(tmp("s.csv"), 4)),
            inka::write_layout_csv(inka::read_layout(kData / "fig2b_layout.csv", 4)));
}

TEST_F(Cli, ZoomFourQuadruplesInk) {
  const Invocation r = run("transform " + fig2("fig2b_layout.csv") + " --radius 1 --width 0.1 --zoom 4 --out " + tmp("z.csv"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("measured_ink,59.939190956421"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("difference,0\n"), std::string::npos) << r.out;
}

TEST_F(Cli, PartialOneMatchesFullDrawing) {
  const Invocation r = run("partial " + fig2("fig2b_layout.csv") + " --radius 1 --width 0.1 --ratios 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\n1,28.284271247461902,1,14.984797739105362,"), std::string::npos) << r.out;
}

TEST_F(Cli, RenderAndRaster) {
  const std::string svg = tmp("d.svg");
  ASSERT_EQ(run("render " + fig2("fig2b_layout.csv") + " --radius 1 --width 0.1 --out " + svg).status, 0);
  EXPECT_NE(inka::read_text_file(svg).find("<circle"), std::string::npos);
  const Invocation r = run("raster " + fig2("fig2a_layout.csv") + " --radius 1 --width 0.1");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("raster_ink,14.1"), std::string::npos) << r.out;
}

TEST_F(Cli, BenchWritesReportAndManifest) {
  const std::string cfg = tmp("bench.json");
  inka::write_text_file(cfg, R"({"graphs": ["grid:4x4", {"name": "p", "path": ")" +
                                 (kData / "small.mtx").string() + R"("}],
    "layouts": ["random", "circular"], "outputs": {"report": "out/r.csv"}})");
  ASSERT_EQ(run("bench " + cfg).status, 0);
  const std::string report = inka::read_text_file(dir_ / "out" / "r.csv");
  std::size_t lines = 0;
  for (char c : report) lines += c == '\n';
  EXPECT_EQ(lines, 1u + 2 * 2 * 5);
  EXPECT_NE(inka::read_text_file(dir_ / "out" / "MANIFEST").find("status: complete"), std::string::npos);
}

TEST_F(Cli, BenchFlushesPartialRowsOnFailure) {
  const std::string cfg = tmp("bench.json");
  inka::write_text_file(cfg, R"({"graphs": ["grid:3x3", {"name": "broken", "path": ")" +
                                 (kData / "malformed" / "mtx_bad_field.mtx").string() + R"("}],
    "layouts": ["circular"], "outputs": {"report": "out/r.csv"}})");
  EXPECT_NE(run("bench " + cfg).status, 0);
  const std::string manifest = inka::read_text_file(dir_ / "out" / "MANIFEST");
  EXPECT_NE(manifest.find("status: incomplete"), std::string::npos);
  EXPECT_NE(manifest.find("failed: broken:"), std::string::npos);
  EXPECT_NE(manifest.find("rows: 5"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "r.csv"));
}

}  // namespace

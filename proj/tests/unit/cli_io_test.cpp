#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "corpus.hpp"
#include "lozenge/cache.hpp"
#include "lozenge/commands.hpp"
#include "lozenge/config.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/render.hpp"
#include "lozenge/report.hpp"

using namespace lozenge;

namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("lozenge-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

CommandResult run(const std::string& command, const std::string& word, int n = 0, bool render = false,
                  const Config& config = {}) {
  CommandRequest request;
  request.command = command;
  request.word = word;
  request.n = n;
  request.render = render;
  return run_command(request, config);
}

}  // namespace

TEST(Config, MinimalBuiltinGroup) {
  const auto c = parse_config(R"({"group": "modular-torus"})");
  EXPECT_EQ(c.group.rank(), 2);
  EXPECT_EQ(c.group.name, "modular-torus");
  EXPECT_EQ(c.depths.lozenge, 8);
  EXPECT_EQ(c.depths.linking, 10);
  EXPECT_EQ(c.depths.oracle, 8);
  EXPECT_EQ(parse_config("{}").group.rank(), 2);
}

TEST(Config, NearUnimodularMatricesAreRenormalized) {
  const auto c = parse_config(R"({"group": {"name": "t", "generators": [[1, 1, 1, 1.999999999], [[1, -1], [-1, 2]]]}})");
  ASSERT_EQ(c.group.rank(), 2);
  EXPECT_NEAR(c.group.generators[0].determinant(), 1.0, 1e-15);
  EXPECT_EQ(code_of([] { parse_config(R"({"group": {"generators": [[0.9, 0, 0, 1]]}})"); }),
            ErrorCode::ValidationError);
}

TEST(Config, ParseErrorsCarryLineAndColumn) {
  try {
    parse_config("{\n  \"depth\": 4,\n  \"group\": modular\n}");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3, column 12"), std::string::npos) << e.what();
  }
}

TEST(Config, Validation) {
  EXPECT_EQ(code_of([] { parse_config(R"({"depht": 3})"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_config(R"({"depth": 20})"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_config(R"({"depth": -1})"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_config(R"({"tolerance": 0.5})"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_config(R"({"group": "sphere"})"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_config("[1, 2]"); }), ErrorCode::ValidationError);
  const auto c = parse_config(R"({"depth": {"lozenge": 5, "oracle": 6}, "partner_range": 2, "tolerance": 1e-8,
                                   "render": {"width": 300, "height": 200, "samples": 64}})");
  EXPECT_EQ(c.depths.lozenge, 5);
  EXPECT_EQ(c.depths.linking, 10);
  EXPECT_EQ(c.depths.oracle, 6);
  EXPECT_EQ(c.partner_range, 2);
  EXPECT_DOUBLE_EQ(c.tol.eps, 1e-8);
  EXPECT_EQ(c.render.width, 300);
  EXPECT_EQ(c.render.samples, 64);
}

TEST(Config, LoadFromFile) {
  TempDir dir;
  const auto path = dir.path() / "c.json";
  std::ofstream(path) << R"({"group": "octagon-genus2", "depth": 3})";
  const auto c = load_config(path.string());
  EXPECT_EQ(c.group.rank(), 4);
  EXPECT_EQ(code_of([&] { load_config((dir.path() / "missing.json").string()); }), ErrorCode::IoError);
}

TEST(Report, FormattingIsStable) {
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_matrix({0, 1, -1, 3}), "[[0, 1], [-1, 3]]");
  Report r("classify");
  r.add("word", "ab");
  r.add("multi", "x\ny");
  r.add("flag", true);
  EXPECT_EQ(r.str(), "lozenge-report 1\ncommand: classify\nword: ab\nmulti: x y\nflag: true\n");
  EXPECT_EQ(r.value("word"), "ab");
  EXPECT_EQ(r.value("absent"), "");
}

TEST(Render, SvgShowsEveryLozengeWithSixDecimals) {
  const Chain chain = chain_between({0.2, 0.9}, 4);
  Scene scene = chain_scene("test", chain);
  scene.witnesses.push_back({"w <1>", {0.5, 1.0}});
  const auto svg = render_svg(scene);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(count(svg, "class=\"lozenge\""), 4u);
  EXPECT_EQ(count(svg, "class=\"corner\""), 5u);
  EXPECT_EQ(count(svg, "class=\"witness\""), 1u);
  EXPECT_NE(svg.find("w &lt;1&gt;"), std::string::npos);
  EXPECT_NE(svg.find("x=\"40.000000\""), std::string::npos);
  EXPECT_EQ(svg, render_svg(scene));
}

TEST(Render, CsvFollowsRfc4180) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  Scene scene = chain_scene("t", chain_between({0.2, 0.9}, 2));
  scene.witnesses.push_back({"h, k=1", {0.5, 1.0}});
  const auto csv = render_csv(scene);
  EXPECT_EQ(csv.rfind("kind,label,u,s,u_hi,s_hi\r\n", 0), 0u);
  EXPECT_NE(csv.find("lozenge,0,0.200000,0.900000,0.900000,1.200000\r\n"), std::string::npos);
  EXPECT_NE(csv.find("witness,\"h, k=1\",0.500000,1.000000,,\r\n"), std::string::npos);
  EXPECT_EQ(count(csv, "\r\n"), 1u + 2u + 3u + 1u);
}

TEST(Cache, CachedRunsMatchFreshRuns) {
  TempDir dir;
  DiskCache disk(dir.path());
  const auto group = modular_torus();
  const auto fresh = enumerate_elements(group, 6);
  const auto first = disk.load_or_build(group, 6, {});
  EXPECT_EQ(disk.misses(), 1);
  EXPECT_TRUE(fs::exists(disk.file_for(group, 6)));
  const auto second = disk.load_or_build(group, 6, {});
  EXPECT_EQ(disk.hits(), 1);
  ASSERT_EQ(second.size(), fresh.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    EXPECT_EQ(second[i].word(), fresh[i].word());
    EXPECT_EQ(second[i].matrix(), fresh[i].matrix());
    EXPECT_EQ(first[i].matrix(), fresh[i].matrix());
  }
}

TEST(Cache, CorruptFilesAreRebuilt) {
  TempDir dir;
  DiskCache disk(dir.path());
  const auto group = modular_torus();
  std::ofstream(disk.file_for(group, 3)) << "lozenge-words 1 nonsense\nab\n";
  const auto elements = disk.load_or_build(group, 3, {});
  EXPECT_EQ(elements.size(), 53u);
  EXPECT_EQ(disk.misses(), 1);
  disk.load_or_build(group, 3, {});
  EXPECT_EQ(disk.hits(), 1);
}

TEST(Cache, ReportsIdenticalWithAndWithoutCache) {
  TempDir dir;
  DiskCache disk(dir.path());
  CommandRequest request{"classify", "aabb", 0, true, false};
  const auto fresh = run_command(request, Config{});
  const auto cold = run_command(request, Config{}, disk.provider());
  const auto warm = run_command(request, Config{}, disk.provider());
  EXPECT_GE(disk.hits(), 1);
  EXPECT_EQ(fresh.report, cold.report);
  EXPECT_EQ(fresh.report, warm.report);
  EXPECT_EQ(fresh.svg, warm.svg);
}

TEST(Commands, ClassifyNonSimpleWord) {
  const auto r = run("classify", "aabb");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report.rfind("lozenge-report 1\n", 0), 0u);
  EXPECT_NE(r.report.find("verdict.linking: linked at depth 10\n"), std::string::npos);
  EXPECT_NE(r.report.find("verdict.linking.witness.word: ab\n"), std::string::npos);
  EXPECT_NE(r.report.find("simple: false\n"), std::string::npos);
  EXPECT_FALSE(r.svg.has_value());
}

TEST(Commands, ChainRenderIsDeterministic) {
  const auto a = run("chain", "ab", 4, true);
  const auto b = run("chain", "ab", 4, true);
  EXPECT_EQ(a.exit_code, 0);
  ASSERT_TRUE(a.svg.has_value());
  EXPECT_EQ(count(*a.svg, "class=\"lozenge\""), 4u);
  EXPECT_NE(a.report.find("chain.side_disjoint: true\n"), std::string::npos);
  EXPECT_EQ(a.report, b.report);
  EXPECT_EQ(*a.svg, *b.svg);
  EXPECT_EQ(*a.csv, *b.csv);
}

TEST(Commands, InputErrorsExitFour) {
  const auto unknown = run("classify", "xyz");
  EXPECT_EQ(unknown.exit_code, 4);
  EXPECT_NE(unknown.report.find("error.code: UnknownGenerator\n"), std::string::npos);
  EXPECT_EQ(run("classify", "abAB").exit_code, 4);
  EXPECT_EQ(run("classify", "").exit_code, 4);
  EXPECT_EQ(run("frobnicate", "ab").exit_code, 4);
  Config deep;
  deep.depths.linking = 12;
  EXPECT_EQ(run("classify", "ab", 0, false, deep).exit_code, 4);
}

TEST(Commands, AnnulusReportsRefusedCertificate) {
  const auto mixed = run("annulus", "aabb");
  EXPECT_EQ(mixed.exit_code, 2);
  EXPECT_NE(mixed.report.find("claim: true\n"), std::string::npos);
  EXPECT_NE(mixed.report.find("error.code: MixedSignProfile\n"), std::string::npos);
  const auto clean = run("annulus", "ab");
  EXPECT_EQ(clean.exit_code, 0);
  EXPECT_NE(clean.report.find("certificate.schedule_ok: true\n"), std::string::npos);
}

TEST(Commands, CocylAndInfoAndRender) {
  const auto cocyl = run("cocyl", "ab");
  EXPECT_EQ(cocyl.exit_code, 0);
  EXPECT_NE(cocyl.report.find("shift.ok: true\n"), std::string::npos);
  EXPECT_NE(cocyl.report.find("partners: [1, 2, 3]\n"), std::string::npos);
  const auto info = run("info", "");
  EXPECT_EQ(info.exit_code, 0);
  EXPECT_NE(info.report.find("enumeration.count: 13121\n"), std::string::npos);
  const auto render = run("render", "aabb", 3);
  EXPECT_EQ(render.exit_code, 0);
  ASSERT_TRUE(render.svg.has_value());
  ASSERT_TRUE(render.csv.has_value());
  EXPECT_EQ(count(*render.svg, "class=\"witness\""), 1u);
}

TEST(Commands, ExitCodeMapping) {
  EXPECT_EQ(exit_code_for(ErrorCode::AmbiguousGeometry), 2);
  EXPECT_EQ(exit_code_for(ErrorCode::InconsistentVerdicts), 3);
  EXPECT_EQ(exit_code_for(ErrorCode::ParseError), 4);
  EXPECT_EQ(exit_code_for(ErrorCode::DepthTooLarge), 4);
}

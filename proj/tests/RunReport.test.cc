//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file RunReport.test.cc
//---------------------------------------------------------------------------//
#include "qsolid/RunReport.hh"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

namespace qsolid
{
namespace test
{
namespace
{
//---------------------------------------------------------------------------//
std::string data_path(char const* name)
{
    return std::string(QSOLID_TEST_DATA) + "/" + name;
}

ResultEntry const* find_result(RunReport const& r, std::string const& name)
{
    for (auto const& e : r.results)
    {
        if (e.name == name)
            return &e;
    }
    return nullptr;
}

CheckEntry const* find_check(RunReport const& r, std::string const& name)
{
    for (auto const& c : r.checks)
    {
        if (c.name == name)
            return &c;
    }
    return nullptr;
}

//! Serialized report without the timing field
std::string stable_dump(RunReport r)
{
    r.wall_time_ms = 0;
    r.inputs.erase("threads");
    return dump_json(to_json(r));
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
TEST(DumpJsonTest, precision_and_nonfinite)
{
    nlohmann::ordered_json j;
    j["a"] = 0.1;
    j["b"] = std::numeric_limits<double>::quiet_NaN();
    j["c"] = -std::numeric_limits<double>::infinity();
    j["d"] = 3;
    j["e"] = "x\"y";
    j["f"] = nlohmann::ordered_json::array({true, nullptr, 1.5});
    EXPECT_EQ(R"({"a":0.10000000000000001,"b":null,"c":null,"d":3,)"
              R"("e":"x\"y","f":[true,null,1.5]})",
              dump_json(j));
}

TEST(DumpJsonTest, round_trips_doubles)
{
    for (double v : {std::numbers::ln2 * 8, 1e-300, 6.02214076e23, -0.0})
    {
        nlohmann::ordered_json j = v;
        double back = nlohmann::json::parse(dump_json(j)).get<double>();
        EXPECT_EQ(v, back);
    }
}

TEST(MakeCheckTest, semantics)
{
    auto c = make_check("x", 1.0, 1.5, 0.5);
    EXPECT_TRUE(c.pass);
    EXPECT_EQ("x", c.name);
    EXPECT_FALSE(make_check("x", 1.0, 1.5, 0.49).pass);
    EXPECT_FALSE(
        make_check("x", std::numeric_limits<double>::quiet_NaN(), 0, 1).pass);
}

TEST(RunReportTest, json_shape)
{
    RunReport r;
    r.command = "volume";
    r.inputs["n"] = 10;
    r.results.push_back({"volume", 2.0, 0.25, "mc"});
    r.checks.push_back(make_check("ok", 1, 1, 0));
    r.wall_time_ms = 7;
    EXPECT_TRUE(r.all_pass());
    auto j = to_json(r);
    EXPECT_EQ("volume", j["command"]);
    EXPECT_EQ(10, j["inputs"]["n"]);
    EXPECT_EQ("volume", j["results"][0]["name"]);
    EXPECT_EQ(0.25, j["results"][0]["error_bound_or_stderr"]);
    EXPECT_EQ(true, j["checks"][0]["pass"]);
    EXPECT_EQ(7, j["wall_time_ms"]);
    r.checks.push_back(make_check("bad", 1, 2, 0));
    EXPECT_FALSE(r.all_pass());
}

//---------------------------------------------------------------------------//
TEST(VolumeCommandTest, mc)
{
    VolumeOptions opts;
    opts.file = data_path("revenge.solid");
    opts.method = "mc";
    opts.n = 200000;
    opts.threads = 1;
    auto a = cmd_volume(opts);
    ASSERT_EQ(exit_ok, a.exit_code) << a.diagnostic;
    ASSERT_TRUE(a.report);
    auto const* v = find_result(*a.report, "volume");
    ASSERT_TRUE(v);
    EXPECT_NEAR(std::log(256.0), v->value, 5 * v->error_bound_or_stderr);

    opts.threads = 4;
    auto b = cmd_volume(opts);
    ASSERT_EQ(exit_ok, b.exit_code);
    EXPECT_EQ(stable_dump(*a.report), stable_dump(*b.report));
}

TEST(VolumeCommandTest, octree)
{
    VolumeOptions opts;
    opts.file = data_path("revenge.solid");
    opts.tol = 5e-2;
    auto r = cmd_volume(opts);
    ASSERT_EQ(exit_ok, r.exit_code) << r.diagnostic;
    auto const* v = find_result(*r.report, "volume");
    ASSERT_TRUE(v);
    EXPECT_LE(v->error_bound_or_stderr, 5e-2);
    EXPECT_LE(std::abs(v->value - std::log(256.0)), v->error_bound_or_stderr);
    EXPECT_TRUE(r.report->inputs["bbox_certified"].get<bool>());
    ASSERT_TRUE(find_check(*r.report, "octree_converged"));
}

TEST(VolumeCommandTest, not_converged)
{
    VolumeOptions opts;
    opts.file = data_path("revenge.solid");
    opts.tol = 1e-6;
    opts.max_depth = 4;
    auto r = cmd_volume(opts);
    EXPECT_EQ(exit_failed_checks, r.exit_code);
    ASSERT_TRUE(r.report);
    EXPECT_FALSE(r.report->all_pass());
}

TEST(VolumeCommandTest, errors)
{
    VolumeOptions opts;
    opts.method = "mc";
    opts.n = 1000;

    opts.file = data_path("unbounded.solid");
    auto r = cmd_volume(opts);
    EXPECT_EQ(exit_unbounded, r.exit_code);
    EXPECT_FALSE(r.report);
    EXPECT_FALSE(r.diagnostic.empty());

    opts.bbox = Box::cube(1);
    EXPECT_EQ(exit_ok, cmd_volume(opts).exit_code);
    opts.bbox.reset();

    opts.file = data_path("cubic.solid");
    r = cmd_volume(opts);
    EXPECT_EQ(exit_parse_error, r.exit_code);
    EXPECT_NE(std::string::npos, r.diagnostic.find("cubic.solid"));

    opts.file = data_path("does_not_exist.solid");
    EXPECT_EQ(exit_io_error, cmd_volume(opts).exit_code);

    opts.file = data_path("revenge.solid");
    opts.method = "grid";
    EXPECT_EQ(exit_parse_error, cmd_volume(opts).exit_code);
}

//---------------------------------------------------------------------------//
TEST(RevengeCommandTest, values)
{
    auto r = cmd_revenge({});
    ASSERT_EQ(exit_ok, r.exit_code) << r.diagnostic;
    auto const& rep = *r.report;
    double const ln2 = std::numbers::ln2;
    struct Expect
    {
        char const* name;
        double value;
    };
    for (auto e : {Expect{"vol_pi1", 1.0 / 6},
                   Expect{"vol_pi2", 1.0 / 3},
                   Expect{"I2", 1.0 / 3},
                   Expect{"I1", ln2 / 3 + 1.0 / 6},
                   Expect{"I", ln2 / 3 - 1.0 / 6},
                   Expect{"V1", ln2},
                   Expect{"total", 8 * ln2},
                   Expect{"I2_quadrature", 1.0 / 3},
                   Expect{"I1_quadrature", ln2 / 3 + 1.0 / 6},
                   Expect{"I_quadrature", ln2 / 3 - 1.0 / 6},
                   Expect{"li_integral", ln2 / 3 - 1.0 / 6}})
    {
        auto const* v = find_result(rep, e.name);
        ASSERT_TRUE(v) << e.name;
        EXPECT_NEAR(e.value, v->value, 1e-8) << e.name;
    }
    EXPECT_TRUE(rep.all_pass());
    EXPECT_TRUE(find_check(rep, "all_converged"));
    EXPECT_TRUE(find_check(rep, "li_equals_I"));

    RevengeOptions bad;
    bad.tol = 0;
    EXPECT_EQ(exit_parse_error, cmd_revenge(bad).exit_code);
}

//---------------------------------------------------------------------------//
TEST(ClassicsCommandTest, skewed_bicylinder)
{
    ClassicsOptions opts;
    opts.angle_deg = 60;
    opts.n = 1000000;
    opts.seed = 7;
    auto r = cmd_classics(opts);
    ASSERT_EQ(exit_ok, r.exit_code) << r.diagnostic;
    auto const* ratio = find_result(*r.report, "box_ratio");
    ASSERT_TRUE(ratio);
    EXPECT_NEAR(2.0 / 3, ratio->value, 5e-3);
    auto const* box = find_result(*r.report, "box_volume");
    ASSERT_TRUE(box);
    EXPECT_NEAR(8 / std::sin(std::numbers::pi / 3), box->value, 1e-12);
    EXPECT_EQ("mc", r.report->inputs["method"]);
}

TEST(ClassicsCommandTest, rejects)
{
    ClassicsOptions opts;
    opts.angle_deg = 0;
    EXPECT_EQ(exit_parse_error, cmd_classics(opts).exit_code);
    opts.angle_deg = 120;
    EXPECT_EQ(exit_parse_error, cmd_classics(opts).exit_code);
    opts = {};
    opts.shape = "sphere";
    EXPECT_EQ(exit_parse_error, cmd_classics(opts).exit_code);
    opts = {};
    opts.radius = -1;
    EXPECT_EQ(exit_parse_error, cmd_classics(opts).exit_code);
    opts = {};
    opts.method = "grid";
    EXPECT_EQ(exit_parse_error, cmd_classics(opts).exit_code);
}

TEST(ClassicsCommandTest, coarse_tricylinder)
{
    ClassicsOptions opts;
    opts.shape = "tricylinder";
    opts.tol = 5e-2;
    opts.n = 200000;
    auto r = cmd_classics(opts);
    ASSERT_EQ(exit_ok, r.exit_code) << r.diagnostic;
    EXPECT_TRUE(find_check(*r.report, "octree_closed_form"));
    EXPECT_TRUE(find_check(*r.report, "octree_mc_agree"));
}

//---------------------------------------------------------------------------//
TEST(MeshCommandTest, writes_obj)
{
    auto path = std::filesystem::temp_directory_path() / "qsolid_mesh.obj";
    MeshOptions opts;
    opts.out = path.string();
    auto r = cmd_mesh(opts);
    ASSERT_EQ(exit_ok, r.exit_code) << r.diagnostic;
    EXPECT_EQ(1044, find_result(*r.report, "segments")->value);
    EXPECT_EQ(0, find_result(*r.report, "faces")->value);

    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::size_t vlines = 0, llines = 0;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
    {
        vlines += line.rfind("v ", 0) == 0;
        llines += line.rfind("l ", 0) == 0;
    }
    EXPECT_EQ(find_result(*r.report, "vertices")->value, vlines);
    EXPECT_EQ(1044u, llines);
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".partial"));

    opts.patches = true;
    opts.rulings = 3;
    r = cmd_mesh(opts);
    ASSERT_EQ(exit_ok, r.exit_code);
    EXPECT_EQ(3 * 8 * 2 * 4 * 4, find_result(*r.report, "faces")->value);
    std::filesystem::remove(path);
}

TEST(MeshCommandTest, bad_path)
{
    auto dir = std::filesystem::temp_directory_path() / "qsolid_no_such_dir";
    std::filesystem::remove_all(dir);
    MeshOptions opts;
    opts.out = (dir / "mesh.obj").string();
    auto r = cmd_mesh(opts);
    EXPECT_EQ(exit_io_error, r.exit_code);
    EXPECT_FALSE(r.report);
    EXPECT_FALSE(std::filesystem::exists(dir));

    opts.out = "";
    EXPECT_EQ(exit_io_error, cmd_mesh(opts).exit_code);
    opts.out = "x.obj";
    opts.rulings = -1;
    EXPECT_EQ(exit_parse_error, cmd_mesh(opts).exit_code);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace qsolid

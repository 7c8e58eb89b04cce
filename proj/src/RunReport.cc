//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file RunReport.cc
//---------------------------------------------------------------------------//
#include "qsolid/RunReport.hh"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qsolid/Classics.hh"
#include "qsolid/ImplicitSolid.hh"
#include "qsolid/MeshExport.hh"
#include "qsolid/MonteCarlo.hh"
#include "qsolid/OctreeVolume.hh"
#include "qsolid/Parallel.hh"
#include "qsolid/Revenge.hh"
#include "qsolid/SolidParser.hh"

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

//---------------------------------------------------------------------------//
void dump_to(Json const& j, std::string* out)
{
    char buf[32];
    switch (j.type())
    {
        case Json::value_t::object: {
            *out += '{';
            bool first = true;
            for (auto const& [key, value] : j.items())
            {
                if (!first)
                    *out += ',';
                first = false;
                *out += Json(key).dump();
                *out += ':';
                dump_to(value, out);
            }
            *out += '}';
            break;
        }
        case Json::value_t::array: {
            *out += '[';
            bool first = true;
            for (auto const& value : j)
            {
                if (!first)
                    *out += ',';
                first = false;
                dump_to(value, out);
            }
            *out += ']';
            break;
        }
        case Json::value_t::number_float: {
            auto v = j.get<double>();
            if (!std::isfinite(v))
            {
                *out += "null";
                break;
            }
            auto r = std::to_chars(
                buf, buf + sizeof(buf), v, std::chars_format::general, 17);
            out->append(buf, r.ptr);
            break;
        }
        default:
            *out += j.dump();
    }
}

//---------------------------------------------------------------------------//
std::int64_t elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now()
                                                                 - start)
        .count();
}

//---------------------------------------------------------------------------//
CommandResult failure(int code, std::string message)
{
    CommandResult r;
    r.exit_code = code;
    r.diagnostic = std::move(message);
    return r;
}

//---------------------------------------------------------------------------//
CommandResult finish(RunReport report, Clock::time_point start)
{
    report.wall_time_ms = elapsed_ms(start);
    CommandResult r;
    r.exit_code = report.all_pass() ? exit_ok : exit_failed_checks;
    r.report = std::move(report);
    return r;
}

//---------------------------------------------------------------------------//
Json box_to_json(Box const& b)
{
    return Json::array({b.lo[0], b.hi[0], b.lo[1], b.hi[1], b.lo[2], b.hi[2]});
}

//---------------------------------------------------------------------------//
std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("cannot read '" + path + "'");
    return ss.str();
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
CheckEntry make_check(std::string name,
                      real_type lhs,
                      real_type rhs,
                      real_type tolerance)
{
    bool pass = std::abs(lhs - rhs) <= tolerance;
    return {std::move(name), pass, lhs, rhs, tolerance};
}

//---------------------------------------------------------------------------//
bool RunReport::all_pass() const
{
    for (auto const& c : checks)
    {
        if (!c.pass)
            return false;
    }
    return true;
}

//---------------------------------------------------------------------------//
Json to_json(RunReport const& r)
{
    Json results = Json::array();
    for (auto const& e : r.results)
    {
        results.push_back({{"name", e.name},
                           {"value", e.value},
                           {"error_bound_or_stderr", e.error_bound_or_stderr},
                           {"method", e.method}});
    }
    Json checks = Json::array();
    for (auto const& c : r.checks)
    {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"tolerance", c.tolerance}});
    }
    Json j = Json::object();
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = std::move(results);
    j["checks"] = std::move(checks);
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

//---------------------------------------------------------------------------//
std::string dump_json(Json const& j)
{
    std::string out;
    dump_to(j, &out);
    return out;
}

//---------------------------------------------------------------------------//
void write_file_atomic(std::string const& path, std::string const& contents)
{
    namespace fs = std::filesystem;
    std::string const tmp = path + ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.close();
        if (!out)
        {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing '" + path + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
    {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw std::runtime_error("cannot move output into '" + path
                                 + "': " + ec.message());
    }
}

//---------------------------------------------------------------------------//
CommandResult cmd_volume(VolumeOptions const& opts)
{
    auto const start = Clock::now();
    if (opts.method != "mc" && opts.method != "octree")
        return failure(exit_parse_error,
                       "unknown method '" + opts.method
                           + "' (expected mc or octree)");

    std::string text;
    try
    {
        text = read_file(opts.file);
    }
    catch (std::exception const& e)
    {
        return failure(exit_io_error, e.what());
    }

    std::optional<ImplicitSolid> solid;
    try
    {
        solid = parse_solid(text);
    }
    catch (ParseError const& e)
    {
        return failure(exit_parse_error, opts.file + ": " + e.what());
    }

    std::optional<Box> box = opts.bbox;
    if (!box)
        box = certified_bbox(*solid);
    if (!box)
        return failure(exit_unbounded,
                       "no bounding box could be certified for '" + opts.file
                           + "'; supply one with --bbox");

    unsigned int const threads = resolve_threads(opts.threads);
    RunReport report;
    report.command = "volume";
    report.inputs["file"] = opts.file;
    report.inputs["method"] = opts.method;
    report.inputs["n"] = opts.n;
    report.inputs["seed"] = opts.seed;
    report.inputs["tol"] = opts.tol;
    report.inputs["bbox"] = box_to_json(*box);
    report.inputs["bbox_certified"] = !opts.bbox.has_value();
    report.inputs["threads"] = threads;
    report.inputs["max_depth"] = opts.max_depth;

    try
    {
        if (opts.method == "mc")
        {
            auto est = estimate_volume(*solid, *box, opts.n, opts.seed, threads);
            report.results.push_back(
                {"volume", est.value, est.std_error, "mc"});
        }
        else
        {
            auto oct = volume_by_octree_detailed(
                *solid, *box, opts.tol, opts.max_depth, threads);
            report.inputs["depth"] = oct.depth;
            report.results.push_back({"volume",
                                      oct.result.value,
                                      oct.result.abs_error_bound,
                                      "octree"});
            report.checks.push_back(make_check(
                "octree_converged", oct.result.abs_error_bound, 0, opts.tol));
        }
    }
    catch (std::invalid_argument const& e)
    {
        return failure(exit_parse_error, e.what());
    }
    return finish(std::move(report), start);
}

//---------------------------------------------------------------------------//
CommandResult cmd_revenge(RevengeOptions const& opts)
{
    auto const start = Clock::now();
    if (!(opts.tol > 0))
        return failure(exit_parse_error, "tolerance must be positive");

    revenge::ReportOptions ro;
    ro.tol = opts.tol;
    ro.threads = resolve_threads(opts.threads);
    auto const d = revenge::full_report(ro);

    RunReport report;
    report.command = "revenge";
    report.inputs["tol"] = opts.tol;
    report.inputs["li_tol"] = ro.li_tol;
    report.inputs["mc_samples"] = ro.mc_samples;
    report.inputs["mc_seed"] = ro.mc_seed;
    report.inputs["octree_tol"] = ro.octree_tol;
    report.inputs["threads"] = ro.threads;

    auto closed = [&](char const* name, real_type v) {
        report.results.push_back({name, v, 0, "closed_form"});
    };
    closed("vol_pi1", d.vol_pi1);
    closed("vol_pi2", d.vol_pi2);
    closed("I2", d.face);
    closed("I1", d.roof);
    closed("I", d.curved);
    closed("V1", d.v1);
    closed("total", d.total);
    auto quad = [&](char const* name, QuadratureResult const& q) {
        report.results.push_back({name, q.value, q.abs_error_bound, "cubature"});
    };
    quad("I2_quadrature", d.face_quad);
    quad("I1_quadrature", d.roof_quad);
    quad("I_quadrature", d.curved_quad);
    quad("li_integral", d.li);

    for (auto const& c : d.cross_checks)
        report.checks.push_back({c.name, c.pass, c.lhs, c.rhs, c.tolerance});
    report.checks.push_back(
        make_check("all_converged", d.converged ? 1 : 0, 1, 0));
    return finish(std::move(report), start);
}

//---------------------------------------------------------------------------//
CommandResult cmd_classics(ClassicsOptions const& opts)
{
    auto const start = Clock::now();
    bool const bi = opts.shape == "bicylinder";
    if (!bi && opts.shape != "tricylinder")
        return failure(exit_parse_error,
                       "unknown shape '" + opts.shape
                           + "' (expected bicylinder or tricylinder)");
    if (opts.method != "auto" && opts.method != "octree"
        && opts.method != "mc")
        return failure(exit_parse_error,
                       "unknown method '" + opts.method
                           + "' (expected auto, octree or mc)");
    if (!(opts.radius > 0) || !std::isfinite(opts.radius))
        return failure(exit_parse_error, "radius must be positive");
    if (bi && !(opts.angle_deg > 0 && opts.angle_deg <= 90))
        return failure(exit_parse_error, "angle must be in (0, 90] degrees");

    unsigned int const threads = resolve_threads(opts.threads);
    real_type const r = opts.radius;
    real_type const r3 = r * r * r;

    RunReport report;
    report.command = "classics";
    report.inputs["shape"] = opts.shape;
    report.inputs["radius"] = r;
    if (bi)
        report.inputs["angle_deg"] = opts.angle_deg;

    try
    {
        if (bi)
        {
            real_type const angle = opts.angle_deg == 90
                                        ? std::numbers::pi / 2
                                        : opts.angle_deg * std::numbers::pi
                                              / 180;
            std::string method = opts.method;
            if (method == "auto")
                method = opts.angle_deg == 90 ? "octree" : "mc";
            report.inputs["method"] = method;

            AffineMap const shear = bicylinder_shear(angle);
            real_type const box_volume = std::abs(shear.det()) * 8 * r3;
            real_type const expected = std::abs(shear.det()) * 16 * r3 / 3;
            ImplicitSolid const solid = bicylinder(r, angle);

            real_type volume, volume_err, ratio, ratio_err, ratio_tol;
            if (method == "octree")
            {
                report.inputs["tol"] = opts.tol;
                report.inputs["max_depth"] = opts.max_depth;
                auto q = volume_by_octree(
                    solid, *solid.bbox(), opts.tol, opts.max_depth, threads);
                volume = q.value;
                volume_err = q.abs_error_bound;
                ratio = volume / box_volume;
                ratio_err = volume_err / box_volume;
                ratio_tol = 2e-3;
            }
            else
            {
                report.inputs["n"] = opts.n;
                report.inputs["seed"] = opts.seed;
                // Sample the orthogonal cube and push it through the shear
                auto est = estimate_volume_mapped(solid,
                                                  bicylinder_cube(r),
                                                  shear,
                                                  opts.n,
                                                  opts.seed,
                                                  threads);
                ratio = static_cast<real_type>(est.hits)
                        / static_cast<real_type>(est.n);
                ratio_err = std::sqrt(ratio * (1 - ratio)
                                      / static_cast<real_type>(est.n));
                volume = est.value;
                volume_err = est.std_error;
                ratio_tol = 5e-3;
            }
            report.inputs["threads"] = threads;
            report.results.push_back({"volume", volume, volume_err, method});
            report.results.push_back({"box_volume", box_volume, 0, "closed_form"});
            report.results.push_back({"box_ratio", ratio, ratio_err, method});
            report.checks.push_back(make_check(
                "box_ratio_two_thirds", ratio, real_type(2) / 3, ratio_tol));
            if (method == "octree")
            {
                report.checks.push_back(make_check(
                    "volume_closed_form", volume, expected, volume_err));
            }
        }
        else
        {
            bool const use_octree = opts.method != "mc";
            bool const use_mc = opts.method != "octree";
            report.inputs["method"] = opts.method;
            ImplicitSolid const solid = tricylinder(r);
            Box const box = *solid.bbox();
            real_type const expected = (16 - 8 * std::numbers::sqrt2) * r3;

            std::optional<QuadratureResult> oct;
            std::optional<VolumeEstimate> mc;
            if (use_octree)
            {
                report.inputs["tol"] = opts.tol;
                report.inputs["max_depth"] = opts.max_depth;
                oct = volume_by_octree(
                    solid, box, opts.tol, opts.max_depth, threads);
                report.results.push_back(
                    {"volume", oct->value, oct->abs_error_bound, "octree"});
                report.checks.push_back(make_check("octree_closed_form",
                                                   oct->value,
                                                   expected,
                                                   oct->abs_error_bound));
            }
            if (use_mc)
            {
                report.inputs["n"] = opts.n;
                report.inputs["seed"] = opts.seed;
                mc = estimate_volume(solid, box, opts.n, opts.seed, threads);
                report.results.push_back(
                    {"volume", mc->value, mc->std_error, "mc"});
            }
            if (oct && mc)
            {
                report.checks.push_back(
                    make_check("octree_mc_agree",
                               oct->value,
                               mc->value,
                               oct->abs_error_bound + 4 * mc->std_error));
            }
            report.inputs["threads"] = threads;
        }
    }
    catch (std::invalid_argument const& e)
    {
        return failure(exit_parse_error, e.what());
    }
    return finish(std::move(report), start);
}

//---------------------------------------------------------------------------//
CommandResult cmd_mesh(MeshOptions const& opts)
{
    auto const start = Clock::now();
    if (opts.rulings < 0)
        return failure(exit_parse_error, "ruling count must be nonnegative");
    if (opts.out.empty())
        return failure(exit_io_error, "no output path given");

    WireMesh mesh = build_wireframe(opts.rulings);
    if (opts.patches)
    {
        auto const group = symmetry_group();
        int const resolution = opts.rulings + 1;
        for (auto piece :
             {revenge::Piece::s1, revenge::Piece::s2, revenge::Piece::s3})
        {
            WireMesh const patch = triangulate_patch(piece, resolution);
            // The first eight group elements are the pure sign flips
            for (int signs = 0; signs < 8; ++signs)
            {
                Mat3 const& g = group[signs];
                WireMesh image = patch;
                for (auto& v : image.vertices)
                {
                    for (int i = 0; i < 3; ++i)
                        v[i] = g[i][i] * v[i] + real_type(0);
                }
                bool const mirrored
                    = (g[0][0] * g[1][1] * g[2][2]) < 0;
                if (mirrored)
                {
                    for (auto& f : image.faces)
                        std::swap(f[1], f[2]);
                }
                append(&mesh, image);
            }
        }
    }

    try
    {
        write_file_atomic(opts.out, write_obj(mesh));
    }
    catch (std::exception const& e)
    {
        return failure(exit_io_error, e.what());
    }

    RunReport report;
    report.command = "mesh";
    report.inputs["out"] = opts.out;
    report.inputs["rulings"] = opts.rulings;
    report.inputs["patches"] = opts.patches;
    auto count = [&](char const* name, std::size_t n) {
        report.results.push_back(
            {name, static_cast<real_type>(n), 0, "count"});
    };
    count("vertices", mesh.vertices.size());
    count("segments", mesh.segments.size());
    count("faces", mesh.faces.size());
    return finish(std::move(report), start);
}

//---------------------------------------------------------------------------//
}  // namespace qsolid

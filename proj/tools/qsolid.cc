//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid.cc
//! \brief Command-line driver for volume, decomposition, classics and mesh
//---------------------------------------------------------------------------//
#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsolid/RunReport.hh"

namespace
{
//---------------------------------------------------------------------------//
// Parse "xlo,xhi,ylo,yhi,zlo,zhi"
std::optional<qsolid::Box> parse_bbox(std::string const& text)
{
    std::vector<double> values;
    char const* first = text.data();
    char const* last = text.data() + text.size();
    while (first < last)
    {
        double v;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{})
            return std::nullopt;
        values.push_back(v);
        first = ptr;
        if (first < last)
        {
            if (*first != ',')
                return std::nullopt;
            ++first;
        }
    }
    if (values.size() != 6)
        return std::nullopt;
    qsolid::Box b{{values[0], values[2], values[4]},
                  {values[1], values[3], values[5]}};
    if (!b.valid())
        return std::nullopt;
    return b;
}

//---------------------------------------------------------------------------//
int emit(qsolid::CommandResult const& r)
{
    if (r.report)
        std::cout << qsolid::dump_json(qsolid::to_json(*r.report)) << '\n';
    if (!r.diagnostic.empty())
        std::cerr << "qsolid: " << r.diagnostic << '\n';
    if (r.report && r.exit_code == qsolid::exit_failed_checks)
    {
        for (auto const& c : r.report->checks)
        {
            if (!c.pass)
                std::cerr << "qsolid: check '" << c.name << "' failed\n";
        }
    }
    return r.exit_code;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char** argv)
{
    CLI::App app{"Volumes of intersections of quadric half-spaces"};
    app.require_subcommand(1);

    qsolid::VolumeOptions vol;
    std::string bbox_text;
    auto* volume = app.add_subcommand("volume", "Volume of a .solid file");
    volume->add_option("--file", vol.file, "Constraint file")->required();
    volume->add_option("--method", vol.method, "mc or octree")
        ->check(CLI::IsMember({"mc", "octree"}));
    volume->add_option("--n", vol.n, "Monte Carlo sample count");
    volume->add_option("--seed", vol.seed, "Monte Carlo seed");
    volume->add_option("--tol", vol.tol, "Octree absolute tolerance");
    volume->add_option(
        "--bbox", bbox_text, "Enclosing box xlo,xhi,ylo,yhi,zlo,zhi");
    volume->add_option("--threads", vol.threads, "Worker threads");
    volume->add_option("--max-depth", vol.max_depth, "Octree depth limit");

    qsolid::RevengeOptions rev;
    auto* revenge = app.add_subcommand(
        "revenge", "Closed-form tri-hyperboloid volume with cross-checks");
    revenge->add_option("--tol", rev.tol, "Quadrature tolerance");
    revenge->add_option("--threads", rev.threads, "Worker threads");

    qsolid::ClassicsOptions cls;
    auto* classics
        = app.add_subcommand("classics", "Bicylinder and tricylinder volumes");
    classics->add_option("--shape", cls.shape, "bicylinder or tricylinder")
        ->check(CLI::IsMember({"bicylinder", "tricylinder"}));
    classics->add_option("--radius", cls.radius, "Cylinder radius");
    classics->add_option("--angle", cls.angle_deg, "Axis angle in degrees");
    classics->add_option("--method", cls.method, "auto, octree or mc")
        ->check(CLI::IsMember({"auto", "octree", "mc"}));
    classics->add_option("--n", cls.n, "Monte Carlo sample count");
    classics->add_option("--seed", cls.seed, "Monte Carlo seed");
    classics->add_option("--tol", cls.tol, "Octree absolute tolerance");
    classics->add_option("--threads", cls.threads, "Worker threads");
    classics->add_option("--max-depth", cls.max_depth, "Octree depth limit");

    qsolid::MeshOptions msh;
    auto* mesh = app.add_subcommand("mesh", "Write the boundary as OBJ");
    mesh->add_option("--out", msh.out, "Output OBJ path")->required();
    mesh->add_option("--rulings", msh.rulings, "Rulings per family");
    mesh->add_flag("--patches", msh.patches, "Add triangulated patches");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : qsolid::exit_parse_error;
    }

    try
    {
        if (*volume)
        {
            if (!bbox_text.empty())
            {
                vol.bbox = parse_bbox(bbox_text);
                if (!vol.bbox)
                {
                    std::cerr << "qsolid: invalid --bbox '" << bbox_text
                              << "'\n";
                    return qsolid::exit_parse_error;
                }
            }
            return emit(qsolid::cmd_volume(vol));
        }
        if (*revenge)
            return emit(qsolid::cmd_revenge(rev));
        if (*classics)
            return emit(qsolid::cmd_classics(cls));
        if (*mesh)
            return emit(qsolid::cmd_mesh(msh));
    }
    catch (std::exception const& e)
    {
        std::cerr << "qsolid: " << e.what() << '\n';
        return qsolid::exit_parse_error;
    }
    return qsolid::exit_parse_error;
}

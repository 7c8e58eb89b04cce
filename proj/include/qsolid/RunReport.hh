//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/RunReport.hh
//! \brief Command implementations and their JSON reports
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "Types.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
// REPORT
//---------------------------------------------------------------------------//
struct ResultEntry
{
    std::string name;
    real_type value;
    real_type error_bound_or_stderr;
    std::string method;
};

//! A comparison whose pass flag is |lhs - rhs| <= tolerance
struct CheckEntry
{
    std::string name;
    bool pass;
    real_type lhs;
    real_type rhs;
    real_type tolerance;
};

// Build a check with its pass flag computed from the values
CheckEntry make_check(std::string name,
                      real_type lhs,
                      real_type rhs,
                      real_type tolerance);

struct RunReport
{
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::vector<ResultEntry> results;
    std::vector<CheckEntry> checks;
    std::int64_t wall_time_ms{0};

    bool all_pass() const;
};

nlohmann::ordered_json to_json(RunReport const& r);

/*!
 * Serialize JSON with floating point values at 17 significant digits.
 *
 * Output is compact and locale independent. Non-finite numbers become null.
 */
std::string dump_json(nlohmann::ordered_json const& j);

//---------------------------------------------------------------------------//
// COMMANDS
//---------------------------------------------------------------------------//
//! Process exit codes
enum ExitCode : int
{
    exit_ok = 0,
    exit_failed_checks = 1,
    exit_parse_error = 2,
    exit_unbounded = 3,
    exit_io_error = 4
};

//! Report (absent on error), exit code and diagnostic text
struct CommandResult
{
    std::optional<RunReport> report;
    int exit_code{exit_ok};
    std::string diagnostic;
};

struct VolumeOptions
{
    std::string file;
    std::string method{"octree"};
    std::uint64_t n{1000000};
    std::uint64_t seed{42};
    real_type tol{2e-3};
    std::optional<Box> bbox;
    unsigned int threads{0};
    int max_depth{16};
};

// Volume of a solid read from a constraint file
CommandResult cmd_volume(VolumeOptions const& opts);

struct RevengeOptions
{
    real_type tol{1e-8};
    unsigned int threads{0};
};

// Closed-form decomposition of the tri-hyperboloid with cross-checks
CommandResult cmd_revenge(RevengeOptions const& opts);

struct ClassicsOptions
{
    std::string shape{"bicylinder"};
    real_type radius{1};
    //! Angle between bicylinder axes in degrees
    real_type angle_deg{90};
    //! "auto", "octree" or "mc"
    std::string method{"auto"};
    std::uint64_t n{4000000};
    std::uint64_t seed{42};
    real_type tol{2e-3};
    unsigned int threads{0};
    int max_depth{16};
};

// Steinmetz solid volume and, for the bicylinder, its box ratio
CommandResult cmd_classics(ClassicsOptions const& opts);

struct MeshOptions
{
    std::string out;
    int rulings{17};
    bool patches{false};
};

// Write the boundary wireframe as OBJ and report its element counts
CommandResult cmd_mesh(MeshOptions const& opts);

// Write a file through a temporary so failures leave no partial output
void write_file_atomic(std::string const& path, std::string const& contents);

//---------------------------------------------------------------------------//
}  // namespace qsolid

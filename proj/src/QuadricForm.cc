//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file QuadricForm.cc
//---------------------------------------------------------------------------//
#include "qsolid/QuadricForm.hh"

namespace qsolid
{
//---------------------------------------------------------------------------//
/*!
 * Construct from a possibly nonsymmetric matrix.
 *
 * The stored matrix is (M + M^T)/2, which represents the same polynomial.
 */
QuadricForm::QuadricForm(Mat4 const& m)
{
    for (int i = 0; i < 4; ++i)
    {
        m_[i][i] = m[i][i];
        for (int j = i + 1; j < 4; ++j)
        {
            real_type avg = (m[i][j] == m[j][i]) ? m[i][j]
                                                 : (m[i][j] + m[j][i]) / 2;
            m_[i][j] = avg;
            m_[j][i] = avg;
        }
    }
}

//---------------------------------------------------------------------------//
QuadricForm QuadricForm::from_coeffs(QuadricCoeffs const& c)
{
    Mat4 m{};
    m[0][0] = c.xx;
    m[1][1] = c.yy;
    m[2][2] = c.zz;
    m[3][3] = c.c;
    m[0][1] = m[1][0] = c.xy / 2;
    m[0][2] = m[2][0] = c.xz / 2;
    m[1][2] = m[2][1] = c.yz / 2;
    m[0][3] = m[3][0] = c.x / 2;
    m[1][3] = m[3][1] = c.y / 2;
    m[2][3] = m[3][2] = c.z / 2;
    return QuadricForm{m};
}

//---------------------------------------------------------------------------//
QuadricCoeffs QuadricForm::coeffs() const
{
    QuadricCoeffs c;
    c.xx = m_[0][0];
    c.yy = m_[1][1];
    c.zz = m_[2][2];
    c.xy = 2 * m_[0][1];
    c.xz = 2 * m_[0][2];
    c.yz = 2 * m_[1][2];
    c.x = 2 * m_[0][3];
    c.y = 2 * m_[1][3];
    c.z = 2 * m_[2][3];
    c.c = m_[3][3];
    return c;
}

//---------------------------------------------------------------------------//
real_type QuadricForm::operator()(Real3 const& p) const
{
    std::array<real_type, 4> const v{p[0], p[1], p[2], 1};
    real_type result = 0;
    for (int i = 0; i < 4; ++i)
    {
        real_type row = 0;
        for (int j = 0; j < 4; ++j)
        {
            row += m_[i][j] * v[j];
        }
        result += v[i] * row;
    }
    return result;
}

//---------------------------------------------------------------------------//
Real3 QuadricForm::gradient(Real3 const& p) const
{
    Real3 g;
    for (int i = 0; i < 3; ++i)
    {
        g[i] = 2
               * (m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2]
                  + m_[i][3]);
    }
    return g;
}

//---------------------------------------------------------------------------//
bool QuadricForm::is_zero() const
{
    for (auto const& row : m_)
    {
        for (real_type v : row)
        {
            if (v != 0)
                return false;
        }
    }
    return true;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid

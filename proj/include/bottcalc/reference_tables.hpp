#pragma once

#include <array>
#include <string_view>

#include "root_systems.hpp"

namespace bottcalc {

enum class IsoBundle { D2RStar, Wedge2RStar, RStarTensorQuot, StructureSheaf };

// One printed row: values of alpha(gamma) over the roots through alpha_r.
// `ones`: roots with alpha_r-coefficient 1 ("..." = every integer in between).
// `max2`: largest value over coefficient-2 roots, empty if there are none.
// `other`: further coefficient-2 values that must occur.
struct TableRow {
  IsoBundle bundle;
  RootType type;
  std::string_view rcase;
  std::string_view ones;
  std::string_view max2;
  std::string_view other;
};

inline constexpr std::array<TableRow, 28> reference_rows{{
    {IsoBundle::D2RStar, RootType::C, "1<r<n-1", "m+1,...,m+n+(n-r)+1", "2m+2n+3", ""},
    {IsoBundle::D2RStar, RootType::C, "1<r=n-1", "m+1,...,m+n-1,m+n+1,m+n+2", "2m+2n+3", "2(m+n)"},
    {IsoBundle::D2RStar, RootType::C, "3<r=n", "m+1,...,m+2n,m+2n+3", "", ""},
    {IsoBundle::D2RStar, RootType::C, "3=r=n", "m+1,m+2,m+3,m+5,m+6,m+9", "", ""},
    {IsoBundle::D2RStar, RootType::C, "2=r=n", "m+1,m+4,m+7", "", ""},

    {IsoBundle::Wedge2RStar, RootType::D, "2<r<n-1", "m+1,...,m+n+(n-r)", "2(m+n)", ""},
    {IsoBundle::Wedge2RStar, RootType::D, "r>=n-1,n>4", "m+1,...,m+2n-2,m+2n", "", ""},
    {IsoBundle::Wedge2RStar, RootType::D, "r=2,n>=4", "m+2,...,m+2n-2", "2(m+n)", ""},
    {IsoBundle::Wedge2RStar, RootType::D, "r=1,n>=4", "m+2,m+4,...,m+2n-2,m+2n", "", ""},
    {IsoBundle::Wedge2RStar, RootType::B, "2<r<n", "m+1,...,m+n+(n-r)+2", "2(m+n+1)", ""},
    {IsoBundle::Wedge2RStar, RootType::B, "2=r<n", "m+2,...,m+2n", "2(m+n+1)", ""},
    {IsoBundle::Wedge2RStar, RootType::B, "2<r=n", "m+1,...,m+n-2,m+n,m+n+2", "2(m+n+1)", "2(m+n-1)"},
    {IsoBundle::Wedge2RStar, RootType::B, "r=2,n=2", "m+2,m+4", "2(m+3)", ""},
    {IsoBundle::Wedge2RStar, RootType::B, "r=1", "m+2,m+4,...,m+2n,m+2n+2", "", ""},

    {IsoBundle::RStarTensorQuot, RootType::C, "2<r<n-1", "m+1,...,m+n+(n-r),m+n+(n-r)+2", "2m+2n+3", ""},
    {IsoBundle::RStarTensorQuot, RootType::C, "2<r=n-1", "m+1,...,m+n,m+n+2", "2(m+n+1)", ""},
    {IsoBundle::RStarTensorQuot, RootType::C, "2=r<n-1", "m+1,m+3,...,m+2n-2,m+2n", "2m+2n+3", ""},
    {IsoBundle::RStarTensorQuot, RootType::C, "r=2,n=3", "m+1,m+3,m+5", "2(m+4)", "2(m+2)"},
    {IsoBundle::RStarTensorQuot, RootType::D, "2<r<n-1", "m+1,...,m+n+(n-r)-1,m+n+(n-r)+1", "2(m+n)", ""},
    {IsoBundle::RStarTensorQuot, RootType::D, "r=2,n>=4", "m+1,m+3,...,m+2n-3,m+2n-1", "2(m+n)", ""},
    {IsoBundle::RStarTensorQuot, RootType::D, "r=1,n>=4", "m+2,m+4,...,m+2n-2,m+2n", "", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "2<r<n-1", "m+1,...,m+n+(n-r)+1,m+n+(n-r)+3", "2(m+n+1)", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "2<r=n-1", "m+1,...,m+n+2,m+n+4", "2(m+n+1)", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "2<r=n", "m+1,...,m+n-1,m+n+1", "2m+2n", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "2=r<n-1", "m+1,m+3,...,m+2n-1,m+2n+1", "2(m+n+1)", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "r=2,n=3", "m+1,m+3,m+5,m+7", "2(m+4)", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "r=2,n=2", "m+1,m+3", "2(m+2)", ""},
    {IsoBundle::RStarTensorQuot, RootType::B, "r=1", "m+2,m+4,...,m+2n,m+2n+2", "", ""},
}};

}  // namespace bottcalc

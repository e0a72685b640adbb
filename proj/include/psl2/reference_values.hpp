#pragma once

// Published coefficient tables: subgroups of PSL2(Z) of index n (OEIS A005133)
// and their conjugacy classes (OEIS A121350), n = 1..50, plus the n = 500
// terms of both sequences.

#include <array>
#include <string_view>

namespace psl2::reference {

inline constexpr std::array<std::string_view, 50> kPointed = {
    "1", "1", "4", "8", "5",
    "22", "42", "40", "120", "265",
    "286", "764", "1729", "2198", "5168",
    "12144", "17034", "37702", "88958", "136584",
    "288270", "682572", "1118996", "2306464", "5428800",
    "9409517", "19103988", "44701696", "80904113", "163344502",
    "379249288", "711598944", "1434840718", "3308997062", "6391673638",
    "12921383032", "29611074174", "58602591708", "119001063028", "271331133136",
    "547872065136", "1119204224666", "2541384297716", "5219606253184", "10733985041978",
    "24300914061436", "50635071045768", "104875736986272", "236934212877684", "499877970985660",
};

inline constexpr std::array<std::string_view, 50> kUnpointed = {
    "1", "1", "2", "2", "1",
    "8", "6", "7", "14", "27",
    "26", "80", "133", "170", "348",
    "765", "1002", "2176", "4682", "6931",
    "13740", "31085", "48652", "96682", "217152",
    "362779", "707590", "1597130", "2789797", "5449439",
    "12233848", "22245655", "43480188", "97330468", "182619250",
    "358968639", "800299302", "1542254973", "3051310056", "6783358130",
    "13362733296", "26648120027", "59101960412", "118628268978", "238533003938",
    "528281671324", "1077341937144", "2184915316390", "4835392099548", "9997568771074",
};

inline constexpr std::string_view kPointed500 =
    "1294303674858906965011124037821491406320074584066698189240496552375813024329852359831955472258935736"
    "6876908109523752033404538556383747753998058245421284841877100725389812298261906049050179891685415479424";

inline constexpr std::string_view kUnpointed500 =
    "2588607349717813930022248075642982812640149168133396378480993104751626048659704719663910944517873718"
    "1623554538110006541902664972705606635231877517074961914945962875124238857108849306258234323621889976";

// Size 1..9 census of connected trivalent diagrams.
inline constexpr std::array<unsigned, 9> kTrivalentClasses = {1, 1, 2, 2, 1, 8, 6, 7, 14};
inline constexpr std::array<unsigned, 9> kTrivalentPointed = {1, 1, 4, 8, 5, 22, 42, 40, 120};

} // namespace psl2::reference

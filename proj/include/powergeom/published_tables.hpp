#pragma once

// Trigonometric-polynomial tables for the real, imaginary and complex flow
// surfaces, kept as their LaTeX source (layout markup included) so each
// entry can be diffed against the typeset original. Unbraced multi-digit
// exponents ("c_2^10") are left as typeset; the reader reports them.

#include <array>
#include <string_view>

namespace powergeom::published {

struct table_source {
  std::string_view name;
  std::string_view latex;
};

inline constexpr std::array tables{
    table_source{"n^R_{11}",
                 R"tex(-6 c_1^4 c_2+6 s_1 c_2^2 s_2 c_1^3 -c_2^3+6 c_1^4 c_2^3 \\ && -2 s_1 s_2 )tex"
                 R"tex(c_1^3 +3 c_1^2 c_2-c_1^2 c_2^3)tex"},
    table_source{"n^R_{12}",
                 R"tex(6 s_1 c_2 s_2 c_1-3 c_1^2 +7 c_1^2 c_2^2 -3 c_2^2)tex"},
    table_source{"n^R_{22}",
                 R"tex(-c_1^3 c_2^2-c_1^3-2 s_1 c_2^3 s_2 +6 c_2^3 s_1 s_2 c_1^2+6 c_1^3 c_2^4 )tex"
                 R"tex(\\ && -6 c_1 c_2^4+3 c_1 c_2^2)tex"},
    table_source{"r^R_{11}",
                 R"tex(-c_1^6-15 c_1^2 c_2^4+42 c_1^4 c_2^4 -27 c_1^4 c_2^6+15 c_1^6 c_2^2-27 )tex"
                 R"tex(c_1^6 c_2^4 \\&& +15 c_1^2 c_2^6 +6 s_1 c_2 s_2 c_1^5 +20 s_1 c_2^3 s_2 )tex"
                 R"tex(c_1^3 -15 c_1^4 c_2^2 \\&& +6 s_1 c_2^5 s_2 c_1-c_2^6 +13 c_1^6 c_2^6 )tex"
                 R"tex(-20 s_1 c_2^3 s_2 c_1^5 \\&& -20 s_1 c_2^5 s_2 c_1^3 +14 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2)tex"},
    table_source{"r^R_{12}",
                 R"tex(-c_1^6-15 c_1^2 c_2^4+42 c_1^4 c_2^4 -27 c_1^4 c_2^6 +15 c_1^6 c_2^2-27 )tex"
                 R"tex(c_1^6 c_2^4 \\&& +15 c_1^2 c_2^6 +6 s_1 c_2 s_2 c_1^5 +20 s_1 c_2^3 s_2 )tex"
                 R"tex(c_1^3 -15 c_1^4 c_2^2 \\&& +6 s_1 c_2^5 s_2 c_1-c_2^6 +13 c_1^6 c_2^6-20 )tex"
                 R"tex(s_1 c_2^3 s_2 c_1^5 \\&& -20 s_1 c_2^5 s_2 c_1^3 +14 c_1^5 c_2^5 s_1 s_2)tex"},
    table_source{"r^R_{22}",
                 R"tex(-c_1^6-15 c_1^2 c_2^4+42 c_1^4 c_2^4 -27 c_1^4 c_2^6+15 c_1^6 c_2^2-27 )tex"
                 R"tex(c_1^6 c_2^4 \\&& +15 c_1^2 c_2^6+6 s_1 c_2 s_2 c_1^5 +20 s_1 c_2^3 s_2 )tex"
                 R"tex(c_1^3 -15 c_1^4 c_2^2 \\&& +6 s_1 c_2^5 s_2 c_1-c_2^6+13 c_1^6 c_2^6-20 )tex"
                 R"tex(s_1 c_2^3 s_2 c_1^5 \\&&-20 s_1 c_2^5 s_2 c_1^3 +14 c_1^5 c_2^5 s_1 s_2)tex"},
    table_source{"n^R_g",
                 R"tex(12 s_1 s_2 c_1^4 c_2^4-4 c_1^3 c_2^3 +4 c_1^3 c_2-c_1^5 c_2 -c_1 c_2^5 )tex"
                 R"tex(\\&& +4 c_1 c_2^3 -c_1^4 s_1 s_2 -c_1^4 s_1 s_2 c_2^2 -c_2^4 s_1 s_2 )tex"
                 R"tex(c_1^2 \\&& -c_2^4 s_1 s_2 -7 c_1^3 c_2^5 -6 c_2^2 c_1^2 s_1 s_2 -7 c_1^5 )tex"
                 R"tex(c_2^3 \\&& +12 c_1^5 c_2^5)tex"},
    table_source{"r^R_g",
                 R"tex(-210 c_1^4 c_2^6-210 c_1^6 c_2^4 +910 c_1^6 c_2^6 -c_1^{10} -c_2^{10} )tex"
                 R"tex(+121 c_2^{10} c_1^{10} \\&& +122 c_2^9 c_1^9 s_1 s_2 +252 c_1^5 c_2^5 )tex"
                 R"tex(s_1 s_2 -584 s_1 c_2^7 s_2 c_1^5 +332 s_1 c_2^9 s_2 c_1^5 \\&& +808 s_1 )tex"
                 R"tex(c_2^7 s_2 c_1^7 +120 s_1 c_2^3 s_2 c_1^7 -120 c_2^3 c_1^9 s_1 s_2 +10 )tex"
                 R"tex(s_1 s_2 c_2 c_1^9 \\&& +45 c_2^{10} c_1^2 -250 c_2^{10} c_1^4 +490 )tex"
                 R"tex(c_2^{10} c_1^6 -405 c_2^10 c_1^8 +45 c_2^2 c_1^{10} \\&& -120 s_1 c_2^9 )tex"
                 R"tex(s_2 c_1^3+10 s_1 c_2^9 s_2 c_1 -584 s_1 c_2^5 s_2 c_1^7 -344 s_1 c_2^9 )tex"
                 R"tex(s_2 c_1^7 \\&& -344 s_1 c_2^7 s_2 c_1^9 +332 c_2^5 c_1^9 s_1 s_2+120 s_1 )tex"
                 R"tex(c_2^7 s_2 c_1^3 -250 c_2^4 c_1^{10} \\&& +460 c_2^4 c_1^8-45 c_1^2 c_2^8 )tex"
                 R"tex(+490 c_2^6 c_1^{10}-1190 c_2^8 c_1^6 +1180 c_2^8 c_1^8 \\&& -405 c_2^8 )tex"
                 R"tex(c_1^10 -1190 c_2^6 c_1^8-45 c_2^2 c_1^8 +460 c_2^8 c_1^4)tex"},
    table_source{"n^R_R",
                 R"tex(-42 c_1^4 c_2^6-42 c_1^6 c_2^4+444 c_1^6 c_2^6 +3 c_1^{10}+3 c_2^{10} )tex"
                 R"tex(+702 c_2^{10} c_1^{10} \\&& +702 c_2^9 c_1^9 s_1 s_2 +84 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2 -280 s_1 c_2^7 s_2 c_1^5 +356 s_1 c_2^9 s_2 c_1^5 \\&& +1080 s_1 )tex"
                 R"tex(c_2^7 s_2 c_1^7 -24 s_1 c_2^3 s_2 c_1^7 +24 c_2^3 c_1^9 s_1 s_2 -18 s_1 )tex"
                 R"tex(s_2 c_2 c_1^9 \\&& -38 c_2^{10} c_1^2-70 c_2^{10} c_1^4 +752 c_2^{10} )tex"
                 R"tex(c_1^6 -1349 c_2^{10} c_1^8-38 c_2^2 c_1^10 \\&& +24 s_1 c_2^9 s_2 c_1^3 )tex"
                 R"tex(-18 s_1 c_2^9 s_2 c_1 -280 s_1 c_2^5 s_2 c_1^7 -1000 s_1 c_2^9 s_2 c_1^7 )tex"
                 R"tex(\\&& -1000 s_1 c_2^7 s_2 c_1^9 +356 c_2^5 c_1^9 s_1 s_2 -24 s_1 c_2^7 )tex"
                 R"tex(s_2 c_1^3 -70 c_2^4 c_1^{10} \\&& +72 c_2^4 c_1^8 +39 c_1^2 c_2^8 +752 )tex"
                 R"tex(c_2^6 c_1^10-1082 c_2^8 c_1^6 +2288 c_2^8 c_1^8 \\&& -1349 c_2^8 )tex"
                 R"tex(c_1^{10}-1082 c_2^6 c_1^8 +39 c_2^2 c_1^8 +72 c_2^8 c_1^4)tex"},
    table_source{"r^R_R",
                 R"tex(-c_1^6+6 s_1 c_2 s_2 c_1^5+20 s_1 c_2^3 s_2 c_1^3 +6 s_1 c_2^5 s_2 c_1+8 )tex"
                 R"tex(s_1 c_2^3 s_2 c_1^5 \\&& +8 s_1 c_2^5 s_2 c_1^3-15 c_1^2 c_2^4+6 c_1^4 )tex"
                 R"tex(c_2^4 +53 c_1^4 c_2^6+4 c_1^6 c_2^2+53 c_1^6 c_2^4 \\&& +4 c_1^2 c_2^6 )tex"
                 R"tex(-15 c_1^4 c_2^2-48 c_1^6 c_2^6 +c_1^8+c_2^8 -70 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2-c_2^6 \\&& -12 s_1 c_2^7 s_2 c_1^5 +72 s_1 c_2^7 s_2 c_1^7 -12 s_1 )tex"
                 R"tex(c_2^3 s_2 c_1^7 -12 s_1 c_2^5 s_2 c_1^7 \\&& -12 s_1 c_2^7 s_2 c_1^3 -11 )tex"
                 R"tex(c_2^4 c_1^8+2 c_1^2 c_2^8 -48 c_2^8 c_1^6 +72 c_2^8 c_1^8 \\&& -48 c_2^6 )tex"
                 R"tex(c_1^8 +2 c_2^2 c_1^8 -11 c_2^8 c_1^4)tex"},
    table_source{"n^I_{11}",
                 R"tex(-5 c_2^3 c_1^2 s_2-s_1 c_1^3 +8 c_2^2 s_1 c_1^3 -4 c_2 s_2 c_1^4 +3 c_2 )tex"
                 R"tex(s_2 c_1^2 \\&& -3 c_2^2 s_1 c_1 +8 c_1^4 s_2 c_2^3-7 s_1 c_1^3 c_2^4 )tex"
                 R"tex(+s_2 c_2^3 +c_2^4 s_1 c_1)tex"},
    table_source{"n^I_{12}",
                 R"tex(c_2^3 s_1+3 c_1^2 s_1 c_2-c_1^3 s_2 -7 c_2^3 c_1^2 s_1+ 7c_2^2 s_2 c_1^3 )tex"
                 R"tex(-3 c_2^2 s_2 c_1)tex"},
    table_source{"n^I_{22}",
                 R"tex(-8 c_2^3 c_1^2 s_2-s_1 c_1^3 +5 c_2^2 s_1 c_1^3 -c_2 s_2 c_1^4 +3 c_2 )tex"
                 R"tex(s_2 c_1^2 \\&& -3 c_2^2 s_1 c_1 +7 c_1^4 s_2 c_2^3-8 s_1 c_1^3 c_2^4 )tex"
                 R"tex(+s_2 c_2^3 +4 c_2^4 s_1 c_1)tex"},
    table_source{"r^I_{11}",
                 R"tex(13 c_1^6 c_2^6+14 c_1^5 c_2^5 s_1 s_2 +6 s_1 c_2^5 s_2 c_1+15 c_1^2 )tex"
                 R"tex(c_2^6 \\&& +6 s_1 c_2 s_2 c_1^5-20 c_1^3 c_2^5 s_1 s_2 -20 c_1^5 c_2^3 )tex"
                 R"tex(s_1 s_2-15 c_1^2 c_2^4 \\&& +20 c_1^3 c_2^3 s_1 s_2-27 c_1^4 c_2^6 +15 )tex"
                 R"tex(c_1^6 c_2^2-27 c_1^6 c_2^4+42 c_1^4 c_2^4 \\&& -15 c_1^4 c_2^2 )tex"
                 R"tex(-c_2^6-c_1^6)tex"},
    table_source{"r^I_{12}",
                 R"tex(13 c_1^6 c_2^6+14 c_1^5 c_2^5 s_1 s_2 +6 s_1 c_2^5 s_2 c_1+15 c_1^2 )tex"
                 R"tex(c_2^6 \\&& +6 s_1 c_2 s_2 c_1^5-20 c_1^3 c_2^5 s_1 s_2 -20 c_1^5 c_2^3 )tex"
                 R"tex(s_1 s_2-15 c_1^2 c_2^4 \\&& +20 c_1^3 c_2^3 s_1 s_2-27 c_1^4 c_2^6 +15 )tex"
                 R"tex(c_1^6 c_2^2-27 c_1^6 c_2^4+42 c_1^4 c_2^4 \\&& -15 c_1^4 )tex"
                 R"tex(c_2^2-c_2^6-c_1^6)tex"},
    table_source{"r^I_{22}",
                 R"tex(13 c_1^6 c_2^6+14 c_1^5 c_2^5 s_1 s_2 +6 s_1 c_2^5 s_2 c_1+15 c_1^2 )tex"
                 R"tex(c_2^6 \\&& +6 s_1 c_2 s_2 c_1^5-20 c_1^3 c_2^5 s_1 s_2 -20 c_1^5 c_2^3 )tex"
                 R"tex(s_1 s_2-15 c_1^2 c_2^4 \\&& +20 c_1^3 c_2^3 s_1 s_2-27 c_1^4 c_2^6 +15 )tex"
                 R"tex(c_1^6 c_2^2-27 c_1^6 c_2^4+42 c_1^4 c_2^4 \\&& -15 c_1^4 )tex"
                 R"tex(c_2^2-c_2^6-c_1^6)tex"},
    table_source{"n^I_g",
                 R"tex(10 c_1^6 c_2^2+37 c_1^5 c_2^5 s_1 s_2 -3 c_1^4 c_2^2-3 c_1^2 c_2^4-39 )tex"
                 R"tex(c_1^6 c_2^4 +28 c_1^4 c_2^4 \\&& +10 c_1^2 c_2^6-39 c_1^4 c_2^6 +3 s_1 )tex"
                 R"tex(c_2^5 s_2 c_1-20 c_1^3 c_2^5 s_1 s_2 -20 c_1^5 c_2^3 s_1 s_2 \\&& +3 s_1 )tex"
                 R"tex(c_2 s_2 c_1^5 +2 c_1^3 c_2^3 s_1 s_2+38 c_1^6 c_2^6 -c_2^6-c_1^6)tex"},
    table_source{"r^I_g",
                 R"tex(252 c_1^5 c_2^5 s_1 s_2+910 c_1^6 c_2^6 -210 c_1^4 c_2^6 -210 c_1^6 )tex"
                 R"tex(c_2^4 \\&& -c_1^{10}-c_2^{10} +122 c_1^9 c_2^9 s_1 s_2 +121 c_1^{10} )tex"
                 R"tex(c_2^{10} +10 s_1 c_2^9 s_2 c_1 \\&& -120 s_1 c_2^9 s_2 c_1^3 -120 c_1^9 )tex"
                 R"tex(c_2^3 s_1 s_2 +332 c_1^5 c_2^9 s_1 s_2 +332 c_1^9 c_2^5 s_1 s_2 \\&& )tex"
                 R"tex(-344 c_1^9 c_2^7 s_1 s_2 -344 c_1^7 c_2^9 s_1 s_2 +490 c_1^6 c_2^{10} )tex"
                 R"tex(-405 c_1^8 c_2^{10}-250 c_1^{10} c_2^4 \\&& +490 c_1^{10} c_2^6 +1180 )tex"
                 R"tex(c_2^8 c_1^8-1190 c_2^6 c_1^8 -1190 c_2^8 c_1^6 -250 c_1^4 c_2^{10}-405 )tex"
                 R"tex(c_1^{10} c_2^8 \\&& -45 c_1^8 c_2^2 -45 c_2^8 c_1^2+460 c_1^8 c_2^4 +460 )tex"
                 R"tex(c_2^8 c_1^4 +45 c_1^{10} c_2^2+45 c_2^{10} c_1^2 \\&& +120 c_1^7 c_2^3 )tex"
                 R"tex(s_1 s_2 -584 c_1^7 c_2^5 s_1 s_2 +120 c_1^3 c_2^7 s_1 s_2 -584 c_1^5 )tex"
                 R"tex(c_2^7 s_1 s_2 \\&& +10 s_1 s_2 c_1^9 c_2 +808 c_1^7 c_2^7 s_1 s_2)tex"},
    table_source{"n^{(1)I}_R",
                 R"tex(-297 s_1 c_1^5 c_2^8+2235 s_1 c_1^5 c_2^{10} +4770 s_1 c_1^7 c_2^8-15596 )tex"
                 R"tex(s_1 c_1^7 c_2^{10} \\&& -19538 s_1 c_1^9 c_2^8+45624 s_1 c_1^9 c_2^{10} )tex"
                 R"tex(-7857 s_1 c_1^{11} c_2^6-3954 s_1 c_1^5 c_2^{12} \\&& +19890 s_1 c_1^7 )tex"
                 R"tex(c_2^{12}-49482 s_1 c_1^9 c_2^{12} -947 s_2 c_1^4 c_2^11+59571 s_1 )tex"
                 R"tex(c_1^{11} c_2^{12} \\&& +121 s_2 c_1^{10} c_2^3-2235 s_2 c_1^{10} c_2^5 )tex"
                 R"tex(+30498 s_1 c_1^{11} c_2^8-3653 s_2 c_1^6 c_2^9 \\&& -11 s_2 c_1^{14} )tex"
                 R"tex(c_2+15596 s_2 c_1^{10} c_2^7 -45624 s_2 c_1^{10} c_2^9+60771 s_2 )tex"
                 R"tex(c_1^{10} c_2^{11} \\&& -355 s_2 c_1^{12} c_2^3+3954 s_2 c_1^{12} c_2^5 )tex"
                 R"tex(-19890 s_2 c_1^{12} c_2^7+49482 s_2 c_1^{12} c_2^9 \\&& -59571 s_2 )tex"
                 R"tex(c_1^{12} c_2^{11}-60771 s_1 c_1^{11} c_2^{10} +19538 s_2 c_1^8 )tex"
                 R"tex(c_2^9+7857 s_2 c_1^6 c_2^{11} \\&& -30498 s_2 c_1^8 c_2^{11}+2080 s_1 )tex"
                 R"tex(c_1^5 c_2^{14} -8902 s_1 c_1^7 c_2^{14}+20139 s_1 c_1^9 c_2^{14} \\&& )tex"
                 R"tex(-22407 s_1 c_1^{11} c_2^{14}+8902 s_2 c_1^{14} c_2^7 -20139 s_2 c_1^{14} )tex"
                 R"tex(c_2^9+22407 s_2 c_1^{14} c_2^{11})tex"},
    table_source{"n^{(2)I}_R",
                 R"tex(11 s_1 c_1 c_2^{14}-2080 s_2 c_1^{14} c_2^5 -243 s_1 c_1^3 c_2^{14}-9450 )tex"
                 R"tex(s_2 c_2^{13}c_1^{14} \\&& +61 s_1 c_1^{13} c_2^2-812 s_1 c_1^{13} c_2^4 )tex"
                 R"tex(+5044 s_1 c_1^{13} c_2^6-16769 s_1 c_1^{13} c_2^8 \\&& +30165 s_1 )tex"
                 R"tex(c_1^{13} c_2^{10}-27138 s_1 c_1^{13} c_2^{12} +9450 s_1 c_1^{13} )tex"
                 R"tex(c_2^{14} \\&& -5044 s_2 c_1^6 c_2^{13}-61 s_2 c_1^2 c_2^{13} +220 s_2 )tex"
                 R"tex(c_1^4 c_2^9-121 s_1 c_1^3 c_2^{10} \\&& +947 s_1 c_1^{11} c_2^4+355 s_1 )tex"
                 R"tex(c_1^3 c_2^{12} -45 s_1 c_1^{11} c_2^2+27138 c_1^{12} c_2^{13} s_2 \\&& )tex"
                 R"tex(+330 s_2 c_1^6 c_2^7+3653 s_1 c_1^9 c_2^6 -220 s_1 c_1^9 c_2^4-10 s_1 )tex"
                 R"tex(c_1 c_2^{12} \\&& +297 s_2 c_1^8 c_2^5-330 s_1 c_1^7 c_2^6 +45 s_2 c_1^2 )tex"
                 R"tex(c_2^{11}+10 s_2 c_1^{12} c_2 \\&& -4770 s_2 c_1^8 c_2^7-30165 s_2 )tex"
                 R"tex(c_1^{10} c_2^{13}+812 s_2 c_1^4 c_2^{13}-s_1 c_1^{13} \\&& +16769 s_2 )tex"
                 R"tex(c_1^8 c_2^{13} +s_2 c_2^{13}+243 s_2 c_1^{14} c_2^3)tex"},
    table_source{"r^I_R",
                 R"tex(42 c_1^6 c_2^6+c_2^{12}+c_1^{12}+5344 c_1^9 c_2^9 s_1 s_2 +10447 )tex"
                 R"tex(c_1^{10} c_2^{10}+4383 c_1^{12} c_2^8 \\&& +100 c_1^3 c_2^{11} s_1 s_2 )tex"
                 R"tex(-708 c_1^5 c_2^{11} s_1 s_2 +100 c_1^{11} c_2^3 s_1 s_2 +2528 c_1^7 )tex"
                 R"tex(c_2^{11} s_1 s_2 \\&& -4406 c_1^9 c_2^{11} s_1 s_2 +2528 c_1^{11} c_2^7 )tex"
                 R"tex(s_1 s_2 -4406 c_1^{11} c_2^9 s_1 s_2 +2812 c_1^{11} c_2^{11} s_1 s_2 )tex"
                 R"tex(\\&& -6 c_1 c_2^{11} s_1 s_2 -708 c_1^{11} c_2^5 s_1 s_2 -6 c_1^11 c_2 )tex"
                 R"tex(s_1 s_2 -29 c_1^2 c_2^{12}-29 c_1^{12} c_2^2 \\&& +4383 c_1^8 c_2^{12} )tex"
                 R"tex(-5813 c_1^{10} c_2^{12}+2813 c_1^{12} c_2^{12} -1598 c_1^6 c_2^{12} )tex"
                 R"tex(-1598 c_1^{12} c_2^6 \\&& -5813 c_1^{12} c_2^{10} +307 c_1^4 )tex"
                 R"tex(c_2^{12}+307 c_1^{12} c_2^4 -22 s_1 c_2^9 s_2 c_1^3 -22 c_1^9 c_2^3 s_1 )tex"
                 R"tex(s_2 \\&& +368 c_1^5 c_2^9 s_1 s_2 +368 c_1^9 c_2^5 s_1 s_2 -2132 c_1^9 )tex"
                 R"tex(c_2^7 s_1 s_2 -2132 c_1^7 c_2^9 s_1 s_2 \\&& +1826 c_1^6 c_2^{10} -6442 )tex"
                 R"tex(c_1^8 c_2^{10}-257 c_1^{10} c_2^4 +1826 c_1^{10} c_2^6 +2822 c_2^8 c_1^8 )tex"
                 R"tex(\\&& -482 c_2^6 c_1^8 -482 c_2^8 c_1^6 -257 c_1^4 c_2^{10}-6442 c_1^{10} )tex"
                 R"tex(c_2^8 +27 c_1^8 c_2^4 +27 c_2^8 c_1^4 \\&& +15 c_1^{10} c_2^2 +15 )tex"
                 R"tex(c_2^{10} c_1^2 -36 c_1^7 c_2^5 s_1 s_2 -36 c_1^5 c_2^7 s_1 s_2 +472 )tex"
                 R"tex(c_1^7 c_2^7 s_1 s_2)tex"},
    table_source{"n^C_{11}",
                 R"tex(-c_2^3 s_2+s_1 c_1^3+3 c_1^2 c_2^2 -2 c_2 s_1 s_2 c_1^3+5 c_1^2 c_2^3 )tex"
                 R"tex(s_2 \\&& +4 c_1^4 c_2 s_2-c_1 c_2^4 s_1 +6 c_1^3 c_2^3 s_1 s_2-3 c_1^2 )tex"
                 R"tex(c_2 s_2 \\&& +7 c_1^3 c_2^4 s_1-8 c_1^4 c_2^3 s_2 +3 c_1 c_2^2 s_1+6 )tex"
                 R"tex(c_1^4 c_2^4 \\&& -6 c_1^4c_2^2 -8 c_1^3 c_2^2 s_1 -c_2^4 c_1^2-c_2^4)tex"},
    table_source{"n^C_{12}",
                 R"tex(6 c_1^2 c_2^2 s_1 s_2-3 c_1^3 c_2 -3 c_1^2 s_1 c_2+c_1^3 s_2-3 c_1 c_2^3 )tex"
                 R"tex(\\&& +7 c_1^3 c_2^3+7 s_1 c_2^3 c_1^2 -7 s_2 c_1^3 c_2^2-c_2^3 s_1 +3 )tex"
                 R"tex(c_2^2 s_2 c_1)tex"},
    table_source{"n^C_{22}",
                 R"tex(-c_2^3 s_2+s_1 c_1^3 +3 c_1^2 c_2^2 +8 c_1^2 c_2^3 s_2+c_1^4 c_2 s_2 )tex"
                 R"tex(\\&& -4 c_1 c_2^4 s_1+6 c_1^3 c_2^3 s_1 s_2 -3 c_1^2 c_2 s_2+8 c_1^3 )tex"
                 R"tex(c_2^4 s_1 \\&& -7 c_1^4 c_2^3 s_2+3 c_1 c_2^2 s_1 +6 c_1^4 )tex"
                 R"tex(c_2^4-c_1^4-c_1^4 c_2^2 \\&& -5 c_1^3 c_2^2 s_1-6 c_2^4 c_1^2 -2 c_2^3 )tex"
                 R"tex(s_1 s_2 c_1)tex"},
    table_source{"r^C_{11}",
                 R"tex(-20 c_2^3 c_1^5 s_1 s_2-c_2^6 -c_1^6 -27 c_2^4 c_1^6+14 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2 \\&& +13 c_1^6 c_2^6+6 s_1 c_2^5 s_2 c_1 +15 c_1^2 c_2^6-27 c_1^4 )tex"
                 R"tex(c_2^6 \\&& -20 c_1^3 c_2^5 s_1 s_2+6 c_2 c_1^5 s_1 s_2 +20 c_1^3 c_2^3 )tex"
                 R"tex(s_1 s_2+42 c_1^4 c_2^4 \\&& +15 c_1^6 c_2^2-15 c_1^4 c_2^2 -15 c_2^4 )tex"
                 R"tex(c_1^2)tex"},
    table_source{"r^C_{12}",
                 R"tex(-20 c_2^3 c_1^5 s_1 s_2-c_2^6 -c_1^6 -27 c_2^4 c_1^6+14 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2 \\&& +13 c_1^6 c_2^6+6 s_1 c_2^5 s_2 c_1 +15 c_1^2 c_2^6-27 c_1^4 )tex"
                 R"tex(c_2^6 \\&& -20 c_1^3 c_2^5 s_1 s_2+6 c_2 c_1^5 s_1 s_2 \\&& +20 c_1^3 )tex"
                 R"tex(c_2^3 s_1 s_2+42 c_1^4 c_2^4 +15 c_1^6 c_2^2-15 c_1^4 c_2^2 -15 c_2^4 )tex"
                 R"tex(c_1^2)tex"},
    table_source{"r^C_{22}",
                 R"tex(-20 c_2^3 c_1^5 s_1 s_2-c_2^6 -c_1^6 -27 c_2^4 c_1^6+14 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2 \\&& +13 c_1^6 c_2^6+6 s_1 c_2^5 s_2 c_1 +15 c_1^2 c_2^6-27 c_1^4 )tex"
                 R"tex(c_2^6 \\&& -20 c_1^3 c_2^5 s_1 s_2+6 c_2 c_1^5 s_1 s_2 +20 c_1^3 c_2^3 )tex"
                 R"tex(s_1 s_2 \\&& +42 c_1^4 c_2^4 +15 c_1^6 c_2^2-15 c_1^4 c_2^2-15 c_2^4 )tex"
                 R"tex(c_1^2)tex"},
    table_source{"n^C_g",
                 R"tex(-25 c_2^4 c_1^6-18 c_2^3 c_1^5 s_1 s_2 -c_2^6-c_1^6+13 c_1^5 c_2^5 s_1 )tex"
                 R"tex(s_2 \\&& -c_1^5 s_1+s_2 c_2^5+5 s_1 c_2^5 s_2 c_1 -18 c_1^3 c_2^5 s_1 )tex"
                 R"tex(s_2+5 c_2 c_1^5 s_1 s_2 \\&& +12 c_1^2 c_2^6-25 c_1^4 c_2^6+12 c_1^6 )tex"
                 R"tex(c_2^2 +5 c_1^4 c_2 s_2-5 c_1 c_2^4 s_1 \\&& -10 c_1^3 c_2^2 s_1-11 c_1^4 )tex"
                 R"tex(c_2^2 -11 c_2^4 c_1^2+10 c_1^2 c_2^3 s_2 -60 s_1 c_2^6 c_1^5 \\&& +60 )tex"
                 R"tex(s_2 c_2^5 c_1^6 -20 c_1^6 c_2^3 s_2 +20 c_1^3 c_2^6 s_1 -2 c_1^5 c_2^2 )tex"
                 R"tex(s_1-47 s_2 c_2^5 c_1^4 \\&& +2 s_2 c_2^5 c_1^2+47 c_1^5 c_2^4 s_1 +14 )tex"
                 R"tex(c_1^3 c_2^3 s_1 s_2+14 c_1^6 c_2^6 +36 c_1^4 c_2^4 \\&& -10 c_1^4 c_2^3 )tex"
                 R"tex(s_2 +10 c_1^3 c_2^4 s_1)tex"},
    table_source{"r^C_g",
                 R"tex(-210 c_2^4 c_1^6+252 c_1^5 c_2^5 s_1 s_2 +460 c_1^4 c_2^8-1190 c_1^6 )tex"
                 R"tex(c_2^8+460 c_1^8 c_2^4 \\&& -1190 c_1^8 c_2^6-45 c_1^2 c_2^8-45 c_1^8 )tex"
                 R"tex(c_2^2 +45 c_1^2 c_2^{10}-250 c_1^4 c_2^{10}+490 c_1^6 c_2^{10} \\&& -405 )tex"
                 R"tex(c_1^8 c_2^{10}-405 c_1^{10} c_2^8+490 c_1^{10} c_2^6 +45 c_1^{10} )tex"
                 R"tex(c_2^2-250 c_1^{10} c_2^4 \\&& -584 c_1^5 c_2^7 s_1 s_2 +120 c_1^7 c_2^3 )tex"
                 R"tex(s_1 s_2 +120 c_1^3 c_2^7 s_1 s_2 -584 c_1^7 c_2^5 s_1 s_2 \\&& +10 s_1 )tex"
                 R"tex(s_2 c_1^9 c_2 +10 s_1 c_2^9 s_2 c_1 -344 c_1^7 c_2^9 s_1 s_2 -120 c_1^9 )tex"
                 R"tex(c_2^3 s_1 s_2 \\&& +332 c_1^9 c_2^5 s_1 s_2 -344 c_1^9 c_2^7 s_1 s_2 )tex"
                 R"tex(-120 s_1 c_2^9 s_2 c_1^3 +332 s_1 c_2^9 s_2 c_1^5 \\&& +1180 c_1^8 c_2^8 )tex"
                 R"tex(-210 c_1^4 c_2^6-c_1^{10} +808 c_1^7 c_2^7 s_1 s_2 +910 c_1^6 c_2^6 \\&& )tex"
                 R"tex(-c_2^{10}+121 c_1^{10} c_2^{10} +122 c_1^9 c_2^9 s_1 s_2)tex"},
    table_source{"n^{(1)C}_R",
                 R"tex(-495 c_1^4 c_2^8-234 c_1^6 c_2^8 -495 c_1^8 c_2^4 -234 c_1^8 c_2^6 -66 )tex"
                 R"tex(c_1^2 c_2^{10}+162 c_1^4 c_2^{10} \\&& +13566 c_1^6 c_2^{10}-91736 c_1^8 )tex"
                 R"tex(c_2^{10} -91736 c_1^{10} c_2^8 +13566 c_1^{10} c_2^6 -66 c_1^{10} c_2^2 )tex"
                 R"tex(\\&& +162 c_1^{10} c_2^4 +792 c_1^5 c_2^7 s_1 s_2+792 c_1^7 c_2^5 s_1 )tex"
                 R"tex(s_2 -21064 c_1^7 c_2^9 s_1 s_2+220 c_1^9 c_2^3 s_1 s_2 \\&& +492 c_1^9 )tex"
                 R"tex(c_2^5 s_1 s_2-21064 c_1^9 c_2^7 s_1 s_2 +220 s_1 c_2^9 s_2 c_1^3+492 s_1 )tex"
                 R"tex(c_2^9 s_2 c_1^5 \\&& +25506 c_1^8 c_2^8-c_1^{12}-c_2^{12}+2 c_2^{14} )tex"
                 R"tex(+1152 c_1^7 c_2^7 s_1 s_2 +2 c_1^{14} -924 c_1^6 c_2^6 \\&& +175360 )tex"
                 R"tex(c_1^{11} c_2^{11} s_1 s_2 +233534 c_1^{10} c_2^{10} +85296 c_1^9 c_2^9 )tex"
                 R"tex(s_1 s_2 +186 s_1 c_1^{13} c_2^2 \\&&-1960 s_1 c_1^{13} c_2^4 +5512 s_1 )tex"
                 R"tex(c_1^{13} c_2^6 +3214 s_1 c_1^{13} c_2^8 -34758 s_1 c_1^{13} c_2^{10} )tex"
                 R"tex(\\&& +49084 s_1 c_1^{13} c_2^{12} -2054 s_2 c_1^4 c_2^{11} +10386 s_2 )tex"
                 R"tex(c_1^6 c_2^{11} -9732 s_2 c_1^8 c_2^{11} \\&& -33034 s_2 c_1^{10} )tex"
                 R"tex(c_2^{11} +72538 s_2 c_1^{12} c_2^{11} -38450 s_2 c_1^{14} c_2^{11} )tex"
                 R"tex(+14436 s_2 c_1^8 c_2^9)tex"},
    table_source{"n^{(2)C}_R",
                 R"tex(90 s_2 c_1^2 c_2^{11} -5796 s_2 c_1^8 c_2^7 +594 s_2 c_1^8 c_2^5 -3878 )tex"
                 R"tex(s_2 c_1^{10} c_2^5 \\&& +14424 s_2 c_1^{10} c_2^7 -6944 s_2 c_1^{10} )tex"
                 R"tex(c_2^9 +6996 s_2 c_1^{12} c_2^5 -12292 s_2 c_1^{12} c_2^7 \\&& -20348 s_2 )tex"
                 R"tex(c_1^{12} c_2^9 -3600 s_2 c_1^{14} c_2^5 +2428 s_2 c_1^{14} c_2^7 +18194 )tex"
                 R"tex(s_2 c_1^{14} c_2^9 \\&& -14436 s_1 c_1^9 c_2^8 +6944 s_1 c_1^9 c_2^{10} )tex"
                 R"tex(+20348 s_1 c_1^9 c_2^{12} -18194 s_1 c_1^9 c_2^{14} \\&& -10386 s_1 )tex"
                 R"tex(c_1^{11} c_2^6 +9732 s_1 c_1^{11} c_2^8 +33034 s_1 c_1^{11} c_2^{10} )tex"
                 R"tex(-72538 s_1 c_1^{11} c_2^{12} \\&& +38450 s_1 c_1^{11} c_2^{14} -5074 s_2 )tex"
                 R"tex(c_1^6 c_2^9 -902 s_2 c_1^{12} c_2^3 +694 s_2 c_1^{14} c_2^3 \\&& +5074 )tex"
                 R"tex(s_1 c_1^9 c_2^6 +440 s_2 c_1^4 c_2^9 -30 s_2 c_1^{14} c_2 +2054 s_1 )tex"
                 R"tex(c_1^{11} c_2^4 \\&& +5796 s_1 c_1^7 c_2^8 -14424 s_1 c_1^7 c_2^{10} )tex"
                 R"tex(-2428 s_1 c_1^7 c_2^{14} -440 s_1 c_1^9 c_2^4 \\&& -660 s_1 c_1^7 c_2^6 )tex"
                 R"tex(+12292 s_1 c_1^7 c_2^{12} +902 s_1 c_1^3 c_2^{12} -6996 s_1 c_1^5 )tex"
                 R"tex(c_2^{12})tex"},
    table_source{"n^{(3)C}_R",
                 R"tex(+3878 s_1 c_1^5 c_2^{10} +3600 s_1 c_1^5 c_2^{14} -694 s_1 c_1^3 )tex"
                 R"tex(c_2^{14} +242 s_2 c_1^{10} c_2^3 \\&& -594 s_1 c_1^5 c_2^8 +660 s_2 )tex"
                 R"tex(c_1^6 c_2^7 -242 s_1 c_1^3 c_2^{10} -20 s_1 c_1 c_2^{12} \\&& +30 s_1 )tex"
                 R"tex(c_1 c_2^{14} +20 s_2 c_1^{12} c_2 -90 s_1 c_1^{11} c_2^2 -49084 s_2 )tex"
                 R"tex(c_1^{12} c_2^{13} \\&& +34758 s_2 c_1^{10} c_2^{13} +1960 s_2 c_1^4 )tex"
                 R"tex(c_2^{13} -3214 s_2 c_1^8 c_2^{13} -5512 s_2 c_1^6 c_2^{13} \\&& -186 s_2 )tex"
                 R"tex(c_1^2 c_2^{13} -32 s_1 s_2 c_1^3 c_2^{11} -288 s_1 s_2 c_1^3 c_2^{13} )tex"
                 R"tex(-5720 s_1 s_2 c_1^5 c_2^{11} \\&& +5288 s_1 s_2 c_1^5 c_2^{13} +44672 )tex"
                 R"tex(s_1 s_2 c_1^7 c_2^{11} -28816 s_1 s_2 c_1^7 c_2^{13} \\&& -132516 s_1 )tex"
                 R"tex(s_2 c_1^9 c_2^{11} +72372 s_1 s_2 c_1^9 c_2^{13} -132516 s_1 s_2 )tex"
                 R"tex(c_1^{11} c_2^9 \\&& -84592 s_1 s_2 c_1^{11} c_2^13 +72372 s_1 s_2 )tex"
                 R"tex(c_1^{13} c_2^9 -84592 s_1 s_2 c_1^{13} c_2^{11} \\&& -28816 s_1 s_2 )tex"
                 R"tex(c_1^{13} c_2^7 -32 s_1 s_2 c_1^{11} c_2^3 -288 s_1 s_2 c_1^{13} c_2^3)tex"},
    table_source{"n^{(4)C}_R",
                 R"tex(-5720 s_1 s_2 c_1^{11} c_2^5 +44672 s_1 s_2 c_1^{11} c_2^7 +5288 s_1 s_2 )tex"
                 R"tex(c_1^{13} c_2^5 \\&& +12 s_1 s_2 c_1^{11} c_2 -12 s_1 s_2 c_1^{13} c_2 )tex"
                 R"tex(-12 s_1 s_2 c_1 c_2^{13} +12 s_1 s_2 c_1 c_2^{11} \\&& +14504 c_1^6 )tex"
                 R"tex(c_2^{14} -1552 c_1^4 c_2^{14}-26392 c_2^{12} c_1^6 +122669 c_2^{12} )tex"
                 R"tex(c_1^8 \\&& -264682 c_2^{12} c_1^{10} +269177 c_2^{12} c_1^{12} -102868 )tex"
                 R"tex(c_2^{12} c_1^{14} -26392 c_1^{12} c_2^6 \\&& +122669 c_1^{12} c_2^8 )tex"
                 R"tex(-264682 c_1^{12} c_2^{10}-1552 c_1^{14} c_2^4 +14504 c_1^{14} c_2^6 \\&& )tex"
                 R"tex(-56702 c_1^{14} c_2^8 +110054 c_1^{14} c_2^{10}-2 s_1 c_1^{13} +6 )tex"
                 R"tex(c_1^{14} c_2^2+6 c_1^2 c_2^{14} \\&& +70 c_1^2 c_2^{12} +1771 c_1^{12} )tex"
                 R"tex(c_2^4 +70 c_1^{12} c_2^2+1771 c_1^4 c_2^{12} +2 s_2 c_2^{13} \\&& )tex"
                 R"tex(-102868 c_1^{12} c_2^{14} -56702 c_1^8 c_2^{14} +110054 c_1^{10} )tex"
                 R"tex(c_2^{14} +36560 s_1 s_2 c_1^{13} c_2^{13} \\&& -21276 s_1 c_1^{13} )tex"
                 R"tex(c_2^{14} +21276 s_2 c_1^{14} c_2^{13} +36556 c_1^{14} c_2^{14})tex"},
    table_source{"r^{(1)C}_R",
                 R"tex(-210 c_2^4 c_1^6+252 c_1^5 c_2^5 s_1 s_2 -68 c_1^4 c_2^8+3660 c_1^6 )tex"
                 R"tex(c_2^8 \\&& -68 c_1^8 c_2^4 +3660 c_1^8 c_2^6 -45 c_1^2 c_2^8-45 c_1^8 )tex"
                 R"tex(c_2^2 \\&& -31 c_1^2 c_2^{10}+991 c_1^4 c_2^{10} -5074 c_1^6 c_2^{10} )tex"
                 R"tex(+5257 c_1^8 c_2^{10} \\&& +5257 c_1^{10} c_2^8-5074 c_1^{10} c_2^6 -31 )tex"
                 R"tex(c_1^{10} c_2^2+991 c_1^{10} c_2^4 \\&& +172 c_1^5 c_2^7 s_1 s_2 +120 )tex"
                 R"tex(c_1^7 c_2^3 s_1 s_2 +120 c_1^3 c_2^7 s_1 s_2 +172 c_1^7 c_2^5 s_1 s_2 )tex"
                 R"tex(\\&& +10 s_1 s_2 c_1^9 c_2 +10 s_1 c_2^9 s_2 c_1 +5916 c_1^7 c_2^9 s_1 )tex"
                 R"tex(s_2 +138 c_1^9 c_2^3 s_1 s_2 \\&& -2132 c_1^9 c_2^5 s_1 s_2 +5916 c_1^9 )tex"
                 R"tex(c_2^7 s_1 s_2 +138 s_1 c_2^9 s_2 c_1^3 -2132 s_1 c_2^9 s_2 c_1^5 \\&& )tex"
                 R"tex(-10970 c_1^8 c_2^8 -210 c_1^4 c_2^6 -672 s_1 c_2^6 c_1^5 +672 s_2 c_2^5 )tex"
                 R"tex(c_1^6 -c_1^{10} \\&& -4112 c_1^7 c_2^7 s_1 s_2+70 c_1^6 c_2^6 )tex"
                 R"tex(-c_2^{10}+6836 c_1^{11} c_2^{11} s_1 s_2+8265 c_1^{10} c_2^{10})tex"},
    table_source{"r^{(2)C}_R",
                 R"tex(-310 c_1^9 c_2^9 s_1 s_2-292 s_2 c_1^4 c_2^{11} +2840 s_2 c_1^6 )tex"
                 R"tex(c_2^{11}-7846 s_2 c_1^8 c_2^{11} \\&& +8556 s_2 c_1^{10} c_2^{11}-3240 )tex"
                 R"tex(s_2 c_1^{12} c_2^{11} +8876 s_2 c_1^8 c_2^9-20 s_2 c_1^2 c_2^{11} \\&& )tex"
                 R"tex(-220 s_2 c_1^8 c_2^7-1596 s_2 c_1^8 c_2^5 -120 s_2 c_1^{10} c_2^5+6560 )tex"
                 R"tex(s_2 c_1^{10} c_2^7 \\&& -14604 s_2 c_1^{10} c_2^9+1116 s_2 c_1^{12} )tex"
                 R"tex(c_2^5 -4784 s_2 c_1^{12} c_2^7+6942 s_2 c_1^{12} c_2^9 \\&& -8876 s_1 )tex"
                 R"tex(c_1^9 c_2^8+14604 s_1 c_1^9 c_2^{10} -6942 s_1 c_1^9 c_2^{12}-2840 s_1 )tex"
                 R"tex(c_1^{11} c_2^6 \\&& +7846 s_1 c_1^{11} c_2^8-8556 s_1 c_1^{11} c_2^{10} )tex"
                 R"tex(+3240 s_1 c_1^{11} c_2^{12}-688 s_2 c_1^6 c_2^9 \\&& -24 s_2 c_1^{12} )tex"
                 R"tex(c_2^3+688 s_1 c_1^9 c_2^6 -618 s_2 c_1^4 c_2^9+292 s_1 c_1^{11} c_2^4 )tex"
                 R"tex(\\&& +220 s_1 c_1^7 c_2^8-6560 s_1 c_1^7 c_2^{10} +618 s_1 c_1^9 )tex"
                 R"tex(c_2^4+2080 s_1 c_1^7 c_2^6 \\&& +4784 s_1 c_1^7 c_2^{12}+24 s_1 c_1^3 )tex"
                 R"tex(c_2^{12} -1116 s_1 c_1^5 c_2^{12}+120 s_1 c_1^5 c_2^{10})tex"},
    table_source{"r^{(3)C}_R",
                 R"tex(-284 s_2 c_1^{10} c_2^3+1596 s_1 c_1^5 c_2^8 -2080 s_2 c_1^6 c_2^7+284 )tex"
                 R"tex(s_1 c_1^3 c_2^{10} \\&& +10 s_1 c_1 c_2^{12}-10 s_2 c_1^{12} c_2 +20 s_1 )tex"
                 R"tex(c_1^{11} c_2^2-258 c_1^3 c_2^8 s_1 \\&& -20 c_1 c_2^{10} s_1+258 c_1^8 )tex"
                 R"tex(c_2^3 s_2 -492 c_1^7 c_2^4 s_1+492 c_1^4 c_2^7 s_2 \\&& -196 s_1 s_2 )tex"
                 R"tex(c_1^3 c_2^{11}+748 s_1 s_2 c_1^5 c_2^{11} +768 s_1 s_2 c_1^7 )tex"
                 R"tex(c_2^{11}-6886 s_1 s_2 c_1^9 c_2^{11} \\&& -6886 s_1 s_2 c_1^{11} )tex"
                 R"tex(c_2^9-196 s_1 s_2 c_1^{11} c_2^3 +748 s_1 s_2 c_1^{11} c_2^5+768 s_1 s_2 )tex"
                 R"tex(c_1^{11} c_2^7 \\&& +10 s_1 s_2 c_1^{11} c_2+10 s_1 s_2 c_1 c_2^{11} )tex"
                 R"tex(+794 c_2^{12} c_1^6+3366 c_2^{12} c_1^8 \\&& -10303 c_2^{12} c_1^{10} )tex"
                 R"tex(+6835 c_2^{12} c_1^{12} +794 c_1^{12} c_2^6+3366 c_1^{12} c_2^8 \\&& )tex"
                 R"tex(-10303 c_1^{12} c_2^{10}+53 c_1^2 c_2^{12} -489 c_1^{12} c_2^4 +53 )tex"
                 R"tex(c_1^{12} c_2^2 -489 c_1^4 c_2^{12} \\&& +2 c_2^{11} s_2 -2 c_1^{11} )tex"
                 R"tex(s_1+92 c_1^2 c_2^9 s_2 +20 c_1^{10} c_2 s_2-92 c_1^9 c_2^2 s_1)tex"},
};

}  // namespace powergeom::published

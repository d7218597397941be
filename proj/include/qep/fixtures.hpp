#pragma once

// Bundled PD codes.  The L8a20 pair carries the LinkInfo-style orientation
// split: the {1;0} code reverses the axis component of the {0;0} one.

#include <map>
#include <string>

#include "qep/diagram.hpp"

namespace qep::fixtures {

inline constexpr const char* kUnknot = "unknots=1";
inline constexpr const char* kUnlink2 = "unknots=2";
inline constexpr const char* kUnlink3 = "unknots=3";

// knot-atlas codes
inline constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr const char* kFigureEight =
    "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline constexpr const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";

// 8-crossing 3-component link: an axis clasped twice by each of two
// satellites, the clasps interleaved around the axis
inline constexpr const char* kL8a20_00 =
    "X[12,1,9,8]sign:+ X[7,10,8,9]sign:+ X[16,6,13,7]sign:- "
    "X[5,13,6,14]sign:- X[10,5,11,4]sign:+ X[3,12,4,11]sign:+ "
    "X[14,2,15,3]sign:- X[1,15,2,16]sign:-";
inline constexpr const char* kL8a20_10 =
    "X[12,8,9,1]sign:- X[1,9,2,10]sign:- X[16,3,13,2]sign:+ "
    "X[3,14,4,13]sign:+ X[10,4,11,5]sign:- X[5,11,6,12]sign:- "
    "X[14,7,15,6]sign:+ X[7,16,8,15]sign:+";

// 3-component link with the Jones polynomial of the 3-unlink: a doubled
// Hopf clasp whose cable returns run through trivializing tangles (a
// 16-crossing representative)
inline constexpr const char* kThistlethwaite =
    "X[22,8,9,1]sign:- X[9,23,10,32]sign:+ X[15,1,16,2]sign:- "
    "X[16,32,17,31]sign:+ X[30,18,31,17]sign:+ X[29,11,30,10]sign:+ "
    "X[2,18,3,19]sign:- X[3,11,4,12]sign:- X[19,12,20,13]sign:- "
    "X[13,20,14,21]sign:- X[21,14,22,15]sign:- X[28,4,29,5]sign:- "
    "X[5,27,6,28]sign:- X[26,24,27,23]sign:+ X[24,7,25,6]sign:+ "
    "X[7,26,8,25]sign:+";

inline std::map<std::string, std::string> bundled_corpus() {
  return {
      {"unknot", kUnknot},
      {"unlink2", kUnlink2},
      {"unlink3", kUnlink3},
      {"trefoil", kTrefoil},
      {"figure_eight", kFigureEight},
      {"hopf", kHopf},
      {"l8a20_00", kL8a20_00},
      {"l8a20_10", kL8a20_10},
      {"thistlethwaite", kThistlethwaite},
  };
}

}  // namespace qep::fixtures

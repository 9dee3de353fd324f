#pragma once

// Reference RPM roots for lambda = 1 with walls at x = 0 and x = 1, and the
// exact eigenvalues beneath them. cells[n][D] is the printed value of eps_n
// at determinant dimension D.

#include <map>
#include <string>

namespace rpm::testing {

using Cells = std::map<int, std::map<int, std::string>>;

inline const Cells& bounded_cells() {
  static const Cells c = {
      {0,
       {{2, "9"},
        {3, "10.2"},
        {4, "10.36"},
        {5, "10.3679"},
        {6, "10.36848"},
        {7, "10.368506"},
        {8, "10.36850713"},
        {9, "10.368507161"},
        {10, "10.368507161827"},
        {11, "10.3685071618362"},
        {12, "10.368507161836336"},
        {13, "10.3685071618363371"},
        {14, "10.368507161836337126"},
        {15, "10.368507161836337127"},
        {16, "10.368507161836337127"}}},
      {1,
       {{5, "35"},
        {6, "39.3"},
        {7, "39.89"},
        {8, "39.97"},
        {9, "39.978"},
        {10, "39.9787"},
        {11, "39.97874"},
        {12, "39.9787445"},
        {13, "39.97874477"},
        {14, "39.9787447892"},
        {15, "39.97874478986"},
        {16, "39.978744789882"}}},
      {2,
       {{8, "81"},
        {9, "88"},
        {10, "89.1"},
        {11, "89.3"},
        {12, "89.321"},
        {13, "89.3259"},
        {14, "89.3266"},
        {15, "89.326628"},
        {16, "89.3266340"}}},
      {3, {{11, "144"}, {12, "156"}, {13, "157.9"}, {14, "158.31"}, {15, "158.39"}, {16, "158.411"}}},
  };
  return c;
}

inline const Cells& unbounded_cells() {
  static const Cells c = {
      {0,
       {{4, "2.29"},
        {5, "2.337"},
        {6, "2.33808"},
        {7, "2.3381070"},
        {8, "2.33810740"},
        {9, "2.3381074103"},
        {10, "2.338107410456"},
        {11, "2.33810741045970"},
        {12, "2.338107410459766"},
        {13, "2.33810741045976702"},
        {14, "2.3381074104597670382"},
        {15, "2.3381074104597670385"},
        {16, "2.3381074104597670385"}}},
      {1,
       {{6, "4.0"},
        {7, "4.083"},
        {8, "4.0878"},
        {9, "4.087945"},
        {10, "4.0879493"},
        {11, "4.087949441"},
        {12, "4.0879494440"},
        {13, "4.087949444129"},
        {14, "4.08794944413093"},
        {15, "4.087949444130970"},
        {16, "4.08794944413097060"}}},
      {2,
       {{8, "5.1"},
        {9, "5.50"},
        {10, "5.520"},
        {11, "5.52054"},
        {12, "5.5205591"},
        {13, "5.52055981"},
        {14, "5.520559827"},
        {15, "5.52055982808"},
        {16, "5.5205598280950"}}},
      {3,
       {{11, "6.74"},
        {12, "6.785"},
        {13, "6.7866"},
        {14, "6.786705"},
        {15, "6.7867080"},
        {16, "6.786708086"}}},
  };
  return c;
}

inline const std::map<int, std::string>& bounded_exact() {
  static const std::map<int, std::string> e = {{0, "10.368507161836337127"},
                                               {1, "39.978744789883354325"},
                                               {2, "89.326634542478746080"},
                                               {3, "158.41378981431004871"}};
  return e;
}

inline const std::map<int, std::string>& unbounded_exact() {
  static const std::map<int, std::string> e = {{0, "2.3381074104597670385"},
                                               {1, "4.0879494441309706166"},
                                               {2, "5.5205598280955510591"},
                                               {3, "6.7867080900717589988"}};
  return e;
}

}  // namespace rpm::testing

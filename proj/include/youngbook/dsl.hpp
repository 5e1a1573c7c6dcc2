#pragma once

// Text forms for pages and books:
//
//   shifted:3,2,1          skew:6,5,5,4/3,1        trunc:6,5,5,4\3,1
//   nrs:n=2,r=1,s=2[,minus]                        ars:a=1,2;r=1;s=2[,minus]
//   book:[shifted:6,2,1;shifted:5,4,1]
//
// A bare page string is accepted wherever a book is expected (1-page book).

#include "youngbook/shapes.hpp"

#include <string>
#include <vector>

namespace youngbook {

PageShape parse_page(const std::string& text);
BookShape parse_book(const std::string& text);

/// Comma-separated nonnegative integers ("" is the empty list).
std::vector<int> parse_int_list(const std::string& text);

}  // namespace youngbook

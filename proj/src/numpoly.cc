// Copyright 2026 The sbhilb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sbhilb/numpoly.h"

#include <cctype>
#include <charconv>
#include <map>
#include <string>
#include <vector>

namespace sbhilb {
namespace {

void check_magnitude(std::int64_t value, const char* what) {
  if (value > kMaxCoefficient || value < -kMaxCoefficient) {
    throw DomainError(std::string(what) + " exceeds the supported magnitude 2^30");
  }
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::int64_t parse_integer(std::string_view token, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed coefficient '" + std::string(token) +
                     "' in polynomial '" + std::string(whole) + "'");
  }
  return value;
}

// Coefficient list, highest degree first.
NumPoly parse_coefficient_list(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token = trim(text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start));
    coeffs.push_back(parse_integer(token, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  while (coeffs.size() > 2) {
    if (coeffs.front() != 0) {
      throw ParseError("polynomial '" + std::string(text) + "' has degree " +
                       std::to_string(coeffs.size() - 1) +
                       "; only linear polynomials rt+s are supported");
    }
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() == 1) return NumPoly{0, coeffs[0]};
  return NumPoly{coeffs[0], coeffs[1]};
}

NumPoly parse_expression(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty polynomial");

  std::map<std::int64_t, std::int64_t> by_degree;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t next = compact.find_first_of("+-", pos + 1);
    std::string term = compact.substr(pos, next == std::string::npos ? std::string::npos
                                                                      : next - pos);
    pos = next == std::string::npos ? compact.size() : next;

    std::size_t t_at = term.find('t');
    if (t_at == std::string::npos) {
      by_degree[0] += parse_integer(term, text);
      continue;
    }
    std::string coeff = term.substr(0, t_at);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    std::int64_t c = 1;
    if (coeff == "-") {
      c = -1;
    } else if (!coeff.empty() && coeff != "+") {
      c = parse_integer(coeff, text);
    }
    std::int64_t degree = 1;
    std::string rest = term.substr(t_at + 1);
    if (!rest.empty()) {
      if (rest.front() != '^') {
        throw ParseError("malformed term '" + term + "' in polynomial '" +
                         std::string(text) + "'");
      }
      degree = parse_integer(rest.substr(1), text);
      if (degree < 0) throw ParseError("negative exponent in '" + std::string(text) + "'");
    }
    by_degree[degree] += c;
  }
  for (const auto& [degree, coeff] : by_degree) {
    if (degree >= 2 && coeff != 0) {
      throw ParseError("polynomial '" + std::string(text) + "' has degree " +
                       std::to_string(degree) +
                       "; only linear polynomials rt+s are supported");
    }
  }
  return NumPoly{by_degree[1], by_degree[0]};
}

}  // namespace

BinomialDecomposition decompose(const NumPoly& poly) {
  if (poly.r < 0) {
    throw DomainError("leading coefficient r = " + std::to_string(poly.r) +
                      " is negative; not the polynomial of a curve-and-points scheme");
  }
  check_magnitude(poly.r, "r");
  check_magnitude(poly.s, "s");
  const std::int64_t m1 = poly.r;
  const std::int64_t m0 = poly.s + (m1 * m1 - m1) / 2;
  return BinomialDecomposition{m0, m1};
}

bool hilb_nonempty(const NumPoly& poly) {
  const BinomialDecomposition dec = decompose(poly);
  return dec.m0 >= dec.m1 && dec.m1 >= 0;
}

std::int64_t h1_upper_bound(std::int64_t r, std::int64_t h0) {
  if (r < 1) {
    throw DomainError("genus bound needs r >= 1, got r = " + std::to_string(r));
  }
  check_magnitude(r, "r");
  return (r * r - 3 * r) / 2 + h0;
}

NumPoly parse_numpoly(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return parse_coefficient_list(text);
  return parse_expression(text);
}

std::string to_string(const NumPoly& poly) {
  std::string out;
  if (poly.r != 0) {
    out = poly.r == 1 ? "t" : poly.r == -1 ? "-t" : std::to_string(poly.r) + "t";
    if (poly.s > 0) out += "+" + std::to_string(poly.s);
    if (poly.s < 0) out += std::to_string(poly.s);
    return out;
  }
  return std::to_string(poly.s);
}

}  // namespace sbhilb

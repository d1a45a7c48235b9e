#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hpc/analysis.hpp"
#include "hpc/bounds.hpp"
#include "hpc/catalog.hpp"
#include "hpc/coloring.hpp"

namespace hpc {

// Header line: HPC1 <n> <q> <k> DENSE [RLE] | RECIPE
//   DENSE      q^n bytes, one color (1..k) per vertex in rank order
//   DENSE RLE  records of (u32 little-endian run length, u8 color)
//   RECIPE     pretty-printed recipe text
enum class FileMode { dense, dense_rle, recipe };

void write_coloring(std::ostream& os, const Coloring& c, FileMode mode, std::uint64_t budget = default_budget());
Coloring read_coloring(std::istream& is);

void save_coloring(const std::filesystem::path& path, const Coloring& c, FileMode mode,
                   std::uint64_t budget = default_budget());
Coloring load_coloring(const std::filesystem::path& path);

// "[[a,b],[c,d]]" or plain whitespace-separated entries (k^2 of them).
QuotientMatrix parse_matrix(const std::string& text);

std::string format_matrix(const QuotientMatrix& m);
std::string format_verify(const VerifyReport& rep);
std::string format_lower_bound(int q, int b, int c, const LowerBound& lb);
std::string format_distribution(const WeightDistribution& w);

}  // namespace hpc

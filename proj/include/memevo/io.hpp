#ifndef MEMEVO_IO_HPP_
#define MEMEVO_IO_HPP_

#include <filesystem>
#include <string>

#include "memevo/eval.hpp"
#include "memevo/tensor_lab.hpp"

namespace memevo {

// Whitespace/comma-delimited numeric table, one sample per row.
Matrix load_view(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m);

// One integer class id per line.
LabelVector load_labels(const std::filesystem::path& path);
void save_labels(const std::filesystem::path& path, const LabelVector& labels);

}  // namespace memevo

#endif  // MEMEVO_IO_HPP_

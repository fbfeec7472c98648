#include "shifteq/essential.hpp"

namespace shifteq {

EssentialMatrix::EssentialMatrix(IntMatrix a) : a_(std::move(a)) {
  if (!a_.is_square())
    throw DimensionError("essential matrix must be square, got " +
                         std::to_string(a_.rows()) + "x" +
                         std::to_string(a_.cols()));
  if (!a_.is_nonnegative())
    throw DomainError("essential matrix must be entrywise nonnegative");
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    bool emits = false;
    for (std::size_t j = 0; j < a_.cols() && !emits; ++j)
      if (a_(i, j) != 0) emits = true;
    if (!emits)
      throw DomainError("row " + std::to_string(i) +
                        " is zero: vertex emits no edge");
  }
}

}  // namespace shifteq

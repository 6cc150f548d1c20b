#ifndef PARWREATH_IO_HPP_
#define PARWREATH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "parwreath/enumeration.hpp"
#include "parwreath/structures.hpp"
#include "parwreath/wreath.hpp"

namespace parwreath {

// Space-separated image table, e.g. "1 0 2".
std::string format_transformation(const Transformation& f);
Transformation parse_transformation(std::string_view text, uint32_t degree);

// Wreath text form: "[imgs of s_0 | ... | imgs of s_{m-1}] ; imgs of r".
std::string format_wreath(const WreathElement& w);
WreathElement parse_wreath(std::string_view text);

// Element-set file format: first non-comment line is the degree, every
// further non-empty line is one element, either k space-separated images
// or a wreath form (flattened on read). '#' starts a comment;
// "# label: <name>" names the next element.
GeneratorSet read_element_set(std::istream& in);
GeneratorSet read_element_set_file(const std::string& path);

// With a partition attached, each partition-preserving element also gets
// a "# wreath:" comment carrying its wreath form.
void write_element_set(std::ostream& out, const GeneratorSet& set,
                       const UniformPartition* partition = nullptr);
void write_element_set_file(const std::string& path, const GeneratorSet& set,
                            const UniformPartition* partition = nullptr);

// Same format, elements only.
void write_element_set(std::ostream& out, const ClosureResult& c);
void write_element_set_file(const std::string& path, const ClosureResult& c);

// One line per element: "<element-index>: g_i g_j ...".
void write_word_log(std::ostream& out, const ClosureResult& c);
void write_word_log_file(const std::string& path, const ClosureResult& c);

}  // namespace parwreath

#endif  // PARWREATH_IO_HPP_

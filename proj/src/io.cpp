#include "parwreath/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace parwreath {

namespace {

std::string trim(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) {
    return "";
  }
  size_t end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<uint32_t> parse_numbers(std::string_view text,
                                    const std::string& where) {
  std::vector<uint32_t> values;
  std::istringstream stream{std::string(text)};
  std::string token;
  while (stream >> token) {
    try {
      size_t used = 0;
      const unsigned long value = std::stoul(token, &used);
      if (used != token.size() || value > 0xFFFFFFFFul) {
        throw std::invalid_argument("bad");
      }
      values.push_back(static_cast<uint32_t>(value));
    } catch (const std::exception&) {
      fail(ErrorCode::parse_error, where + ": bad integer '" + token + "'");
    }
  }
  return values;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  }
  return out;
}

void append_images(std::string& text, const Transformation& f) {
  for (uint32_t p = 0; p < f.degree(); ++p) {
    if (p > 0) {
      text += ' ';
    }
    text += std::to_string(f[p]);
  }
}

}  // namespace

std::string format_transformation(const Transformation& f) {
  std::string text;
  append_images(text, f);
  return text;
}

Transformation parse_transformation(std::string_view text, uint32_t degree) {
  const std::vector<uint32_t> values = parse_numbers(text, "element");
  if (values.size() != degree) {
    fail(ErrorCode::parse_error,
         "expected " + std::to_string(degree) + " images, got " +
             std::to_string(values.size()));
  }
  std::vector<uint8_t> images(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= degree) {
      fail(ErrorCode::parse_error,
           "image " + std::to_string(values[i]) + " out of range");
    }
    images[i] = static_cast<uint8_t>(values[i]);
  }
  return Transformation(std::move(images));
}

std::string format_wreath(const WreathElement& w) {
  std::string text = "[";
  for (uint32_t z = 0; z < w.top_degree(); ++z) {
    if (z > 0) {
      text += " | ";
    }
    append_images(text, w.bottom(z));
  }
  text += "] ; ";
  append_images(text, w.top());
  return text;
}

WreathElement parse_wreath(std::string_view text) {
  const std::string line = trim(text);
  if (line.empty() || line.front() != '[') {
    fail(ErrorCode::parse_error, "wreath form must start with '['");
  }
  const size_t close = line.find(']');
  if (close == std::string::npos) {
    fail(ErrorCode::parse_error, "wreath form is missing ']'");
  }
  const size_t semi = line.find(';', close);
  if (semi == std::string::npos) {
    fail(ErrorCode::parse_error, "wreath form is missing '; top'");
  }

  std::vector<std::vector<uint32_t>> bottoms_values;
  std::string_view inner(line.data() + 1, close - 1);
  size_t at = 0;
  while (true) {
    const size_t bar = inner.find('|', at);
    const std::string_view part =
        inner.substr(at, bar == std::string_view::npos ? bar : bar - at);
    bottoms_values.push_back(parse_numbers(part, "wreath bottom"));
    if (bar == std::string_view::npos) {
      break;
    }
    at = bar + 1;
  }
  const std::vector<uint32_t> top_values =
      parse_numbers(line.substr(semi + 1), "wreath top");

  const size_t m = bottoms_values.size();
  const size_t n = bottoms_values.front().size();
  if (n == 0) {
    fail(ErrorCode::parse_error, "wreath form has an empty bottom component");
  }
  if (top_values.size() != m) {
    fail(ErrorCode::parse_error,
         "wreath top degree " + std::to_string(top_values.size()) +
             " does not match " + std::to_string(m) + " bottom components");
  }
  const auto to_transformation = [](const std::vector<uint32_t>& values,
                                    size_t degree) {
    std::vector<uint8_t> images(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
      if (values[i] >= degree) {
        fail(ErrorCode::parse_error,
             "image " + std::to_string(values[i]) + " out of range");
      }
      images[i] = static_cast<uint8_t>(values[i]);
    }
    return Transformation(std::move(images));
  };

  std::vector<Transformation> bottoms;
  bottoms.reserve(m);
  for (const auto& values : bottoms_values) {
    if (values.size() != n) {
      fail(ErrorCode::parse_error,
           "bottom components must share one degree");
    }
    bottoms.push_back(to_transformation(values, n));
  }
  return WreathElement(std::move(bottoms), to_transformation(top_values, m));
}

GeneratorSet read_element_set(std::istream& in) {
  GeneratorSet result;
  std::string line;
  size_t line_number = 0;
  bool have_degree = false;
  std::string pending_label;
  size_t unlabelled = 0;

  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    const std::string where = "line " + std::to_string(line_number);
    if (text.empty()) {
      continue;
    }
    if (text.front() == '#') {
      const std::string comment = trim(text.substr(1));
      if (comment.rfind("label:", 0) == 0) {
        pending_label = trim(comment.substr(6));
      }
      continue;
    }
    try {
      if (!have_degree) {
        const std::vector<uint32_t> values = parse_numbers(text, where);
        if (values.size() != 1 || values[0] < 1 || values[0] > max_degree) {
          fail(ErrorCode::parse_error, "expected the degree on its own line");
        }
        result.degree = values[0];
        have_degree = true;
        continue;
      }
      Transformation element =
          text.front() == '['
              ? flatten(parse_wreath(text))
              : parse_transformation(text, result.degree);
      if (element.degree() != result.degree) {
        fail(ErrorCode::parse_error,
             "element degree " + std::to_string(element.degree()) +
                 " does not match header degree " +
                 std::to_string(result.degree));
      }
      std::string label = pending_label.empty()
                              ? "g" + std::to_string(unlabelled++)
                              : pending_label;
      pending_label.clear();
      result.add(std::move(element), std::move(label));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::parse_error ||
          e.code() == ErrorCode::invalid_argument) {
        fail(ErrorCode::parse_error, where + ": " + e.what());
      }
      throw;
    }
  }
  if (!have_degree) {
    fail(ErrorCode::parse_error, "missing degree header line");
  }
  return result;
}

GeneratorSet read_element_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::io_error, "cannot open '" + path + "' for reading");
  }
  return read_element_set(in);
}

void write_element_set(std::ostream& out, const GeneratorSet& set,
                       const UniformPartition* partition) {
  out << set.degree << "\n";
  for (size_t i = 0; i < set.size(); ++i) {
    out << "# label: " << set.labels[i] << "\n";
    if (partition != nullptr) {
      try {
        out << "# wreath: " << format_wreath(unflatten(set.elements[i],
                                                       *partition))
            << "\n";
      } catch (const Error&) {
        // Not partition-preserving; plain form only.
      }
    }
    out << format_transformation(set.elements[i]) << "\n";
  }
}

void write_element_set_file(const std::string& path, const GeneratorSet& set,
                            const UniformPartition* partition) {
  auto out = open_output(path);
  write_element_set(out, set, partition);
}

void write_element_set(std::ostream& out, const ClosureResult& c) {
  out << c.degree() << "\n";
  for (uint64_t i = 0; i < c.order(); ++i) {
    const auto view = c.element_view(i);
    for (size_t p = 0; p < view.size(); ++p) {
      if (p > 0) {
        out << ' ';
      }
      out << static_cast<uint32_t>(view[p]);
    }
    out << "\n";
  }
}

void write_element_set_file(const std::string& path, const ClosureResult& c) {
  auto out = open_output(path);
  write_element_set(out, c);
}

void write_word_log(std::ostream& out, const ClosureResult& c) {
  for (uint64_t i = 0; i < c.order(); ++i) {
    out << i << ":";
    for (uint32_t g : c.word(i)) {
      out << " g" << g;
    }
    out << "\n";
  }
}

void write_word_log_file(const std::string& path, const ClosureResult& c) {
  auto out = open_output(path);
  write_word_log(out, c);
}

}  // namespace parwreath

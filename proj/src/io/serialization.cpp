#include "symplecto/io/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace symplecto::io {

using nlohmann::json;

namespace {

std::vector<int> int_vector(const json& term, const char* key, std::size_t index) {
  const auto where = "term " + std::to_string(index) + ": ";
  if (!term.contains(key)) throw std::invalid_argument(where + "missing \"" + key + "\"");
  const json& v = term.at(key);
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array() || v.empty()) {
    throw std::invalid_argument(where + "\"" + key + "\" must be a nonempty integer list");
  }
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) {
      throw std::invalid_argument(where + "\"" + key + "\" entries must be integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

trig::TrigPolynomial parse_trig_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  const json* terms = &doc;
  int q = 0;
  if (doc.is_object()) {
    if (!doc.contains("terms")) throw std::invalid_argument("object form needs a \"terms\" list");
    terms = &doc.at("terms");
    if (doc.contains("q")) q = doc.at("q").get<int>();
  }
  if (!terms->is_array()) throw std::invalid_argument("terms must be a list");

  std::vector<trig::TrigMode> modes;
  std::vector<double> coeffs;
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const json& t = (*terms)[i];
    if (!t.is_object()) throw std::invalid_argument("term " + std::to_string(i) + " is not an object");
    trig::TrigMode mode{int_vector(t, "n", i), int_vector(t, "m", i), trig::Phase::Cos};
    if (mode.n.size() != mode.m.size()) {
      throw std::invalid_argument("term " + std::to_string(i) + ": n and m differ in length");
    }
    const std::string phase = t.value("phase", "cos");
    if (phase == "sin") {
      mode.phase = trig::Phase::Sin;
    } else if (phase != "cos") {
      throw std::invalid_argument("term " + std::to_string(i) + ": phase must be cos or sin");
    }
    if (!t.contains("coeff") || !t.at("coeff").is_number()) {
      throw std::invalid_argument("term " + std::to_string(i) + ": numeric \"coeff\" required");
    }
    if (q == 0) q = mode.q();
    if (mode.q() != q) {
      throw std::invalid_argument("term " + std::to_string(i) + " has q=" +
                                  std::to_string(mode.q()) + ", expected " + std::to_string(q));
    }
    modes.push_back(std::move(mode));
    coeffs.push_back(t.at("coeff").get<double>());
  }
  trig::TrigPolynomial out(q == 0 ? 1 : q);
  for (std::size_t i = 0; i < modes.size(); ++i) out.add(std::move(modes[i]), coeffs[i]);
  return out;
}

trig::TrigPolynomial load_trig_json(const std::filesystem::path& path) {
  return parse_trig_json(read_text_file(path));
}

std::string to_trig_json(const trig::TrigPolynomial& f) {
  json terms = json::array();
  for (const auto& [mode, c] : f.terms()) {
    terms.push_back({{"n", mode.n},
                     {"m", mode.m},
                     {"phase", mode.phase == trig::Phase::Cos ? "cos" : "sin"},
                     {"coeff", c}});
  }
  return json{{"q", f.q()}, {"terms", terms}}.dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw std::logic_error("CsvWriter: row has " + std::to_string(cells.size()) +
                           " cells, header has " + std::to_string(header_.size()));
  }
  rows_.push_back(std::move(cells));
}

void CsvWriter::sort_rows() { std::sort(rows_.begin(), rows_.end()); }

std::string CsvWriter::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << content;
    if (!os) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace symplecto::io

#include "pseudofuzzy/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "pseudofuzzy/error.hpp"

namespace pseudofuzzy::io {

namespace {

constexpr int kSignificantDigits = 12;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general,
                                 kSignificantDigits);
  return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != last) {
    throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

PseudoTfn parse_ptfn(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "PTFN document must be a JSON object");

  static const std::set<std::string> kFields{"a", "b", "c", "kind"};
  for (const auto& item : doc.items()) {
    if (!kFields.contains(item.key())) throw Error(ErrorCode::Parse, "unknown field '" + item.key() + "'");
  }
  for (const auto& field : kFields) {
    if (!doc.contains(field)) throw Error(ErrorCode::Parse, "missing field '" + field + "'");
  }

  auto number = [&](const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a number");
    return v.get<double>();
  };
  const double a = number("a");
  const double b = number("b");
  const double c = number("c");

  const auto& kind_value = doc.at("kind");
  if (!kind_value.is_string()) throw Error(ErrorCode::Parse, "field 'kind' must be a string");
  const auto kind = parse_kind(kind_value.get<std::string>());
  if (!kind) {
    throw Error(ErrorCode::Parse,
                "unknown kind '" + kind_value.get<std::string>() + "' (expected dependent or independent)");
  }

  try {
    return PseudoTfn(TriangleShape(a, b, c), *kind);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid PTFN: ") + e.what());
  }
}

std::string to_json(const PseudoTfn& p) {
  const auto& s = p.shape();
  return "{\"a\":" + format_number(s.a()) + ",\"b\":" + format_number(s.b()) + ",\"c\":" + format_number(s.c()) +
         ",\"kind\":\"" + std::string(to_string(p.kind())) + "\"}";
}

void write_curve(std::ostream& out, const DiscretePseudoFuzzySet& samples) {
  out << "x,mu,lambda\n";
  for (const auto& e : samples) {
    out << format_number(e.x) << ',' << format_number(e.pair.mu()) << ',' << format_number(e.pair.lambda())
        << '\n';
  }
}

void write_cut_table(std::ostream& out, const CutTable& table) {
  out << "# kind=" << to_string(table.kind()) << '\n';
  out << "alpha,lo,hi\n";
  for (const auto& row : table.rows()) {
    out << format_number(row.alpha) << ',' << format_number(row.interval.lo()) << ','
        << format_number(row.interval.hi()) << '\n';
  }
}

DiscretePseudoFuzzySet read_curve(std::istream& in) {
  std::vector<RawTriplet> rows;
  bool seen_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != "x,mu,lambda") {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected header 'x,mu,lambda'");
      }
      seen_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    try {
      rows.push_back({parse_number(fields[0]), parse_number(fields[1]), parse_number(fields[2])});
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!seen_header) throw Error(ErrorCode::Parse, "missing header 'x,mu,lambda'");
  return validate_set(rows);
}

}  // namespace pseudofuzzy::io

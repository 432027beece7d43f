#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "underdog/errors.hpp"
#include "underdog/types.hpp"

namespace underdog::csv
{

/// A parsed row together with its 1-based line number.
struct Row
{
   std::size_t line = 0;
   std::vector<std::string> fields;
};

/// Splits one CSV line. Supports double-quoted fields with "" escapes.
inline std::vector<std::string> split_line(std::string_view line, std::size_t line_no)
{
   std::vector<std::string> out;
   std::string field;
   bool quoted = false;
   bool was_quoted = false;
   for (std::size_t k = 0; k < line.size(); ++k) {
      const char c = line[k];
      if (quoted) {
         if (c == '"') {
            if (k + 1 < line.size() && line[k + 1] == '"') {
               field.push_back('"');
               ++k;
            }
            else {
               quoted = false;
            }
         }
         else {
            field.push_back(c);
         }
      }
      else if (c == '"') {
         if (!field.empty() || was_quoted) throw ParseError(line_no, "unexpected quote");
         quoted = true;
         was_quoted = true;
      }
      else if (c == ',') {
         out.push_back(std::move(field));
         field.clear();
         was_quoted = false;
      }
      else {
         field.push_back(c);
      }
   }
   if (quoted) throw ParseError(line_no, "unterminated quote");
   out.push_back(std::move(field));
   return out;
}

/// Parses a whole document. Blank lines are skipped; a trailing '\r' is dropped.
inline std::vector<Row> parse(std::string_view text)
{
   std::vector<Row> rows;
   std::size_t line_no = 0;
   std::size_t pos = 0;
   while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!detail::trim(line).empty()) rows.push_back({line_no, split_line(line, line_no)});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
   }
   return rows;
}

inline std::string quote(std::string_view field)
{
   if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
   std::string out = "\"";
   for (char c : field) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
   }
   out.push_back('"');
   return out;
}

inline std::string join(const std::vector<std::string>& fields)
{
   std::string out;
   for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out.push_back(',');
      out += quote(fields[k]);
   }
   return out;
}

/// Shortest text that parses back to exactly `x`.
inline std::string format_exact(double x)
{
   char buf[64];
   const auto res = std::to_chars(buf, buf + sizeof buf, x);
   return std::string(buf, res.ptr);
}

/// Fixed six-decimal rendering used for every CLI output.
inline std::string format_fixed(double x, int decimals = 6)
{
   if (x == 0.0) x = 0.0; // drop negative zero
   char buf[64];
   std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
   std::string s(buf);
   if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
   return s;
}

inline std::string format_cell(const Cell& c) { return c ? format_exact(*c) : std::string("NA"); }

inline std::optional<double> parse_double(std::string_view text)
{
   const auto t = detail::trim(text);
   if (t.empty()) return std::nullopt;
   double v = 0.0;
   const auto* first = t.data();
   if (*first == '+') ++first;
   const auto res = std::from_chars(first, t.data() + t.size(), v);
   if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) return std::nullopt;
   return v;
}

inline std::optional<long long> parse_int(std::string_view text)
{
   const auto t = detail::trim(text);
   if (t.empty()) return std::nullopt;
   long long v = 0;
   const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
   if (res.ec != std::errc() || res.ptr != t.data() + t.size()) return std::nullopt;
   return v;
}

/// "NA" (any case) or empty is Missing; otherwise a finite number.
inline Cell parse_cell(std::string_view text, std::size_t line_no)
{
   const auto t = detail::trim(text);
   if (t.empty() || detail::ascii_lower(t) == "na") return std::nullopt;
   auto v = parse_double(t);
   if (!v) throw ParseError(line_no, "not a number: '" + t + "'");
   return v;
}

inline std::string read_file(const std::string& path)
{
   std::ifstream in(path, std::ios::binary);
   if (!in) throw ParseError(0, "cannot open " + path);
   std::ostringstream ss;
   ss << in.rdbuf();
   return ss.str();
}

inline void write_file(const std::string& path, std::string_view content)
{
   std::ofstream out(path, std::ios::binary);
   if (!out) throw Error(ErrorKind::Internal, "cannot write " + path);
   out << content;
}

} // namespace underdog::csv

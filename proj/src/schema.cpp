#include "rnck/schema.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rnck/errors.hpp"

namespace rnck {

namespace {

// Schema-driven enum tables always fold case; the file format has no
// policy switch.
constexpr NormalizePolicy schema_policy{.case_fold = true};

std::uint64_t width_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

// Resolves a FieldValue to the ordinal stored in the section, enforcing
// the field's range. Shared by encode and prefix_range.
std::uint64_t resolve_ordinal(const FieldSpec& field, const FieldValue& value) {
  std::uint64_t ordinal;
  if (value.kind() == FieldValue::Kind::text) {
    if (field.kind != FieldKind::enumeration || !field.enum_table) {
      throw Error(Errc::unknown_value,
                  "field \"" + field.name +
                      "\" is not an enumeration; text value unsupported");
    }
    ordinal = field.enum_table->encode(value.str());
  } else {
    ordinal = value.number();
  }
  if (field.kind == FieldKind::reserved_zero && ordinal != 0) {
    throw Error(Errc::field_overflow, "field \"" + field.name +
                                          "\" is reserved-zero but got " +
                                          std::to_string(ordinal));
  }
  if (ordinal >= field.cardinality) {
    throw Error(Errc::field_overflow,
                "value " + std::to_string(ordinal) + " out of range for field \"" +
                    field.name + "\" (cardinality " +
                    std::to_string(field.cardinality) + ")");
  }
  return ordinal;
}

void require_valid(const KeySchema& schema) {
  if (!schema.valid()) {
    std::string msg = "schema \"" + schema.name() + "\" failed validation";
    if (!schema.validation().violations.empty()) {
      msg += ": " + schema.validation().violations.front().message;
    }
    throw Error(Errc::invalid_schema, msg);
  }
}

}  // namespace

unsigned compute_width(std::uint64_t cardinality) {
  if (cardinality < 2) {
    throw Error(Errc::degenerate_field,
                "cardinality " + std::to_string(cardinality) +
                    " < 2: a one-valued field carries no information");
  }
  return static_cast<unsigned>(std::bit_width(cardinality - 1));
}

std::string_view to_string(FieldKind kind) noexcept {
  switch (kind) {
    case FieldKind::enumeration:
      return "enumeration";
    case FieldKind::unsigned_integer:
      return "unsigned-integer";
    case FieldKind::reserved_zero:
      return "reserved-zero";
  }
  return "?";
}

std::optional<FieldKind> field_kind_from(std::string_view token) noexcept {
  if (token == "enumeration") return FieldKind::enumeration;
  if (token == "unsigned-integer") return FieldKind::unsigned_integer;
  if (token == "reserved-zero") return FieldKind::reserved_zero;
  return std::nullopt;
}

FieldSpec make_field(std::string name, FieldKind kind,
                     std::uint64_t cardinality) {
  FieldSpec spec;
  spec.name = std::move(name);
  spec.kind = kind;
  spec.cardinality = cardinality;
  spec.width = cardinality >= 2
                   ? static_cast<unsigned>(std::bit_width(cardinality - 1))
                   : 0;
  return spec;
}

FieldSpec make_enum_field(std::string name, EnumTable table) {
  FieldSpec spec = make_field(std::move(name), FieldKind::enumeration,
                              table.size());
  spec.enum_table = std::move(table);
  return spec;
}

KeySchema::KeySchema(std::string name, std::vector<FieldSpec> fields)
    : name_(std::move(name)), fields_(std::move(fields)) {
  shifts_.reserve(fields_.size());
  unsigned cumulative = 0;
  for (const auto& f : fields_) {
    cumulative += f.width;
    shifts_.push_back(64 - static_cast<int>(cumulative));
  }
  total_bits_ = cumulative;
  report_ = validate_schema(*this);
}

ValidationReport validate_schema(const KeySchema& schema) {
  ValidationReport report;
  auto flag = [&report](const std::string& field, std::string message) {
    report.violations.push_back({field, std::move(message)});
  };

  for (const auto& f : schema.fields()) {
    if (f.cardinality < 2) {
      flag(f.name, "cardinality " + std::to_string(f.cardinality) +
                       " < 2 (degenerate field)");
      continue;
    }
    const unsigned expected =
        static_cast<unsigned>(std::bit_width(f.cardinality - 1));
    if (f.width != expected) {
      flag(f.name, "width " + std::to_string(f.width) +
                       " does not match cardinality " +
                       std::to_string(f.cardinality) + " (expected " +
                       std::to_string(expected) + ")");
    }
    if (f.width < 1 || f.width > 63) {
      flag(f.name, "width " + std::to_string(f.width) + " outside 1..63");
    }
    if (f.kind == FieldKind::enumeration) {
      if (!f.enum_table) {
        flag(f.name, "enumeration field has no value table");
        continue;
      }
      const auto entries = f.enum_table->entries();
      if (entries.size() != f.cardinality) {
        flag(f.name, "enumeration table has " +
                         std::to_string(entries.size()) +
                         " entries, cardinality is " +
                         std::to_string(f.cardinality));
      }
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] !=
            normalize_text(entries[i], f.enum_table->policy())) {
          flag(f.name,
               "entry \"" + entries[i] + "\" is not in canonical form");
        }
        if (i > 0 && entries[i] == entries[i - 1]) {
          flag(f.name, "duplicate enumeration entry \"" + entries[i] + "\"");
        } else if (i > 0 && entries[i] < entries[i - 1]) {
          flag(f.name, "enumeration entries out of canonical order at \"" +
                           entries[i] + "\"");
        }
      }
    } else if (f.enum_table) {
      flag(f.name, "value table on non-enumeration field");
    }
  }

  if (schema.total_bits() > 64) {
    flag("", "total_bits " + std::to_string(schema.total_bits()) + " > 64");
  }
  return report;
}

EncodedKey encode(const KeySchema& schema, std::span<const FieldValue> values) {
  require_valid(schema);
  if (values.size() != schema.field_count()) {
    throw Error(Errc::arity_mismatch,
                "schema \"" + schema.name() + "\" has " +
                    std::to_string(schema.field_count()) + " fields, got " +
                    std::to_string(values.size()) + " values");
  }
  EncodedKey key = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint64_t ordinal =
        resolve_ordinal(schema.fields()[i], values[i]);
    key |= ordinal << static_cast<unsigned>(schema.shift(i));
  }
  return key;
}

std::vector<FieldValue> decode(const KeySchema& schema, EncodedKey key) {
  require_valid(schema);
  if (const std::uint64_t padding = key & width_mask(schema.padding_bits());
      padding != 0) {
    throw Error(Errc::malformed_key,
                "key " + to_hex(key) + " has nonzero padding bits");
  }
  std::vector<FieldValue> values;
  values.reserve(schema.field_count());
  for (std::size_t i = 0; i < schema.field_count(); ++i) {
    const auto& field = schema.fields()[i];
    const std::uint64_t ordinal =
        (key >> static_cast<unsigned>(schema.shift(i))) &
        width_mask(field.width);
    if (ordinal >= field.cardinality) {
      throw Error(Errc::invalid_key,
                  "section of field \"" + field.name + "\" holds " +
                      std::to_string(ordinal) + ", cardinality is " +
                      std::to_string(field.cardinality));
    }
    if (field.kind == FieldKind::reserved_zero && ordinal != 0) {
      throw Error(Errc::invalid_key, "reserved-zero field \"" + field.name +
                                         "\" holds " + std::to_string(ordinal));
    }
    values.push_back(FieldValue::ordinal(ordinal));
  }
  return values;
}

std::pair<EncodedKey, EncodedKey> prefix_range(
    const KeySchema& schema, std::span<const FieldValue> leading) {
  require_valid(schema);
  if (leading.empty() || leading.size() > schema.field_count()) {
    throw Error(Errc::arity_mismatch,
                "prefix must cover 1.." + std::to_string(schema.field_count()) +
                    " leading fields, got " + std::to_string(leading.size()));
  }
  EncodedKey lo = 0;
  for (std::size_t i = 0; i < leading.size(); ++i) {
    lo |= resolve_ordinal(schema.fields()[i], leading[i])
          << static_cast<unsigned>(schema.shift(i));
  }
  const unsigned low_bits =
      static_cast<unsigned>(schema.shift(leading.size() - 1));
  return {lo, lo | width_mask(low_bits)};
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(Errc::parse_error,
              "schema line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

KeySchema parse_schema(std::string_view text) {
  std::optional<std::string> schema_name;
  std::vector<FieldSpec> fields;
  std::vector<std::string> pending_values;
  bool in_field = false;

  auto finish_field = [&] {
    if (!in_field) return;
    if (!pending_values.empty() || fields.back().kind == FieldKind::enumeration) {
      fields.back().enum_table = EnumTable::from_entries(
          std::move(pending_values), schema_policy);
      pending_values = {};
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const std::string_view directive = tokens.front();
    if (directive == "schema") {
      if (schema_name) parse_fail(line_no, "duplicate schema directive");
      if (tokens.size() != 2) parse_fail(line_no, "expected: schema <name>");
      schema_name = std::string(tokens[1]);
    } else if (directive == "field") {
      if (!schema_name) parse_fail(line_no, "field before schema directive");
      if (tokens.size() != 4) {
        parse_fail(line_no, "expected: field <name> <kind> <cardinality>");
      }
      const auto kind = field_kind_from(tokens[2]);
      if (!kind) {
        parse_fail(line_no, "unknown field kind \"" + std::string(tokens[2]) +
                                "\"");
      }
      std::uint64_t cardinality = 0;
      const auto [ptr, ec] = std::from_chars(
          tokens[3].data(), tokens[3].data() + tokens[3].size(), cardinality);
      if (ec != std::errc{} || ptr != tokens[3].data() + tokens[3].size()) {
        parse_fail(line_no, "bad cardinality \"" + std::string(tokens[3]) +
                                "\"");
      }
      finish_field();
      fields.push_back(
          make_field(std::string(tokens[1]), *kind, cardinality));
      in_field = true;
    } else if (directive == "value") {
      if (!in_field) parse_fail(line_no, "value line outside a field");
      // The entry is everything after the directive, trailing space trimmed.
      const std::size_t at = line.find("value");
      std::string_view rest = line.substr(at + 5);
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
        rest.remove_prefix(1);
      }
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) {
        rest.remove_suffix(1);
      }
      if (rest.empty()) parse_fail(line_no, "empty value entry");
      pending_values.emplace_back(rest);
    } else {
      parse_fail(line_no, "unknown directive \"" + std::string(directive) +
                              "\"");
    }
  }
  if (!schema_name) {
    throw Error(Errc::parse_error, "schema file has no schema directive");
  }
  finish_field();
  return KeySchema(std::move(*schema_name), std::move(fields));
}

KeySchema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open schema file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_schema(buf.str());
}

std::string format_schema(const KeySchema& schema) {
  std::ostringstream out;
  out << "schema " << schema.name() << '\n';
  for (const auto& f : schema.fields()) {
    out << "field " << f.name << ' ' << to_string(f.kind) << ' '
        << f.cardinality << '\n';
    if (f.enum_table) {
      for (const auto& entry : f.enum_table->entries()) {
        out << "  value " << entry << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace rnck

#include "linfiso/instance.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "linfiso/error.hpp"

namespace linfiso {

const char* to_string(BasisKind kind) noexcept {
  return kind == BasisKind::annihilator ? "annihilator" : "spanning";
}

SubspaceSpec Instance::to_spec() const {
  return kind == BasisKind::annihilator ? SubspaceSpec::from_annihilator(entries)
                                        : SubspaceSpec::from_spanning_set(entries);
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // one-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& message) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message);
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t value = 0;
  if (t.text.empty() || t.text.size() > 6) fail_at(line, t.column, "expected a small positive integer");
  for (char c : t.text) {
    if (c < '0' || c > '9') fail_at(line, t.column, "expected a positive integer, got '" + std::string(t.text) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_header = false;
  std::size_t width = 0;
  std::vector<VectorQ> rows;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3)
        fail_at(line_no, tokens.front().column, "header must be 'N m annihilator|spanning'");
      inst.ambient = parse_count(tokens[0], line_no);
      inst.codim = parse_count(tokens[1], line_no);
      if (tokens[2].text == "annihilator")
        inst.kind = BasisKind::annihilator;
      else if (tokens[2].text == "spanning")
        inst.kind = BasisKind::spanning;
      else
        fail_at(line_no, tokens[2].column, "unknown basis kind '" + std::string(tokens[2].text) + "'");
      if (inst.ambient < 2) fail_at(line_no, tokens[0].column, "N must be at least 2");
      if (inst.codim < 1 || inst.codim >= inst.ambient)
        fail_at(line_no, tokens[1].column, "m must satisfy 1 <= m < N");
      width = inst.kind == BasisKind::annihilator ? inst.codim : inst.ambient - inst.codim;
      have_header = true;
      continue;
    }

    if (rows.size() == inst.ambient) fail_at(line_no, tokens.front().column, "more than N data rows");
    if (tokens.size() != width)
      fail_at(line_no, tokens.size() > width ? tokens[width].column : line.size() + 1,
              "expected " + std::to_string(width) + " entries, found " + std::to_string(tokens.size()));
    VectorQ row;
    for (const auto& t : tokens) {
      try {
        row.push_back(parse_rational(t.text));
      } catch (const Error& e) {
        fail_at(line_no, t.column, e.what());
      }
    }
    rows.push_back(std::move(row));
  }

  if (!have_header) fail_at(line_no, 1, "missing header line");
  if (rows.size() != inst.ambient)
    fail_at(line_no, 1, "expected " + std::to_string(inst.ambient) + " data rows, found " +
                            std::to_string(rows.size()));
  inst.entries = MatrixQ::from_rows(rows);
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& instance) {
  std::string out = std::to_string(instance.ambient) + " " + std::to_string(instance.codim) +
                    " " + to_string(instance.kind) + "\n";
  for (std::size_t r = 0; r < instance.entries.rows(); ++r) {
    for (std::size_t c = 0; c < instance.entries.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(instance.entries(r, c));
    }
    out += '\n';
  }
  return out;
}

Instance instance_from_spec(const SubspaceSpec& spec) {
  return Instance{spec.ambient(), spec.codim(), BasisKind::annihilator, spec.annihilator()};
}

Rational random_entry(std::mt19937_64& rng, const EntryDistribution& dist) {
  std::uniform_int_distribution<long> num(-dist.range, dist.range);
  Rational q(num(rng));
  if (dist.rational_entries) {
    std::uniform_int_distribution<long> den(1, dist.range);
    q /= den(rng);
  }
  return q;
}

MatrixQ random_full_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                         const EntryDistribution& dist) {
  if (dist.range < 1) throw Error(ErrorCode::usage, "entry range must be at least 1");
  if (cols > rows) throw Error(ErrorCode::usage, "cannot have full column rank with cols > rows");
  while (true) {
    MatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_entry(rng, dist);
    if (rank(m) == cols) return m;
  }
}

Instance generate_instance(const GenOptions& options) {
  if (options.dim < 1 || options.codim < 1)
    throw Error(ErrorCode::usage, "need n >= 1 and m >= 1");
  if (options.entries.range < 1) throw Error(ErrorCode::usage, "entry range must be at least 1");
  std::mt19937_64 rng(options.seed);
  const std::size_t ambient = options.dim + options.codim;
  const std::size_t width =
      options.kind == BasisKind::annihilator ? options.codim : options.dim;
  return Instance{ambient, options.codim, options.kind,
                  random_full_rank(rng, ambient, width, options.entries)};
}

}  // namespace linfiso

/*
 * Copyright 2026 The mdsarray Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mdsarray/decoder.hpp"
#include "mdsarray/harness.hpp"

namespace mdsarray::cli {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_superregular:
    case Errc::duplicate_evaluation_point:
    case Errc::duplicate_point:
    case Errc::singular_pair:
      return kNotSuperregular;
    case Errc::not_primitive: return kNotPrimitive;
    case Errc::io: return kIo;
    default: return kInvalid;
  }
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::invalid_config, what); }

template <typename T>
T field_of(const json& doc, const char* key) {
  if (!doc.contains(key)) invalid(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    invalid(std::string("field '") + key + "' has the wrong type");
  }
}

CauchyPoint cauchy_point_of(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number_integer()) invalid("Cauchy points are integers or null (the zero element)");
  return j.get<std::int64_t>();
}

json cauchy_point_to_json(const CauchyPoint& p) { return p ? json(*p) : json(nullptr); }

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io, "write failed for " + path.string());
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    invalid(path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

/// Runs fn(first_row, last_row) over `rows` split across `jobs` threads.
template <typename Fn>
void for_row_ranges(std::size_t rows, unsigned jobs, Fn fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows, 1))));
  if (jobs == 1) {
    fn(std::size_t{0}, rows);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (rows + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t lo = std::min(rows, w * chunk);
    const std::size_t hi = std::min(rows, lo + chunk);
    pool.emplace_back([=, &fn] { fn(lo, hi); });
  }
}

struct Globals {
  std::string config;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool trace = false;
  bool json = false;
  unsigned jobs = 1;
};

CodeParams require_config(const Globals& g) {
  if (g.config.empty()) invalid("--config is required");
  return load_config(g.config);
}

struct StripeSet {
  Manifest manifest;
  CodeParams params;
  std::vector<Word> rows;
};

StripeSet load_stripes(const fs::path& dir, std::ostream& err) {
  StripeSet set;
  set.manifest = Manifest::from_json(read_json(dir / "manifest.json"));
  set.params = params_from_json(set.manifest.code);
  const std::size_t n = set.params.n();
  const unsigned b = set.params.b();
  if (set.manifest.checksums.size() != n) invalid("manifest lists the wrong number of shards");
  set.rows.assign(set.manifest.stripe_rows, Word(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto bytes = read_file(dir / shard_name(j + 1));
    if ((set.manifest.stripe_rows * b + 7) / 8 != bytes.size())
      throw Error(Errc::io, shard_name(j + 1) + " has the wrong size");
    if (fnv1a64(bytes) != set.manifest.checksums[j])
      err << "warning: " << shard_name(j + 1) << " checksum differs from manifest\n";
    unpack_shard(bytes, set.rows, j, b);
  }
  return set;
}

void write_shards(const fs::path& dir, const CodeParams& params, const std::vector<Word>& rows,
                  Manifest& manifest) {
  manifest.checksums.clear();
  for (std::size_t j = 0; j < params.n(); ++j) {
    const auto bytes = pack_shard(rows, j, params.b());
    write_file(dir / shard_name(j + 1), bytes);
    manifest.checksums.push_back(fnv1a64(bytes));
  }
}

int cmd_gen(const Globals& g, const std::string& output, std::ostream& out) {
  const CodeParams params = require_config(g);
  const json doc = params_to_json(params);
  if (output.empty() || output == "-")
    out << doc.dump(2) << '\n';
  else
    write_json(output, doc);
  return kOk;
}

int cmd_encode(const Globals& g, const std::string& input, const std::string& dir,
               std::ostream& out) {
  const CodeParams params = require_config(g);
  const auto data = read_file(input);
  std::vector<Word> rows = split_rows(data, params.k, params.b());
  for_row_ranges(rows.size(), g.jobs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) rows[r] = encode(params, rows[r]);
  });
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::io, "cannot create " + dir + ": " + ec.message());
  Manifest manifest;
  manifest.code = params_to_json(params);
  manifest.original_length = data.size();
  manifest.stripe_rows = rows.size();
  write_shards(dir, params, rows, manifest);
  write_json(fs::path(dir) / "manifest.json", manifest.to_json());
  out << "encoded " << data.size() << " bytes into " << rows.size() << " stripe rows, "
      << params.n() << " shards\n";
  return kOk;
}

struct CorruptOptions {
  std::vector<std::size_t> positions;
  std::size_t random = 0;
  std::string magnitude;
  std::size_t row = 0;
  bool all_rows = false;
  bool force = false;
};

int cmd_corrupt(const Globals& g, const std::string& dir, const CorruptOptions& o,
                std::ostream& out, std::ostream& err) {
  StripeSet set = load_stripes(dir, err);
  const CodeParams& params = set.params;
  const unsigned b = params.b();
  if (o.positions.empty() == (o.random == 0))
    invalid("give either --position or --random");
  const std::size_t weight = o.random ? o.random : o.positions.size();
  if (weight > params.m / 2 && !o.force)
    invalid("corrupting " + std::to_string(weight) + " symbols exceeds the radius; use --force");
  if (weight > params.n()) invalid("more errors than symbols");
  for (std::size_t p : o.positions)
    if (p < 1 || p > params.n()) invalid("position " + std::to_string(p) + " out of range");
  std::optional<Symbol> fixed;
  if (!o.magnitude.empty()) {
    fixed = parse_symbol(o.magnitude, b);
    if (fixed->is_zero()) invalid("error magnitude must be nonzero");
  }
  if (!o.all_rows && o.row >= set.rows.size())
    invalid("row " + std::to_string(o.row) + " out of range");

  const std::size_t first = o.all_rows ? 0 : o.row;
  const std::size_t last = o.all_rows ? set.rows.size() : o.row + 1;
  std::size_t touched = 0;
  for (std::size_t r = first; r < last; ++r) {
    auto rng = detail::trial_rng(g.seed, r);
    const std::vector<std::size_t> where =
        o.random ? detail::draw_positions(rng, 1, params.n(), o.random) : o.positions;
    for (std::size_t p : where) {
      set.rows[r][p - 1] ^= fixed ? *fixed : detail::draw_nonzero_symbol(rng, b);
      ++touched;
    }
  }
  for (std::size_t j = 0; j < params.n(); ++j)
    write_file(fs::path(dir) / shard_name(j + 1), pack_shard(set.rows, j, b));
  out << "corrupted " << touched << " symbols in " << (last - first) << " rows\n";
  return kOk;
}

int cmd_decode(const Globals& g, const std::string& dir, const std::string& output,
               std::optional<std::size_t> max_errors, bool repair, std::ostream& out,
               std::ostream& err) {
  StripeSet set = load_stripes(dir, err);
  const CodeParams& params = set.params;
  const unsigned b = params.b();
  const std::size_t t = max_errors.value_or(decoder_radius(params));
  if (t > params.m / 2) invalid("--max-errors exceeds the correction radius floor(m/2)");
  if (t > specialized_radius(params.m))
    throw Error(Errc::unsupported_radius, "no decoder for t = " + std::to_string(t));

  std::vector<DecodeOutcome> outcomes(set.rows.size());
  std::vector<Trace> traces(g.trace ? set.rows.size() : 0);
  for_row_ranges(set.rows.size(), g.jobs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) {
      DecodeOptions opts;
      if (g.trace) {
        traces[r].check_ambiguity = true;
        opts.trace = &traces[r];
      }
      outcomes[r] = decode_up_to(params, set.rows[r], t, opts);
      if (outcomes[r].tag == OutcomeTag::corrected)
        set.rows[r] = apply_corrections(set.rows[r], outcomes[r].corrections);
    }
  });

  std::size_t failed = 0, corrected = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    if (g.trace)
      for (const auto& line : traces[r].lines) out << "row " << r << " trace: " << line << '\n';
    if (outcomes[r].tag == OutcomeTag::no_error) continue;
    if (outcomes[r].tag == OutcomeTag::failure) ++failed;
    else ++corrected;
    if (g.trace || outcomes[r].tag == OutcomeTag::failure)
      out << "row " << r << ": " << describe(outcomes[r], b) << '\n';
  }

  // A miscorrected row shows up as a shard that still differs from the manifest.
  Manifest fresh = set.manifest;
  fresh.checksums.clear();
  for (std::size_t j = 0; j < params.n(); ++j) {
    fresh.checksums.push_back(fnv1a64(pack_shard(set.rows, j, b)));
    if (fresh.checksums[j] != set.manifest.checksums[j])
      err << "warning: decoded " << shard_name(j + 1) << " does not match the manifest checksum\n";
  }
  if (repair) write_shards(dir, params, set.rows, set.manifest);

  write_file(output, join_rows(set.rows, params.k, b, set.manifest.original_length));
  out << "decoded " << set.rows.size() << " rows: " << corrected << " corrected, " << failed
      << " failed\n";
  if (failed) {
    err << "error: " << failed << " stripe rows could not be decoded\n";
    return kDecodeFailure;
  }
  return kOk;
}

int cmd_tables(const Globals& g, const std::string& what, std::ostream& out) {
  const CodeParams params = require_config(g);
  const FieldTables& gf = params.gf();
  const unsigned b = params.b();
  if (what == "log" || what == "zech") {
    out << "n,antilog_bits,zech_n\n";
    for (std::uint32_t n = 0; n < gf.order(); ++n) {
      out << n << ',' << format_symbol(gf.antilog(n), b) << ',';
      if (n != 0) out << gf.zech(n);
      out << '\n';
    }
  } else if (what == "companion") {
    out << gf.companion().to_string();
  } else if (what == "parity-check") {
    out << parity_check_matrix(params).to_string();
  } else {
    invalid("--what must be log, zech, companion or parity-check");
  }
  return kOk;
}

DecodePath parse_path(const std::string& name) {
  if (name == "generic") return DecodePath::generic;
  if (name == "fast" || name == "vandermonde") return DecodePath::vandermonde_fast;
  if (name == "hypothesis") return DecodePath::hypothesis;
  invalid("--path must be generic, fast, hypothesis or all");
}

int cmd_simulate(const Globals& g, std::size_t t, std::size_t trials, const std::string& path,
                 const std::string& region, std::ostream& out) {
  const CodeParams params = require_config(g);
  std::vector<DecodePath> paths;
  if (path == "all") {
    paths = {DecodePath::generic, DecodePath::hypothesis};
    if (params.is_vandermonde()) paths.insert(paths.begin() + 1, DecodePath::vandermonde_fast);
  } else {
    paths = {parse_path(path)};
  }
  ErrorRegion where = ErrorRegion::any;
  if (region == "info") where = ErrorRegion::info_only;
  else if (region == "parity") where = ErrorRegion::parity_only;
  else if (region != "any") invalid("--region must be any, info or parity");

  json rows = json::array();
  if (!g.json) out << stats_csv_header() << '\n';
  for (DecodePath p : paths) {
    TrialConfig cfg{params, t, trials, g.seed, p, where, g.jobs, false};
    const TrialStats s = run_trials(cfg);
    if (g.json) {
      rows.push_back({{"path", to_string(p)},
                      {"t", t},
                      {"trials", s.trials()},
                      {"successes", s.successes},
                      {"failures", s.failures},
                      {"miscorrections", s.miscorrections},
                      {"zech_evals", s.counters.zech_evals},
                      {"field_mults", s.counters.field_mults},
                      {"linear_solves", s.counters.linear_solves},
                      {"wall_time_s", s.wall_time.count()}});
    } else {
      out << stats_csv_row(p, t, s) << '\n';
    }
  }
  if (g.json) out << rows.dump(2) << '\n';
  return kOk;
}

}  // namespace

CodeParams params_from_json(const json& doc) {
  if (!doc.is_object()) invalid("config must be an object");
  const auto b = field_of<unsigned>(doc, "b");
  const auto m = field_of<std::size_t>(doc, "m");
  const auto k = field_of<std::size_t>(doc, "k");
  const auto poly = field_of<std::uint32_t>(doc, "poly");
  const bool trusted = doc.value("trusted", false);
  if (!doc.contains("matrix") || !doc["matrix"].is_object()) invalid("missing 'matrix' object");
  const json& mx = doc["matrix"];
  const auto kind = field_of<std::string>(mx, "kind");
  MatrixSpec spec;
  if (kind == "vandermonde") {
    spec = mx.contains("points") ? VandermondeSpec{field_of<std::vector<std::int64_t>>(mx, "points")}
                                 : standard_vandermonde(k);
  } else if (kind == "cauchy") {
    CauchySpec c;
    if (!mx.contains("xs") || !mx.contains("ys") || !mx["xs"].is_array() || !mx["ys"].is_array())
      invalid("Cauchy matrix needs 'xs' and 'ys' lists");
    for (const auto& x : mx["xs"]) c.xs.push_back(cauchy_point_of(x));
    for (const auto& y : mx["ys"]) c.ys.push_back(cauchy_point_of(y));
    spec = c;
  } else if (kind == "explicit") {
    spec = ExplicitSpec{field_of<std::vector<std::vector<std::int64_t>>>(mx, "sigma")};
  } else {
    invalid("matrix kind must be vandermonde, cauchy or explicit");
  }
  return build_code(b, m, k, PrimitivePolynomial(poly), std::move(spec), trusted);
}

json params_to_json(const CodeParams& params) {
  json mx;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, VandermondeSpec>) {
          mx = {{"kind", "vandermonde"}, {"points", s.points}};
        } else if constexpr (std::is_same_v<T, CauchySpec>) {
          json xs = json::array(), ys = json::array();
          for (const auto& x : s.xs) xs.push_back(cauchy_point_to_json(x));
          for (const auto& y : s.ys) ys.push_back(cauchy_point_to_json(y));
          mx = {{"kind", "cauchy"}, {"xs", xs}, {"ys", ys}};
        } else {
          mx = {{"kind", "explicit"}, {"sigma", s.sigma}};
        }
      },
      params.spec);
  return {{"b", params.b()},
          {"m", params.m},
          {"k", params.k},
          {"poly", params.gf().poly().mask()},
          {"matrix", mx},
          {"trusted", params.trusted}};
}

CodeParams load_config(const fs::path& path) { return params_from_json(read_json(path)); }

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t byte : bytes) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json Manifest::to_json() const {
  json shards = json::array();
  for (std::size_t j = 0; j < checksums.size(); ++j) {
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << checksums[j];
    shards.push_back({{"file", shard_name(j + 1)}, {"fnv1a64", hex.str()}});
  }
  return {{"magic", kMagic},         {"version", kVersion},
          {"code", code},            {"original_length", original_length},
          {"stripe_rows", stripe_rows}, {"shards", shards}};
}

Manifest Manifest::from_json(const json& doc) {
  if (!doc.is_object() || doc.value("magic", "") != kMagic) invalid("not an MDSA1 manifest");
  if (doc.value("version", 0) != kVersion) invalid("unsupported manifest version");
  Manifest m;
  if (!doc.contains("code")) invalid("manifest has no code");
  m.code = doc["code"];
  m.original_length = field_of<std::uint64_t>(doc, "original_length");
  m.stripe_rows = field_of<std::uint64_t>(doc, "stripe_rows");
  if (!doc.contains("shards") || !doc["shards"].is_array()) invalid("manifest has no shard list");
  for (const auto& s : doc["shards"]) {
    const auto hex = field_of<std::string>(s, "fnv1a64");
    try {
      m.checksums.push_back(std::stoull(hex, nullptr, 16));
    } catch (const std::exception&) {
      invalid("bad checksum '" + hex + "'");
    }
  }
  return m;
}

std::string shard_name(std::size_t j) {
  std::string digits = std::to_string(j);
  if (digits.size() < 2) digits.insert(0, 1, '0');
  return "shard_" + digits + ".bin";
}

namespace {

bool get_bit(const std::vector<std::uint8_t>& bytes, std::uint64_t i) {
  return i / 8 < bytes.size() && ((bytes[i / 8] >> (i % 8)) & 1U);
}

void set_bit(std::vector<std::uint8_t>& bytes, std::uint64_t i) {
  bytes[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
}

}  // namespace

std::vector<Word> split_rows(const std::vector<std::uint8_t>& data, std::size_t k, unsigned b) {
  const std::uint64_t row_bits = std::uint64_t{k} * b;
  const std::uint64_t rows = (std::uint64_t{data.size()} * 8 + row_bits - 1) / row_bits;
  std::vector<Word> out(rows, Word(k));
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint32_t bits = 0;
      for (unsigned c = 0; c < b; ++c)
        if (get_bit(data, r * row_bits + j * b + c)) bits |= 1U << c;
      out[r][j] = Symbol{bits};
    }
  return out;
}

std::vector<std::uint8_t> join_rows(const std::vector<Word>& rows, std::size_t k, unsigned b,
                                    std::uint64_t length) {
  const std::uint64_t row_bits = std::uint64_t{k} * b;
  std::vector<std::uint8_t> out((rows.size() * row_bits + 7) / 8, 0);
  for (std::uint64_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      for (unsigned c = 0; c < b; ++c)
        if ((rows[r][j].bits >> c) & 1U) set_bit(out, r * row_bits + j * b + c);
  if (length > out.size()) throw Error(Errc::invalid_config, "original_length exceeds stripe data");
  out.resize(length);
  return out;
}

std::vector<std::uint8_t> pack_shard(const std::vector<Word>& rows, std::size_t j, unsigned b) {
  std::vector<std::uint8_t> out((rows.size() * b + 7) / 8, 0);
  for (std::uint64_t r = 0; r < rows.size(); ++r)
    for (unsigned c = 0; c < b; ++c)
      if ((rows[r][j].bits >> c) & 1U) set_bit(out, r * b + c);
  return out;
}

void unpack_shard(const std::vector<std::uint8_t>& bytes, std::vector<Word>& rows, std::size_t j,
                  unsigned b) {
  for (std::uint64_t r = 0; r < rows.size(); ++r) {
    std::uint32_t bits = 0;
    for (unsigned c = 0; c < b; ++c)
      if (get_bit(bytes, r * b + c)) bits |= 1U << c;
    rows[r][j] = Symbol{bits};
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"MDS array codes over GF(2)^b: build, stripe, corrupt, decode"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "code config file (JSON)");
  auto* seed_opt = app.add_option("--seed", g.seed, "64-bit seed");
  app.add_flag("--trace", g.trace, "print decoder steps");
  app.add_flag("--json", g.json, "JSON output where supported");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "validate a config and write its normalized form");
  gen->add_option("output", gen_out, "output path (stdout if omitted)");

  std::string enc_in, enc_dir;
  auto* enc = app.add_subcommand("encode", "stripe a file into n shards");
  enc->add_option("input", enc_in)->required();
  enc->add_option("shard_dir", enc_dir)->required();

  std::string dec_dir, dec_out;
  std::optional<std::size_t> max_errors;
  bool repair = false;
  auto* dec = app.add_subcommand("decode", "decode shards back into the original file");
  dec->add_option("shard_dir", dec_dir)->required();
  dec->add_option("output", dec_out)->required();
  dec->add_option("--max-errors,-t", max_errors, "errors per row to correct");
  dec->add_flag("--repair", repair, "rewrite corrected shards and manifest checksums");

  std::string cor_dir;
  CorruptOptions co;
  auto* cor = app.add_subcommand("corrupt", "XOR nonzero errors into shard symbols");
  cor->add_option("shard_dir", cor_dir)->required();
  cor->add_option("--position,-p", co.positions, "1-based symbol positions");
  cor->add_option("--random", co.random, "number of random positions");
  cor->add_option("--magnitude", co.magnitude, "error bits, leftmost = alpha^0");
  cor->add_option("--row", co.row, "0-based stripe row");
  cor->add_flag("--all-rows", co.all_rows, "corrupt every stripe row");
  cor->add_flag("--force", co.force, "allow more errors than the radius");

  std::string what = "zech";
  auto* tab = app.add_subcommand("tables", "dump field tables");
  tab->add_option("--what", what, "log, zech, companion or parity-check");

  std::size_t sim_t = 1, sim_trials = 1000;
  std::string sim_path = "all", sim_region = "any";
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo decode trials");
  sim->add_option("--t", sim_t, "errors per trial");
  sim->add_option("--trials", sim_trials)->check(CLI::PositiveNumber);
  sim->add_option("--path", sim_path, "generic, fast, hypothesis or all");
  sim->add_option("--region", sim_region, "any, info or parity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  g.seed_set = seed_opt->count() > 0;

  try {
    if (*gen) return cmd_gen(g, gen_out, out);
    if (*enc) return cmd_encode(g, enc_in, enc_dir, out);
    if (*dec) return cmd_decode(g, dec_dir, dec_out, max_errors, repair, out, err);
    if (*cor) return cmd_corrupt(g, cor_dir, co, out, err);
    if (*tab) return cmd_tables(g, what, out);
    if (*sim) return cmd_simulate(g, sim_t, sim_trials, sim_path, sim_region, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: InvalidConfig: " << e.what() << '\n';
    return kInvalid;
  } catch (const fs::filesystem_error& e) {
    err << "error: Io: " << e.what() << '\n';
    return kIo;
  }
  return kInvalid;
}

}  // namespace mdsarray::cli

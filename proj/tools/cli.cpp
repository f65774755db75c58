#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxkit/bruhat.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/parabolic.hpp"
#include "coxkit/symgroup.hpp"
#include "coxkit/verify.hpp"

namespace cox::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTooLarge = 2;
constexpr int kExitVerification = 3;

struct Flags {
  std::string type;
  std::string matrix_file;
  std::string I_text;
  std::string J_text;
  std::string format;  // per-command default applied later
  std::string scope;
  std::string fault;
  std::uint64_t seed = 987654321;
  int samples = 200;
  std::size_t root_cap = 10'000;
  std::size_t elem_cap = 1'000'000;
  bool max_reps = false;
  std::string u_text;
  std::string v_text;
  std::string w_text;
};

BuildLimits limits_of(const Flags& f) { return BuildLimits{f.root_cap, f.elem_cap}; }

CoxeterSystem build_system(const Flags& f) {
  if (!f.type.empty() && !f.matrix_file.empty())
    throw ParseFailure("give exactly one of --type or --matrix");
  if (!f.type.empty()) return CoxeterSystem::build(CoxeterSpec::named(f.type), limits_of(f));
  if (!f.matrix_file.empty())
    return CoxeterSystem::build(CoxeterSpec::from_matrix_file(f.matrix_file), limits_of(f));
  throw ParseFailure("a system is required: --type <NAME> or --matrix <FILE>");
}

// "1,2,4" with 1-based generator names -> bitmask over 0-based indices.
GenSubset parse_subset(const std::string& text, int rank) {
  GenSubset out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw ParseFailure("empty entry in generator list");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseFailure("bad generator index: \"" + tok + "\"");
    }
    if (used != tok.size()) throw ParseFailure("bad generator index: \"" + tok + "\"");
    if (v < 1 || v > rank)
      throw ParseFailure("generator s" + std::to_string(v) + " outside 1.." + std::to_string(rank));
    out = out.with(v - 1);
  }
  return out;
}

std::string word_label(const Element& e) {
  const auto word = e.canonical_word();
  if (word.empty()) return "e";
  const auto* t = &e;
  (void)t;
  bool compact = true;
  for (int a : word)
    if (a + 1 > 9) compact = false;
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i) out << '.';
    out << word[i] + 1;
  }
  return out.str();
}

json word_json(const Element& e) {
  json arr = json::array();
  for (int a : e.canonical_word()) arr.push_back(a + 1);
  return arr;
}

json subset_json(GenSubset s) {
  json arr = json::array();
  for (int g : s) arr.push_back(g + 1);
  return arr;
}

std::string subset_label(GenSubset s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int g : s) {
    if (!first) out << ',';
    out << g + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

json envelope(const std::string& kind, const CoxeterSystem& sys, GenSubset I, GenSubset J,
              json payload) {
  json rec;
  rec["kind"] = kind;
  rec["system"] = sys.name();
  rec["I"] = subset_json(I);
  rec["J"] = subset_json(J);
  rec["payload"] = std::move(payload);
  return rec;
}

std::string element_label(const CoxeterSystem& sys, const Element& e) {
  if (is_type_a(sys)) return sn::from_generic(sys, e).to_string();
  return word_label(e);
}

json element_json(const CoxeterSystem& sys, const Element& e) {
  json rec;
  rec["word"] = word_json(e);
  rec["length"] = e.length();
  if (is_type_a(sys)) rec["one_line"] = sn::from_generic(sys, e).to_string();
  return rec;
}

// Compare arguments parse as type-A one-line strings when they form a
// permutation of 1..rank+1, otherwise as words of 1-based generator letters
// (digit string or comma-separated).
Element parse_element(const CoxeterSystem& sys, const std::string& text) {
  if (text.empty()) throw ParseFailure("empty element");
  if (text == "e") return sys.identity();
  if (is_type_a(sys)) {
    try {
      const sn::Permutation p = sn::Permutation::parse(text);
      if (p.degree() == sys.rank() + 1) return sn::to_generic(sys, p);
    } catch (const ParseFailure&) {
      // fall through to word parsing
    }
  }
  std::vector<int> word;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseFailure("bad word \"" + text + "\"");
      word.push_back(c - '0');
    }
  } else {
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        word.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseFailure("bad word letter \"" + tok + "\"");
      }
    }
  }
  for (int& a : word) {
    if (a < 1 || a > sys.rank())
      throw ParseFailure("word letter s" + std::to_string(a) + " outside 1.." +
                         std::to_string(sys.rank()));
    a -= 1;
  }
  return sys.from_word(word);
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw ParseFailure("unsupported --format \"" + fmt + "\" for this command");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_info(const Flags& f) {
  const CoxeterSystem sys = build_system(f);
  const std::string fmt = f.format.empty() ? "table" : f.format;
  require_format(fmt, {"table", "json"});
  const std::size_t order = sys.order();
  const int longest = sys.longest_element().length();
  if (fmt == "json") {
    json payload;
    payload["name"] = sys.name();
    payload["rank"] = sys.rank();
    payload["positive_roots"] = sys.positive_roots();
    payload["order"] = order;
    payload["longest_length"] = longest;
    std::cout << envelope("info", sys, {}, {}, payload).dump() << "\n";
  } else {
    std::cout << "system          " << sys.name() << "\n"
              << "rank            " << sys.rank() << "\n"
              << "positive roots  " << sys.positive_roots() << "\n"
              << "order           " << order << "\n"
              << "l(w0)           " << longest << "\n";
  }
  return kExitOk;
}

int cmd_list_cosets(const Flags& f) {
  const CoxeterSystem sys = build_system(f);
  const std::string fmt = f.format.empty() ? "table" : f.format;
  require_format(fmt, {"table", "json"});
  const GenSubset I = parse_subset(f.I_text, sys.rank());
  const GenSubset J = parse_subset(f.J_text, sys.rank());
  const auto records = double_coset_records(sys, I, J);
  std::size_t total = 0;
  for (const auto& r : records) total += r.size;

  if (fmt == "json") {
    for (const auto& r : records) {
      json payload;
      payload["b"] = element_json(sys, r.min_rep);
      payload["b_max"] = element_json(sys, r.max_rep);
      payload["cross_section"] = subset_json(r.cross);
      payload["size"] = r.size;
      std::cout << envelope("double-coset", sys, I, J, payload).dump() << "\n";
    }
    json payload;
    payload["cosets"] = records.size();
    payload["total"] = total;
    payload["order"] = sys.order();
    std::cout << envelope("double-coset-summary", sys, I, J, payload).dump() << "\n";
  } else {
    std::cout << "system " << sys.name() << "  I=" << subset_label(I) << "  J=" << subset_label(J)
              << "\n";
    std::cout << "b\tb_max\tK\tsize\n";
    for (const auto& r : records) {
      std::cout << element_label(sys, r.min_rep) << "\t" << element_label(sys, r.max_rep) << "\t"
                << subset_label(r.cross) << "\t" << r.size << "\n";
    }
    std::cout << "cosets=" << records.size() << " total=" << total << " order=" << sys.order()
              << "\n";
  }
  return total == sys.order() ? kExitOk : kExitVerification;
}

int cmd_compare(const Flags& f) {
  const CoxeterSystem sys = build_system(f);
  const std::string fmt = f.format.empty() ? "table" : f.format;
  require_format(fmt, {"table", "json"});
  const GenSubset I = parse_subset(f.I_text, sys.rank());
  const GenSubset J = parse_subset(f.J_text, sys.rank());
  const Element u = parse_element(sys, f.u_text);
  const Element v = parse_element(sys, f.v_text);

  if (!in_double_coset_min_reps(u, I, J) || !in_double_coset_min_reps(v, I, J))
    throw NotMinimalRep("u and v must be minimal double-coset representatives for I, J");

  // compare_reps raises ComparisonMismatch (exit 3) if the verdicts split.
  const RepComparison rc = compare_reps(u, v, I, J);
  std::optional<bool> dominance;
  if (is_type_a(sys)) {
    dominance = sn::coset_dominance_leq(sn::from_generic(sys, u), sn::from_generic(sys, v), I, J);
    if (*dominance != rc.min_leq)
      throw ComparisonMismatch("dominance verdict disagrees with Bruhat comparison");
  }

  if (fmt == "json") {
    json payload;
    payload["u"] = element_json(sys, u);
    payload["v"] = element_json(sys, v);
    payload["leq_min"] = rc.min_leq;
    payload["leq_max"] = rc.max_leq;
    if (dominance)
      payload["dominance_leq"] = *dominance;
    else
      payload["dominance_leq"] = nullptr;
    payload["agree"] = true;
    std::cout << envelope("compare", sys, I, J, payload).dump() << "\n";
  } else {
    std::cout << "system " << sys.name() << "  I=" << subset_label(I) << "  J=" << subset_label(J)
              << "\n";
    std::cout << "u = " << element_label(sys, u) << "  v = " << element_label(sys, v) << "\n";
    std::cout << "u <= v          " << (rc.min_leq ? "true" : "false") << "\n";
    std::cout << "u_max <= v_max  " << (rc.max_leq ? "true" : "false") << "\n";
    if (dominance)
      std::cout << "dominance       " << (*dominance ? "true" : "false") << "\n";
    std::cout << "agreement       ok\n";
  }
  return kExitOk;
}

int cmd_hasse(const Flags& f) {
  const CoxeterSystem sys = build_system(f);
  const std::string fmt = f.format.empty() ? "dot" : f.format;
  require_format(fmt, {"dot", "json"});
  const GenSubset I = parse_subset(f.I_text, sys.rank());
  const GenSubset J = parse_subset(f.J_text, sys.rank());

  std::vector<Element> nodes = double_coset_min_reps(sys, I, J);
  if (f.max_reps) {
    for (Element& b : nodes) b = max_rep(b, I, J);
  }
  const auto edges = induced_subposet(nodes);

  if (fmt == "json") {
    json payload;
    json labels = json::array();
    for (const Element& e : nodes) labels.push_back(element_label(sys, e));
    json edge_list = json::array();
    for (const auto& [a, b] : edges) edge_list.push_back({a, b});
    payload["nodes"] = labels;
    payload["edges"] = edge_list;
    payload["max_reps"] = f.max_reps;
    std::cout << envelope("hasse", sys, I, J, payload).dump() << "\n";
  } else {
    // Edges point from the covered element up to the covering one.
    std::cout << "digraph hasse {\n";
    std::cout << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << element_label(sys, nodes[i]) << "\"];\n";
    for (const auto& [a, b] : edges) std::cout << "  n" << a << " -> n" << b << ";\n";
    std::cout << "}\n";
  }
  return kExitOk;
}

void print_matrix(std::ostream& out, const sn::IntMatrix& m, const std::string& title) {
  out << title << "\n";
  for (int i = 0; i < m.rows; ++i) {
    out << " ";
    for (int j = 0; j < m.cols; ++j) out << " " << m.at(i, j);
    out << "\n";
  }
}

json matrix_json(const sn::IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_snmatrix(const Flags& f) {
  const CoxeterSystem sys = build_system(f);
  if (!is_type_a(sys)) throw ParseFailure("snmatrix requires a type-A system");
  const std::string fmt = f.format.empty() ? "table" : f.format;
  require_format(fmt, {"table", "json"});
  const int n = sys.rank() + 1;
  const GenSubset I = parse_subset(f.I_text, sys.rank());
  const GenSubset J = parse_subset(f.J_text, sys.rank());
  const sn::Permutation w = sn::Permutation::parse(f.w_text);
  if (w.degree() != n)
    throw ParseFailure("one-line string has degree " + std::to_string(w.degree()) +
                       ", expected " + std::to_string(n));

  const auto blocks_i = sn::blocks_from_subset(n, I);
  const auto blocks_j = sn::blocks_from_subset(n, J);
  const auto m_full = sn::perm_matrix(w);
  const auto d_full = sn::dominance(w);
  const auto m_block = sn::coset_matrix(w, I, J);
  const auto d_block = sn::coset_dominance(w, I, J);

  std::vector<int> row_sums(static_cast<std::size_t>(m_block.rows), 0);
  std::vector<int> col_sums(static_cast<std::size_t>(m_block.cols), 0);
  for (int i = 0; i < m_block.rows; ++i)
    for (int j = 0; j < m_block.cols; ++j) {
      row_sums[i] += m_block.at(i, j);
      col_sums[j] += m_block.at(i, j);
    }

  if (fmt == "json") {
    json payload;
    payload["one_line"] = w.to_string();
    payload["blocks_I"] = blocks_i.to_string();
    payload["blocks_J"] = blocks_j.to_string();
    payload["M"] = matrix_json(m_full);
    payload["D"] = matrix_json(d_full);
    payload["M_IJ"] = matrix_json(m_block);
    payload["D_IJ"] = matrix_json(d_block);
    payload["row_sums"] = row_sums;
    payload["col_sums"] = col_sums;
    std::cout << envelope("snmatrix", sys, I, J, payload).dump() << "\n";
  } else {
    std::cout << "w         " << w.to_string() << "\n";
    std::cout << "blocks I  " << blocks_i.to_string() << "\n";
    std::cout << "blocks J  " << blocks_j.to_string() << "\n";
    print_matrix(std::cout, m_full, "M:");
    print_matrix(std::cout, d_full, "D:");
    print_matrix(std::cout, m_block, "M^{I,J}:");
    print_matrix(std::cout, d_block, "D^{I,J}:");
    std::cout << "row sums ";
    for (int s : row_sums) std::cout << " " << s;
    std::cout << "  (block sizes";
    for (const auto& [lo, hi] : blocks_i.blocks) std::cout << " " << hi - lo + 1;
    std::cout << ")\ncol sums ";
    for (int s : col_sums) std::cout << " " << s;
    std::cout << "  (block sizes";
    for (const auto& [lo, hi] : blocks_j.blocks) std::cout << " " << hi - lo + 1;
    std::cout << ")\n";
  }
  return kExitOk;
}

struct ScopeSpec {
  std::vector<std::string> names;
  bool sampled = false;
};

ScopeSpec parse_scope(const std::string& text) {
  ScopeSpec out;
  std::string tok;
  std::stringstream in(text);
  std::vector<std::string> tokens;
  while (in >> tok) {
    std::stringstream commas(tok);
    std::string piece;
    while (std::getline(commas, piece, ','))
      if (!piece.empty()) tokens.push_back(piece);
  }
  for (const std::string& t : tokens) {
    if (t == "sampled")
      out.sampled = true;
    else if (t == "full")
      out.sampled = false;
    else if (t == "default")
      out.names.insert(out.names.end(), verify::default_scope_names().begin(),
                       verify::default_scope_names().end());
    else
      out.names.push_back(t);
  }
  return out;
}

int cmd_verify(const Flags& f) {
  const std::string fmt = f.format.empty() ? "table" : f.format;
  require_format(fmt, {"table", "json"});

  ScopeSpec scope = parse_scope(f.scope);
  if (scope.names.empty()) {
    if (!f.type.empty() || !f.matrix_file.empty())
      scope.names.push_back("");  // marker: use --type/--matrix
    else
      scope.names = verify::default_scope_names();
  }

  std::vector<CoxeterSystem> systems;
  for (const std::string& name : scope.names) {
    if (name.empty())
      systems.push_back(build_system(f));
    else
      systems.push_back(CoxeterSystem::build(CoxeterSpec::named(name), limits_of(f)));
  }

  verify::Options opts;
  opts.sampled = scope.sampled;
  opts.ij_samples = f.samples;
  opts.seed = f.seed;
  if (f.fault == "max-rep")
    opts.fault = verify::Fault::corrupt_max_rep;
  else if (!f.fault.empty() && f.fault != "none")
    throw ParseFailure("unknown --inject-fault value \"" + f.fault + "\"");

  const verify::ScopeReport report = verify::run_scope(systems, true, opts);

  if (fmt == "json") {
    for (const auto& r : report.results) {
      json rec;
      rec["kind"] = "verify";
      rec["system"] = r.system;
      rec["I"] = json::array();
      rec["J"] = json::array();
      json payload;
      payload["property"] = r.property;
      payload["checked"] = r.checked;
      payload["failures"] = r.failures;
      payload["pass"] = r.pass();
      payload["note"] = r.note;
      rec["payload"] = payload;
      std::cout << rec.dump() << "\n";
    }
    json rec;
    rec["kind"] = "verify-summary";
    rec["system"] = "";
    rec["I"] = json::array();
    rec["J"] = json::array();
    json payload;
    payload["properties"] = report.results.size();
    payload["checked"] = report.total_checked;
    payload["failures"] = report.total_failures;
    payload["pass"] = report.pass();
    rec["payload"] = payload;
    std::cout << rec.dump() << "\n";
  } else {
    for (const auto& r : report.results) {
      std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << r.property;
      for (std::size_t pad = r.property.size(); pad < 36; ++pad) std::cout << ' ';
      std::cout << " " << r.system;
      for (std::size_t pad = r.system.size(); pad < 6; ++pad) std::cout << ' ';
      std::cout << " checked=" << r.checked << " failures=" << r.failures;
      if (!r.pass()) std::cout << "  [" << r.note << "]";
      std::cout << "\n";
    }
    std::cout << (report.pass() ? "PASS" : "FAIL") << "  summary properties="
              << report.results.size() << " checked=" << report.total_checked
              << " failures=" << report.total_failures << "\n";
  }
  return report.pass() ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv) {
  Flags f;
  CLI::App app{"finite Coxeter systems: Bruhat order, double cosets, dominance matrices"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", f.type, "named system: A4, B3, D4, E6, F4, G2, H3, H4, I2(7)");
    sub->add_option("--matrix", f.matrix_file, "Coxeter matrix file (rank line, then rows)");
    sub->add_option("--I", f.I_text, "left generator subset, 1-based: 1,2,4");
    sub->add_option("--J", f.J_text, "right generator subset, 1-based: 1,3");
    sub->add_option("--format", f.format, "output format: table | json | dot");
    sub->add_option("--seed", f.seed, "seed for sampled sweeps");
    sub->add_option("--root-cap", f.root_cap, "abort when root closure exceeds this");
    sub->add_option("--elem-cap", f.elem_cap, "abort when enumeration exceeds this");
    return sub;
  };

  add_common(app.add_subcommand("info", "rank, order, root count, longest length"));
  add_common(app.add_subcommand("list-cosets", "double cosets for (I, J): b, b_max, K, size"));
  auto* compare =
      add_common(app.add_subcommand("compare", "compare two minimal representatives"));
  compare->add_option("u", f.u_text, "first element (word or one-line)")->required();
  compare->add_option("v", f.v_text, "second element (word or one-line)")->required();
  auto* hasse = add_common(app.add_subcommand("hasse", "DOT Hasse diagram of X_IJ"));
  hasse->add_flag("--max-reps", f.max_reps, "draw the maximal representatives instead");
  auto* snmatrix =
      add_common(app.add_subcommand("snmatrix", "permutation and dominance matrices (type A)"));
  snmatrix->add_option("w", f.w_text, "one-line permutation")->required();
  auto* verify_cmd = add_common(app.add_subcommand("verify", "run the property sweeps"));
  verify_cmd->add_option("--scope", f.scope,
                         "systems to sweep: \"default\", names, optional \"sampled\"");
  verify_cmd->add_option("--samples", f.samples, "sampled (I,J) pairs per system");
  verify_cmd->add_option("--inject-fault", f.fault,
                         "testing hook: none | max-rep (forces a verification failure)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("info")) return cmd_info(f);
    if (app.got_subcommand("list-cosets")) return cmd_list_cosets(f);
    if (app.got_subcommand("compare")) return cmd_compare(f);
    if (app.got_subcommand("hasse")) return cmd_hasse(f);
    if (app.got_subcommand("snmatrix")) return cmd_snmatrix(f);
    if (app.got_subcommand("verify")) return cmd_verify(f);
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const InfiniteOrTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const ComparisonMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const InternalInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cox::cli

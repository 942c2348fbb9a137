// Command-line front end: network generation, descriptor computation by
// three methods, quotient-graph dumps, efficiency parameters, broadcast
// simulation and the cross-method verification run.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "benesnet/broadcast.hpp"
#include "benesnet/closed_forms.hpp"
#include "benesnet/descriptors.hpp"
#include "benesnet/generators.hpp"
#include "benesnet/io.hpp"
#include "benesnet/netparams.hpp"
#include "benesnet/theta.hpp"
#include "benesnet/verify.hpp"

namespace {

using namespace benesnet;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "A..B" -> [A, B]
std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    int n = std::stoi(s);
    return {n, n};
  }
  int lo = std::stoi(s.substr(0, pos));
  int hi = std::stoi(s.substr(pos + 2));
  if (lo > hi) throw UsageError("empty sweep");
  return {lo, hi};
}

Network parse_network(const std::string& s) {
  if (s == "bf") return Network::butterfly;
  if (s == "bb") return Network::benes;
  if (s == "bba") return Network::augmented_benes;
  throw UsageError("unknown network: " + s);
}

// "j,k" with j a binary column string and k a decimal level
NodeLabel parse_source(const std::string& s, const LabeledNetwork& net) {
  auto pos = s.find(',');
  if (pos == std::string::npos) throw UsageError("source must be \"<binary j>,<level>\"");
  std::string js = s.substr(0, pos);
  std::uint32_t j = 0;
  for (char c : js) {
    if (c != '0' && c != '1') throw UsageError("source column must be binary digits");
    j = (j << 1) | static_cast<std::uint32_t>(c - '0');
  }
  std::uint32_t k = static_cast<std::uint32_t>(std::stoul(s.substr(pos + 1)));
  if (j >= net.columns() || k >= net.level_count())
    throw UsageError("source label out of range for this network");
  return NodeLabel{j, k};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write to " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct DescriptorRow {
  std::string network;
  std::string n;
  std::string descriptor;
  std::string method;
  Rational value;
  std::string agree;  // empty unless method=all
};

void emit_rows(std::ostream& os, const std::vector<DescriptorRow>& rows, const std::string& fmt,
               bool with_agree, std::optional<unsigned> precision) {
  if (fmt == "csv") {
    os << "network,n,descriptor,method,value" << (precision ? ",value_decimal" : "")
       << (with_agree ? ",agree" : "") << "\n";
    for (const auto& r : rows) {
      os << r.network << "," << r.n << "," << r.descriptor << "," << r.method << ","
         << r.value.str();
      if (precision) os << "," << r.value.decimal(*precision);
      if (with_agree) os << "," << r.agree;
      os << "\n";
    }
  } else if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json o{{"network", r.network},
                       {"n", r.n},
                       {"descriptor", r.descriptor},
                       {"method", r.method},
                       {"value", r.value.str()}};
      if (precision) o["value_decimal"] = r.value.decimal(*precision);
      if (with_agree) o["agree"] = r.agree == "true";
      arr.push_back(o);
    }
    os << arr.dump(2) << "\n";
  } else if (fmt == "md") {
    os << "| network | n | descriptor | method | value |" << (with_agree ? " agree |" : "")
       << "\n";
    os << "|---|---|---|---|---|" << (with_agree ? "---|" : "") << "\n";
    for (const auto& r : rows) {
      os << "| " << r.network << " | " << r.n << " | " << r.descriptor << " | " << r.method
         << " | " << r.value.str() << " |";
      if (with_agree) os << " " << r.agree << " |";
      os << "\n";
    }
  } else {
    throw UsageError("unsupported format: " + fmt);
  }
}

int cmd_generate(const std::string& network, int n, const ClusterFamilyParams& cp,
                 const std::string& fmt, const std::string& out) {
  Output o(out);
  if (network == "cluster") {
    ClusterFamily fam = make_cluster_family(cp);
    if (fmt == "dot")
      write_dot(o.stream(), fam.graph, nullptr, "cluster");
    else
      write_adjacency_csv(o.stream(), fam.graph);
    return 0;
  }
  LabeledNetwork net = make_network(parse_network(network), n);
  if (fmt == "dot")
    write_dot(o.stream(), net.graph(), &net, network);
  else
    write_adjacency_csv(o.stream(), net.graph());
  return 0;
}

int cmd_descriptors(const std::string& network, int n, const ClusterFamilyParams& cp,
                    const std::string& method, const std::string& fmt, const std::string& out,
                    std::optional<unsigned> precision) {
  Output o(out);
  std::vector<DescriptorRow> rows;
  bool all = method == "all";

  if (network == "cluster") {
    std::ostringstream tag;
    tag << "cluster[m=" << cp.clique_size << ";a=" << cp.x_cliques << ";b=" << cp.y_cliques
        << ";alpha=" << cp.x_weight << ";beta=" << cp.y_weight << "]";
    ClusterFamily fam = make_cluster_family(cp);
    std::string nv = std::to_string(fam.graph.vertex_count());
    Int128 closed_w = cluster_family_wiener(cp);
    if (all) {
      DescriptorSet by_def = all_descriptors(fam.graph);
      for (int i = 0; i < 7; ++i)
        rows.push_back({tag.str(), nv, kDescriptorNames[i], "brute",
                        descriptor_value(by_def, i), ""});
      bool agree = by_def.wiener == closed_w;
      rows.push_back({tag.str(), nv, "W", "closed", Rational(closed_w),
                      agree ? "true" : "false"});
      for (auto& r : rows)
        if (r.agree.empty()) r.agree = "true";
    } else if (method == "brute" || method == "cuts") {
      DescriptorSet d =
          method == "cuts" ? cut_method_descriptors(fam.graph) : all_descriptors(fam.graph);
      for (int i = 0; i < 7; ++i)
        rows.push_back({tag.str(), nv, kDescriptorNames[i], method,
                        descriptor_value(d, i), ""});
    } else if (method == "closed") {
      rows.push_back({tag.str(), nv, "W", "closed", Rational(closed_w), ""});
    } else {
      throw UsageError("unknown method: " + method);
    }
    emit_rows(o.stream(), rows, fmt, all, precision);
    return 0;
  }

  Network kind = parse_network(network);
  if ((method == "closed" || all) && kind == Network::butterfly)
    throw UsageError("closed forms exist for bb and bba only");
  if ((method == "closed" || all) && n < 2) throw UsageError("closed forms require n >= 2");

  LabeledNetwork net = make_network(kind, n);
  std::string ns = std::to_string(n);
  auto add_method = [&](const std::string& name, const DescriptorSet& d) {
    for (int i = 0; i < 7; ++i)
      rows.push_back({network, ns, kDescriptorNames[i], name, descriptor_value(d, i), ""});
  };
  if (all) {
    DistanceOracle dist(net.graph());
    DescriptorSet brute = all_descriptors(net.graph(), dist);
    ThetaPartition part = theta_star_classes(net.graph(), dist);
    DescriptorSet cuts = cut_method_descriptors(net.graph(), part);
    DescriptorSet closed = network_closed_forms(kind, n);
    add_method("brute", brute);
    add_method("cuts", cuts);
    add_method("closed", closed);
    for (auto& r : rows) {
      int i = descriptor_index(r.descriptor);
      bool agree = descriptor_value(brute, i) == descriptor_value(cuts, i) &&
                   descriptor_value(cuts, i) == descriptor_value(closed, i);
      r.agree = agree ? "true" : "false";
    }
  } else if (method == "brute") {
    add_method("brute", all_descriptors(net.graph()));
  } else if (method == "cuts") {
    add_method("cuts", cut_method_descriptors(net.graph()));
  } else if (method == "closed") {
    add_method("closed", network_closed_forms(kind, n));
  } else {
    throw UsageError("unknown method: " + method);
  }
  emit_rows(o.stream(), rows, fmt, all, precision);
  return 0;
}

int cmd_params(const std::string& network, const std::string& range, const std::string& fmt,
               unsigned precision, const std::string& out) {
  auto [lo, hi] = parse_range(range);
  Output o(out);
  std::ostream& os = o.stream();
  bool both = network == "both";
  std::vector<SweepRow> rows = comparison_sweep(lo, hi);
  if (!both) {
    Network want = parse_network(network);
    std::vector<SweepRow> filtered;
    for (const auto& r : rows)
      if (r.network == want) filtered.push_back(r);
    rows = std::move(filtered);
  }
  if (fmt == "csv") {
    os << "network,n,parameter,value_exact,value_decimal" << (both ? ",bb_over_bba" : "") << "\n";
    for (const auto& r : rows) {
      os << network_name(r.network) << "," << r.n << "," << r.parameter << "," << r.value.str()
         << "," << r.value.decimal(precision);
      if (both) os << "," << r.benes_over_augmented.decimal(precision);
      os << "\n";
    }
  } else if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json obj{{"network", network_name(r.network)},
                         {"n", r.n},
                         {"parameter", r.parameter},
                         {"value_exact", r.value.str()},
                         {"value_decimal", r.value.decimal(precision)}};
      if (both) obj["bb_over_bba"] = r.benes_over_augmented.decimal(precision);
      arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
  } else {
    throw UsageError("unsupported format: " + fmt);
  }
  return 0;
}

int cmd_tables(const std::string& range, const std::string& fmt, const std::string& out) {
  auto [lo, hi] = parse_range(range);
  if (lo < 2) throw UsageError("descriptor tables require n >= 2");
  Output o(out);
  std::ostream& os = o.stream();
  std::vector<DescriptorSet> bb, ba;
  for (int n = lo; n <= hi; ++n) {
    bb.push_back(benes_closed_forms(n));
    ba.push_back(augmented_closed_forms(n));
  }
  if (fmt == "csv") {
    os << "descriptor,n,bb,bba\n";
    for (int i = 0; i < 7; ++i)
      for (int n = lo; n <= hi; ++n)
        os << kDescriptorNames[i] << "," << n << ","
           << descriptor_value(bb[std::size_t(n - lo)], i).str() << ","
           << descriptor_value(ba[std::size_t(n - lo)], i).str() << "\n";
    return 0;
  }
  if (fmt != "md") throw UsageError("unsupported format: " + fmt);
  auto dump_group = [&](const char* title, const std::vector<DescriptorSet>& v, int first,
                        int count) {
    os << "## " << title << "\n\n| n |";
    for (int i = first; i < first + count; ++i) os << " " << kDescriptorNames[i] << " |";
    os << "\n|---|";
    for (int i = 0; i < count; ++i) os << "---|";
    os << "\n";
    for (int n = lo; n <= hi; ++n) {
      os << "| " << n << " |";
      for (int i = first; i < first + count; ++i)
        os << " " << descriptor_value(v[std::size_t(n - lo)], i).str() << " |";
      os << "\n";
    }
    os << "\n";
  };
  dump_group("Benes network: Wiener and Szeged descriptors", bb, 0, 4);
  dump_group("Benes network: PI and Mostar descriptors", bb, 4, 3);
  dump_group("Augmented Benes network: Wiener and Szeged descriptors", ba, 0, 4);
  dump_group("Augmented Benes network: PI and Mostar descriptors", ba, 4, 3);
  os << "## Comparison\n\n| descriptor | n | bb | bba |\n|---|---|---|---|\n";
  for (int i = 0; i < 7; ++i)
    for (int n = lo; n <= hi; ++n)
      os << "| " << kDescriptorNames[i] << " | " << n << " | "
         << descriptor_value(bb[std::size_t(n - lo)], i).str() << " | "
         << descriptor_value(ba[std::size_t(n - lo)], i).str() << " |\n";
  return 0;
}

int cmd_cuts(const std::string& network, int n, const std::string& fmt, const std::string& out) {
  Network kind = parse_network(network);
  if (kind == Network::butterfly) throw UsageError("cuts are computed for bb and bba");
  LabeledNetwork net = make_network(kind, n);
  DistanceOracle dist(net.graph());
  ThetaPartition part = theta_star_classes(net.graph(), dist);
  auto order = level_ordered_classes(net, part);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    QuotientGraph q = quotient(net.graph(), part, order[idx]);
    std::string base = network + std::to_string(n) + "_class" + std::to_string(idx + 1);
    if (!out.empty()) {
      std::filesystem::create_directories(out);
      std::ofstream dot(out + "/" + base + ".dot");
      std::ofstream csv(out + "/" + base + ".csv");
      if (!dot || !csv) throw UsageError("cannot write to " + out);
      write_quotient_dot(dot, q, base);
      write_quotient_weights_csv(csv, q);
    } else if (fmt == "dot") {
      write_quotient_dot(std::cout, q, base);
    } else {
      std::cout << "# class " << (idx + 1) << "\n";
      write_quotient_weights_csv(std::cout, q);
    }
  }
  return 0;
}

int cmd_broadcast(int n, const std::string& source, const std::string& range,
                  const std::string& sources, const std::string& fmt, const std::string& out) {
  Output o(out);
  if (!range.empty()) {
    auto [lo, hi] = parse_range(range);
    auto rows = broadcast_sweep(lo, hi, sources != "all");
    std::ostream& os = o.stream();
    auto bits = [](std::uint32_t j, int d) {
      std::string s(static_cast<std::size_t>(d), '0');
      for (int b = 0; b < d; ++b)
        if (j & (1u << b)) s[static_cast<std::size_t>(d - 1 - b)] = '1';
      return s;
    };
    os << "n,source_j,source_k,eccentricity,rounds,bound,meets_bound\n";
    for (const auto& r : rows) {
      os << r.n << "," << bits(r.source.column, r.n) << "," << r.source.level << ","
         << r.source_eccentricity << "," << r.rounds << "," << r.bound << ","
         << (r.meets_bound ? "true" : "false") << "\n";
    }
    return 0;
  }
  LabeledNetwork net = make_augmented_benes(n);
  NodeLabel src = source.empty() ? NodeLabel{0, 0} : parse_source(source, net);
  BroadcastTrace trace = simulate_fdf(net, src);
  if (fmt == "dot")
    write_tree_dot(o.stream(), net, trace, "broadcast_tree");
  else
    write_trace_csv(o.stream(), net, trace);
  return 0;
}

int cmd_verify(int max_n, const std::string& fault) {
  VerifyOptions opt;
  opt.max_n = max_n;
  opt.inject_fault = fault;
  if (!fault.empty()) descriptor_index(fault);  // validates the name
  auto results = run_verification(opt);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benes-family interconnection networks: construction, distance-based "
               "descriptors by three methods, efficiency parameters, broadcast simulation"};
  app.require_subcommand(1);

  std::string network = "bb", method = "all", fmt, out, range, source, sources = "boundary";
  std::string fault;
  int n = 2, max_n = 5;
  unsigned precision = 6;
  ClusterFamilyParams cp;
  long long alpha = 1, beta = 1;

  auto add_cluster_flags = [&](CLI::App* c) {
    c->add_option("--m", cp.clique_size, "cluster clique size (>= 2)");
    c->add_option("--a", cp.x_cliques, "number of X cliques");
    c->add_option("--b", cp.y_cliques, "number of Y cliques");
    c->add_option("--alpha", alpha, "X vertex weight");
    c->add_option("--beta", beta, "Y vertex weight");
  };

  auto* gen = app.add_subcommand("generate", "emit a network as adjacency CSV or DOT");
  gen->add_option("--network", network, "bf | bb | bba | cluster")->capture_default_str();
  gen->add_option("--n", n, "network dimension")->capture_default_str();
  gen->add_option("--format", fmt, "csv | dot");
  gen->add_option("--out", out, "output path (stdout when omitted)");
  add_cluster_flags(gen);

  auto* desc = app.add_subcommand("descriptors", "compute the seven distance-based descriptors");
  desc->add_option("--network", network, "bb | bba | bf | cluster")->capture_default_str();
  desc->add_option("--n", n, "network dimension")->capture_default_str();
  desc->add_option("--method", method, "brute | cuts | closed | all")->capture_default_str();
  desc->add_option("--format", fmt, "csv | json | md");
  desc->add_option("--out", out, "output path");
  desc->add_option("--precision", precision, "append a decimal column with this many digits");
  add_cluster_flags(desc);

  std::string params_network = "both";
  auto* par = app.add_subcommand("params", "network efficiency parameters");
  par->add_option("--network", params_network, "bb | bba | both")->capture_default_str();
  par->add_option("--n-range", range, "dimension range A..B")->required();
  par->add_option("--format", fmt, "csv | json");
  par->add_option("--precision", precision, "decimal digits")->capture_default_str();
  par->add_option("--out", out, "output path");

  auto* tab = app.add_subcommand("tables", "descriptor tables for both networks");
  tab->add_option("--n-range", range, "dimension range A..B")->capture_default_str();
  tab->add_option("--format", fmt, "md | csv");
  tab->add_option("--out", out, "output path");

  auto* cut = app.add_subcommand("cuts", "quotient graphs of the edge-cut classes");
  cut->add_option("--network", network, "bb | bba")->capture_default_str();
  cut->add_option("--n", n, "network dimension")->capture_default_str();
  cut->add_option("--format", fmt, "dot | csv (stdout mode)");
  cut->add_option("--out", out, "output directory (writes .dot and .csv per class)");

  auto* bro = app.add_subcommand("broadcast", "broadcast simulation on the augmented network");
  bro->add_option("--n", n, "network dimension")->capture_default_str();
  bro->add_option("--source", source, "source as \"<binary j>,<level>\"");
  bro->add_option("--n-range", range, "sweep dimensions A..B instead of one run");
  bro->add_option("--sources", sources, "boundary | all (sweep mode)")->capture_default_str();
  bro->add_option("--format", fmt, "csv (trace) | dot (tree)");
  bro->add_option("--out", out, "output path");

  auto* ver = app.add_subcommand("verify", "run the cross-method verification checks");
  ver->add_option("--max-n", max_n, "largest dimension checked (2..8)")->capture_default_str();
  ver->add_option("--inject-fault", fault, "descriptor name to perturb (testing aid)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cp.x_weight = Int128(alpha);
    cp.y_weight = Int128(beta);
    auto fmt_or = [&](const char* d) { return fmt.empty() ? std::string(d) : fmt; };
    if (gen->parsed()) return cmd_generate(network, n, cp, fmt_or("csv"), out);
    if (desc->parsed())
      return cmd_descriptors(network, n, cp, method, fmt_or("csv"), out,
                             desc->count("--precision") ? std::optional<unsigned>(precision)
                                                        : std::nullopt);
    if (par->parsed()) return cmd_params(params_network, range, fmt_or("csv"), precision, out);
    if (tab->parsed()) return cmd_tables(range.empty() ? "2..6" : range, fmt_or("md"), out);
    if (cut->parsed()) return cmd_cuts(network, n, fmt_or("dot"), out);
    if (bro->parsed()) return cmd_broadcast(n, source, range, sources, fmt_or("csv"), out);
    if (ver->parsed()) {
      if (max_n < 2 || max_n > 8) throw UsageError("--max-n must be in 2..8");
      return cmd_verify(max_n, fault);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

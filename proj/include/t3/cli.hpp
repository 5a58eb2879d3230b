#pragma once

// Command-line front end. Every calculator is exposed as a subcommand with
// text (default), json and csv output; output is deterministic for a given
// argument vector. Exit codes: 0 success, 1 usage or parse error, 2 overflow
// or invariant failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "t3/category.hpp"
#include "t3/json_io.hpp"
#include "t3/lr.hpp"
#include "t3/partition.hpp"
#include "t3/poset.hpp"
#include "t3/sym.hpp"
#include "t3/verify.hpp"

namespace t3::cli {

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// "λ:μ:ν", each component a partition token ("0" for the empty diagram)
inline std::array<Partition, 3> parse_label(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (true) {
    std::size_t colon = text.find(':', pos);
    tokens.push_back(text.substr(pos, colon == std::string::npos ? colon : colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (tokens.size() != 3)
    throw std::invalid_argument("label must have three ':'-separated diagrams: '" + text + "'");
  return {Partition::parse(tokens[0]), Partition::parse(tokens[1]), Partition::parse(tokens[2])};
}

inline std::vector<int> parse_components(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed index '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (int v : out)
    if (v < 0) throw std::invalid_argument("index components must be nonnegative: '" + text + "'");
  return out;
}

inline TripleIndex parse_triple(const std::string& text) {
  auto v = parse_components(text);
  if (v.size() != 3) throw std::invalid_argument("expected a triple m,n,p: '" + text + "'");
  return {v[0], v[1], v[2]};
}

// a product of Schur functions: partition tokens joined by '*'
inline SymElement parse_schur_product(const std::string& text) {
  SymElement acc = SymElement::schur(Partition{});
  std::size_t pos = 0;
  while (true) {
    std::size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? star : star - pos);
    acc = product(acc, SymElement::schur(Partition::parse(tok)));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return acc;
}

inline std::string sym_element_text(const SymElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [la, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + " ";
    s += "s[" + la.str() + "]";
  }
  return s;
}

inline void print_layer_text(std::ostream& out, int k, const Layer& layer) {
  out << "usoc^" << k << ":";
  bool first = true;
  for (const auto& [s, mult] : layer) {
    out << (first ? " " : "; ") << s.str() << " x" << mult;
    first = false;
  }
  out << "\n";
}

inline void print_layer2_text(std::ostream& out, int k, const Layer2& layer) {
  out << "usoc^" << k << ":";
  bool first = true;
  for (const auto& [s, mult] : layer) {
    out << (first ? " " : "; ") << s.str() << " x" << mult;
    first = false;
  }
  out << "\n";
}

inline void layer_csv(std::ostream& out, int k, const Layer& layer) {
  for (const auto& [s, mult] : layer)
    out << k << "," << csv_field(s.lambda.str()) << "," << csv_field(s.mu.str()) << ","
        << csv_field(s.nu.str()) << "," << mult << "\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"calculator for the tensor category of the Mackey Lie algebra gl^M(V,V*)"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto add_format = [](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  // lr
  struct {
    std::string lambda, mu, nu, format = "text";
  } lr_opt;
  CLI::App* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient N^nu_{lambda,mu}");
  lr_cmd->add_option("--lambda", lr_opt.lambda, "first factor")->required();
  lr_cmd->add_option("--mu", lr_opt.mu, "second factor")->required();
  lr_cmd->add_option("--nu", lr_opt.nu, "target partition")->required();
  add_format(lr_cmd, lr_opt.format);
  lr_cmd->callback([&] {
    const Partition la = Partition::parse(lr_opt.lambda);
    const Partition mu = Partition::parse(lr_opt.mu);
    const Partition nu = Partition::parse(lr_opt.nu);
    const std::int64_t c = lr_coefficient(la, mu, nu);
    if (lr_opt.format == "json") {
      out << json{{"lambda", encode(la)}, {"mu", encode(mu)}, {"nu", encode(nu)}, {"coeff", c}}
                 .dump(2)
          << "\n";
    } else if (lr_opt.format == "csv") {
      out << "lambda,mu,nu,coeff\n"
          << detail::csv_field(la.str()) << "," << detail::csv_field(mu.str()) << ","
          << detail::csv_field(nu.str()) << "," << c << "\n";
    } else {
      out << c << "\n";
    }
  });

  // product
  struct {
    std::string lambda, mu, format = "text";
  } prod_opt;
  CLI::App* prod_cmd = app.add_subcommand("product", "expand s_lambda * s_mu in the Schur basis");
  prod_cmd->add_option("--lambda", prod_opt.lambda, "first factor")->required();
  prod_cmd->add_option("--mu", prod_opt.mu, "second factor")->required();
  add_format(prod_cmd, prod_opt.format);
  prod_cmd->callback([&] {
    const SymElement e = lr_expand_product(Partition::parse(prod_opt.lambda),
                                           Partition::parse(prod_opt.mu));
    if (prod_opt.format == "json") {
      out << encode(e).dump(2) << "\n";
    } else if (prod_opt.format == "csv") {
      out << "partition,coeff\n";
      for (const auto& [la, c] : e.terms())
        out << detail::csv_field(la.str()) << "," << c << "\n";
    } else {
      out << detail::sym_element_text(e) << "\n";
    }
  });

  // coproduct
  struct {
    std::string lambda;
    int arity = 2;
    std::string format = "text";
  } cop_opt;
  CLI::App* cop_cmd =
      app.add_subcommand("coproduct", "Sweedler components of the (iterated) coproduct of s_lambda");
  cop_cmd->add_option("--lambda", cop_opt.lambda, "partition")->required();
  cop_cmd->add_option("--arity", cop_opt.arity, "number of tensor slots (default 2)")
      ->check(CLI::Range(2, 16));
  add_format(cop_cmd, cop_opt.format);
  cop_cmd->callback([&] {
    const SymTensor t = iterated_coproduct(Partition::parse(cop_opt.lambda),
                                           static_cast<std::size_t>(cop_opt.arity));
    if (cop_opt.format == "json") {
      out << encode(t).dump(2) << "\n";
    } else if (cop_opt.format == "csv") {
      for (std::size_t s = 0; s < t.arity(); ++s) out << "slot" << s + 1 << ",";
      out << "coeff\n";
      for (const auto& [key, c] : t.terms()) {
        for (const Partition& la : key) out << detail::csv_field(la.str()) << ",";
        out << c << "\n";
      }
    } else {
      for (const auto& [key, c] : t.terms()) {
        bool first = true;
        for (const Partition& la : key) {
          if (!first) out << " (x) ";
          out << la.str();
          first = false;
        }
        out << "  c=" << c << "\n";
      }
    }
  });

  // pairing
  struct {
    std::string left, right, format = "text";
  } pair_opt;
  CLI::App* pair_cmd = app.add_subcommand(
      "pairing", "orthonormal Hopf pairing of two products of Schur functions (tokens joined by '*')");
  pair_cmd->add_option("--left", pair_opt.left, "e.g. '2,1*1'")->required();
  pair_cmd->add_option("--right", pair_opt.right, "e.g. '3,1'")->required();
  add_format(pair_cmd, pair_opt.format);
  pair_cmd->callback([&] {
    const SymElement left = detail::parse_schur_product(pair_opt.left);
    const SymElement right = detail::parse_schur_product(pair_opt.right);
    const std::int64_t value = pairing(left, right);
    if (pair_opt.format == "json") {
      out << json{{"left", encode(left)}, {"right", encode(right)}, {"value", value}}.dump(2)
          << "\n";
    } else if (pair_opt.format == "csv") {
      out << "left,right,value\n"
          << detail::csv_field(pair_opt.left) << "," << detail::csv_field(pair_opt.right) << ","
          << value << "\n";
    } else {
      out << value << "\n";
    }
  });

  // poset with subcommands
  CLI::App* poset_cmd = app.add_subcommand("poset", "order, covers, down-sets and defect of the index posets");
  poset_cmd->require_subcommand(1);

  struct {
    std::string i, j, format = "text";
  } leq_opt, defect_opt;
  CLI::App* leq_cmd = poset_cmd->add_subcommand("leq", "is i below j? (i, j both 'm,n,p' or both 'm,n')");
  leq_cmd->add_option("--i", leq_opt.i)->required();
  leq_cmd->add_option("--j", leq_opt.j)->required();
  add_format(leq_cmd, leq_opt.format);
  leq_cmd->callback([&] {
    const auto vi = detail::parse_components(leq_opt.i);
    const auto vj = detail::parse_components(leq_opt.j);
    if (vi.size() != vj.size() || (vi.size() != 2 && vi.size() != 3))
      throw std::invalid_argument("indices must both be pairs or both be triples");
    const bool res = vi.size() == 3 ? leq3({vi[0], vi[1], vi[2]}, {vj[0], vj[1], vj[2]})
                                    : leq2({vi[0], vi[1]}, {vj[0], vj[1]});
    if (leq_opt.format == "json") {
      out << json{{"i", vi}, {"j", vj}, {"leq", res}}.dump(2) << "\n";
    } else if (leq_opt.format == "csv") {
      out << "i,j,leq\n"
          << detail::csv_field(leq_opt.i) << "," << detail::csv_field(leq_opt.j) << ","
          << (res ? "true" : "false") << "\n";
    } else {
      out << (res ? "true" : "false") << "\n";
    }
  });

  CLI::App* defect_cmd =
      poset_cmd->add_subcommand("defect", "longest-chain length between comparable indices");
  defect_cmd->add_option("--i", defect_opt.i)->required();
  defect_cmd->add_option("--j", defect_opt.j)->required();
  add_format(defect_cmd, defect_opt.format);
  defect_cmd->callback([&] {
    const auto vi = detail::parse_components(defect_opt.i);
    const auto vj = detail::parse_components(defect_opt.j);
    if (vi.size() != vj.size() || (vi.size() != 2 && vi.size() != 3))
      throw std::invalid_argument("indices must both be pairs or both be triples");
    const int d = vi.size() == 3 ? defect3({vi[0], vi[1], vi[2]}, {vj[0], vj[1], vj[2]})
                                 : defect2({vi[0], vi[1]}, {vj[0], vj[1]});
    if (defect_opt.format == "json") {
      out << json{{"i", vi}, {"j", vj}, {"defect", d}}.dump(2) << "\n";
    } else if (defect_opt.format == "csv") {
      out << "i,j,defect\n"
          << detail::csv_field(defect_opt.i) << "," << detail::csv_field(defect_opt.j) << "," << d
          << "\n";
    } else {
      out << d << "\n";
    }
  });

  struct {
    std::string j, format = "text";
  } covers_opt;
  CLI::App* covers_cmd = poset_cmd->add_subcommand("covers", "targets of the two contraction moves from a triple");
  covers_cmd->add_option("--j", covers_opt.j, "source triple m,n,p")->required();
  add_format(covers_cmd, covers_opt.format);
  covers_cmd->callback([&] {
    const std::vector<TripleIndex> cs = covers3(detail::parse_triple(covers_opt.j));
    if (covers_opt.format == "json") {
      json arr = json::array();
      for (const TripleIndex& c : cs) arr.push_back(encode(c));
      out << arr.dump(2) << "\n";
    } else if (covers_opt.format == "csv") {
      out << "m,n,p\n";
      for (const TripleIndex& c : cs) out << c.m << "," << c.n << "," << c.p << "\n";
    } else {
      for (const TripleIndex& c : cs) out << c.str() << "\n";
    }
  });

  struct {
    std::string i, format = "text";
  } downset_opt;
  CLI::App* downset_cmd = poset_cmd->add_subcommand("downset", "all triples below a given one");
  downset_cmd->add_option("--i", downset_opt.i, "triple m,n,p")->required();
  add_format(downset_cmd, downset_opt.format);
  downset_cmd->callback([&] {
    const std::vector<TripleIndex> ds = down_set3(detail::parse_triple(downset_opt.i));
    if (downset_opt.format == "json") {
      json arr = json::array();
      for (const TripleIndex& d : ds) arr.push_back(encode(d));
      out << arr.dump(2) << "\n";
    } else if (downset_opt.format == "csv") {
      out << "m,n,p\n";
      for (const TripleIndex& d : ds) out << d.m << "," << d.n << "," << d.p << "\n";
    } else {
      for (const TripleIndex& d : ds) out << d.str() << "\n";
    }
  });

  // socle
  struct {
    std::string lambda, mu, nu;
    int layer = 0;
    std::string format = "text";
  } socle_opt;
  CLI::App* socle_cmd =
      app.add_subcommand("socle", "socle filtration of the indecomposable injective I_{lambda,mu,nu}");
  socle_cmd->add_option("--lambda", socle_opt.lambda)->required();
  socle_cmd->add_option("--mu", socle_opt.mu)->required();
  socle_cmd->add_option("--nu", socle_opt.nu)->required();
  socle_cmd->add_option("--layer", socle_opt.layer, "print a single layer usoc^k")
      ->check(CLI::PositiveNumber);
  add_format(socle_cmd, socle_opt.format);
  socle_cmd->callback([&] {
    const InjectiveLabel inj{Partition::parse(socle_opt.lambda), Partition::parse(socle_opt.mu),
                             Partition::parse(socle_opt.nu)};
    if (socle_opt.layer > 0) {
      const Layer layer = socle_layer(inj, socle_opt.layer);
      if (socle_opt.format == "json") {
        out << json{{"injective", encode(inj)}, {"k", socle_opt.layer}, {"layer", encode(layer)}}
                   .dump(2)
            << "\n";
      } else if (socle_opt.format == "csv") {
        out << "layer,lambda,mu,nu,mult\n";
        detail::layer_csv(out, socle_opt.layer, layer);
      } else {
        detail::print_layer_text(out, socle_opt.layer, layer);
      }
      return;
    }
    const Filtration filt = socle_filtration(inj);
    if (socle_opt.format == "json") {
      out << encode(filt).dump(2) << "\n";
    } else if (socle_opt.format == "csv") {
      out << "layer,lambda,mu,nu,mult\n";
      for (std::size_t k = 0; k < filt.layers.size(); ++k)
        detail::layer_csv(out, static_cast<int>(k) + 1, filt.layers[k]);
    } else {
      out << "injective " << inj.str() << "\n";
      for (std::size_t k = 0; k < filt.layers.size(); ++k)
        detail::print_layer_text(out, static_cast<int>(k) + 1, filt.layers[k]);
    }
  });

  // ext
  struct {
    std::string source, target;
    int q = 0;
    std::string format = "text";
  } ext_opt;
  CLI::App* ext_cmd =
      app.add_subcommand("ext", "dim Ext^q between two simple objects, labels 'lambda:mu:nu'");
  ext_cmd->add_option("--source", ext_opt.source)->required();
  ext_cmd->add_option("--target", ext_opt.target)->required();
  ext_cmd->add_option("--q", ext_opt.q, "cohomological degree")->required()
      ->check(CLI::NonNegativeNumber);
  add_format(ext_cmd, ext_opt.format);
  ext_cmd->callback([&] {
    const auto s = detail::parse_label(ext_opt.source);
    const auto t = detail::parse_label(ext_opt.target);
    const SimpleLabel src{s[0], s[1], s[2]};
    const SimpleLabel tgt{t[0], t[1], t[2]};
    const std::int64_t dim = ext_dim(src, tgt, ext_opt.q);
    if (ext_opt.format == "json") {
      out << json{{"source", encode(src)}, {"target", encode(tgt)}, {"q", ext_opt.q}, {"dim", dim}}
                 .dump(2)
          << "\n";
    } else if (ext_opt.format == "csv") {
      out << "source,target,q,dim\n"
          << detail::csv_field(src.str()) << "," << detail::csv_field(tgt.str()) << "," << ext_opt.q
          << "," << dim << "\n";
    } else {
      out << dim << "\n";
    }
  });

  // block
  struct {
    std::string label, format = "text";
  } block_opt;
  CLI::App* block_cmd = app.add_subcommand("block", "block index |lambda|+|mu|-|nu| of a label");
  block_cmd->add_option("--label", block_opt.label, "label 'lambda:mu:nu'")->required();
  add_format(block_cmd, block_opt.format);
  block_cmd->callback([&] {
    const auto parts = detail::parse_label(block_opt.label);
    const SimpleLabel s{parts[0], parts[1], parts[2]};
    const int b = block_index(s);
    if (block_opt.format == "json") {
      out << json{{"label", encode(s)}, {"block", b}}.dump(2) << "\n";
    } else if (block_opt.format == "csv") {
      out << "label,block\n" << detail::csv_field(s.str()) << "," << b << "\n";
    } else {
      out << b << "\n";
    }
  });

  // decompose
  struct {
    std::string index, format = "text";
  } dec_opt;
  CLI::App* dec_cmd =
      app.add_subcommand("decompose", "Schur-Weyl decomposition of X_{m,n,p} into indecomposable injectives");
  dec_cmd->add_option("--index", dec_opt.index, "triple m,n,p")->required();
  add_format(dec_cmd, dec_opt.format);
  dec_cmd->callback([&] {
    const auto parts = decompose_X(detail::parse_triple(dec_opt.index));
    if (dec_opt.format == "json") {
      json arr = json::array();
      for (const auto& [inj, mult] : parts)
        arr.push_back({{"injective", encode(inj)}, {"mult", mult}});
      out << arr.dump(2) << "\n";
    } else if (dec_opt.format == "csv") {
      out << "lambda,mu,nu,mult\n";
      for (const auto& [inj, mult] : parts)
        out << detail::csv_field(inj.lambda.str()) << "," << detail::csv_field(inj.mu.str()) << ","
            << detail::csv_field(inj.nu.str()) << "," << mult << "\n";
    } else {
      for (const auto& [inj, mult] : parts) out << inj.str() << " x" << mult << "\n";
    }
  });

  // hom
  struct {
    std::string from, to, format = "text";
  } hom_opt;
  CLI::App* hom_cmd = app.add_subcommand("hom", "dim Hom(X_from, X_to) between injective generators");
  hom_cmd->add_option("--from", hom_opt.from, "triple m,n,p")->required();
  hom_cmd->add_option("--to", hom_opt.to, "triple m,n,p")->required();
  add_format(hom_cmd, hom_opt.format);
  hom_cmd->callback([&] {
    const TripleIndex from = detail::parse_triple(hom_opt.from);
    const TripleIndex to = detail::parse_triple(hom_opt.to);
    const std::int64_t dim = hom_dim(from, to);
    if (hom_opt.format == "json") {
      out << json{{"from", encode(from)}, {"to", encode(to)}, {"dim", dim}}.dump(2) << "\n";
    } else if (hom_opt.format == "csv") {
      out << "from,to,dim\n"
          << detail::csv_field(hom_opt.from) << "," << detail::csv_field(hom_opt.to) << "," << dim
          << "\n";
    } else {
      out << dim << "\n";
    }
  });

  // socle2
  struct {
    std::string mu, nu;
    int layer = 0;
    std::string format = "text";
  } s2_opt;
  CLI::App* s2_cmd =
      app.add_subcommand("socle2", "socle filtration of the two-diagram injective (V_*)_mu (x) V_nu");
  s2_cmd->add_option("--mu", s2_opt.mu)->required();
  s2_cmd->add_option("--nu", s2_opt.nu)->required();
  s2_cmd->add_option("--layer", s2_opt.layer, "print a single layer usoc^k")->check(CLI::PositiveNumber);
  add_format(s2_cmd, s2_opt.format);
  s2_cmd->callback([&] {
    const Partition mu = Partition::parse(s2_opt.mu);
    const Partition nu = Partition::parse(s2_opt.nu);
    std::vector<Layer2> layers;
    int first_k = 1;
    if (s2_opt.layer > 0) {
      layers.push_back(socle2_layer(mu, nu, s2_opt.layer));
      first_k = s2_opt.layer;
    } else {
      layers = socle2_filtration(mu, nu);
    }
    if (s2_opt.format == "json") {
      json arr = json::array();
      for (const Layer2& layer : layers) arr.push_back(encode(layer));
      json doc{{"mu", encode(mu)}, {"nu", encode(nu)}};
      if (s2_opt.layer > 0) {
        doc["k"] = s2_opt.layer;
        doc["layer"] = arr[0];
      } else {
        doc["layers"] = arr;
      }
      out << doc.dump(2) << "\n";
    } else if (s2_opt.format == "csv") {
      out << "layer,mu,nu,mult\n";
      for (std::size_t k = 0; k < layers.size(); ++k)
        for (const auto& [s, mult] : layers[k])
          out << first_k + static_cast<int>(k) << "," << detail::csv_field(s.mu.str()) << ","
              << detail::csv_field(s.nu.str()) << "," << mult << "\n";
    } else {
      for (std::size_t k = 0; k < layers.size(); ++k)
        detail::print_layer2_text(out, first_k + static_cast<int>(k), layers[k]);
    }
  });

  // restrict
  struct {
    std::string lambda, mu, nu;
    int layer = 0;
    std::string format = "text";
  } res_opt;
  CLI::App* res_cmd = app.add_subcommand(
      "restrict", "socle filtration of the restriction of (V*/V_*)_lambda (x) W_{mu,nu} to gl^M");
  res_cmd->add_option("--lambda", res_opt.lambda)->required();
  res_cmd->add_option("--mu", res_opt.mu)->required();
  res_cmd->add_option("--nu", res_opt.nu)->required();
  res_cmd->add_option("--layer", res_opt.layer, "print a single layer usoc^k")->check(CLI::PositiveNumber);
  add_format(res_cmd, res_opt.format);
  res_cmd->callback([&] {
    const Partition la = Partition::parse(res_opt.lambda);
    const Partition mu = Partition::parse(res_opt.mu);
    const Partition nu = Partition::parse(res_opt.nu);
    std::vector<Layer> layers;
    int first_k = 1;
    if (res_opt.layer > 0) {
      layers.push_back(restrict_W_socle(la, mu, nu, res_opt.layer));
      first_k = res_opt.layer;
    } else {
      layers = restrict_W_filtration(la, mu, nu);
    }
    if (res_opt.format == "json") {
      json arr = json::array();
      for (const Layer& layer : layers) arr.push_back(encode(layer));
      json doc{{"lambda", encode(la)}, {"mu", encode(mu)}, {"nu", encode(nu)}};
      if (res_opt.layer > 0) {
        doc["k"] = res_opt.layer;
        doc["layer"] = arr[0];
      } else {
        doc["layers"] = arr;
      }
      out << doc.dump(2) << "\n";
    } else if (res_opt.format == "csv") {
      out << "layer,lambda,mu,nu,mult\n";
      for (std::size_t k = 0; k < layers.size(); ++k)
        detail::layer_csv(out, first_k + static_cast<int>(k), layers[k]);
    } else {
      for (std::size_t k = 0; k < layers.size(); ++k)
        detail::print_layer_text(out, first_k + static_cast<int>(k), layers[k]);
    }
  });

  // check
  struct {
    int max_boxes = 3;
    std::string format = "text";
  } check_opt;
  CLI::App* check_cmd =
      app.add_subcommand("check", "run every structural invariant up to a box budget");
  check_cmd->add_option("--max-boxes", check_opt.max_boxes, "total box budget per label (default 3)")
      ->check(CLI::NonNegativeNumber);
  add_format(check_cmd, check_opt.format);
  check_cmd->callback([&] {
    const VerifyReport report = verify_suite(check_opt.max_boxes);
    if (check_opt.format == "json") {
      out << encode(report).dump(2) << "\n";
    } else if (check_opt.format == "csv") {
      out << "invariant,checks,passed,first_failure\n";
      for (const InvariantResult& r : report.invariants)
        out << detail::csv_field(r.name) << "," << r.checks << ","
            << (r.passed() ? "true" : "false") << "," << detail::csv_field(r.first_failure)
            << "\n";
    } else {
      for (const InvariantResult& r : report.invariants) {
        out << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (checks=" << r.checks << ")";
        if (!r.passed()) out << " first failure: " << r.first_failure;
        out << "\n";
      }
      out << (report.all_passed() ? "all invariants passed" : "invariant failures detected")
          << "\n";
    }
    if (!report.all_passed()) exit_code = 2;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace t3::cli
